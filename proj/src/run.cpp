#include "vomas/run.hpp"

#include "vomas/manager.hpp"

#include <cstdio>
#include <stdexcept>

namespace vomas {

namespace {

trace::Json schema_json(const AttributeSchema& schema) {
  trace::Json j = trace::Json::object();
  for (const auto& [kind, attrs] : schema.kinds()) {
    trace::Json a = trace::Json::object();
    for (const auto& [name, type] : attrs) a[name] = std::string(type_name(type));
    j[kind] = std::move(a);
  }
  return j;
}

trace::Json params_json(const ParamTable& params) {
  trace::Json j = trace::Json::object();
  for (const auto& [k, v] : params) j[k] = trace::value_to_json(v);
  return j;
}

}  // namespace

std::string compute_run_id(const std::string& model, const ParamTable& params, std::uint64_t seed,
                           std::int64_t max_ticks, const TraceOptions& trace, const std::string& spec_source) {
  const std::string canonical = model + '\n' + canonical_params(params) + '\n' + std::to_string(seed) + '\n' +
                                std::to_string(max_ticks) + '\n' + (trace.full_state ? "full" : "lean") + '\n' +
                                std::to_string(trace.frame_period) + '\n' + spec_source;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void check_vo_placements(const dsl::VomasSpec& spec, WorldSize size) {
  for (const auto& vo : spec.vo_agents) {
    if (const auto* s = std::get_if<dsl::VoPlacementSpatial>(&vo.placement)) {
      if (!size.contains({s->x, s->y}) || !(s->radius >= 0.0)) {
        throw std::invalid_argument("VO agent '" + vo.name + "' is placed outside the " + format_real(size.width) +
                                    "x" + format_real(size.height) + " world");
      }
    }
  }
}

trace::ValidationReport run_simulation(const RunConfig& config, trace::TraceWriter& writer,
                                       const RunOptions& options) {
  const ModelRegistry& registry = *options.registry;
  const ModelDef& def = registry.get(config.model);
  if (config.max_ticks < 1) throw std::invalid_argument("max_ticks must be at least 1");
  if (config.trace.frame_period < 0) throw std::invalid_argument("frame period must be non-negative");

  const ParamTable params = resolve_params(def.params, config.params);
  World world = init_world(config.model, params, config.seed, registry);
  check_vo_placements(config.spec, world.size());

  trace::ValidationReport report;
  report.run_id = compute_run_id(config.model, params, config.seed, config.max_ticks, config.trace, config.spec.source);
  report.model = config.model;
  report.seed = config.seed;
  report.params = canonical_params(params);

  ConsoleAgent console(options.console);
  VomasManager manager(config.spec, console, report.run_id);
  TerminationReason reason = TerminationReason::completed;

  auto entry = [&](std::int64_t tick, std::string name, trace::Payload payload) {
    return trace::LogEntry{report.run_id, tick, std::move(name), std::move(payload)};
  };

  try {
    writer.append(entry(0, "run_start",
                        trace::EventPayload{trace::Json{{"model", config.model},
                                                        {"params", params_json(params)},
                                                        {"seed", config.seed},
                                                        {"max_ticks", config.max_ticks},
                                                        {"width", world.size().width},
                                                        {"height", world.size().height},
                                                        {"full_state", config.trace.full_state},
                                                        {"frame_period", config.trace.frame_period},
                                                        {"schema", schema_json(def.attributes)}},
                                            std::nullopt}));

    while (true) {
      const std::int64_t t = world.tick();
      for (const auto& ev : world.events()) {
        writer.append(entry(t, ev.type == PopulationEvent::Type::birth ? "birth" : "death",
                            trace::EventPayload{trace::Json{{"id", ev.id}, {"kind", ev.kind.name}}, std::nullopt}));
      }
      if (config.trace.full_state) writer.append(entry(t, "state", trace::capture_state(world)));
      if (config.trace.frame_period > 0 && t % config.trace.frame_period == 0) {
        trace::FramePayload frame;
        for (const auto& [id, a] : world.agents()) {
          frame.agents.push_back({id, a.kind().name, a.position().x, a.position().y, def.color ? def.color(a) : ""});
        }
        writer.append(entry(t, "frame", std::move(frame)));
      }

      const std::uint64_t before = options.on_evaluate ? world_hash(world) : 0;
      auto outcome = manager.evaluate_tick(world, t);
      if (options.on_evaluate) options.on_evaluate(t, before, world_hash(world));

      for (const auto& e : outcome.entries) writer.append(e);
      writer.end_tick();

      if (outcome.halt) {
        reason = TerminationReason::halted;
        break;
      }
      if (t >= config.max_ticks) break;

      try {
        world = step_model(world, registry);
      } catch (const ModelPanic& e) {
        reason = TerminationReason::aborted;
        report.abort_reason = e.what();
        writer.append(entry(t, "abort", trace::EventPayload{trace::Json{{"failed_tick", t + 1}}, e.what()}));
        break;
      }
    }

    for (const auto& e : manager.evaluate_termination(world, world.tick(), reason)) writer.append(e);
    writer.end_tick();
    writer.close();
  } catch (const trace::TraceIoError& e) {
    reason = TerminationReason::aborted;
    report.abort_reason = e.what();
  }

  switch (reason) {
    case TerminationReason::completed: report.status = trace::RunStatus::completed; break;
    case TerminationReason::halted: report.status = trace::RunStatus::halted; break;
    case TerminationReason::aborted: report.status = trace::RunStatus::aborted; break;
  }
  report.final_tick = world.tick();
  report.violations = manager.violations();
  report.watch_stats = manager.watch_stats();
  report.eval_failures = manager.eval_failures();
  report.console_failures = console.failures();
  return report;
}

}  // namespace vomas
