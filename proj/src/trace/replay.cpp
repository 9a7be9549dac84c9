#include "vomas/trace/replay.hpp"

#include "vomas/manager.hpp"
#include "vomas/model.hpp"
#include "vomas/trace/writer.hpp"

#include <set>

namespace vomas::trace {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

struct RunStart {
  std::string run_id;
  std::string model;
  std::uint64_t seed = 0;
  ParamTable params;
  WorldSize size;
  std::set<std::string> attributes;
};

RunStart read_run_start(const std::vector<LogEntry>& entries) {
  if (entries.empty()) throw CorruptTrace(1, "trace is empty");
  const auto* ev = entries.front().as<EventPayload>();
  if (ev == nullptr || entries.front().name != "run_start") throw CorruptTrace(1, "first entry is not run_start");
  try {
    const Json& v = ev->value;
    RunStart rs;
    rs.run_id = entries.front().run_id;
    rs.model = v.at("model").get<std::string>();
    rs.seed = v.at("seed").get<std::uint64_t>();
    for (const auto& [k, pv] : v.at("params").items()) rs.params[k] = value_from_json(pv);
    rs.size = WorldSize{v.at("width").get<double>(), v.at("height").get<double>()};
    for (const auto& [kind, attrs] : v.at("schema").items()) {
      for (const auto& [name, type] : attrs.items()) rs.attributes.insert(name);
    }
    return rs;
  } catch (const Json::exception& e) {
    throw CorruptTrace(1, std::string("malformed run_start: ") + e.what());
  }
}

}  // namespace

SchemaMismatch::SchemaMismatch(std::vector<std::string> attrs)
    : std::runtime_error("spec references attributes absent from recorded states: " + join(attrs)),
      attrs_(std::move(attrs)) {}

ValidationReport replay_check(const std::vector<LogEntry>& entries, const dsl::VomasSpec& spec,
                              std::vector<LogEntry>* regenerated) {
  const RunStart rs = read_run_start(entries);

  std::vector<std::string> missing;
  for (const auto& attr : dsl::referenced_attributes(spec)) {
    if (!is_builtin_attribute(attr) && rs.attributes.count(attr) == 0) missing.push_back(attr);
  }
  if (!missing.empty()) throw SchemaMismatch(std::move(missing));

  std::vector<const LogEntry*> states;
  std::optional<std::string> abort_reason;
  for (const auto& e : entries) {
    if (e.as<StatePayload>() != nullptr) {
      if (states.empty() ? e.tick != 0 : e.tick != states.back()->tick + 1) {
        throw MissingStateEntries("state entries skip from tick " +
                                  (states.empty() ? std::string("start") : std::to_string(states.back()->tick)) +
                                  " to " + std::to_string(e.tick));
      }
      states.push_back(&e);
    } else if (const auto* ev = e.as<EventPayload>(); ev != nullptr && e.name == "abort") {
      abort_reason = ev->reason.value_or("");
    }
  }
  if (states.empty()) {
    throw MissingStateEntries("trace has no state entries; record it with --full-state to enable replay checking");
  }

  ConsoleAgent console(nullptr);
  VomasManager manager(spec, console, rs.run_id);
  auto emit = [&](std::vector<LogEntry> out) {
    if (regenerated != nullptr) regenerated->insert(regenerated->end(), out.begin(), out.end());
  };

  std::optional<World> last;
  for (const LogEntry* s : states) {
    last.emplace(world_from_state(*s->as<StatePayload>(), rs.model, rs.params, rs.size, s->tick));
    auto outcome = manager.evaluate_tick(*last, s->tick);
    emit(std::move(outcome.entries));
    if (outcome.halt) break;
  }

  TerminationReason reason = TerminationReason::completed;
  if (manager.halted()) {
    reason = TerminationReason::halted;
  } else if (abort_reason) {
    reason = TerminationReason::aborted;
  }
  emit(manager.evaluate_termination(*last, last->tick(), reason));

  ValidationReport report;
  report.run_id = rs.run_id;
  report.model = rs.model;
  report.seed = rs.seed;
  report.params = canonical_params(rs.params);
  report.status = reason == TerminationReason::halted    ? RunStatus::halted
                  : reason == TerminationReason::aborted ? RunStatus::aborted
                                                         : RunStatus::completed;
  report.final_tick = last->tick();
  report.violations = manager.violations();
  report.watch_stats = manager.watch_stats();
  report.eval_failures = manager.eval_failures();
  if (reason == TerminationReason::aborted) report.abort_reason = abort_reason;
  return report;
}

}  // namespace vomas::trace
