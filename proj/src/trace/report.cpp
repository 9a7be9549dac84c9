#include "vomas/trace/report.hpp"

#include <stdexcept>

namespace vomas::trace {

std::string_view status_name(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return "completed";
    case RunStatus::halted: return "halted";
    case RunStatus::aborted: return "aborted";
  }
  return "?";
}

std::optional<RunStatus> parse_status(std::string_view s) {
  if (s == "completed") return RunStatus::completed;
  if (s == "halted") return RunStatus::halted;
  if (s == "aborted") return RunStatus::aborted;
  return std::nullopt;
}

void WatchStats::record(const Value& v) {
  ++count;
  if (!min || as_double(v) < as_double(*min)) min = v;
  if (!max || as_double(v) > as_double(*max)) max = v;
  last = v;
}

namespace {

Json optional_value(const std::optional<Value>& v) { return v ? value_to_json(*v) : Json(nullptr); }

std::optional<Value> optional_value_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return value_from_json(j);
}

}  // namespace

Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"invariant", v.invariant}, {"tick", v.tick}, {"scope", std::string(dsl::scope_name(v.scope))}});
  }
  Json stats = Json::object();
  for (const auto& [name, s] : r.watch_stats) {
    stats[name] = {{"count", s.count}, {"min", optional_value(s.min)}, {"max", optional_value(s.max)},
                   {"last", optional_value(s.last)}};
  }
  Json j = {{"kind", "report"},
            {"run_id", r.run_id},
            {"model", r.model},
            {"seed", r.seed},
            {"params", r.params},
            {"status", std::string(status_name(r.status))},
            {"final_tick", r.final_tick},
            {"violations", std::move(violations)},
            {"watch_stats", std::move(stats)},
            {"eval_failures", r.eval_failures},
            {"console_failures", r.console_failures}};
  if (r.abort_reason) j["reason"] = *r.abort_reason;
  return j;
}

ValidationReport report_from_json(const Json& j) {
  try {
    if (j.at("kind").get<std::string>() != "report") throw std::invalid_argument("not a report record");
    ValidationReport r;
    r.run_id = j.at("run_id").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.params = j.at("params").get<std::string>();
    const auto status = parse_status(j.at("status").get<std::string>());
    if (!status) throw std::invalid_argument("unknown status");
    r.status = *status;
    r.final_tick = j.at("final_tick").get<std::int64_t>();
    for (const auto& v : j.at("violations")) {
      const auto scope = v.at("scope").get<std::string>();
      r.violations.push_back({v.at("invariant").get<std::string>(), v.at("tick").get<std::int64_t>(),
                              scope == "at_termination" ? dsl::InvariantScope::at_termination
                                                        : dsl::InvariantScope::every_tick});
    }
    for (const auto& [name, s] : j.at("watch_stats").items()) {
      r.watch_stats[name] = {s.at("count").get<std::int64_t>(), optional_value_from(s.at("min")),
                             optional_value_from(s.at("max")), optional_value_from(s.at("last"))};
    }
    r.eval_failures = j.at("eval_failures").get<std::int64_t>();
    r.console_failures = j.at("console_failures").get<std::int64_t>();
    if (j.contains("reason")) r.abort_reason = j.at("reason").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string serialize(const ValidationReport& r) { return to_json(r).dump() + "\n"; }

ValidationReport parse_report(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("report is not a JSON record");
  return report_from_json(j);
}

}  // namespace vomas::trace
