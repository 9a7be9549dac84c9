#pragma once

#include "vomas/dsl/ast.hpp"
#include "vomas/trace/log_entry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vomas::trace {

enum class RunStatus { completed, halted, aborted };

std::string_view status_name(RunStatus s);
std::optional<RunStatus> parse_status(std::string_view s);

struct ViolationRecord {
  std::string invariant;
  std::int64_t tick = 0;
  dsl::InvariantScope scope = dsl::InvariantScope::every_tick;

  friend bool operator==(const ViolationRecord&, const ViolationRecord&) = default;
};

/// Running statistics of one watch. Booleans order as false < true.
struct WatchStats {
  std::int64_t count = 0;
  std::optional<Value> min;
  std::optional<Value> max;
  std::optional<Value> last;

  void record(const Value& v);

  friend bool operator==(const WatchStats&, const WatchStats&) = default;
};

/// Outcome of a live run or an offline replay.
/// status == halted iff some halt-policy invariant was violated.
struct ValidationReport {
  std::string run_id;
  std::string model;
  std::uint64_t seed = 0;
  std::string params;  // canonical k=v list
  RunStatus status = RunStatus::completed;
  std::int64_t final_tick = 0;
  std::vector<ViolationRecord> violations;
  std::map<std::string, WatchStats> watch_stats;
  std::int64_t eval_failures = 0;
  std::int64_t console_failures = 0;
  std::optional<std::string> abort_reason;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

Json to_json(const ValidationReport& r);
ValidationReport report_from_json(const Json& j);

/// One canonical line plus trailing newline.
std::string serialize(const ValidationReport& r);
ValidationReport parse_report(std::string_view text);

}  // namespace vomas::trace
