#pragma once

#include "vomas/console.hpp"
#include "vomas/dsl/ast.hpp"
#include "vomas/trace/log_entry.hpp"
#include "vomas/trace/report.hpp"
#include "vomas/world.hpp"

#include <map>
#include <string>
#include <vector>

namespace vomas {

enum class TerminationReason { completed, halted, aborted };

std::string_view reason_name(TerminationReason r);

struct TickOutcome {
  std::vector<trace::LogEntry> entries;
  bool halt = false;
};

/// VO manager: evaluates the compiled overlay against read-only world views,
/// turns results into log entries, echoes violations to the console and
/// keeps per-watch statistics. Owned by exactly one run.
class VomasManager {
 public:
  VomasManager(dsl::VomasSpec spec, ConsoleAgent& console, std::string run_id);

  /// Watches whose period divides `tick`, then every-tick invariants, then
  /// console echoes. Evaluation failures become eval_failure entries.
  /// Must not be called once a halt has been signalled.
  TickOutcome evaluate_tick(const World& view, std::int64_t tick);

  /// At-termination invariants against the final state; runs after halts too.
  std::vector<trace::LogEntry> evaluate_termination(const World& view, std::int64_t tick, TerminationReason reason);

  bool halted() const { return halted_; }
  const dsl::VomasSpec& spec() const { return spec_; }
  const std::vector<trace::ViolationRecord>& violations() const { return violations_; }
  const std::map<std::string, trace::WatchStats>& watch_stats() const { return stats_; }
  std::int64_t eval_failures() const { return eval_failures_; }

 private:
  trace::LogEntry entry(std::int64_t tick, std::string name, trace::Payload payload) const;
  std::optional<std::vector<ProximityMember>> proximity_members(const dsl::Expr& expr, const World& view,
                                                                std::int64_t tick) const;

  dsl::VomasSpec spec_;
  ConsoleAgent& console_;
  std::string run_id_;
  bool halted_ = false;
  std::vector<trace::ViolationRecord> violations_;
  std::map<std::string, trace::WatchStats> stats_;
  std::int64_t eval_failures_ = 0;
};

}  // namespace vomas
