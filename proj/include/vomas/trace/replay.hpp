#pragma once

#include "vomas/dsl/ast.hpp"
#include "vomas/trace/log_entry.hpp"
#include "vomas/trace/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace vomas::trace {

/// The trace has no state entries or skips a tick; replay needs --full-state.
class MissingStateEntries : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The spec reads attributes that no recorded agent kind carries.
class SchemaMismatch : public std::runtime_error {
 public:
  SchemaMismatch(std::vector<std::string> attrs);
  const std::vector<std::string>& attributes() const { return attrs_; }

 private:
  std::vector<std::string> attrs_;
};

/// Re-evaluates `spec` against the world views stored in a full-state trace.
/// With the spec the trace was recorded under, the result equals the live
/// report. Regenerated overlay entries are appended to `regenerated` if given.
ValidationReport replay_check(const std::vector<LogEntry>& entries, const dsl::VomasSpec& spec,
                              std::vector<LogEntry>* regenerated = nullptr);

}  // namespace vomas::trace
