#pragma once

#include "vomas/trace/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace vomas::cli {

/// Arguments after the subcommand name.
using Args = std::vector<std::string>;

/// Exit codes shared by every command.
enum Exit : int { ok = 0, usage = 1, abort = 2, violations = 3 };

/// abort for status aborted, violations when any were recorded, ok otherwise.
int exit_code(const trace::ValidationReport& report);

int cmd_run(const Args& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const Args& args, std::ostream& out, std::ostream& err);
int cmd_check(const Args& args, std::ostream& out, std::ostream& err);
int cmd_report(const Args& args, std::ostream& out, std::ostream& err);

/// Dispatches on args[0] (run | sweep | check | report).
int dispatch(const Args& args, std::ostream& out, std::ostream& err);

/// Left-aligned columns separated by two spaces, no trailing blanks.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace vomas::cli
