#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace vomas {

enum class Severity { info, violation };

std::string_view severity_name(Severity s);

struct ConsoleRecord {
  std::int64_t tick = 0;
  Severity severity = Severity::info;
  std::string name;
  std::string message;

  /// `[tick] SEVERITY name: message`
  std::string line() const;

  friend bool operator==(const ConsoleRecord&, const ConsoleRecord&) = default;
};

/// Virtual console: shows run-time messages on a stream (standard error by
/// default, nullptr for silent). Stream failures are counted, never thrown.
class ConsoleAgent {
 public:
  explicit ConsoleAgent(std::ostream* stream);
  ConsoleAgent();

  ConsoleRecord emit(std::int64_t tick, Severity severity, std::string name, std::string message);

  std::int64_t failures() const { return failures_; }

 private:
  std::ostream* stream_;
  std::int64_t failures_ = 0;
};

}  // namespace vomas
