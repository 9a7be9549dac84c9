#include "vomas/console.hpp"

#include <iostream>

namespace vomas {

std::string_view severity_name(Severity s) { return s == Severity::info ? "INFO" : "VIOLATION"; }

std::string ConsoleRecord::line() const {
  return "[" + std::to_string(tick) + "] " + std::string(severity_name(severity)) + " " + name + ": " + message;
}

ConsoleAgent::ConsoleAgent(std::ostream* stream) : stream_(stream) {}

ConsoleAgent::ConsoleAgent() : stream_(&std::cerr) {}

ConsoleRecord ConsoleAgent::emit(std::int64_t tick, Severity severity, std::string name, std::string message) {
  ConsoleRecord rec{tick, severity, std::move(name), std::move(message)};
  if (stream_ != nullptr) {
    *stream_ << rec.line() << '\n';
    stream_->flush();
    if (!*stream_) {
      ++failures_;
      stream_->clear();
    }
  }
  return rec;
}

}  // namespace vomas
