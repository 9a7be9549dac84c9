#pragma once

#include "vomas/trace/log_entry.hpp"

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace vomas::trace {

class TraceIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CorruptTrace : public std::runtime_error {
 public:
  CorruptTrace(std::size_t line, const std::string& reason)
      : std::runtime_error("corrupt trace at line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Logger agent: appends one canonical line per entry, never reorders, and
/// flushes at end of tick. File writers stage into `<path>.tmp` and rename
/// on close, so an existing trace is only ever replaced whole.
class TraceWriter {
 public:
  /// Writes to a caller-owned stream.
  explicit TraceWriter(std::ostream& out);

  static TraceWriter to_file(const std::filesystem::path& path);

  TraceWriter(TraceWriter&&) noexcept;
  TraceWriter& operator=(TraceWriter&&) noexcept;
  ~TraceWriter();

  void append(const LogEntry& entry);
  void end_tick();
  void close();

  bool is_open() const { return open_; }
  std::size_t entries_written() const { return written_; }

 private:
  TraceWriter() = default;

  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
  std::filesystem::path final_path_;
  std::filesystem::path temp_path_;
  bool open_ = false;
  std::size_t written_ = 0;
};

/// Writes `content` to `<path>.tmp` and renames over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::vector<LogEntry> read_trace(std::istream& in);

/// Throws TraceIoError if the file cannot be opened, CorruptTrace on bad lines.
std::vector<LogEntry> read_trace_file(const std::filesystem::path& path);

}  // namespace vomas::trace
