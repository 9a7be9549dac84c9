#include "vomas/trace/writer.hpp"

#include <istream>
#include <ostream>
#include <system_error>

namespace vomas::trace {

TraceWriter::TraceWriter(std::ostream& out) : out_(&out), open_(true) {}

TraceWriter TraceWriter::to_file(const std::filesystem::path& path) {
  TraceWriter w;
  w.final_path_ = path;
  w.temp_path_ = path;
  w.temp_path_ += ".tmp";
  w.file_ = std::make_unique<std::ofstream>(w.temp_path_, std::ios::binary | std::ios::trunc);
  if (!*w.file_) throw TraceIoError("cannot open trace file " + w.temp_path_.string());
  w.out_ = w.file_.get();
  w.open_ = true;
  return w;
}

TraceWriter::TraceWriter(TraceWriter&& other) noexcept { *this = std::move(other); }

TraceWriter& TraceWriter::operator=(TraceWriter&& other) noexcept {
  if (this != &other) {
    file_ = std::move(other.file_);
    out_ = other.out_;
    final_path_ = std::move(other.final_path_);
    temp_path_ = std::move(other.temp_path_);
    open_ = other.open_;
    written_ = other.written_;
    other.out_ = nullptr;
    other.open_ = false;
  }
  return *this;
}

TraceWriter::~TraceWriter() {
  try {
    close();
  } catch (...) {
  }
}

void TraceWriter::append(const LogEntry& entry) {
  if (!open_) throw TraceIoError("trace writer is closed");
  *out_ << serialize(entry) << '\n';
  if (!*out_) throw TraceIoError("trace write failed");
  ++written_;
}

void TraceWriter::end_tick() {
  if (!open_) throw TraceIoError("trace writer is closed");
  out_->flush();
  if (!*out_) throw TraceIoError("trace flush failed");
}

void TraceWriter::close() {
  if (!open_) return;
  open_ = false;
  out_->flush();
  const bool ok = static_cast<bool>(*out_);
  if (file_) {
    file_->close();
    if (!ok || file_->fail()) throw TraceIoError("trace write failed for " + final_path_.string());
    std::error_code ec;
    std::filesystem::rename(temp_path_, final_path_, ec);
    if (ec) throw TraceIoError("cannot move trace into place: " + ec.message());
  } else if (!ok) {
    throw TraceIoError("trace write failed");
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw TraceIoError("cannot open " + temp.string());
    out << content;
    out.close();
    if (!out) throw TraceIoError("write failed for " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) throw TraceIoError("cannot move " + temp.string() + " into place: " + ec.message());
}

std::vector<LogEntry> read_trace(std::istream& in) {
  std::vector<LogEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(parse_entry(line));
    } catch (const std::exception& e) {
      throw CorruptTrace(line_no, e.what());
    }
  }
  return out;
}

std::vector<LogEntry> read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TraceIoError("cannot open trace file " + path.string());
  return read_trace(in);
}

}  // namespace vomas::trace
