#include "generators.hpp"

#include "vomas/trace/log_entry.hpp"
#include "vomas/trace/report.hpp"
#include "vomas/trace/writer.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace vomas::trace {
namespace {

namespace fs = std::filesystem;
using testing::below;
using testing::chance;
using testing::uniform;

Value random_value(Rng& rng) {
  switch (below(rng, 4)) {
    case 0: return std::int64_t{below(rng, 2000) - 1000};
    case 1: return uniform(rng, -1e6, 1e6) * (chance(rng, 0.1) ? 1e-300 : 1.0);
    case 2: return chance(rng, 0.5);
    default: return Symbol{chance(rng, 0.5) ? "wolf" : "journal"};
  }
}

std::string random_name(Rng& rng) {
  static const std::vector<std::string> names{"total_pubs", "wolves", "x\"quoted\"", "ünïcode", "a b"};
  return names[static_cast<std::size_t>(below(rng, static_cast<std::int64_t>(names.size())))];
}

Payload random_payload(Rng& rng) {
  switch (below(rng, 7)) {
    case 0: {
      WatchPayload p{random_value(rng), std::nullopt};
      if (chance(rng, 0.5)) {
        p.members.emplace();
        for (auto n = below(rng, 4); n > 0; --n) {
          p.members->push_back({below(rng, 100), chance(rng, 0.5) ? std::optional<bool>(chance(rng, 0.5)) : std::nullopt});
        }
      }
      return p;
    }
    case 1:
      return ViolationPayload{random_name(rng), "count(agents) > 0", chance(rng, 0.5) ? "every_tick" : "at_termination",
                              chance(rng, 0.5) ? std::optional<std::string>("halted") : std::nullopt};
    case 2: return ConsolePayload{chance(rng, 0.5) ? "INFO" : "VIOLATION", random_name(rng) + " evaluated false"};
    case 3: {
      FramePayload p;
      for (auto n = below(rng, 4); n > 0; --n) {
        p.agents.push_back({below(rng, 100), "wolf", uniform(rng, 0, 50), uniform(rng, 0, 50), "black"});
      }
      return p;
    }
    case 4: {
      StatePayload p;
      for (AgentId id = 0, n = below(rng, 4); id < n; ++id) {
        Attributes attrs;
        for (auto k = below(rng, 3); k > 0; --k) attrs["a" + std::to_string(k)] = random_value(rng);
        p.agents.push_back({id, "researcher", uniform(rng, 0, 50), uniform(rng, 0, 50), attrs});
      }
      if (chance(rng, 0.5)) p.links.push_back({0, 1});
      return p;
    }
    case 5:
      return EventPayload{Json{{"id", below(rng, 100)}, {"kind", "sheep"}},
                          chance(rng, 0.3) ? std::optional<std::string>("model step failed") : std::nullopt};
    default: return EvalFailurePayload{"avg over empty set"};
  }
}

TEST(LogEntry, RoundTripsEveryKind) {
  Rng rng(77);
  std::set<EntryKind> seen;
  for (int i = 0; i < 2000; ++i) {
    const LogEntry e{"00ff00ff00ff00ff", below(rng, 500), random_name(rng), random_payload(rng)};
    seen.insert(e.kind());
    const std::string line = serialize(e);
    ASSERT_EQ(line.find('\n'), std::string::npos);
    const LogEntry back = parse_entry(line);
    ASSERT_EQ(back, e) << line;
    ASSERT_EQ(serialize(back), line);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(LogEntry, WatchLineIsCanonical) {
  const LogEntry e{"r", 3, "total_pubs", WatchPayload{std::int64_t{41}, std::nullopt}};
  EXPECT_EQ(serialize(e), R"({"kind":"watch","name":"total_pubs","run_id":"r","tick":3,"value":41})");
}

TEST(LogEntry, IntegerAndRealValuesStayDistinct) {
  const LogEntry i{"r", 0, "w", WatchPayload{std::int64_t{2}, std::nullopt}};
  const LogEntry d{"r", 0, "w", WatchPayload{2.0, std::nullopt}};
  EXPECT_NE(serialize(i), serialize(d));
  EXPECT_EQ(parse_entry(serialize(d)), d);
}

TEST(LogEntry, MalformedLinesAreRejected) {
  EXPECT_THROW(parse_entry("not json"), std::invalid_argument);
  EXPECT_THROW(parse_entry(R"({"kind":"watch","name":"w","run_id":"r"})"), std::invalid_argument);
  EXPECT_THROW(parse_entry(R"({"kind":"gossip","name":"w","run_id":"r","tick":0})"), std::invalid_argument);
}

TEST(Report, RoundTrip) {
  ValidationReport r;
  r.run_id = "abc";
  r.model = "wolfsheep";
  r.seed = 18446744073709551615ULL;
  r.params = "n_sheep=0";
  r.status = RunStatus::halted;
  r.final_tick = 3;
  r.violations = {{"wolves_alive", 3, dsl::InvariantScope::every_tick}};
  r.watch_stats["wolves"] = WatchStats{4, Value{std::int64_t{0}}, Value{std::int64_t{1}}, Value{std::int64_t{0}}};
  r.watch_stats["never"] = WatchStats{};
  r.eval_failures = 2;
  r.abort_reason = std::nullopt;
  const std::string text = serialize(r);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(parse_report(text), r);
}

TEST(Writer, PreservesAppendOrder) {
  std::ostringstream out;
  TraceWriter w(out);
  const LogEntry a{"r", 1, "first", ConsolePayload{"INFO", "one"}};
  const LogEntry b{"r", 1, "second", ConsolePayload{"INFO", "two"}};
  w.append(a);
  w.append(b);
  w.end_tick();
  w.close();
  std::istringstream in(out.str());
  EXPECT_EQ(read_trace(in), (std::vector<LogEntry>{a, b}));
  EXPECT_EQ(w.entries_written(), 2u);
}

TEST(Writer, ClosedWriterRefusesEntries) {
  std::ostringstream out;
  TraceWriter w(out);
  w.close();
  EXPECT_THROW(w.append(LogEntry{"r", 0, "w", EvalFailurePayload{"x"}}), TraceIoError);
}

TEST(Writer, FailingStreamRaises) {
  std::ostringstream out;
  out.setstate(std::ios::badbit);
  TraceWriter w(out);
  EXPECT_THROW(w.append(LogEntry{"r", 0, "w", EvalFailurePayload{"x"}}), TraceIoError);
}

TEST(Writer, FileAppearsOnlyAfterClose) {
  const fs::path dir = fs::temp_directory_path() / "vomas_writer_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path target = dir / "run.trace";
  {
    std::ofstream(target) << "old contents\n";
  }
  auto w = TraceWriter::to_file(target);
  w.append(LogEntry{"r", 0, "w", WatchPayload{true, std::nullopt}});
  {
    std::ifstream in(target);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "old contents");
  }
  w.close();
  EXPECT_FALSE(fs::exists(dir / "run.trace.tmp"));
  EXPECT_EQ(read_trace_file(target).size(), 1u);
  fs::remove_all(dir);
}

TEST(Reader, CorruptLineIsReportedByNumber) {
  std::istringstream in(serialize(LogEntry{"r", 0, "w", WatchPayload{true, std::nullopt}}) + "\n{broken\n");
  try {
    read_trace(in);
    FAIL();
  } catch (const CorruptTrace& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(read_trace_file("/nonexistent/file.trace"), TraceIoError);
}

TEST(State, CaptureAndRebuildPreserveTheWorld) {
  Rng rng(3);
  World w = testing::random_synthetic_world(rng, 30, {40, 30}, 0.05);
  w.set_tick(9);
  const auto state = capture_state(w);
  const World back = world_from_state(state, w.model(), w.params(), w.size(), 9);
  EXPECT_EQ(back.agents(), w.agents());
  EXPECT_EQ(back.links(), w.links());
  EXPECT_EQ(back.tick(), 9);
  const LogEntry e{"r", 9, "state", state};
  EXPECT_EQ(parse_entry(serialize(e)), e);
}

}  // namespace
}  // namespace vomas::trace
