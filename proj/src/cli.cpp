#include "vomas/cli.hpp"

#include "vomas/dsl/compile.hpp"
#include "vomas/run.hpp"
#include "vomas/trace/replay.hpp"
#include "vomas/trace/writer.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace vomas::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<int> parse_args(CLI::App& app, const Args& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return Exit::usage;
  }
  return std::nullopt;
}

std::optional<std::string> read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<std::string, std::string> split_kv(const std::string& flag) {
  const auto eq = flag.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("--param " + flag + ": expected key=value");
  return {flag.substr(0, eq), flag.substr(eq + 1)};
}

dsl::VomasSpec load_spec(const std::string& path, const AttributeSchema& schema) {
  if (path.empty()) return {};
  auto text = read_text(path);
  if (!text) throw UsageError("cannot read spec file " + path);
  try {
    return dsl::compile_spec(*text, schema);
  } catch (const dsl::SpecError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

const AttributeSchema& schema_for(const std::string& model) {
  static const AttributeSchema combined = ModelRegistry::builtin().combined_schema();
  const auto& registry = ModelRegistry::builtin();
  return registry.contains(model) ? registry.get(model).attributes : combined;
}

struct RunFlags {
  std::string model;
  std::string spec_path;
  std::string out_dir = ".";
  std::string config_path;
  std::int64_t ticks = 200;
  std::uint64_t seed = 0;
  bool full_state = false;
  std::int64_t frames = 0;
  std::vector<std::string> params;
};

void add_common_flags(CLI::App& app, RunFlags& f) {
  app.add_option("--model", f.model, "Model name (researchers, wolfsheep)")->required();
  app.add_option("--spec", f.spec_path, "VOMAS spec file; omitted means no monitors");
  app.add_option("--ticks", f.ticks, "Number of ticks to simulate")->capture_default_str();
  app.add_option("--out", f.out_dir, "Output directory")->capture_default_str();
  app.add_flag("--full-state", f.full_state, "Record every agent's state each tick (enables check)");
  app.add_option("--frames", f.frames, "Export a frame every K ticks (0 disables)")->capture_default_str();
  app.add_option("--config", f.config_path, "key=value file with parameter defaults");
}

RawParams base_params(const RunFlags& f) {
  RawParams raw;
  if (!f.config_path.empty()) {
    try {
      raw = read_config_file(f.config_path);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--config: ") + e.what());
    }
  }
  return raw;
}

void validate_flags(const RunFlags& f) {
  if (f.ticks < 1) throw UsageError("--ticks must be at least 1");
  if (f.frames < 0) throw UsageError("--frames must be non-negative");
  if (!ModelRegistry::builtin().contains(f.model)) throw UsageError("unknown model '" + f.model + "'");
}

/// Resolves parameters and VO placement before anything touches the disk.
ParamTable preflight(const RunConfig& config) {
  const ModelDef& def = ModelRegistry::builtin().get(config.model);
  ParamTable params;
  try {
    params = resolve_params(def.params, config.params);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  try {
    check_vo_placements(config.spec, WorldSize{as_double(params.at("width")), as_double(params.at("height"))});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return params;
}

fs::path trace_path(const fs::path& dir, const std::string& id) { return dir / (id + ".trace"); }
fs::path report_path(const fs::path& dir, const std::string& id) { return dir / (id + ".report"); }

trace::ValidationReport execute(const RunConfig& config, const fs::path& out_dir, std::ostream* console) {
  const ParamTable params = preflight(config);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw trace::TraceIoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

  const std::string id = compute_run_id(config.model, params, config.seed, config.max_ticks, config.trace,
                                        config.spec.source);
  auto writer = trace::TraceWriter::to_file(trace_path(out_dir, id));
  RunOptions options;
  options.console = console;
  trace::ValidationReport report = run_simulation(config, writer, options);
  trace::write_file_atomic(report_path(out_dir, id), trace::serialize(report));
  return report;
}

}  // namespace

int exit_code(const trace::ValidationReport& report) {
  if (report.status == trace::RunStatus::aborted) return Exit::abort;
  return report.violations.empty() ? Exit::ok : Exit::violations;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(widths[i] - row[i].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

int cmd_run(const Args& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Run one simulation under a VOMAS overlay", "vomas run"};
  RunFlags f;
  add_common_flags(app, f);
  app.add_option("--seed", f.seed, "PRNG seed")->capture_default_str();
  app.add_option("--param", f.params, "Model parameter override key=value (repeatable)");
  if (auto code = parse_args(app, args, out, err)) return *code;

  try {
    validate_flags(f);
    RunConfig config;
    config.model = f.model;
    config.params = base_params(f);
    for (const auto& p : f.params) {
      auto [k, v] = split_kv(p);
      config.params[k] = v;
    }
    config.seed = f.seed;
    config.max_ticks = f.ticks;
    config.spec = load_spec(f.spec_path, schema_for(f.model));
    config.trace = TraceOptions{f.full_state, f.frames};

    const auto report = execute(config, f.out_dir, &out);
    out << format_table({{"run_id", report.run_id},
                         {"status", std::string(trace::status_name(report.status))},
                         {"final_tick", std::to_string(report.final_tick)},
                         {"violations", std::to_string(report.violations.size())},
                         {"trace", trace_path(f.out_dir, report.run_id).string()},
                         {"report", report_path(f.out_dir, report.run_id).string()}});
    if (report.abort_reason) err << "vomas run: aborted: " << *report.abort_reason << '\n';
    return exit_code(report);
  } catch (const UsageError& e) {
    err << "vomas run: " << e.what() << '\n';
    return Exit::usage;
  } catch (const trace::TraceIoError& e) {
    err << "vomas run: " << e.what() << '\n';
    return Exit::abort;
  }
}

namespace {

struct Axis {
  std::string key;
  std::vector<std::string> values;
};

int decimals(std::string_view text) {
  const auto dot = text.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(text.size() - dot - 1);
}

std::optional<double> parse_plain_number(std::string_view text) {
  if (text.empty() || text.find_first_of("eEnN") != std::string_view::npos) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

/// `k=v` gives one value; `k=a..b:step` gives the inclusive range printed
/// with as many decimals as its widest bound.
Axis parse_axis(const std::string& flag) {
  auto [key, spec] = split_kv(flag);
  const auto dots = spec.find("..");
  if (dots == std::string::npos) return {key, {spec}};

  const auto colon = spec.find(':', dots);
  const auto bad = [&](const std::string& why) { return UsageError("malformed range --param " + flag + ": " + why); };
  if (colon == std::string::npos) throw bad("expected a..b:step");
  const std::string a_text = spec.substr(0, dots);
  const std::string b_text = spec.substr(dots + 2, colon - dots - 2);
  const std::string s_text = spec.substr(colon + 1);
  const auto a = parse_plain_number(a_text);
  const auto b = parse_plain_number(b_text);
  const auto step = parse_plain_number(s_text);
  if (!a || !b || !step) throw bad("bounds and step must be decimal numbers");
  if (!(*step > 0.0)) throw bad("step must be positive");
  if (*b < *a) throw bad("upper bound below lower bound");
  const double span = (*b - *a) / *step;
  if (span > 1e5) throw bad("too many points");

  const int places = std::max({decimals(a_text), decimals(b_text), decimals(s_text)});
  const auto count = static_cast<std::int64_t>(std::floor(span + 1e-9)) + 1;
  Axis axis{key, {}};
  for (std::int64_t i = 0; i < count; ++i) {
    const double v = *a + static_cast<double>(i) * *step;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    axis.values.emplace_back(buf);
  }
  return axis;
}

struct Point {
  std::string label;
  RawParams params;
};

std::vector<Point> expand_points(const RawParams& base, const std::vector<Axis>& axes) {
  std::vector<Point> points{{"", base}};
  for (const auto& axis : axes) {
    std::vector<Point> next;
    for (const auto& p : points) {
      for (const auto& v : axis.values) {
        Point q = p;
        q.params[axis.key] = v;
        q.label += (q.label.empty() ? "" : ",") + axis.key + "=" + v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  if (axes.empty()) points.front().label = "defaults";
  return points;
}

struct JobResult {
  std::optional<trace::ValidationReport> report;
  std::string console;
  std::string error;
};

struct WatchAggregate {
  std::optional<Value> min;
  std::optional<Value> max;
  double last_sum = 0.0;
  std::int64_t last_count = 0;
};

}  // namespace

int cmd_sweep(const Args& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Run a parameter sweep: every range point crossed with seeds 0..n-1", "vomas sweep"};
  RunFlags f;
  std::int64_t seeds = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  add_common_flags(app, f);
  app.add_option("--param", f.params, "key=value or key=a..b:step inclusive range (repeatable)");
  app.add_option("--seeds", seeds, "Seeds 0..n-1 per point")->capture_default_str();
  app.add_option("--jobs", jobs, "Concurrent runs");
  if (auto code = parse_args(app, args, out, err)) return *code;

  std::vector<Point> points;
  std::vector<RunConfig> configs;
  std::vector<std::size_t> point_of;
  dsl::VomasSpec spec;
  try {
    validate_flags(f);
    if (seeds < 1) throw UsageError("--seeds must be at least 1");
    if (jobs < 1) throw UsageError("--jobs must be at least 1");
    std::map<std::string, Axis> axes;
    for (const auto& p : f.params) {
      Axis a = parse_axis(p);
      axes[a.key] = std::move(a);
    }
    std::vector<Axis> ordered;
    for (auto& [k, a] : axes) ordered.push_back(std::move(a));
    points = expand_points(base_params(f), ordered);
    spec = load_spec(f.spec_path, schema_for(f.model));

    for (std::size_t pi = 0; pi < points.size(); ++pi) {
      for (std::int64_t s = 0; s < seeds; ++s) {
        RunConfig c;
        c.model = f.model;
        c.params = points[pi].params;
        c.seed = static_cast<std::uint64_t>(s);
        c.max_ticks = f.ticks;
        c.spec = spec;
        c.trace = TraceOptions{f.full_state, f.frames};
        preflight(c);
        configs.push_back(std::move(c));
        point_of.push_back(pi);
      }
    }
  } catch (const UsageError& e) {
    err << "vomas sweep: " << e.what() << '\n';
    return Exit::usage;
  }

  std::vector<JobResult> results(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      std::ostringstream console;
      try {
        results[i].report = execute(configs[i], f.out_dir, &console);
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
      results[i].console = console.str();
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(jobs, configs.size());
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }

  struct PointSummary {
    std::int64_t runs = 0, violating_runs = 0, violations = 0, completed = 0, halted = 0, aborted = 0;
    std::map<std::string, WatchAggregate> watches;
  };
  std::vector<PointSummary> summary(points.size());
  bool any_abort = false;
  bool any_violation = false;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    out << results[i].console;
    PointSummary& ps = summary[point_of[i]];
    ++ps.runs;
    if (!results[i].report) {
      ++ps.aborted;
      any_abort = true;
      err << "vomas sweep: run " << point_of[i] << "/seed " << configs[i].seed << " failed: " << results[i].error
          << '\n';
      continue;
    }
    const auto& r = *results[i].report;
    switch (r.status) {
      case trace::RunStatus::completed: ++ps.completed; break;
      case trace::RunStatus::halted: ++ps.halted; break;
      case trace::RunStatus::aborted: ++ps.aborted; any_abort = true; break;
    }
    ps.violations += static_cast<std::int64_t>(r.violations.size());
    if (!r.violations.empty()) {
      ++ps.violating_runs;
      any_violation = true;
    }
    for (const auto& [name, st] : r.watch_stats) {
      auto& agg = ps.watches[name];
      if (st.min && (!agg.min || as_double(*st.min) < as_double(*agg.min))) agg.min = st.min;
      if (st.max && (!agg.max || as_double(*st.max) > as_double(*agg.max))) agg.max = st.max;
      if (st.last) {
        agg.last_sum += as_double(*st.last);
        ++agg.last_count;
      }
    }
  }

  std::string records;
  std::vector<std::vector<std::string>> rows{{"point", "runs", "violations", "violating_runs", "halted", "aborted"}};
  std::int64_t total_violations = 0;
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const auto& ps = summary[pi];
    trace::Json watches = trace::Json::object();
    for (const auto& [name, agg] : ps.watches) {
      trace::Json w = trace::Json::object();
      w["min"] = agg.min ? trace::value_to_json(*agg.min) : trace::Json(nullptr);
      w["max"] = agg.max ? trace::value_to_json(*agg.max) : trace::Json(nullptr);
      w["mean_last"] =
          agg.last_count > 0 ? trace::Json(agg.last_sum / static_cast<double>(agg.last_count)) : trace::Json(nullptr);
      watches[name] = std::move(w);
    }
    trace::Json rec{{"kind", "sweep_point"},     {"point", points[pi].label}, {"runs", ps.runs},
                    {"violations", ps.violations}, {"violating_runs", ps.violating_runs},
                    {"completed", ps.completed},   {"halted", ps.halted},       {"aborted", ps.aborted},
                    {"watches", std::move(watches)}};
    records += rec.dump() + '\n';
    total_violations += ps.violations;
    rows.push_back({points[pi].label, std::to_string(ps.runs), std::to_string(ps.violations),
                    std::to_string(ps.violating_runs), std::to_string(ps.halted), std::to_string(ps.aborted)});
  }
  records += trace::Json{{"kind", "sweep_total"},
                         {"model", f.model},
                         {"points", points.size()},
                         {"runs", configs.size()},
                         {"violations", total_violations}}
                 .dump() +
             '\n';

  out << format_table(rows);
  try {
    trace::write_file_atomic(fs::path(f.out_dir) / "sweep.summary", records);
  } catch (const trace::TraceIoError& e) {
    err << "vomas sweep: " << e.what() << '\n';
    return Exit::abort;
  }
  if (any_abort) return Exit::abort;
  return any_violation ? Exit::violations : Exit::ok;
}

int cmd_check(const Args& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Re-check a full-state trace offline against a spec", "vomas check"};
  std::string trace_file;
  std::string spec_path;
  app.add_option("--trace", trace_file, "Trace file recorded with --full-state")->required();
  app.add_option("--spec", spec_path, "VOMAS spec file; omitted means no monitors");
  if (auto code = parse_args(app, args, out, err)) return *code;

  std::vector<trace::LogEntry> entries;
  try {
    entries = trace::read_trace_file(trace_file);
  } catch (const std::exception& e) {
    err << "vomas check: " << e.what() << '\n';
    return Exit::abort;
  }

  std::string model;
  if (!entries.empty()) {
    if (const auto* ev = entries.front().as<trace::EventPayload>(); ev && ev->value.is_object()) {
      model = ev->value.value("model", "");
    }
  }

  try {
    const auto spec = load_spec(spec_path, schema_for(model));
    const auto report = trace::replay_check(entries, spec);

    std::vector<std::vector<std::string>> rows{{"invariant", "violations", "first_tick"}};
    for (const auto& inv : spec.invariants) {
      std::int64_t n = 0;
      std::optional<std::int64_t> first;
      for (const auto& v : report.violations) {
        if (v.invariant != inv.name) continue;
        ++n;
        if (!first) first = v.tick;
      }
      rows.push_back({inv.name, std::to_string(n), first ? std::to_string(*first) : "-"});
    }
    out << "run " << report.run_id << ": " << trace::status_name(report.status) << " at tick " << report.final_tick
        << '\n'
        << format_table(rows);

    fs::path check_file = trace_file;
    check_file.replace_extension(".check");
    trace::write_file_atomic(check_file, trace::serialize(report));
    return exit_code(report);
  } catch (const UsageError& e) {
    err << "vomas check: " << e.what() << '\n';
    return Exit::usage;
  } catch (const trace::SchemaMismatch& e) {
    err << "vomas check: " << e.what() << '\n';
    return Exit::usage;
  } catch (const trace::MissingStateEntries& e) {
    err << "vomas check: " << e.what() << '\n';
    return Exit::abort;
  } catch (const std::exception& e) {
    err << "vomas check: " << e.what() << '\n';
    return Exit::abort;
  }
}

int cmd_report(const Args& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Summarize every run report in a directory", "vomas report"};
  std::string dir;
  app.add_option("--out", dir, "Directory holding .report files")->required();
  if (auto code = parse_args(app, args, out, err)) return *code;

  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    err << "vomas report: " << dir << " is not a directory\n";
    return Exit::usage;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    if (e.is_regular_file() && e.path().extension() == ".report") files.push_back(e.path());
  }
  if (files.empty()) {
    err << "vomas report: no .report files in " << dir << '\n';
    return Exit::usage;
  }

  std::vector<std::pair<trace::ValidationReport, std::string>> reports;
  for (const auto& path : files) {
    auto text = read_text(path);
    try {
      if (!text) throw std::runtime_error("cannot read file");
      reports.emplace_back(trace::parse_report(*text), path.filename().string());
    } catch (const std::exception& e) {
      err << "vomas report: " << path.string() << ": " << e.what() << '\n';
      return Exit::abort;
    }
  }
  std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.run_id, a.second) < std::tie(b.first.run_id, b.second);
  });

  std::set<std::string> watch_names;
  for (const auto& [r, _] : reports) {
    for (const auto& [name, st] : r.watch_stats) watch_names.insert(name);
  }
  std::vector<std::string> header{"run_id", "model", "status", "final_tick", "violations"};
  header.insert(header.end(), watch_names.begin(), watch_names.end());
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& [r, _] : reports) {
    std::vector<std::string> row{r.run_id, r.model, std::string(trace::status_name(r.status)),
                                 std::to_string(r.final_tick), std::to_string(r.violations.size())};
    for (const auto& name : watch_names) {
      auto it = r.watch_stats.find(name);
      row.push_back(it != r.watch_stats.end() && it->second.last ? format_value(*it->second.last) : "-");
    }
    rows.push_back(std::move(row));
  }

  const std::string table = format_table(rows);
  out << table;
  try {
    trace::write_file_atomic(fs::path(dir) / "summary.txt", table);
  } catch (const trace::TraceIoError& e) {
    err << "vomas report: " << e.what() << '\n';
    return Exit::abort;
  }
  return Exit::ok;
}

int dispatch(const Args& args, std::ostream& out, std::ostream& err) {
  static const char* const kUsage =
      "usage: vomas <run|sweep|check|report> [options]\n"
      "  run     simulate one configuration and write <run_id>.trace / .report\n"
      "  sweep   run a parameter grid crossed with seeds\n"
      "  check   re-check a full-state trace offline against a spec\n"
      "  report  tabulate the reports in a directory\n";
  if (args.empty()) {
    err << kUsage;
    return Exit::usage;
  }
  const Args rest(args.begin() + 1, args.end());
  const std::string& cmd = args.front();
  if (cmd == "run") return cmd_run(rest, out, err);
  if (cmd == "sweep") return cmd_sweep(rest, out, err);
  if (cmd == "check") return cmd_check(rest, out, err);
  if (cmd == "report") return cmd_report(rest, out, err);
  if (cmd == "-h" || cmd == "--help") {
    out << kUsage;
    return Exit::ok;
  }
  err << "vomas: unknown command '" << cmd << "'\n" << kUsage;
  return Exit::usage;
}

}  // namespace vomas::cli
