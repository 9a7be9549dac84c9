#pragma once

#include "vomas/dsl/ast.hpp"
#include "vomas/model.hpp"
#include "vomas/trace/report.hpp"
#include "vomas/trace/writer.hpp"

#include <functional>
#include <iosfwd>
#include <string>

namespace vomas {

struct TraceOptions {
  bool full_state = false;
  std::int64_t frame_period = 0;  // 0 disables frames
};

struct RunConfig {
  std::string model;
  RawParams params;
  std::uint64_t seed = 0;
  std::int64_t max_ticks = 1;
  dsl::VomasSpec spec;
  TraceOptions trace;
};

struct RunOptions {
  const ModelRegistry* registry = &ModelRegistry::builtin();
  /// Console stream; nullptr silences it.
  std::ostream* console = nullptr;
  /// Called around every evaluate_tick with world hashes taken before and after.
  std::function<void(std::int64_t tick, std::uint64_t before, std::uint64_t after)> on_evaluate;
};

/// Hex FNV-1a digest identifying a configuration; identical configs share it.
std::string compute_run_id(const std::string& model, const ParamTable& params, std::uint64_t seed,
                           std::int64_t max_ticks, const TraceOptions& trace, const std::string& spec_source);

/// Evaluates the overlay on the tick-0 state, then alternates model step and
/// evaluation until max_ticks or a halt, then evaluates termination invariants.
/// ModelPanic and TraceIoError end the run with status aborted.
/// Throws UnknownModel / ParameterError / std::invalid_argument before any
/// entry is written when the configuration itself is invalid.
trace::ValidationReport run_simulation(const RunConfig& config, trace::TraceWriter& writer,
                                       const RunOptions& options = {});

/// Rejects spatial VO agents placed outside the world.
void check_vo_placements(const dsl::VomasSpec& spec, WorldSize size);

}  // namespace vomas
