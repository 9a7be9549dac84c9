#pragma once

#include "vomas/validators.hpp"
#include "vomas/value.hpp"
#include "vomas/world.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vomas::trace {

using Json = nlohmann::json;

enum class EntryKind { watch, violation, console, frame, state, event, eval_failure };

std::string_view kind_name(EntryKind k);
std::optional<EntryKind> parse_kind(std::string_view s);

struct WatchPayload {
  Value value;
  /// Proximity members when the watch aggregates over a spatial VO agent.
  std::optional<std::vector<ProximityMember>> members;

  friend bool operator==(const WatchPayload&, const WatchPayload&) = default;
};

struct ViolationPayload {
  std::string invariant;
  std::string predicate;
  std::string scope;
  std::optional<std::string> reason;  // termination reason, at_termination only

  friend bool operator==(const ViolationPayload&, const ViolationPayload&) = default;
};

struct ConsolePayload {
  std::string severity;
  std::string message;

  friend bool operator==(const ConsolePayload&, const ConsolePayload&) = default;
};

struct FrameAgent {
  AgentId id = 0;
  std::string kind;
  double x = 0.0;
  double y = 0.0;
  std::string color;

  friend bool operator==(const FrameAgent&, const FrameAgent&) = default;
};

struct FramePayload {
  std::vector<FrameAgent> agents;

  friend bool operator==(const FramePayload&, const FramePayload&) = default;
};

struct StateAgent {
  AgentId id = 0;
  std::string kind;
  double x = 0.0;
  double y = 0.0;
  Attributes attributes;

  friend bool operator==(const StateAgent&, const StateAgent&) = default;
};

struct StatePayload {
  std::vector<StateAgent> agents;
  std::vector<Link> links;

  friend bool operator==(const StatePayload&, const StatePayload&) = default;
};

/// run_start, birth, death and abort records.
struct EventPayload {
  Json value;
  std::optional<std::string> reason;

  friend bool operator==(const EventPayload&, const EventPayload&) = default;
};

struct EvalFailurePayload {
  std::string message;

  friend bool operator==(const EvalFailurePayload&, const EvalFailurePayload&) = default;
};

using Payload = std::variant<WatchPayload, ViolationPayload, ConsolePayload, FramePayload, StatePayload, EventPayload,
                             EvalFailurePayload>;

/// One trace line. The kind is implied by the payload alternative.
struct LogEntry {
  std::string run_id;
  std::int64_t tick = 0;
  std::string name;
  Payload payload;

  EntryKind kind() const { return static_cast<EntryKind>(payload.index()); }

  template <class P>
  const P* as() const {
    return std::get_if<P>(&payload);
  }

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

Json value_to_json(const Value& v);
Value value_from_json(const Json& j);

Json to_json(const LogEntry& e);
LogEntry entry_from_json(const Json& j);

/// Canonical single-line form (sorted keys, no whitespace), without newline.
std::string serialize(const LogEntry& e);

/// Throws std::invalid_argument describing the first problem.
LogEntry parse_entry(std::string_view line);

/// Full snapshot of agents and links, ids ascending.
StatePayload capture_state(const World& world);

/// Rebuilds a world view from a state payload.
World world_from_state(const StatePayload& state, const std::string& model, const ParamTable& params,
                       WorldSize size, std::int64_t tick);

}  // namespace vomas::trace
