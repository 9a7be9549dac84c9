#pragma once

#include "vomas/dsl/ast.hpp"
#include "vomas/world.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vomas {

/// Connectivity of the undirected link graph restricted to a set of agents.
///
/// `largest_fraction` is max size / total, and 1.0 for an empty set so that
/// `largest_component_fraction(agents) == 1.0` holds vacuously on empty worlds.
struct ComponentReport {
  std::int64_t component_count = 0;
  std::vector<std::int64_t> component_sizes;  // descending
  double largest_fraction = 1.0;

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

ComponentReport connected_components(const World& view, const std::optional<Symbol>& kind_filter = std::nullopt);

/// Members must be live agent ids; links leaving the member set are ignored.
ComponentReport connected_components(const World& view, std::span<const AgentId> members);

class NonSpatialVoAgent : public std::invalid_argument {
 public:
  explicit NonSpatialVoAgent(const std::string& name)
      : std::invalid_argument("VO agent '" + name + "' has no spatial placement") {}
};

struct ProximityMember {
  AgentId id = 0;
  std::optional<bool> outcome;  // set when a predicate was attached

  friend bool operator==(const ProximityMember&, const ProximityMember&) = default;
};

struct ProximityReport {
  std::string vo_name;
  std::int64_t tick = 0;
  std::vector<ProximityMember> members;

  friend bool operator==(const ProximityReport&, const ProximityReport&) = default;
};

/// Agents inside a spatial VO agent's radius (and kind filter). With a
/// predicate, each member is evaluated with itself bound to `binder`
/// (empty binder = bare-attribute form).
ProximityReport proximity_report(const dsl::VoAgentDef& vo, const World& view, std::int64_t tick,
                                 const dsl::Expr* predicate = nullptr, const std::string& binder = {},
                                 const dsl::VomasSpec* spec = nullptr);

}  // namespace vomas
