#pragma once

#include "vomas/geometry.hpp"
#include "vomas/params.hpp"
#include "vomas/rng.hpp"
#include "vomas/value.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vomas {

using AgentId = std::int64_t;
using Attributes = std::map<std::string, Value>;

class SimAgent {
 public:
  SimAgent(AgentId id, Symbol kind, Point pos, Attributes attributes)
      : id_(id), kind_(std::move(kind)), pos_(pos), attributes_(std::move(attributes)) {}

  AgentId id() const { return id_; }
  const Symbol& kind() const { return kind_; }
  Point position() const { return pos_; }
  const Attributes& attributes() const { return attributes_; }

  /// nullptr when the attribute is not declared for this agent.
  const Value* find(const std::string& key) const;
  const Value& attr(const std::string& key) const;

  /// Keys are fixed at creation; setting an undeclared key throws.
  void set(const std::string& key, Value v);

  friend bool operator==(const SimAgent&, const SimAgent&) = default;

 private:
  friend class World;

  AgentId id_;
  Symbol kind_;
  Point pos_;
  Attributes attributes_;
};

struct PopulationEvent {
  enum class Type { birth, death };

  Type type;
  AgentId id;
  Symbol kind;

  friend bool operator==(const PopulationEvent&, const PopulationEvent&) = default;
};

using Link = std::pair<AgentId, AgentId>;

/// The simulated population on a torus. Agents iterate in ascending id.
/// Births and removals requested during a step are queued until commit(),
/// so everything inside one tick sees the same population.
class World {
 public:
  World(std::string model, ParamTable params, WorldSize size, std::uint64_t seed);

  const std::string& model() const { return model_; }
  const ParamTable& params() const { return params_; }
  WorldSize size() const { return size_; }
  std::int64_t tick() const { return tick_; }

  Rng& rng() { return rng_; }
  const Rng& rng() const { return rng_; }

  const std::map<AgentId, SimAgent>& agents() const { return agents_; }
  std::size_t population() const { return agents_.size(); }

  const SimAgent* find(AgentId id) const;
  const SimAgent& agent(AgentId id) const;
  SimAgent& agent(AgentId id);

  /// Immediate insertion with a fresh id; for initial populations.
  AgentId add_agent(Symbol kind, Point pos, Attributes attributes);

  /// Immediate insertion with an explicit id (replay, tests). Ids must be unused.
  void insert_agent(SimAgent agent);

  /// Queued birth; the id is reserved now, the agent appears at commit().
  AgentId spawn(Symbol kind, Point pos, Attributes attributes);

  /// Queued removal; takes effect at commit().
  void remove(AgentId id);
  bool pending_removal(AgentId id) const { return removals_.contains(id); }

  void move(AgentId id, Point target);

  void link(AgentId a, AgentId b);
  void unlink(AgentId a, AgentId b);
  const std::set<Link>& links() const { return links_; }

  /// Applies queued births and removals, purges dangling links and records
  /// the population events of this tick.
  void commit();

  void begin_tick() { events_.clear(); }
  void advance_tick() { ++tick_; }
  void set_tick(std::int64_t tick) { tick_ = tick; }

  const std::vector<PopulationEvent>& events() const { return events_; }

  friend bool operator==(const World&, const World&) = default;

 private:
  std::string model_;
  ParamTable params_;
  WorldSize size_;
  std::int64_t tick_ = 0;
  Rng rng_;
  AgentId next_id_ = 0;
  std::map<AgentId, SimAgent> agents_;
  std::set<Link> links_;
  std::vector<SimAgent> births_;
  std::set<AgentId> removals_;
  std::vector<PopulationEvent> events_;
};

/// Agents (optionally of one kind) within `radius` of `center`, ascending id.
std::vector<AgentId> neighbors_within(const World& world, Point center, double radius,
                                      const std::optional<Symbol>& kind_filter = std::nullopt);

/// FNV-1a digest of the complete world state, rng included.
std::uint64_t world_hash(const World& world);

}  // namespace vomas
