#include "vomas/world.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace vomas {

double toroidal_distance(Point a, Point b, WorldSize dims) {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  dx = std::min(dx, dims.width - dx);
  dy = std::min(dy, dims.height - dy);
  return std::sqrt(dx * dx + dy * dy);
}

Point wrap(Point p, WorldSize dims) {
  auto wrap_axis = [](double v, double extent) {
    v = std::fmod(v, extent);
    if (v < 0.0) v += extent;
    // fmod of a tiny negative plus extent can round up to extent itself
    if (v >= extent) v = 0.0;
    return v;
  };
  return {wrap_axis(p.x, dims.width), wrap_axis(p.y, dims.height)};
}

const Value* SimAgent::find(const std::string& key) const {
  auto it = attributes_.find(key);
  return it == attributes_.end() ? nullptr : &it->second;
}

const Value& SimAgent::attr(const std::string& key) const {
  if (const auto* v = find(key)) return *v;
  throw std::out_of_range("agent " + std::to_string(id_) + " (" + kind_.name + ") has no attribute '" + key + "'");
}

void SimAgent::set(const std::string& key, Value v) {
  auto it = attributes_.find(key);
  if (it == attributes_.end()) {
    throw std::out_of_range("agent " + std::to_string(id_) + " (" + kind_.name + ") has no attribute '" + key + "'");
  }
  it->second = std::move(v);
}

World::World(std::string model, ParamTable params, WorldSize size, std::uint64_t seed)
    : model_(std::move(model)), params_(std::move(params)), size_(size), rng_(seed) {
  if (!(size.width > 0.0) || !(size.height > 0.0)) throw std::invalid_argument("world extent must be positive");
}

const SimAgent* World::find(AgentId id) const {
  auto it = agents_.find(id);
  return it == agents_.end() ? nullptr : &it->second;
}

const SimAgent& World::agent(AgentId id) const {
  if (const auto* a = find(id)) return *a;
  throw std::out_of_range("no agent with id " + std::to_string(id));
}

SimAgent& World::agent(AgentId id) {
  auto it = agents_.find(id);
  if (it == agents_.end()) throw std::out_of_range("no agent with id " + std::to_string(id));
  return it->second;
}

AgentId World::add_agent(Symbol kind, Point pos, Attributes attributes) {
  const AgentId id = next_id_++;
  agents_.emplace(id, SimAgent(id, std::move(kind), wrap(pos, size_), std::move(attributes)));
  return id;
}

void World::insert_agent(SimAgent agent) {
  if (agent.id() < 0) throw std::invalid_argument("agent ids are non-negative");
  if (agents_.contains(agent.id())) throw std::invalid_argument("duplicate agent id " + std::to_string(agent.id()));
  if (!size_.contains(agent.position())) throw std::invalid_argument("agent position outside the world");
  next_id_ = std::max(next_id_, agent.id() + 1);
  const AgentId id = agent.id();
  agents_.emplace(id, std::move(agent));
}

AgentId World::spawn(Symbol kind, Point pos, Attributes attributes) {
  const AgentId id = next_id_++;
  births_.emplace_back(id, std::move(kind), wrap(pos, size_), std::move(attributes));
  return id;
}

void World::remove(AgentId id) {
  if (!agents_.contains(id)) throw std::out_of_range("cannot remove unknown agent " + std::to_string(id));
  removals_.insert(id);
}

void World::move(AgentId id, Point target) { agent(id).pos_ = wrap(target, size_); }

void World::link(AgentId a, AgentId b) {
  if (a == b) throw std::invalid_argument("self links are not allowed");
  if (!agents_.contains(a) || !agents_.contains(b)) throw std::out_of_range("link endpoint is not a live agent");
  links_.emplace(std::min(a, b), std::max(a, b));
}

void World::unlink(AgentId a, AgentId b) { links_.erase({std::min(a, b), std::max(a, b)}); }

void World::commit() {
  for (AgentId id : removals_) {
    auto it = agents_.find(id);
    events_.push_back({PopulationEvent::Type::death, id, it->second.kind()});
    agents_.erase(it);
  }
  if (!removals_.empty()) {
    std::erase_if(links_, [&](const Link& l) { return removals_.contains(l.first) || removals_.contains(l.second); });
  }
  removals_.clear();

  for (auto& born : births_) {
    events_.push_back({PopulationEvent::Type::birth, born.id(), born.kind()});
    const AgentId id = born.id();
    agents_.emplace(id, std::move(born));
  }
  births_.clear();
}

std::vector<AgentId> neighbors_within(const World& world, Point center, double radius,
                                      const std::optional<Symbol>& kind_filter) {
  std::vector<AgentId> out;
  for (const auto& [id, agent] : world.agents()) {
    if (kind_filter && agent.kind() != *kind_filter) continue;
    if (toroidal_distance(center, agent.position(), world.size()) <= radius) out.push_back(id);
  }
  return out;
}

namespace {

struct Fnv {
  std::uint64_t h = 0xcbf29ce484222325ULL;

  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  }
  void u64(std::uint64_t v) { bytes(&v, sizeof v); }
  void f64(double d) { u64(std::bit_cast<std::uint64_t>(d)); }
  void str(const std::string& s) {
    u64(s.size());
    bytes(s.data(), s.size());
  }
  void value(const Value& v) {
    u64(v.index());
    std::visit(
        [this](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Symbol>) {
            str(x.name);
          } else if constexpr (std::is_same_v<T, double>) {
            f64(x);
          } else {
            u64(static_cast<std::uint64_t>(x));
          }
        },
        v);
  }
  void agent(const SimAgent& a) {
    u64(static_cast<std::uint64_t>(a.id()));
    str(a.kind().name);
    f64(a.position().x);
    f64(a.position().y);
    u64(a.attributes().size());
    for (const auto& [k, v] : a.attributes()) {
      str(k);
      value(v);
    }
  }
};

}  // namespace

std::uint64_t world_hash(const World& world) {
  Fnv f;
  f.str(world.model());
  for (const auto& [k, v] : world.params()) {
    f.str(k);
    f.value(v);
  }
  f.f64(world.size().width);
  f.f64(world.size().height);
  f.u64(static_cast<std::uint64_t>(world.tick()));
  for (auto w : world.rng().state()) f.u64(w);
  f.u64(world.agents().size());
  for (const auto& [id, a] : world.agents()) f.agent(a);
  f.u64(world.links().size());
  for (const auto& [a, b] : world.links()) {
    f.u64(static_cast<std::uint64_t>(a));
    f.u64(static_cast<std::uint64_t>(b));
  }
  for (const auto& e : world.events()) {
    f.u64(static_cast<std::uint64_t>(e.type));
    f.u64(static_cast<std::uint64_t>(e.id));
  }
  return f.h;
}

}  // namespace vomas
