#include "vomas/models/wolfsheep.hpp"

#include <cmath>
#include <numbers>

namespace vomas::models {

namespace {

const Symbol kWolf{"wolf"};
const Symbol kSheep{"sheep"};

void populate(World& world) {
  const auto& p = world.params();
  const auto size = world.size();
  auto place = [&] {
    const double x = world.rng().uniform01() * size.width;
    const double y = world.rng().uniform01() * size.height;
    return Point{x, y};
  };
  for (std::int64_t i = 0; i < param_int(p, "n_sheep"); ++i) world.add_agent(kSheep, place(), {});
  for (std::int64_t i = 0; i < param_int(p, "n_wolves"); ++i) {
    world.add_agent(kWolf, place(), {{"energy", param_real(p, "wolf_energy")}});
  }
}

using Flock = std::vector<std::pair<AgentId, const SimAgent*>>;

// Sheep in ascending id order; map nodes stay put while changes are queued.
std::optional<AgentId> nearest_prey(const World& world, const Flock& flock, Point from, double radius) {
  std::optional<AgentId> best;
  double best_d = 0.0;
  for (const auto& [id, a] : flock) {
    if (world.pending_removal(id)) continue;
    const double d = toroidal_distance(from, a->position(), world.size());
    if (d > radius) continue;
    if (!best || d < best_d) {
      best = id;
      best_d = d;
    }
  }
  return best;
}

void step(World& world) {
  const auto& p = world.params();
  const double step_len = param_real(p, "step");
  const double eat_radius = param_real(p, "eat_radius");
  const double gain = param_real(p, "energy_gain");
  const double cost = param_real(p, "energy_cost");
  const double wolf_repro = param_real(p, "wolf_repro");
  const double sheep_repro = param_real(p, "sheep_repro");
  const double newborn_energy = param_real(p, "wolf_energy");

  std::vector<AgentId> ids;
  Flock flock;
  for (const auto& [id, a] : world.agents()) {
    ids.push_back(id);
    if (a.kind() == kSheep) flock.emplace_back(id, &a);
  }

  for (AgentId id : ids) {
    if (world.pending_removal(id)) continue;  // eaten earlier this tick
    auto& a = world.agent(id);

    const double heading = world.rng().uniform01() * 2.0 * std::numbers::pi;
    world.move(id, {a.position().x + step_len * std::cos(heading), a.position().y + step_len * std::sin(heading)});
    const Point here = a.position();

    if (a.kind() == kWolf) {
      double energy = std::get<double>(a.attr("energy"));
      if (auto prey = nearest_prey(world, flock, here, eat_radius)) {
        world.remove(*prey);
        energy += gain;
      }
      energy -= cost;
      a.set("energy", energy);
      const bool reproduce = world.rng().uniform01() < wolf_repro;
      if (energy <= 0.0) {
        world.remove(id);
      } else if (reproduce) {
        world.spawn(kWolf, here, {{"energy", newborn_energy}});
      }
    } else {
      if (world.rng().uniform01() < sheep_repro) world.spawn(kSheep, here, {});
    }
  }
}

}  // namespace

ModelDef wolfsheep_model() {
  ModelDef def;
  def.name = "wolfsheep";
  using K = ParamSpec::Kind;
  def.params = {
      {"n_sheep", K::integer, 0, 100'000, std::int64_t{100}, "initial sheep"},
      {"n_wolves", K::integer, 0, 100'000, std::int64_t{15}, "initial wolves"},
      {"step", K::real, 0.0, 1e3, 1.0, "distance moved per tick"},
      {"eat_radius", K::real, 0.0, 1e3, 1.0, "wolf catch radius"},
      {"energy_gain", K::real, 0.0, 1e6, 20.0, "energy per sheep eaten"},
      {"energy_cost", K::real, 0.0, 1e6, 1.0, "energy spent per tick"},
      {"wolf_repro", K::real, 0.0, 1.0, 0.05, "wolf reproduction probability"},
      {"sheep_repro", K::real, 0.0, 1.0, 0.04, "sheep reproduction probability"},
      {"wolf_energy", K::real, 0.0, 1e6, 20.0, "energy of initial and newborn wolves"},
      {"width", K::real, 1.0, 1e6, 50.0, "world width"},
      {"height", K::real, 1.0, 1e6, 50.0, "world height"},
  };
  def.attributes.declare("wolf", "energy", Type::number);
  def.populate = populate;
  def.step = step;
  def.color = [](const SimAgent& a) { return a.kind() == kWolf ? std::string("black") : std::string("white"); };
  return def;
}

}  // namespace vomas::models
