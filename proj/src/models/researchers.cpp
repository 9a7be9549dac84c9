#include "vomas/models/researchers.hpp"

#include <array>
#include <cmath>

namespace vomas::models {

namespace {

constexpr std::array<const char*, 3> kPolicies = {"conference", "journal", "none"};

const std::string& policy_of(const SimAgent& a) { return std::get<Symbol>(a.attr("policy")).name; }

// Highest mean pubs wins; earlier entries in kPolicies win ties.
void mark_best_policy(World& world) {
  std::array<double, 3> total{};
  std::array<std::int64_t, 3> members{};
  for (const auto& [id, a] : world.agents()) {
    for (std::size_t p = 0; p < kPolicies.size(); ++p) {
      if (policy_of(a) == kPolicies[p]) {
        total[p] += static_cast<double>(std::get<std::int64_t>(a.attr("pubs")));
        ++members[p];
      }
    }
  }
  int best = -1;
  double best_mean = 0.0;
  for (std::size_t p = 0; p < kPolicies.size(); ++p) {
    if (members[p] == 0) continue;
    const double mean = total[p] / static_cast<double>(members[p]);
    if (best < 0 || mean > best_mean) {
      best = static_cast<int>(p);
      best_mean = mean;
    }
  }
  std::vector<AgentId> ids;
  for (const auto& [id, a] : world.agents()) ids.push_back(id);
  for (AgentId id : ids) {
    auto& a = world.agent(id);
    a.set("best_policy", best >= 0 && policy_of(a) == kPolicies[static_cast<std::size_t>(best)]);
  }
}

void populate(World& world) {
  const auto n = param_int(world.params(), "n_researchers");
  const double y_scale = param_real(world.params(), "y_scale");
  for (std::int64_t i = 0; i < n; ++i) {
    const std::string policy = kPolicies[static_cast<std::size_t>(i % 3)];
    const double x = world.rng().uniform01() * world.size().width;
    world.add_agent(Symbol{"researcher"}, {x, researcher_y(0, y_scale, world.size().height)},
                    {{"policy", Symbol{policy}},
                     {"pubs", std::int64_t{0}},
                     {"color", Symbol{policy_color(policy)}},
                     {"best_policy", false}});
  }
  mark_best_policy(world);
}

void step(World& world) {
  const double p_conf = param_real(world.params(), "p_conf");
  const double p_journal = param_real(world.params(), "p_journal");
  const double y_scale = param_real(world.params(), "y_scale");

  std::vector<AgentId> ids;
  for (const auto& [id, a] : world.agents()) ids.push_back(id);

  for (AgentId id : ids) {
    auto& a = world.agent(id);
    const auto& policy = policy_of(a);
    bool journal = policy == "journal";
    if (policy == "none") journal = !(world.rng().uniform01() < 0.5);
    const bool accepted = world.rng().uniform01() < (journal ? p_journal : p_conf);
    if (!accepted) continue;
    const auto pubs = std::get<std::int64_t>(a.attr("pubs")) + 1;
    a.set("pubs", pubs);
    world.move(id, {a.position().x, researcher_y(pubs, y_scale, world.size().height)});
  }
  mark_best_policy(world);
}

}  // namespace

double researcher_y(std::int64_t pubs, double y_scale, double height) {
  return std::min(static_cast<double>(pubs) * y_scale, std::nextafter(height, 0.0));
}

std::string policy_color(const std::string& policy) {
  if (policy == "conference") return "lime";
  if (policy == "journal") return "red";
  return "cyan";
}

ModelDef researchers_model() {
  ModelDef def;
  def.name = "researchers";
  using K = ParamSpec::Kind;
  def.params = {
      {"n_researchers", K::integer, 1, 1'000'000, std::int64_t{30}, "population; policies assigned round-robin"},
      {"p_conf", K::real, 0.0, 1.0, 0.25, "conference acceptance probability"},
      {"p_journal", K::real, 0.0, 1.0, 0.10, "journal acceptance probability"},
      {"y_scale", K::real, 1e-9, 1e9, 1.0, "height gained per publication"},
      {"width", K::real, 1.0, 1e6, 50.0, "world width"},
      {"height", K::real, 1.0, 1e6, 50.0, "world height"},
  };
  def.attributes.declare("researcher", "policy", Type::symbol);
  def.attributes.declare("researcher", "pubs", Type::number);
  def.attributes.declare("researcher", "color", Type::symbol);
  def.attributes.declare("researcher", "best_policy", Type::boolean);
  def.populate = populate;
  def.step = step;
  def.color = [](const SimAgent& a) { return std::get<Symbol>(a.attr("color")).name; };
  return def;
}

}  // namespace vomas::models
