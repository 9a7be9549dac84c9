#include "generators.hpp"
#include "oracles.hpp"

#include "vomas/geometry.hpp"
#include "vomas/model.hpp"
#include "vomas/params.hpp"
#include "vomas/rng.hpp"
#include "vomas/world.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

namespace vomas {
namespace {

using testing::nine_image_distance;
using testing::scan_within;
using testing::uniform;

// Reference outputs from an independent Python xoshiro256**/SplitMix64.
TEST(Rng, MatchesReferenceSequence) {
  Rng zero(0);
  EXPECT_EQ(zero(), 0x99ec5f36cb75f2b4ULL);
  EXPECT_EQ(zero(), 0xbf6e1f784956452aULL);
  EXPECT_EQ(zero(), 0x1a5f849d4933e6e0ULL);
  EXPECT_EQ(zero(), 0x6aa594f1262d2d2cULL);

  Rng answer(42);
  EXPECT_EQ(answer(), 0x15780b2e0c2ec716ULL);
  EXPECT_EQ(answer(), 0x6104d9866d113a7eULL);
  EXPECT_EQ(answer(), 0xae17533239e499a1ULL);
  EXPECT_EQ(answer(), 0xecb8ad4703b360a1ULL);
}

TEST(Rng, Uniform01StaysInHalfOpenUnitInterval) {
  Rng rng(5);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, CopiesContinueIdentically) {
  Rng a(9);
  a();
  Rng b = a;
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a(), b());
  EXPECT_EQ(a, b);
}

TEST(Geometry, ToroidalDistanceMatchesNineImageScan) {
  Rng rng(1);
  for (int i = 0; i < 5000; ++i) {
    const WorldSize size{uniform(rng, 1.0, 100.0), uniform(rng, 1.0, 100.0)};
    const Point a{uniform(rng, 0.0, size.width), uniform(rng, 0.0, size.height)};
    const Point b{uniform(rng, 0.0, size.width), uniform(rng, 0.0, size.height)};
    const double d = toroidal_distance(a, b, size);
    ASSERT_NEAR(d, nine_image_distance(a, b, size), 1e-12);
    ASSERT_DOUBLE_EQ(d, toroidal_distance(b, a, size));
    ASSERT_LE(d, std::hypot(size.width / 2, size.height / 2) + 1e-12);
  }
}

TEST(Geometry, WrapLandsInsideWorld) {
  const WorldSize size{50, 50};
  EXPECT_EQ(wrap({-1, 51}, size), (Point{49, 1}));
  EXPECT_EQ(wrap({50, 0}, size), (Point{0, 0}));
  const Point tiny = wrap({-1e-18, 3}, size);
  EXPECT_TRUE(size.contains(tiny));
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_TRUE(size.contains(wrap({uniform(rng, -500, 500), uniform(rng, -500, 500)}, size)));
  }
}

TEST(World, NeighborsWithinMatchesScan) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const WorldSize size{uniform(rng, 5, 60), uniform(rng, 5, 60)};
    World w = testing::random_synthetic_world(rng, 120, size);
    const Point c{uniform(rng, 0, size.width), uniform(rng, 0, size.height)};
    const double r = uniform(rng, 0, 20);
    ASSERT_EQ(neighbors_within(w, c, r), scan_within(w, c, r));
    ASSERT_EQ(neighbors_within(w, c, r, Symbol{"alpha"}), scan_within(w, c, r, "alpha"));
  }
}

TEST(World, RadiusZeroFindsOnlyCoincidentAgents) {
  World w("synthetic", {}, {10, 10}, 0);
  const auto at = w.add_agent(Symbol{"alpha"}, {3, 3}, {});
  w.add_agent(Symbol{"alpha"}, {3.5, 3}, {});
  EXPECT_EQ(neighbors_within(w, {3, 3}, 0.0), std::vector<AgentId>{at});
  EXPECT_TRUE(neighbors_within(w, {7, 7}, 0.0).empty());
}

TEST(World, BirthsAndRemovalsWaitForCommit) {
  World w("synthetic", {}, {10, 10}, 0);
  const auto a = w.add_agent(Symbol{"alpha"}, {1, 1}, {});
  const auto b = w.add_agent(Symbol{"beta"}, {2, 2}, {});
  w.link(a, b);
  w.begin_tick();
  const auto c = w.spawn(Symbol{"alpha"}, {3, 3}, {});
  w.remove(b);
  EXPECT_EQ(w.population(), 2u);
  EXPECT_EQ(w.find(c), nullptr);
  EXPECT_TRUE(w.pending_removal(b));
  w.commit();
  EXPECT_EQ(w.population(), 2u);
  EXPECT_NE(w.find(c), nullptr);
  EXPECT_EQ(w.find(b), nullptr);
  EXPECT_TRUE(w.links().empty());
  ASSERT_EQ(w.events().size(), 2u);
  EXPECT_GT(c, b);
}

TEST(World, SetRejectsUndeclaredAttributes) {
  World w("synthetic", {}, {10, 10}, 0);
  const auto a = w.add_agent(Symbol{"alpha"}, {1, 1}, {{"energy", 1.0}});
  w.agent(a).set("energy", 2.0);
  EXPECT_EQ(std::get<double>(w.agent(a).attr("energy")), 2.0);
  EXPECT_THROW(w.agent(a).set("mood", 1.0), std::exception);
}

TEST(World, HashTracksEveryStateComponent) {
  World w("synthetic", {}, {10, 10}, 0);
  const auto a = w.add_agent(Symbol{"alpha"}, {1, 1}, {{"energy", 1.0}});
  const auto b = w.add_agent(Symbol{"alpha"}, {2, 1}, {});
  const auto h0 = world_hash(w);
  World moved = w;
  moved.move(a, {1.5, 1});
  EXPECT_NE(world_hash(moved), h0);
  World linked = w;
  linked.link(a, b);
  EXPECT_NE(world_hash(linked), h0);
  World drawn = w;
  drawn.rng()();
  EXPECT_NE(world_hash(drawn), h0);
  World changed = w;
  changed.agent(a).set("energy", 1.5);
  EXPECT_NE(world_hash(changed), h0);
  EXPECT_EQ(world_hash(World(w)), h0);
}

TEST(Params, DefaultsAndOverrides) {
  const auto& def = ModelRegistry::builtin().get("researchers");
  const auto table = resolve_params(def.params, {{"p_journal", "0.5"}});
  EXPECT_EQ(param_real(table, "p_journal"), 0.5);
  EXPECT_EQ(param_real(table, "p_conf"), 0.25);
  EXPECT_EQ(param_int(table, "n_researchers"), 30);
}

TEST(Params, RejectsUnknownAndOutOfDomainValues) {
  const auto& def = ModelRegistry::builtin().get("researchers");
  EXPECT_THROW(resolve_params(def.params, {{"p_jornal", "0.5"}}), ParameterError);
  EXPECT_THROW(resolve_params(def.params, {{"p_journal", "1.5"}}), ParameterError);
  EXPECT_THROW(resolve_params(def.params, {{"n_researchers", "2.5"}}), ParameterError);
  EXPECT_THROW(resolve_params(def.params, {{"p_conf", "abc"}}), ParameterError);
  try {
    resolve_params(def.params, {{"p_journal", "7"}});
    FAIL();
  } catch (const ParameterError& e) {
    EXPECT_EQ(e.name(), "p_journal");
    EXPECT_EQ(e.offending(), "7");
  }
}

TEST(Params, ConfigFileSyntax) {
  const auto raw = parse_config("# defaults\n n_sheep = 10\n\nstep=2 # trailing\n");
  EXPECT_EQ(raw, (RawParams{{"n_sheep", "10"}, {"step", "2"}}));
  EXPECT_THROW(parse_config("just words\n"), ParameterError);
}

TEST(Params, CanonicalFormIsKeyOrdered) {
  EXPECT_EQ(canonical_params({{"b", std::int64_t{2}}, {"a", 0.5}}), "a=0.5,b=2");
}

TEST(Engine, UnknownModelIsRejected) {
  EXPECT_THROW(init_world("gridlock", RawParams{}, 0), UnknownModel);
}

TEST(Engine, SteppingACopyIsPure) {
  for (const char* model : {"researchers", "wolfsheep"}) {
    const World w0 = init_world(model, RawParams{}, 11);
    World a = w0;
    World b = w0;
    for (int t = 0; t < 20; ++t) {
      a = step_model(a);
      b = step_model(b);
    }
    EXPECT_EQ(a, b) << model;
    EXPECT_EQ(world_hash(a), world_hash(b));
    EXPECT_EQ(a.tick(), 20);
  }
}

TEST(Engine, ModelFailureBecomesModelPanicAndLeavesInputIntact) {
  ModelRegistry registry;
  ModelDef def;
  def.name = "fragile";
  def.params = {{"width", ParamSpec::Kind::real, 1, 100, 10.0, ""}, {"height", ParamSpec::Kind::real, 1, 100, 10.0, ""}};
  def.populate = [](World& w) { w.add_agent(Symbol{"cell"}, {1, 1}, {}); };
  def.step = [](World& w) {
    w.move(0, {2, 2});
    if (w.tick() == 1) throw std::out_of_range("lost a cell");
  };
  registry.add(def);
  const World w0 = init_world("fragile", RawParams{}, 0, registry);
  const World w1 = step_model(w0, registry);
  const auto before = world_hash(w1);
  EXPECT_THROW(step_model(w1, registry), ModelPanic);
  EXPECT_EQ(world_hash(w1), before);
}

}  // namespace
}  // namespace vomas
