#include "generators.hpp"

#include "vomas/models/researchers.hpp"

#include <cmath>

namespace vomas::testing {

std::int64_t below(Rng& rng, std::int64_t n) { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)); }

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform01(); }

bool chance(Rng& rng, double p) { return rng.uniform01() < p; }

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(below(rng, static_cast<std::int64_t>(items.size())))];
}

SchemaInfo info_from(const AttributeSchema& schema, std::map<std::string, std::vector<std::string>> symbol_values) {
  SchemaInfo info;
  info.schema = schema;
  info.numeric = {"id", "x", "y"};
  for (const auto& [kind, attrs] : schema.kinds()) {
    info.kinds.push_back(kind);
    for (const auto& [name, type] : attrs) {
      switch (type) {
        case Type::number: info.numeric.push_back(name); break;
        case Type::boolean: info.booleans.push_back(name); break;
        case Type::symbol: break;
      }
    }
  }
  symbol_values["kind"] = info.kinds;
  info.symbols = std::move(symbol_values);
  return info;
}

}  // namespace

SchemaInfo researchers_info() {
  return info_from(ModelRegistry::builtin().get("researchers").attributes,
                   {{"policy", {"conference", "journal", "none"}}, {"color", {"lime", "red", "cyan"}}});
}

SchemaInfo wolfsheep_info() { return info_from(ModelRegistry::builtin().get("wolfsheep").attributes, {}); }

SchemaInfo synthetic_info() {
  AttributeSchema schema;
  for (const char* kind : {"alpha", "beta"}) {
    schema.declare(kind, "energy", Type::number);
    schema.declare(kind, "pubs", Type::number);
    schema.declare(kind, "flag", Type::boolean);
    schema.declare(kind, "tag", Type::symbol);
  }
  return info_from(schema, {{"tag", {"red", "green", "blue"}}});
}

World random_synthetic_world(Rng& rng, int agents, WorldSize size, double link_p) {
  World world("synthetic", {}, size, rng());
  static const std::vector<std::string> kTags{"red", "green", "blue"};
  for (int i = 0; i < agents; ++i) {
    const Point p{uniform(rng, 0.0, size.width), uniform(rng, 0.0, size.height)};
    // Quarter-step energies so that some filters hit values exactly.
    const double energy = chance(rng, 0.3) ? static_cast<double>(below(rng, 40)) / 4.0 : uniform(rng, -20.0, 20.0);
    world.add_agent(Symbol{chance(rng, 0.5) ? "alpha" : "beta"}, wrap(p, size),
                    {{"energy", energy},
                     {"pubs", std::int64_t{below(rng, 21)}},
                     {"flag", chance(rng, 0.5)},
                     {"tag", Symbol{pick(rng, kTags)}}});
  }
  if (link_p > 0.0) {
    for (AgentId a = 0; a < agents; ++a) {
      for (AgentId b = a + 1; b < agents; ++b) {
        if (chance(rng, link_p)) world.link(a, b);
      }
    }
  }
  return world;
}

SpecGenerator::SpecGenerator(SchemaInfo info, std::uint64_t seed) : SpecGenerator(std::move(info), seed, Options{}) {}

SpecGenerator::SpecGenerator(SchemaInfo info, std::uint64_t seed, Options options)
    : info_(std::move(info)), rng_(seed), opt_(options) {}

std::string SpecGenerator::number_literal() {
  if (chance(rng_, 0.6)) return std::to_string(below(rng_, 30));
  return format_real(std::round(uniform(rng_, 0.0, 60.0) * 100.0) / 100.0);
}

std::string SpecGenerator::filter() {
  const auto roll = below(rng_, 3);
  if (roll == 0 && !info_.symbols.empty()) {
    auto it = info_.symbols.begin();
    std::advance(it, below(rng_, static_cast<std::int64_t>(info_.symbols.size())));
    return "[" + it->first + (chance(rng_, 0.8) ? " == " : " != ") + pick(rng_, it->second) + "]";
  }
  if (roll == 1 && !info_.booleans.empty()) {
    return "[" + pick(rng_, info_.booleans) + (chance(rng_, 0.7) ? " == " : " != ") +
           (chance(rng_, 0.5) ? "true" : "false") + "]";
  }
  static const std::vector<std::string> kOps{"==", "!=", "<", "<=", ">", ">="};
  return "[" + pick(rng_, info_.numeric) + " " + pick(rng_, kOps) + " " + number_literal() + "]";
}

std::string SpecGenerator::set_expr() {
  if (!vos_.empty() && chance(rng_, 0.3)) return "within(" + pick(rng_, vos_) + ")";
  std::string s = "agents";
  for (auto n = below(rng_, 3); n > 0; --n) s += filter();
  return s;
}

std::string SpecGenerator::attr_ref(const std::string& attr) {
  const std::string& binder = scopes_[static_cast<std::size_t>(below(rng_, static_cast<std::int64_t>(scopes_.size())))];
  if (binder.empty()) {
    // Bare names resolve to attributes only when the schema declares them.
    if (info_.schema.declares(attr) || is_builtin_attribute(attr)) return attr;
    for (const auto& b : scopes_) {
      if (!b.empty()) return b + "." + attr;
    }
    return attr;
  }
  return binder + "." + attr;
}

std::string SpecGenerator::numeric_leaf() {
  switch (below(rng_, have_agent_in_scope() ? 5 : 4)) {
    case 0: return number_literal();
    case 1: return "tick";
    case 2: return "count(" + set_expr() + ")";
    case 3: return number_literal();
    default: return attr_ref(pick(rng_, info_.numeric));
  }
}

std::string SpecGenerator::numeric_expr(int depth) {
  if (depth <= 0) return numeric_leaf();
  switch (below(rng_, 8)) {
    case 0:
    case 1: return numeric_leaf();
    case 2: {
      static const std::vector<std::string> kFns{"sum", "min", "max", "avg"};
      return pick(rng_, kFns) + "(" + set_expr() + ", " + pick(rng_, info_.numeric) + ")";
    }
    case 3:
      return (chance(rng_, 0.5) ? "components(" : "largest_component_fraction(") + set_expr() + ")";
    case 4: return "-" + (chance(rng_, 0.5) ? numeric_leaf() : "(" + numeric_expr(depth - 1) + ")");
    default: {
      static const std::vector<std::string> kOps{"+", "-", "*", "/"};
      const std::string lhs = numeric_expr(depth - 1);
      const std::string rhs = numeric_expr(depth - 1);
      const std::string op = pick(rng_, kOps);
      if (chance(rng_, 0.5)) return "(" + lhs + " " + op + " " + rhs + ")";
      return lhs + " " + op + " " + rhs;
    }
  }
}

std::string SpecGenerator::quantifier(int depth) {
  const std::string q = chance(rng_, 0.5) ? "forall" : "exists";
  const std::string set = set_expr();
  std::string binder;
  if (chance(rng_, 0.75)) binder = "b" + std::to_string(binder_counter_++);
  scopes_.push_back(binder);
  const std::string body = boolean_expr(depth - 1);
  scopes_.pop_back();
  return q + "(" + set + ", " + (binder.empty() ? "" : binder + " -> ") + body + ")";
}

std::string SpecGenerator::boolean_expr(int depth) {
  static const std::vector<std::string> kCmp{"==", "!=", "<", "<=", ">", ">="};
  const auto cases = depth <= 0 ? 3 : 10;
  switch (below(rng_, cases)) {
    case 0: return numeric_expr(depth - 1) + " " + pick(rng_, kCmp) + " " + numeric_expr(depth - 1);
    case 1:
      if (have_agent_in_scope()) {
        if (!info_.symbols.empty() && chance(rng_, 0.6)) {
          auto it = info_.symbols.begin();
          std::advance(it, below(rng_, static_cast<std::int64_t>(info_.symbols.size())));
          return attr_ref(it->first) + (chance(rng_, 0.7) ? " == " : " != ") + pick(rng_, it->second);
        }
        if (!info_.booleans.empty()) return attr_ref(pick(rng_, info_.booleans)) + " == " + (chance(rng_, 0.5) ? "true" : "false");
      }
      return chance(rng_, 0.5) ? "true" : "false";
    case 2: return "count(" + set_expr() + ") " + pick(rng_, kCmp) + " " + number_literal();
    case 3: return "not " + boolean_expr(depth - 1);
    case 4: return "(" + boolean_expr(depth - 1) + ") and (" + boolean_expr(depth - 1) + ")";
    case 5: return boolean_expr(depth - 1) + " or " + boolean_expr(depth - 1);
    case 6:
    case 7: return quantifier(depth);
    case 8:
      return "approx(" + numeric_expr(depth - 1) + ", " + numeric_expr(depth - 1) + ", " + number_literal() + ")";
    default: return "(" + boolean_expr(depth - 1) + ") == (" + boolean_expr(depth - 1) + ")";
  }
}

std::string SpecGenerator::spec() {
  vos_.clear();
  binder_counter_ = 0;
  std::string out;
  if (chance(rng_, 0.3)) out += "# generated spec\n";

  for (auto n = below(rng_, opt_.max_vo_agents + 1), i = decltype(n){0}; i < n; ++i) {
    const std::string name = "v" + std::to_string(i);
    out += "vo " + name;
    if (chance(rng_, 0.7)) {
      out += " at (" + format_real(std::floor(uniform(rng_, 0.0, opt_.size.width) * 10.0) / 10.0) + ", " +
             format_real(std::floor(uniform(rng_, 0.0, opt_.size.height) * 10.0) / 10.0) + ") radius " +
             number_literal();
    } else {
      out += " global";
    }
    if (chance(rng_, 0.5)) out += " kind " + pick(rng_, info_.kinds);
    out += '\n';
    vos_.push_back(name);
  }

  for (auto n = 1 + below(rng_, opt_.max_watches), i = decltype(n){0}; i < n; ++i) {
    out += "watch w" + std::to_string(i) + " = " +
           (chance(rng_, 0.7) ? numeric_expr(opt_.max_depth) : boolean_expr(opt_.max_depth));
    if (chance(rng_, 0.4)) out += " every " + std::to_string(1 + below(rng_, opt_.max_period));
    out += '\n';
  }

  for (auto n = below(rng_, opt_.max_invariants + 1), i = decltype(n){0}; i < n; ++i) {
    const bool at_end = chance(rng_, 0.3);
    out += "invariant i" + std::to_string(i) + ": " + (at_end ? "at_termination " : "") +
           boolean_expr(opt_.max_depth);
    if (!at_end && chance(rng_, opt_.halt_chance)) {
      out += " on_violation halt";
    } else if (chance(rng_, 0.3)) {
      out += " on_violation log";
    }
    out += '\n';
  }
  return out;
}

}  // namespace vomas::testing
