#include "vomas/validators.hpp"

#include "vomas/eval.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace vomas {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::int64_t size_of_root(std::size_t r) const { return static_cast<std::int64_t>(size_[r]); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

ComponentReport connected_components(const World& view, std::span<const AgentId> members) {
  std::unordered_map<AgentId, std::size_t> index;
  index.reserve(members.size());
  for (AgentId id : members) index.emplace(id, index.size());

  DisjointSets sets(index.size());
  for (const auto& [a, b] : view.links()) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia != index.end() && ib != index.end()) sets.unite(ia->second, ib->second);
  }

  ComponentReport report;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (sets.find(i) == i) report.component_sizes.push_back(sets.size_of_root(i));
  }
  std::sort(report.component_sizes.begin(), report.component_sizes.end(), std::greater<>());
  report.component_count = static_cast<std::int64_t>(report.component_sizes.size());
  report.largest_fraction = index.empty() ? 1.0
                                          : static_cast<double>(report.component_sizes.front()) /
                                                static_cast<double>(index.size());
  return report;
}

ComponentReport connected_components(const World& view, const std::optional<Symbol>& kind_filter) {
  std::vector<AgentId> members;
  for (const auto& [id, a] : view.agents()) {
    if (!kind_filter || a.kind() == *kind_filter) members.push_back(id);
  }
  return connected_components(view, members);
}

ProximityReport proximity_report(const dsl::VoAgentDef& vo, const World& view, std::int64_t tick,
                                 const dsl::Expr* predicate, const std::string& binder, const dsl::VomasSpec* spec) {
  const auto* placement = std::get_if<dsl::VoPlacementSpatial>(&vo.placement);
  if (placement == nullptr) throw NonSpatialVoAgent(vo.name);

  std::optional<Symbol> kind;
  if (vo.kind_filter) kind = Symbol{*vo.kind_filter};

  ProximityReport report;
  report.vo_name = vo.name;
  report.tick = tick;

  const dsl::VomasSpec empty;
  EvalContext ctx(view, tick, spec != nullptr ? *spec : empty);
  for (AgentId id : neighbors_within(view, {placement->x, placement->y}, placement->radius, kind)) {
    ProximityMember m{id, std::nullopt};
    if (predicate != nullptr) {
      ctx.bindings.assign(1, {binder, &view.agent(id)});
      m.outcome = std::get<bool>(eval_expr(*predicate, ctx));
    }
    report.members.push_back(m);
  }
  return report;
}

}  // namespace vomas
