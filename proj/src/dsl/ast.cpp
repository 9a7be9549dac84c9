#include "vomas/dsl/ast.hpp"

#include <set>

namespace vomas::dsl {

std::string_view spelling(CompareOp op) {
  switch (op) {
    case CompareOp::eq: return "==";
    case CompareOp::ne: return "!=";
    case CompareOp::lt: return "<";
    case CompareOp::le: return "<=";
    case CompareOp::gt: return ">";
    case CompareOp::ge: return ">=";
  }
  return "?";
}

std::string_view spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    case BinaryOp::eq: return "==";
    case BinaryOp::ne: return "!=";
    case BinaryOp::lt: return "<";
    case BinaryOp::le: return "<=";
    case BinaryOp::gt: return ">";
    case BinaryOp::ge: return ">=";
    case BinaryOp::logical_and: return "and";
    case BinaryOp::logical_or: return "or";
  }
  return "?";
}

std::string_view spelling(AggregateFn fn) {
  switch (fn) {
    case AggregateFn::count: return "count";
    case AggregateFn::sum: return "sum";
    case AggregateFn::min: return "min";
    case AggregateFn::max: return "max";
    case AggregateFn::avg: return "avg";
    case AggregateFn::components: return "components";
    case AggregateFn::largest_component_fraction: return "largest_component_fraction";
  }
  return "?";
}

std::string_view spelling(QuantifierKind q) { return q == QuantifierKind::forall ? "forall" : "exists"; }

std::string_view scope_name(InvariantScope s) {
  return s == InvariantScope::every_tick ? "every_tick" : "at_termination";
}

namespace {

struct EqualVisitor {
  const Expr::Node& other;

  template <class T>
  bool operator()(const T& a) const {
    const auto* b = std::get_if<T>(&other);
    if (b == nullptr) return false;
    return same(a, *b);
  }

  static bool same(const Literal& a, const Literal& b) { return a == b; }
  static bool same(const TickRef&, const TickRef&) { return true; }
  static bool same(const AttrRef& a, const AttrRef& b) { return a == b; }
  static bool same(const Unary& a, const Unary& b) {
    return a.op == b.op && structurally_equal(a.operand, b.operand);
  }
  static bool same(const Binary& a, const Binary& b) {
    return a.op == b.op && structurally_equal(a.lhs, b.lhs) && structurally_equal(a.rhs, b.rhs);
  }
  static bool same(const Approx& a, const Approx& b) {
    return a.eps == b.eps && structurally_equal(a.lhs, b.lhs) && structurally_equal(a.rhs, b.rhs);
  }
  static bool same(const Aggregate& a, const Aggregate& b) {
    return a.fn == b.fn && a.set == b.set && a.attr == b.attr;
  }
  static bool same(const Quantifier& a, const Quantifier& b) {
    return a.kind == b.kind && a.set == b.set && a.binder == b.binder && structurally_equal(a.body, b.body);
  }
};

void collect(const SetExpr& set, std::set<std::string>& out) {
  if (const auto* all = std::get_if<AllAgents>(&set)) {
    for (const auto& f : all->filters) out.insert(f.attr);
  }
}

void collect(const Expr& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AttrRef>) {
          out.insert(n.attr);
        } else if constexpr (std::is_same_v<T, Unary>) {
          collect(*n.operand, out);
        } else if constexpr (std::is_same_v<T, Binary> || std::is_same_v<T, Approx>) {
          collect(*n.lhs, out);
          collect(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, Aggregate>) {
          collect(n.set, out);
          if (n.attr) out.insert(*n.attr);
        } else if constexpr (std::is_same_v<T, Quantifier>) {
          collect(n.set, out);
          collect(*n.body, out);
        }
      },
      e.node);
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) { return std::visit(EqualVisitor{b.node}, a.node); }

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

const VoAgentDef* VomasSpec::find_vo(const std::string& name) const {
  for (const auto& vo : vo_agents) {
    if (vo.name == name) return &vo;
  }
  return nullptr;
}

bool structurally_equal(const VomasSpec& a, const VomasSpec& b) {
  if (a.vo_agents != b.vo_agents) return false;
  if (a.watches.size() != b.watches.size() || a.invariants.size() != b.invariants.size()) return false;
  for (std::size_t i = 0; i < a.watches.size(); ++i) {
    const auto& x = a.watches[i];
    const auto& y = b.watches[i];
    if (x.name != y.name || x.period != y.period || !structurally_equal(x.expr, y.expr)) return false;
  }
  for (std::size_t i = 0; i < a.invariants.size(); ++i) {
    const auto& x = a.invariants[i];
    const auto& y = b.invariants[i];
    if (x.name != y.name || x.scope != y.scope || x.on_violation != y.on_violation ||
        !structurally_equal(x.predicate, y.predicate)) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> referenced_attributes(const VomasSpec& spec) {
  std::set<std::string> out;
  for (const auto& w : spec.watches) collect(*w.expr, out);
  for (const auto& inv : spec.invariants) collect(*inv.predicate, out);
  return {out.begin(), out.end()};
}

}  // namespace vomas::dsl
