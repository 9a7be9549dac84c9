#include "vomas/dsl/compile.hpp"

namespace vomas::dsl {

namespace {

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::logical_or: return 1;
    case BinaryOp::logical_and: return 2;
    case BinaryOp::eq:
    case BinaryOp::ne:
    case BinaryOp::lt:
    case BinaryOp::le:
    case BinaryOp::gt:
    case BinaryOp::ge: return 4;
    case BinaryOp::add:
    case BinaryOp::sub: return 5;
    case BinaryOp::mul:
    case BinaryOp::div: return 6;
  }
  return 0;
}

constexpr int kNotPrec = 3;
constexpr int kNegPrec = 7;
constexpr int kAtomPrec = 8;

std::string print(const Expr& e, int min_prec);

std::string print_filter(const Filter& f) {
  return "[" + f.attr + " " + std::string(spelling(f.op)) + " " + format_value(f.literal) + "]";
}

struct PrintVisitor {
  int min_prec;

  static std::string paren(std::string s, int prec, int min) { return prec < min ? "(" + s + ")" : s; }

  std::string operator()(const Literal& l) const { return format_value(l.value); }
  std::string operator()(const TickRef&) const { return "tick"; }
  std::string operator()(const AttrRef& a) const { return a.binder.empty() ? a.attr : a.binder + "." + a.attr; }
  std::string operator()(const Unary& u) const {
    if (u.op == UnaryOp::logical_not) return paren("not " + print(*u.operand, kNotPrec), kNotPrec, min_prec);
    return paren("-" + print(*u.operand, kNegPrec), kNegPrec, min_prec);
  }
  std::string operator()(const Binary& b) const {
    const int p = precedence(b.op);
    return paren(print(*b.lhs, p) + " " + std::string(spelling(b.op)) + " " + print(*b.rhs, p + 1), p, min_prec);
  }
  std::string operator()(const Approx& a) const {
    return "approx(" + print(*a.lhs, 0) + ", " + print(*a.rhs, 0) + ", " + format_value(a.eps) + ")";
  }
  std::string operator()(const Aggregate& a) const {
    std::string s = std::string(spelling(a.fn)) + "(" + print_set(a.set);
    if (a.attr) s += ", " + *a.attr;
    return s + ")";
  }
  std::string operator()(const Quantifier& q) const {
    std::string s = std::string(spelling(q.kind)) + "(" + print_set(q.set) + ", ";
    if (!q.binder.empty()) s += q.binder + " -> ";
    return s + print(*q.body, 0) + ")";
  }
};

std::string print(const Expr& e, int min_prec) { return std::visit(PrintVisitor{min_prec}, e.node); }

}  // namespace

std::string print_set(const SetExpr& set) {
  if (const auto* w = std::get_if<WithinVo>(&set)) return "within(" + w->vo_name + ")";
  std::string s = "agents";
  for (const auto& f : std::get<AllAgents>(set).filters) s += print_filter(f);
  return s;
}

std::string print_expr(const Expr& expr) { return print(expr, 0); }

std::string print_spec(const VomasSpec& spec) {
  std::string out;
  for (const auto& vo : spec.vo_agents) {
    out += "vo " + vo.name;
    if (const auto* s = std::get_if<VoPlacementSpatial>(&vo.placement)) {
      out += " at (" + format_real(s->x) + ", " + format_real(s->y) + ") radius " + format_real(s->radius);
    } else {
      out += " global";
    }
    if (vo.kind_filter) out += " kind " + *vo.kind_filter;
    out += '\n';
  }
  for (const auto& w : spec.watches) {
    out += "watch " + w.name + " = " + print_expr(*w.expr);
    if (w.period != 1) out += " every " + std::to_string(w.period);
    out += '\n';
  }
  for (const auto& inv : spec.invariants) {
    out += "invariant " + inv.name + ": ";
    if (inv.scope == InvariantScope::at_termination) out += "at_termination ";
    out += print_expr(*inv.predicate);
    if (inv.on_violation == ViolationPolicy::halt) out += " on_violation halt";
    out += '\n';
  }
  return out;
}

}  // namespace vomas::dsl
