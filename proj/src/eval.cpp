#include "vomas/eval.hpp"

#include "vomas/model.hpp"
#include "vomas/validators.hpp"

#include <cmath>
#include <limits>

namespace vomas {

using namespace dsl;

namespace {

bool truthy(const Value& v) { return std::get<bool>(v); }

int order(const Value& a, const Value& b) {
  if (std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b)) {
    const auto x = std::get<std::int64_t>(a);
    const auto y = std::get<std::int64_t>(b);
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  const double x = as_double(a);
  const double y = as_double(b);
  return x < y ? -1 : (x > y ? 1 : 0);
}

Value checked_real(double d, const char* what) {
  if (!std::isfinite(d)) throw EvalError(EvalError::Kind::non_finite, std::string(what) + " produced a non-finite value");
  return d;
}

Value arithmetic(BinaryOp op, const Value& a, const Value& b) {
  const bool ints = std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b);
  if (op == BinaryOp::div) {
    const double den = as_double(b);
    if (den == 0.0) throw EvalError(EvalError::Kind::div_by_zero, "division by zero");
    return checked_real(as_double(a) / den, "division");
  }
  if (ints) {
    const auto x = std::get<std::int64_t>(a);
    const auto y = std::get<std::int64_t>(b);
    std::int64_t r = 0;
    bool overflow = false;
    switch (op) {
      case BinaryOp::add: overflow = __builtin_add_overflow(x, y, &r); break;
      case BinaryOp::sub: overflow = __builtin_sub_overflow(x, y, &r); break;
      default: overflow = __builtin_mul_overflow(x, y, &r); break;
    }
    if (overflow) throw EvalError(EvalError::Kind::overflow, "integer overflow");
    return r;
  }
  const double x = as_double(a);
  const double y = as_double(b);
  switch (op) {
    case BinaryOp::add: return checked_real(x + y, "addition");
    case BinaryOp::sub: return checked_real(x - y, "subtraction");
    default: return checked_real(x * y, "multiplication");
  }
}

Value read(const SimAgent& agent, const std::string& attr) {
  if (auto v = read_attribute(agent, attr)) return *v;
  throw EvalError(EvalError::Kind::missing_attribute,
                  "agent " + std::to_string(agent.id()) + " (" + agent.kind().name + ") has no attribute '" + attr + "'");
}

const SimAgent* bound_agent(const EvalContext& ctx, const std::string& binder) {
  for (auto it = ctx.bindings.rbegin(); it != ctx.bindings.rend(); ++it) {
    if (it->first == binder) return it->second;
  }
  return nullptr;
}

Value aggregate(const Aggregate& agg, EvalContext& ctx) {
  const auto ids = resolve_set(agg.set, ctx);
  switch (agg.fn) {
    case AggregateFn::count:
      return static_cast<std::int64_t>(ids.size());
    case AggregateFn::components:
      return connected_components(ctx.world, ids).component_count;
    case AggregateFn::largest_component_fraction:
      return connected_components(ctx.world, ids).largest_fraction;
    case AggregateFn::sum: {
      std::int64_t isum = 0;
      double dsum = 0.0;
      bool real = false;
      for (AgentId id : ids) {
        const Value v = read(ctx.world.agent(id), *agg.attr);
        if (!real && std::holds_alternative<std::int64_t>(v)) {
          if (__builtin_add_overflow(isum, std::get<std::int64_t>(v), &isum)) {
            throw EvalError(EvalError::Kind::overflow, "integer overflow in sum");
          }
          continue;
        }
        if (!real) {
          real = true;
          dsum = static_cast<double>(isum);
        }
        dsum += as_double(v);
      }
      if (real) return checked_real(dsum, "sum");
      return isum;
    }
    case AggregateFn::avg: {
      if (ids.empty()) throw EvalError(EvalError::Kind::empty_set, "avg over an empty set");
      double total = 0.0;
      for (AgentId id : ids) total += as_double(read(ctx.world.agent(id), *agg.attr));
      return checked_real(total / static_cast<double>(ids.size()), "avg");
    }
    case AggregateFn::min:
    case AggregateFn::max: {
      if (ids.empty()) {
        throw EvalError(EvalError::Kind::empty_set, std::string(spelling(agg.fn)) + " over an empty set");
      }
      std::optional<Value> best;
      for (AgentId id : ids) {
        Value v = read(ctx.world.agent(id), *agg.attr);
        if (!best) {
          best = std::move(v);
          continue;
        }
        const int c = order(v, *best);
        if ((agg.fn == AggregateFn::min && c < 0) || (agg.fn == AggregateFn::max && c > 0)) best = std::move(v);
      }
      return *best;
    }
  }
  return std::int64_t{0};
}

Value quantify(const Quantifier& q, EvalContext& ctx) {
  const auto ids = resolve_set(q.set, ctx);
  const bool forall = q.kind == QuantifierKind::forall;
  for (AgentId id : ids) {
    ctx.bindings.emplace_back(q.binder, &ctx.world.agent(id));
    bool holds = false;
    try {
      holds = truthy(eval_expr(*q.body, ctx));
    } catch (...) {
      ctx.bindings.pop_back();
      throw;
    }
    ctx.bindings.pop_back();
    if (forall && !holds) return false;
    if (!forall && holds) return true;
  }
  return forall;
}

struct EvalVisitor {
  EvalContext& ctx;

  Value operator()(const Literal& l) const { return l.value; }
  Value operator()(const TickRef&) const { return ctx.tick; }
  Value operator()(const AttrRef& a) const {
    const SimAgent* agent = bound_agent(ctx, a.binder);
    if (agent == nullptr) {
      throw EvalError(EvalError::Kind::missing_attribute, "no agent bound for '" + a.attr + "'");
    }
    return read(*agent, a.attr);
  }
  Value operator()(const Unary& u) const {
    const Value v = eval_expr(*u.operand, ctx);
    if (u.op == UnaryOp::logical_not) return !truthy(v);
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
      if (*i == std::numeric_limits<std::int64_t>::min()) throw EvalError(EvalError::Kind::overflow, "integer overflow");
      return -*i;
    }
    return -as_double(v);
  }
  Value operator()(const Binary& b) const {
    switch (b.op) {
      case BinaryOp::logical_and:
        return truthy(eval_expr(*b.lhs, ctx)) && truthy(eval_expr(*b.rhs, ctx));
      case BinaryOp::logical_or:
        return truthy(eval_expr(*b.lhs, ctx)) || truthy(eval_expr(*b.rhs, ctx));
      case BinaryOp::eq: return compare_values(CompareOp::eq, eval_expr(*b.lhs, ctx), eval_expr(*b.rhs, ctx));
      case BinaryOp::ne: return compare_values(CompareOp::ne, eval_expr(*b.lhs, ctx), eval_expr(*b.rhs, ctx));
      case BinaryOp::lt: return compare_values(CompareOp::lt, eval_expr(*b.lhs, ctx), eval_expr(*b.rhs, ctx));
      case BinaryOp::le: return compare_values(CompareOp::le, eval_expr(*b.lhs, ctx), eval_expr(*b.rhs, ctx));
      case BinaryOp::gt: return compare_values(CompareOp::gt, eval_expr(*b.lhs, ctx), eval_expr(*b.rhs, ctx));
      case BinaryOp::ge: return compare_values(CompareOp::ge, eval_expr(*b.lhs, ctx), eval_expr(*b.rhs, ctx));
      default: {
        const Value lhs = eval_expr(*b.lhs, ctx);
        const Value rhs = eval_expr(*b.rhs, ctx);
        return arithmetic(b.op, lhs, rhs);
      }
    }
  }
  Value operator()(const Approx& a) const {
    const double x = as_double(eval_expr(*a.lhs, ctx));
    const double y = as_double(eval_expr(*a.rhs, ctx));
    return std::abs(x - y) <= as_double(a.eps);
  }
  Value operator()(const Aggregate& a) const { return aggregate(a, ctx); }
  Value operator()(const Quantifier& q) const { return quantify(q, ctx); }
};

}  // namespace

bool compare_values(CompareOp op, const Value& lhs, const Value& rhs) {
  if (is_number(lhs) && is_number(rhs)) {
    const int c = order(lhs, rhs);
    switch (op) {
      case CompareOp::eq: return c == 0;
      case CompareOp::ne: return c != 0;
      case CompareOp::lt: return c < 0;
      case CompareOp::le: return c <= 0;
      case CompareOp::gt: return c > 0;
      case CompareOp::ge: return c >= 0;
    }
  }
  const bool equal = lhs == rhs;
  switch (op) {
    case CompareOp::eq: return equal;
    case CompareOp::ne: return !equal;
    default: return false;
  }
}

bool filter_matches(const Filter& filter, const SimAgent& agent) {
  const auto v = read_attribute(agent, filter.attr);
  if (!v) return false;
  return compare_values(filter.op, *v, filter.literal);
}

std::vector<AgentId> resolve_set(const SetExpr& set, const EvalContext& ctx) {
  if (const auto* within = std::get_if<WithinVo>(&set)) {
    const VoAgentDef* vo = ctx.spec.find_vo(within->vo_name);
    if (vo == nullptr) throw EvalError(EvalError::Kind::unknown_vo_agent, "unknown VO agent '" + within->vo_name + "'");
    std::optional<Symbol> kind;
    if (vo->kind_filter) kind = Symbol{*vo->kind_filter};
    if (const auto* s = std::get_if<VoPlacementSpatial>(&vo->placement)) {
      return neighbors_within(ctx.world, {s->x, s->y}, s->radius, kind);
    }
    std::vector<AgentId> out;
    for (const auto& [id, a] : ctx.world.agents()) {
      if (!kind || a.kind() == *kind) out.push_back(id);
    }
    return out;
  }

  const auto& filters = std::get<AllAgents>(set).filters;
  std::vector<AgentId> out;
  for (const auto& [id, a] : ctx.world.agents()) {
    bool keep = true;
    for (const auto& f : filters) {
      if (!filter_matches(f, a)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(id);
  }
  return out;
}

Value eval_expr(const Expr& expr, EvalContext& ctx) { return std::visit(EvalVisitor{ctx}, expr.node); }

}  // namespace vomas
