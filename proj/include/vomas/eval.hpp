#pragma once

#include "vomas/dsl/ast.hpp"
#include "vomas/world.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vomas {

class EvalError : public std::runtime_error {
 public:
  enum class Kind { empty_set, div_by_zero, missing_attribute, overflow, non_finite, unknown_vo_agent };

  EvalError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Read-only view handed to expressions. `bindings` holds the quantified
/// agents currently in scope, innermost last.
struct EvalContext {
  EvalContext(const World& w, std::int64_t t, const dsl::VomasSpec& s) : world(w), tick(t), spec(s) {}

  const World& world;
  std::int64_t tick;
  const dsl::VomasSpec& spec;
  std::vector<std::pair<std::string, const SimAgent*>> bindings;
};

/// Evaluates a type-checked expression. Aggregates fold in ascending id order.
/// Empty-set rules: count is 0, min/max/avg throw EvalError(empty_set),
/// forall is true and exists is false.
Value eval_expr(const dsl::Expr& expr, EvalContext& ctx);

/// Members of a set expression, ascending id. Filters apply conjunctively;
/// an agent lacking a filtered attribute does not match.
std::vector<AgentId> resolve_set(const dsl::SetExpr& set, const EvalContext& ctx);

bool filter_matches(const dsl::Filter& filter, const SimAgent& agent);

/// Numeric-aware comparison used by filters and expressions. Integers and
/// reals compare by value, everything else by equality only.
bool compare_values(dsl::CompareOp op, const Value& lhs, const Value& rhs);

}  // namespace vomas
