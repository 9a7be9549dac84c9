#pragma once

#include "vomas/value.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vomas::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class CompareOp { eq, ne, lt, le, gt, ge };
enum class BinaryOp { add, sub, mul, div, eq, ne, lt, le, gt, ge, logical_and, logical_or };
enum class UnaryOp { neg, logical_not };
enum class AggregateFn { count, sum, min, max, avg, components, largest_component_fraction };
enum class QuantifierKind { forall, exists };

std::string_view spelling(CompareOp op);
std::string_view spelling(BinaryOp op);
std::string_view spelling(AggregateFn fn);
std::string_view spelling(QuantifierKind q);

/// `[attr op literal]`
struct Filter {
  std::string attr;
  CompareOp op = CompareOp::eq;
  Value literal;

  friend bool operator==(const Filter&, const Filter&) = default;
};

/// `agents[...][...]`
struct AllAgents {
  std::vector<Filter> filters;

  friend bool operator==(const AllAgents&, const AllAgents&) = default;
};

/// `within(name)`
struct WithinVo {
  std::string vo_name;

  friend bool operator==(const WithinVo&, const WithinVo&) = default;
};

using SetExpr = std::variant<AllAgents, WithinVo>;

struct Literal {
  Value value;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct TickRef {
  friend bool operator==(const TickRef&, const TickRef&) = default;
};

/// `binder.attr`, or a bare attribute name inside a binder-less quantifier
/// (binder empty, resolves to the innermost quantified agent).
struct AttrRef {
  std::string binder;
  std::string attr;
  friend bool operator==(const AttrRef&, const AttrRef&) = default;
};

struct Unary {
  UnaryOp op;
  ExprPtr operand;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

/// `approx(a, b, eps)` holds iff |a - b| <= eps.
struct Approx {
  ExprPtr lhs;
  ExprPtr rhs;
  Value eps;
};

struct Aggregate {
  AggregateFn fn;
  SetExpr set;
  std::optional<std::string> attr;
};

struct Quantifier {
  QuantifierKind kind;
  SetExpr set;
  std::string binder;  // empty in the binder-less form
  ExprPtr body;
};

struct Expr {
  using Node = std::variant<Literal, TickRef, AttrRef, Unary, Binary, Approx, Aggregate, Quantifier>;

  Node node;
  int line = 0;
  int column = 0;
};

/// Structural equality; source positions are ignored.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

template <class T>
ExprPtr make_expr(T node, int line = 0, int column = 0) {
  return std::make_shared<const Expr>(Expr{Expr::Node{std::move(node)}, line, column});
}

struct VoPlacementSpatial {
  double x = 0.0;
  double y = 0.0;
  double radius = 0.0;
  friend bool operator==(const VoPlacementSpatial&, const VoPlacementSpatial&) = default;
};

struct VoPlacementGlobal {
  friend bool operator==(const VoPlacementGlobal&, const VoPlacementGlobal&) = default;
};

using VoPlacement = std::variant<VoPlacementSpatial, VoPlacementGlobal>;

struct VoAgentDef {
  std::string name;
  VoPlacement placement;
  std::optional<std::string> kind_filter;

  bool spatial() const { return std::holds_alternative<VoPlacementSpatial>(placement); }

  friend bool operator==(const VoAgentDef&, const VoAgentDef&) = default;
};

struct Watch {
  std::string name;
  ExprPtr expr;
  std::int64_t period = 1;
  std::string source;
};

enum class InvariantScope { every_tick, at_termination };
enum class ViolationPolicy { log_only, halt };

std::string_view scope_name(InvariantScope s);

struct Invariant {
  std::string name;
  InvariantScope scope = InvariantScope::every_tick;
  ExprPtr predicate;
  ViolationPolicy on_violation = ViolationPolicy::log_only;
  std::string source;  // predicate text as written
};

struct VomasSpec {
  std::vector<VoAgentDef> vo_agents;
  std::vector<Watch> watches;
  std::vector<Invariant> invariants;
  std::string source;

  const VoAgentDef* find_vo(const std::string& name) const;
  bool empty() const { return vo_agents.empty() && watches.empty() && invariants.empty(); }
};

/// Same items in the same order with structurally equal expressions.
/// Source text is not compared.
bool structurally_equal(const VomasSpec& a, const VomasSpec& b);

/// Attribute names referenced anywhere in the spec (filters, aggregates, bodies).
std::vector<std::string> referenced_attributes(const VomasSpec& spec);

}  // namespace vomas::dsl
