#pragma once

#include "vomas/dsl/ast.hpp"
#include "vomas/model.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vomas::dsl {

/// Positioned compile diagnostic. Line and column are 1-based; columns count bytes.
class SpecError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_vo_agent, type, duplicate_name, unknown_attribute };

  SpecError(Kind kind, int line, int column, std::string message, std::vector<std::string> expected = {});

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  /// Tokens that would have been accepted; filled for syntax errors.
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string message_;
  std::vector<std::string> expected_;
};

std::string_view kind_name(SpecError::Kind kind);

/// Parses, resolves names and type-checks a VOMAS spec. Bare names inside a
/// binder-less quantifier body are attributes when `schema` declares them,
/// symbol literals otherwise. Throws SpecError and nothing else.
VomasSpec compile_spec(std::string_view text, const AttributeSchema& schema);

/// Compiles against the union schema of the built-in models.
VomasSpec compile_spec(std::string_view text);

/// Canonical text; compile(print(spec)) is structurally equal to spec.
std::string print_spec(const VomasSpec& spec);
std::string print_expr(const Expr& expr);
std::string print_set(const SetExpr& set);

}  // namespace vomas::dsl
