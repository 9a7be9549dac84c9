#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace vomas {

/// Interned-by-value symbol, e.g. an agent kind or a policy name.
struct Symbol {
  std::string name;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Scalar carried by agent attributes, parameters and evaluated expressions.
/// Integers and reals are kept apart so serialized traces round-trip exactly.
using Value = std::variant<std::int64_t, double, bool, Symbol>;

enum class Type { number, boolean, symbol };

std::string_view type_name(Type t);

Type type_of(const Value& v);

inline bool is_number(const Value& v) {
  return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<double>(v);
}

/// Numeric view; booleans map to 0/1. Symbols are not numeric and throw.
double as_double(const Value& v);

/// Shortest decimal text that parses back to the same value. Reals always
/// carry a '.' or exponent so they never re-read as integers.
std::string format_value(const Value& v);

std::string format_real(double d);

}  // namespace vomas
