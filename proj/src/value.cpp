#include "vomas/value.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace vomas {

std::string_view type_name(Type t) {
  switch (t) {
    case Type::number:
      return "number";
    case Type::boolean:
      return "boolean";
    case Type::symbol:
      return "symbol";
  }
  return "?";
}

Type type_of(const Value& v) {
  if (is_number(v)) return Type::number;
  if (std::holds_alternative<bool>(v)) return Type::boolean;
  return Type::symbol;
}

double as_double(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* b = std::get_if<bool>(&v)) return *b ? 1.0 : 0.0;
  throw std::invalid_argument("symbol '" + std::get<Symbol>(v).name + "' is not numeric");
}

std::string format_real(double d) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), d);
  std::string s(buf.data(), end);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";  // 'n' covers inf/nan
  return s;
}

std::string format_value(const Value& v) {
  struct Visitor {
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_real(d); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const Symbol& s) const { return s.name; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace vomas
