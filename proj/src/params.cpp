#include "vomas/params.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace vomas {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_real(std::string_view text) {
  double out = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (ec != std::errc{} || ptr != end || !std::isfinite(out)) return std::nullopt;
  return out;
}

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t out = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return out;
}

}  // namespace

ParameterError::ParameterError(std::string name, std::string expected, std::string offending)
    : std::runtime_error("parameter '" + name + "': expected " + expected + ", got '" + offending + "'"),
      name_(std::move(name)),
      expected_(std::move(expected)),
      offending_(std::move(offending)) {}

std::string ParamSpec::domain() const {
  std::ostringstream os;
  os << (kind == Kind::integer ? "integer" : "real") << " in [" << format_real(min) << ", " << format_real(max)
     << "]";
  return os.str();
}

ParamTable resolve_params(const std::vector<ParamSpec>& schema, const RawParams& raw) {
  ParamTable out;
  for (const auto& spec : schema) out[spec.name] = spec.default_value;

  for (const auto& [key, text] : raw) {
    const ParamSpec* spec = nullptr;
    for (const auto& s : schema) {
      if (s.name == key) spec = &s;
    }
    if (spec == nullptr) throw ParameterError(key, "a known parameter name", text);

    const auto value_text = trim(text);
    if (spec->kind == ParamSpec::Kind::integer) {
      const auto v = parse_int(value_text);
      if (!v || static_cast<double>(*v) < spec->min || static_cast<double>(*v) > spec->max) {
        throw ParameterError(key, spec->domain(), text);
      }
      out[key] = *v;
    } else {
      const auto v = parse_real(value_text);
      if (!v || *v < spec->min || *v > spec->max) throw ParameterError(key, spec->domain(), text);
      out[key] = *v;
    }
  }
  return out;
}

RawParams parse_config(std::string_view text) {
  RawParams out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos || trim(line.substr(0, eq)).empty()) {
      throw ParameterError("line " + std::to_string(line_no), "key=value", std::string(line));
    }
    out[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

RawParams read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError(path.string(), "a readable config file", "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string canonical_params(const ParamTable& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ',';
    out += k + "=" + format_value(v);
  }
  return out;
}

double param_real(const ParamTable& params, const std::string& name) { return as_double(params.at(name)); }

std::int64_t param_int(const ParamTable& params, const std::string& name) {
  return std::get<std::int64_t>(params.at(name));
}

}  // namespace vomas
