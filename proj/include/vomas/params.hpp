#pragma once

#include "vomas/value.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vomas {

/// Resolved, typed model parameters. Keys sorted, so iteration is canonical.
using ParamTable = std::map<std::string, Value>;

/// Raw key=value text as it arrives from a config file or --param flags.
using RawParams = std::map<std::string, std::string>;

class ParameterError : public std::runtime_error {
 public:
  ParameterError(std::string name, std::string expected, std::string offending);

  const std::string& name() const { return name_; }
  const std::string& expected() const { return expected_; }
  const std::string& offending() const { return offending_; }

 private:
  std::string name_;
  std::string expected_;
  std::string offending_;
};

struct ParamSpec {
  enum class Kind { integer, real };

  std::string name;
  Kind kind = Kind::real;
  double min = 0.0;
  double max = 0.0;
  Value default_value;
  std::string help;

  std::string domain() const;
};

/// Fills defaults, rejects unknown keys and out-of-domain values.
ParamTable resolve_params(const std::vector<ParamSpec>& schema, const RawParams& raw);

/// Config file: one key=value per line, '#' starts a comment, blank lines ignored.
RawParams parse_config(std::string_view text);
RawParams read_config_file(const std::filesystem::path& path);

/// "k=v" pairs joined by ',' in key order; used for run ids and reports.
std::string canonical_params(const ParamTable& params);

double param_real(const ParamTable& params, const std::string& name);
std::int64_t param_int(const ParamTable& params, const std::string& name);

}  // namespace vomas
