#pragma once

#include "vomas/params.hpp"
#include "vomas/world.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace vomas {

/// Attribute names and types per agent kind. Every kind also exposes the
/// pseudo-attributes id, kind, x and y.
class AttributeSchema {
 public:
  AttributeSchema() = default;

  void declare(const std::string& kind, const std::string& attr, Type type);

  /// Union over kinds; nullopt when no kind declares `attr`.
  std::optional<Type> lookup(const std::string& attr) const;

  bool declares(const std::string& attr) const { return lookup(attr).has_value(); }

  const std::map<std::string, std::map<std::string, Type>>& kinds() const { return kinds_; }

  void merge(const AttributeSchema& other);

  friend bool operator==(const AttributeSchema&, const AttributeSchema&) = default;

 private:
  std::map<std::string, std::map<std::string, Type>> kinds_;
};

bool is_builtin_attribute(const std::string& attr);

/// Reads an attribute or pseudo-attribute; nullopt if the agent lacks it.
std::optional<Value> read_attribute(const SimAgent& agent, const std::string& attr);

class UnknownModel : public std::runtime_error {
 public:
  explicit UnknownModel(const std::string& name) : std::runtime_error("unknown model '" + name + "'") {}
};

/// Domain error raised by a model step; aborts the run.
class ModelPanic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelDef {
  std::string name;
  std::vector<ParamSpec> params;
  AttributeSchema attributes;
  /// Builds the tick-0 population. `world` already holds params, size and seeded rng.
  std::function<void(World&)> populate;
  /// Mutates the world for one tick; the engine commits queued births/removals afterwards.
  std::function<void(World&)> step;
  /// Lowercase colour name for frame export.
  std::function<std::string(const SimAgent&)> color;
};

class ModelRegistry {
 public:
  void add(ModelDef def);
  const ModelDef& get(const std::string& name) const;
  bool contains(const std::string& name) const { return models_.contains(name); }
  std::vector<std::string> names() const;

  /// Union of every registered model's attributes.
  AttributeSchema combined_schema() const;

  /// The researchers and wolfsheep case-study models.
  static const ModelRegistry& builtin();

 private:
  std::map<std::string, ModelDef> models_;
};

World init_world(const std::string& model_name, const RawParams& params, std::uint64_t seed,
                 const ModelRegistry& registry = ModelRegistry::builtin());

World init_world(const std::string& model_name, const ParamTable& params, std::uint64_t seed,
                 const ModelRegistry& registry = ModelRegistry::builtin());

/// Advances a copy of `world` by one tick. Throws ModelPanic on model failure;
/// the input world is left untouched in that case.
World step_model(const World& world, const ModelRegistry& registry = ModelRegistry::builtin());

}  // namespace vomas
