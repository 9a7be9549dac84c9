#include "vomas/model.hpp"

#include "vomas/models/researchers.hpp"
#include "vomas/models/wolfsheep.hpp"

namespace vomas {

void AttributeSchema::declare(const std::string& kind, const std::string& attr, Type type) {
  kinds_[kind][attr] = type;
}

std::optional<Type> AttributeSchema::lookup(const std::string& attr) const {
  if (attr == "id" || attr == "x" || attr == "y") return Type::number;
  if (attr == "kind") return Type::symbol;
  for (const auto& [kind, attrs] : kinds_) {
    if (auto it = attrs.find(attr); it != attrs.end()) return it->second;
  }
  return std::nullopt;
}

void AttributeSchema::merge(const AttributeSchema& other) {
  for (const auto& [kind, attrs] : other.kinds_) {
    for (const auto& [attr, type] : attrs) declare(kind, attr, type);
  }
}

bool is_builtin_attribute(const std::string& attr) {
  return attr == "id" || attr == "kind" || attr == "x" || attr == "y";
}

std::optional<Value> read_attribute(const SimAgent& agent, const std::string& attr) {
  if (attr == "id") return Value{agent.id()};
  if (attr == "kind") return Value{agent.kind()};
  if (attr == "x") return Value{agent.position().x};
  if (attr == "y") return Value{agent.position().y};
  if (const auto* v = agent.find(attr)) return *v;
  return std::nullopt;
}

void ModelRegistry::add(ModelDef def) {
  auto name = def.name;
  models_.insert_or_assign(std::move(name), std::move(def));
}

const ModelDef& ModelRegistry::get(const std::string& name) const {
  auto it = models_.find(name);
  if (it == models_.end()) throw UnknownModel(name);
  return it->second;
}

std::vector<std::string> ModelRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, def] : models_) out.push_back(name);
  return out;
}

AttributeSchema ModelRegistry::combined_schema() const {
  AttributeSchema out;
  for (const auto& [name, def] : models_) out.merge(def.attributes);
  return out;
}

const ModelRegistry& ModelRegistry::builtin() {
  static const ModelRegistry registry = [] {
    ModelRegistry r;
    r.add(models::researchers_model());
    r.add(models::wolfsheep_model());
    return r;
  }();
  return registry;
}

World init_world(const std::string& model_name, const ParamTable& params, std::uint64_t seed,
                 const ModelRegistry& registry) {
  const auto& def = registry.get(model_name);
  WorldSize size;
  if (auto it = params.find("width"); it != params.end()) size.width = as_double(it->second);
  if (auto it = params.find("height"); it != params.end()) size.height = as_double(it->second);
  World world(model_name, params, size, seed);
  if (def.populate) def.populate(world);
  return world;
}

World init_world(const std::string& model_name, const RawParams& params, std::uint64_t seed,
                 const ModelRegistry& registry) {
  const auto& def = registry.get(model_name);
  return init_world(model_name, resolve_params(def.params, params), seed, registry);
}

World step_model(const World& world, const ModelRegistry& registry) {
  const auto& def = registry.get(world.model());
  World next = world;
  next.begin_tick();
  try {
    if (def.step) def.step(next);
    next.commit();
  } catch (const ModelPanic&) {
    throw;
  } catch (const std::exception& e) {
    throw ModelPanic(def.name + " step failed at tick " + std::to_string(world.tick() + 1) + ": " + e.what());
  }
  next.advance_tick();
  return next;
}

}  // namespace vomas
