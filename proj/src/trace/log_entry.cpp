#include "vomas/trace/log_entry.hpp"

#include <limits>

namespace vomas::trace {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

double real_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number()) throw std::invalid_argument(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::optional<std::string> optional_string(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return string_field(j, key);
}

const Json& array_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw std::invalid_argument(std::string("field '") + key + "' must be an array");
  return v;
}

}  // namespace

std::string_view kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::watch: return "watch";
    case EntryKind::violation: return "violation";
    case EntryKind::console: return "console";
    case EntryKind::frame: return "frame";
    case EntryKind::state: return "state";
    case EntryKind::event: return "event";
    case EntryKind::eval_failure: return "eval_failure";
  }
  return "?";
}

std::optional<EntryKind> parse_kind(std::string_view s) {
  for (int k = 0; k <= static_cast<int>(EntryKind::eval_failure); ++k) {
    if (kind_name(static_cast<EntryKind>(k)) == s) return static_cast<EntryKind>(k);
  }
  return std::nullopt;
}

Json value_to_json(const Value& v) {
  struct Visitor {
    Json operator()(std::int64_t i) const { return i; }
    Json operator()(double d) const { return d; }
    Json operator()(bool b) const { return b; }
    Json operator()(const Symbol& s) const { return s.name; }
  };
  return std::visit(Visitor{}, v);
}

Value value_from_json(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw std::invalid_argument("integer value out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return Symbol{j.get<std::string>()};
  throw std::invalid_argument("value must be a number, boolean or string");
}

namespace {

struct PayloadWriter {
  Json& j;

  void operator()(const WatchPayload& p) const {
    j["value"] = value_to_json(p.value);
    if (p.members) {
      Json members = Json::array();
      for (const auto& m : *p.members) {
        Json item{{"id", m.id}};
        if (m.outcome) item["ok"] = *m.outcome;
        members.push_back(std::move(item));
      }
      j["agents"] = std::move(members);
    }
  }
  void operator()(const ViolationPayload& p) const {
    j["invariant"] = p.invariant;
    j["predicate"] = p.predicate;
    j["scope"] = p.scope;
    if (p.reason) j["reason"] = *p.reason;
  }
  void operator()(const ConsolePayload& p) const {
    j["severity"] = p.severity;
    j["message"] = p.message;
  }
  void operator()(const FramePayload& p) const {
    Json agents = Json::array();
    for (const auto& a : p.agents) {
      agents.push_back({{"id", a.id}, {"kind", a.kind}, {"x", a.x}, {"y", a.y}, {"color", a.color}});
    }
    j["agents"] = std::move(agents);
  }
  void operator()(const StatePayload& p) const {
    Json agents = Json::array();
    for (const auto& a : p.agents) {
      Json attrs = Json::object();
      for (const auto& [k, v] : a.attributes) attrs[k] = value_to_json(v);
      agents.push_back({{"id", a.id}, {"kind", a.kind}, {"x", a.x}, {"y", a.y}, {"attrs", std::move(attrs)}});
    }
    j["agents"] = std::move(agents);
    Json links = Json::array();
    for (const auto& [a, b] : p.links) links.push_back(Json::array({a, b}));
    j["value"] = Json{{"links", std::move(links)}};
  }
  void operator()(const EventPayload& p) const {
    j["value"] = p.value;
    if (p.reason) j["reason"] = *p.reason;
  }
  void operator()(const EvalFailurePayload& p) const { j["message"] = p.message; }
};

}  // namespace

Json to_json(const LogEntry& e) {
  Json j = Json::object();
  j["run_id"] = e.run_id;
  j["tick"] = e.tick;
  j["kind"] = std::string(kind_name(e.kind()));
  j["name"] = e.name;
  std::visit(PayloadWriter{j}, e.payload);
  return j;
}

LogEntry entry_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("entry must be an object");
  LogEntry e;
  e.run_id = string_field(j, "run_id");
  e.tick = int_field(j, "tick");
  if (e.tick < 0) throw std::invalid_argument("tick must be non-negative");
  e.name = string_field(j, "name");
  const auto kind_text = string_field(j, "kind");
  const auto kind = parse_kind(kind_text);
  if (!kind) throw std::invalid_argument("unknown entry kind '" + kind_text + "'");

  switch (*kind) {
    case EntryKind::watch: {
      WatchPayload p{value_from_json(field(j, "value")), std::nullopt};
      if (j.contains("agents")) {
        std::vector<ProximityMember> members;
        for (const auto& item : array_field(j, "agents")) {
          ProximityMember m{int_field(item, "id"), std::nullopt};
          if (item.contains("ok")) {
            if (!item["ok"].is_boolean()) throw std::invalid_argument("field 'ok' must be a boolean");
            m.outcome = item["ok"].get<bool>();
          }
          members.push_back(m);
        }
        p.members = std::move(members);
      }
      e.payload = std::move(p);
      break;
    }
    case EntryKind::violation:
      e.payload = ViolationPayload{string_field(j, "invariant"), string_field(j, "predicate"),
                                   string_field(j, "scope"), optional_string(j, "reason")};
      break;
    case EntryKind::console:
      e.payload = ConsolePayload{string_field(j, "severity"), string_field(j, "message")};
      break;
    case EntryKind::frame: {
      FramePayload p;
      for (const auto& a : array_field(j, "agents")) {
        p.agents.push_back({int_field(a, "id"), string_field(a, "kind"), real_field(a, "x"), real_field(a, "y"),
                            string_field(a, "color")});
      }
      e.payload = std::move(p);
      break;
    }
    case EntryKind::state: {
      StatePayload p;
      for (const auto& a : array_field(j, "agents")) {
        StateAgent s{int_field(a, "id"), string_field(a, "kind"), real_field(a, "x"), real_field(a, "y"), {}};
        const auto& attrs = field(a, "attrs");
        if (!attrs.is_object()) throw std::invalid_argument("field 'attrs' must be an object");
        for (const auto& [k, v] : attrs.items()) s.attributes[k] = value_from_json(v);
        p.agents.push_back(std::move(s));
      }
      const auto& value = field(j, "value");
      for (const auto& l : array_field(value, "links")) {
        if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer()) {
          throw std::invalid_argument("links must be [id, id] pairs");
        }
        p.links.emplace_back(l[0].get<AgentId>(), l[1].get<AgentId>());
      }
      e.payload = std::move(p);
      break;
    }
    case EntryKind::event:
      e.payload = EventPayload{field(j, "value"), optional_string(j, "reason")};
      break;
    case EntryKind::eval_failure:
      e.payload = EvalFailurePayload{string_field(j, "message")};
      break;
  }
  return e;
}

std::string serialize(const LogEntry& e) { return to_json(e).dump(); }

LogEntry parse_entry(std::string_view line) {
  Json j = Json::parse(line.begin(), line.end(), nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("not a JSON record");
  return entry_from_json(j);
}

StatePayload capture_state(const World& world) {
  StatePayload p;
  for (const auto& [id, a] : world.agents()) {
    p.agents.push_back({id, a.kind().name, a.position().x, a.position().y, a.attributes()});
  }
  p.links.assign(world.links().begin(), world.links().end());
  return p;
}

World world_from_state(const StatePayload& state, const std::string& model, const ParamTable& params,
                       WorldSize size, std::int64_t tick) {
  World w(model, params, size, 0);
  for (const auto& a : state.agents) w.insert_agent(SimAgent(a.id, Symbol{a.kind}, {a.x, a.y}, a.attributes));
  for (const auto& [a, b] : state.links) w.link(a, b);
  w.set_tick(tick);
  return w;
}

}  // namespace vomas::trace
