#include "archslice/spec_json.hpp"

namespace archslice {

namespace {

nlohmann::json event_json(const Event& ev) {
  nlohmann::json j = {
      {"name", ev.name},
      {"direction", ev.initiated() ? "initiated" : "observed"},
  };
  if (ev.data) j["data"] = *ev.data;
  if (ev.qualifier) j["qualifier"] = *ev.qualifier;
  return j;
}

nlohmann::json elements_json(const std::vector<Element>& elements) {
  auto arr = nlohmann::json::array();
  for (const auto& e : elements)
    arr.push_back({{"name", e.name}, {"behavior", to_json_value(e.behavior)}});
  return arr;
}

}  // namespace

nlohmann::json to_json_value(const ProcessExpr& process) {
  const auto& node = process.node().value;
  if (const auto* pre = std::get_if<Prefix>(&node))
    return {{"prefix",
             {{"event", event_json(pre->event)}, {"rest", to_json_value(pre->rest)}}}};
  if (const auto* ch = std::get_if<Choice>(&node)) {
    auto arr = nlohmann::json::array();
    for (const auto& b : ch->branches) arr.push_back(to_json_value(b));
    return {{"choice", std::move(arr)}};
  }
  if (const auto* ref = std::get_if<Ref>(&node)) return {{"ref", ref->name}};
  return {{"stop", true}};
}

nlohmann::json to_json_value(const Specification& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["components"] = nlohmann::json::array();
  for (const auto& c : spec.components)
    j["components"].push_back({{"name", c.name},
                               {"ports", elements_json(c.ports)},
                               {"computation", to_json_value(c.computation)}});
  j["connectors"] = nlohmann::json::array();
  for (const auto& c : spec.connectors)
    j["connectors"].push_back({{"name", c.name},
                               {"roles", elements_json(c.roles)},
                               {"glue", to_json_value(c.glue)}});
  j["instances"] = nlohmann::json::array();
  for (const auto& i : spec.configuration.instances)
    j["instances"].push_back({{"name", i.name}, {"type", i.type_name}});
  j["attachments"] = nlohmann::json::array();
  for (const auto& a : spec.configuration.attachments)
    j["attachments"].push_back(
        {{"port", a.port.to_string()}, {"role", a.role.to_string()}});
  return j;
}

nlohmann::json to_json_value(const std::vector<Diagnostic>& diagnostics) {
  auto arr = nlohmann::json::array();
  for (const auto& d : diagnostics) {
    nlohmann::json j = {
        {"severity", d.severity == Severity::Error ? "error" : "warning"},
        {"message", d.message}};
    if (d.span.known()) {
      j["line"] = d.span.line;
      j["column"] = d.span.column;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace archslice
