#include "archslice/aifg.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <json.hpp>

#include "archslice/flow.hpp"

namespace archslice {

const char* to_string(VertexKind kind) {
  return kind == VertexKind::Port ? "port" : "role";
}

const char* to_string(ArcKind kind) {
  switch (kind) {
    case ArcKind::Com: return "com";
    case ArcKind::Con: return "con";
    case ArcKind::Int: return "int";
  }
  return "?";
}

namespace {

bool arc_less(const Arc& a, const Arc& b) {
  return std::tie(a.from, a.to, a.kind) < std::tie(b.from, b.to, b.kind);
}

void check_discipline(ArcKind kind, const Vertex& from, const Vertex& to) {
  bool ok = false;
  switch (kind) {
    case ArcKind::Com:
      ok = from.kind == VertexKind::Port && to.kind == VertexKind::Role;
      break;
    case ArcKind::Con:
      ok = from.kind == VertexKind::Role && to.kind == VertexKind::Port;
      break;
    case ArcKind::Int:
      ok = from.kind == to.kind && from.instance == to.instance;
      break;
  }
  if (!ok)
    throw BuildError(std::string(to_string(kind)) + " arc " +
                     from.display_name() + " -> " + to.display_name() +
                     " has endpoints of the wrong class");
}

}  // namespace

Aifg Aifg::from_parts(std::vector<Vertex> vertices,
                      std::vector<std::tuple<ArcKind, Vertex, Vertex>> arcs) {
  Aifg g;
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) {
              return a.display_name() < b.display_name();
            });
  std::map<std::string, VertexId> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto name = vertices[i].display_name();
    if (!index.emplace(name, VertexId{static_cast<std::uint32_t>(i)}).second)
      throw BuildError("duplicate vertex " + name);
  }
  g.vertices_ = std::move(vertices);

  for (const auto& [kind, from, to] : arcs) {
    auto f = index.find(from.display_name());
    auto t = index.find(to.display_name());
    if (f == index.end() || t == index.end() || g.vertex(f->second) != from ||
        g.vertex(t->second) != to)
      throw BuildError("arc " + from.display_name() + " -> " +
                       to.display_name() + " has an endpoint outside the graph");
    check_discipline(kind, from, to);
    g.arcs_.push_back({kind, f->second, t->second});
  }
  std::sort(g.arcs_.begin(), g.arcs_.end(), arc_less);
  g.arcs_.erase(std::unique(g.arcs_.begin(), g.arcs_.end()), g.arcs_.end());

  g.succ_.assign(g.vertices_.size(), {});
  g.pred_.assign(g.vertices_.size(), {});
  for (const auto& arc : g.arcs_) {
    auto& s = g.succ_[arc.from.value];
    if (s.empty() || s.back() != arc.to) s.push_back(arc.to);
    g.pred_[arc.to.value].push_back(arc.from);
  }
  for (auto& p : g.pred_) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  return g;
}

std::optional<VertexId> Aifg::find(std::string_view instance,
                                   std::string_view element) const {
  std::string name = std::string(instance) + "." + std::string(element);
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), name,
      [](const Vertex& v, const std::string& n) { return v.display_name() < n; });
  if (it == vertices_.end() || it->instance != instance || it->element != element)
    return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - vertices_.begin())};
}

std::size_t Aifg::count(ArcKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.kind == kind; }));
}

bool Aifg::has_arc(ArcKind kind, std::string_view from, std::string_view to) const {
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) {
    return a.kind == kind && vertex(a.from).display_name() == from &&
           vertex(a.to).display_name() == to;
  });
}

VertexSet Aifg::all_vertices() const {
  VertexSet all;
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) all.insert(all.end(), VertexId{i});
  return all;
}

Aifg build_aifg(const Specification& spec, std::vector<Diagnostic>* warnings) {
  if (auto diags = validate(spec); !diags.empty())
    throw BuildError("specification does not validate: " + diags.front().to_string());

  std::vector<Vertex> vertices;
  std::vector<std::tuple<ArcKind, Vertex, Vertex>> arcs;

  for (const auto& inst : spec.configuration.instances) {
    if (const auto* type = spec.find_component(inst.type_name)) {
      for (const auto& port : type->ports)
        vertices.push_back({VertexKind::Port, inst.name, port.name});
      for (const auto& flow : internal_flows(*type))
        arcs.emplace_back(ArcKind::Int,
                          Vertex{VertexKind::Port, inst.name, flow.source},
                          Vertex{VertexKind::Port, inst.name, flow.target});
    } else if (const auto* type = spec.find_connector(inst.type_name)) {
      for (const auto& role : type->roles)
        vertices.push_back({VertexKind::Role, inst.name, role.name});
      for (const auto& flow : internal_flows(*type))
        arcs.emplace_back(ArcKind::Int,
                          Vertex{VertexKind::Role, inst.name, flow.source},
                          Vertex{VertexKind::Role, inst.name, flow.target});
    }
  }

  for (const auto& att : spec.configuration.attachments) {
    const ComponentType& ctype = *spec.component_of(att.port.instance);
    const ConnectorType& ntype = *spec.connector_of(att.role.instance);
    DirectionClass port = classify_element(ctype, att.port.element);
    DirectionClass role = classify_element(ntype, att.role.element);
    if (port.silent())
      throw BuildError("attachment '" + att.to_string() + "': port '" +
                       ctype.name + "." + att.port.element +
                       "' neither sends nor receives");
    Vertex p{VertexKind::Port, att.port.instance, att.port.element};
    Vertex r{VertexKind::Role, att.role.instance, att.role.element};
    if (port.output_capable) arcs.emplace_back(ArcKind::Com, p, r);
    if (port.input_capable) arcs.emplace_back(ArcKind::Con, r, p);
    if (warnings && ((port.output_capable && !role.input_capable) ||
                     (port.input_capable && !role.output_capable)))
      warnings->push_back({Severity::Warning, att.span,
                           "attachment '" + att.to_string() +
                               "': role direction does not match the port"});
  }

  if (warnings) {
    for (const auto& t : spec.components)
      for (auto& d : flow_warnings(t)) warnings->push_back(std::move(d));
    for (const auto& t : spec.connectors)
      for (auto& d : flow_warnings(t)) warnings->push_back(std::move(d));
  }
  return Aifg::from_parts(std::move(vertices), std::move(arcs));
}

std::string to_dot(const Aifg& graph) {
  std::map<std::string, std::vector<const Vertex*>> clusters;
  for (const auto& v : graph.vertices()) clusters[v.instance].push_back(&v);

  std::string out = "digraph aifg {\n";
  out += "  compound=true;\n";
  for (const auto& [instance, members] : clusters) {
    bool component = members.front()->kind == VertexKind::Port;
    out += "  subgraph \"cluster_" + instance + "\" {\n";
    out += "    label=\"" + instance + "\";\n";
    out += std::string("    style=") + (component ? "solid" : "rounded") + ";\n";
    for (const Vertex* v : members)
      out += "    \"" + v->display_name() + "\" [label=\"" + v->element +
             "\", shape=" + (component ? "box" : "circle") + "];\n";
    out += "  }\n";
  }
  for (const auto& arc : graph.arcs()) {
    const char* style = arc.kind == ArcKind::Com   ? "solid"
                        : arc.kind == ArcKind::Con ? "dashed"
                                                   : "dotted";
    out += "  \"" + graph.vertex(arc.from).display_name() + "\" -> \"" +
           graph.vertex(arc.to).display_name() + "\" [style=" + style + "];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const Aifg& graph) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  doc["arcs"] = nlohmann::json::array();
  for (const auto& v : graph.vertices())
    doc["vertices"].push_back(
        {{"kind", to_string(v.kind)}, {"instance", v.instance}, {"element", v.element}});
  for (const auto& a : graph.arcs())
    doc["arcs"].push_back({{"kind", to_string(a.kind)},
                           {"from", graph.vertex(a.from).display_name()},
                           {"to", graph.vertex(a.to).display_name()}});
  return doc.dump();
}

Aifg aifg_from_json(std::string_view json) {
  try {
    auto doc = nlohmann::json::parse(json);
    std::vector<Vertex> vertices;
    std::map<std::string, Vertex> by_name;
    for (const auto& rec : doc.at("vertices")) {
      auto kind = rec.at("kind").get<std::string>();
      if (kind != "port" && kind != "role")
        throw BuildError("unknown vertex kind '" + kind + "'");
      Vertex v{kind == "port" ? VertexKind::Port : VertexKind::Role,
               rec.at("instance").get<std::string>(),
               rec.at("element").get<std::string>()};
      by_name.emplace(v.display_name(), v);
      vertices.push_back(std::move(v));
    }
    auto lookup = [&](const std::string& name) {
      auto it = by_name.find(name);
      if (it == by_name.end()) throw BuildError("arc names unknown vertex " + name);
      return it->second;
    };
    std::vector<std::tuple<ArcKind, Vertex, Vertex>> arcs;
    for (const auto& rec : doc.at("arcs")) {
      auto kind = rec.at("kind").get<std::string>();
      ArcKind k;
      if (kind == "com") k = ArcKind::Com;
      else if (kind == "con") k = ArcKind::Con;
      else if (kind == "int") k = ArcKind::Int;
      else throw BuildError("unknown arc kind '" + kind + "'");
      arcs.emplace_back(k, lookup(rec.at("from").get<std::string>()),
                        lookup(rec.at("to").get<std::string>()));
    }
    return Aifg::from_parts(std::move(vertices), std::move(arcs));
  } catch (const nlohmann::json::exception& e) {
    throw BuildError(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace archslice
