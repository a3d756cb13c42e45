#include "archslice/slicer.hpp"

#include <deque>

#include <json.hpp>

#include "archslice/flow.hpp"

namespace archslice {

bool ReducedSpecification::nothing_removed() const {
  if (!removed_ports.empty() || !removed_roles.empty() ||
      !removed_types.empty() || !removed_instances.empty() ||
      !removed_attachments.empty())
    return false;
  for (const auto& [type, events] : removed_events)
    if (!events.empty()) return false;
  return true;
}

VertexSet resolve_criterion(const Specification& spec, const Aifg& graph,
                            const SlicingCriterion& criterion) {
  const Instance* inst = spec.configuration.find_instance(criterion.instance);
  if (!inst) throw CriterionError("unknown instance " + criterion.instance);
  if (criterion.elements.empty())
    throw CriterionError("empty slicing criterion for instance " +
                         criterion.instance);

  const ComponentType* ctype = spec.find_component(inst->type_name);
  const ConnectorType* ntype = spec.find_connector(inst->type_name);
  VertexSet out;
  for (const auto& element : criterion.elements) {
    bool declared = ctype ? ctype->find_port(element) != nullptr
                          : ntype && ntype->find_role(element) != nullptr;
    auto id = graph.find(criterion.instance, element);
    if (!declared || !id)
      throw CriterionError("unknown element " + element + " of instance " +
                           criterion.instance);
    out.insert(*id);
  }
  return out;
}

namespace {

template <typename Next>
VertexSet reach(const VertexSet& start, Next next) {
  VertexSet seen = start;
  std::deque<VertexId> work(start.begin(), start.end());
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop_front();
    for (VertexId w : next(v))
      if (seen.insert(w).second) work.push_back(w);
  }
  return seen;
}

template <typename Keep>
ProcessExpr reduce_process(const ProcessExpr& p, const Keep& keep) {
  const auto& node = p.node().value;
  if (const auto* pre = std::get_if<Prefix>(&node)) {
    ProcessExpr rest = reduce_process(pre->rest, keep);
    if (!keep(pre->event)) return rest;
    return ProcessExpr::prefix(pre->event, std::move(rest));
  }
  if (const auto* ch = std::get_if<Choice>(&node)) {
    std::vector<ProcessExpr> reduced;
    std::vector<ProcessExpr> live;
    for (const auto& b : ch->branches) {
      reduced.push_back(reduce_process(b, keep));
      if (reduced.back().event_count() > 0) live.push_back(reduced.back());
    }
    // No branch kept an event: every reduced branch is a bare terminator.
    if (live.empty()) return reduced.front();
    if (live.size() == 1) return live.front();
    return ProcessExpr::choice(std::move(live));
  }
  return p;
}

struct ReducedBody {
  std::vector<Element> elements;
  ProcessExpr body;
  std::vector<std::string> removed;
  std::vector<RemovedEvent> removed_events;
};

ReducedBody reduce_type(const std::vector<Element>& elements,
                        const ProcessExpr& body,
                        const std::set<std::string>& surviving) {
  ReducedBody out;
  for (const auto& e : elements) {
    if (surviving.contains(e.name))
      out.elements.push_back(e);
    else
      out.removed.push_back(e.name);
  }
  auto keep = [&](const Event& ev) {
    return ev.qualifier && surviving.contains(*ev.qualifier);
  };
  out.body = reduce_process(body, keep);
  if (out.body.event_count() == 0) out.body = ProcessExpr::stop();

  auto paths = enumerate_paths(body);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 0; j < paths[i].events.size(); ++j)
      if (!keep(paths[i].events[j]))
        out.removed_events.push_back({i, j, paths[i].events[j]});
  return out;
}

}  // namespace

VertexSet backward_slice_graph(const Aifg& graph, const VertexSet& criterion) {
  return reach(criterion,
               [&](VertexId v) { return graph.predecessors(v); });
}

VertexSet forward_slice_graph(const Aifg& graph, const VertexSet& criterion) {
  return reach(criterion, [&](VertexId v) { return graph.successors(v); });
}

GraphSlice slice_graph(const Aifg& graph, const VertexSet& criterion,
                       SliceDirection direction) {
  GraphSlice s;
  s.direction = direction;
  s.criterion_vertices = criterion;
  s.vertices = direction == SliceDirection::Backward
                   ? backward_slice_graph(graph, criterion)
                   : forward_slice_graph(graph, criterion);
  return s;
}

ReducedSpecification reduce_specification(const Specification& spec,
                                          const Aifg& graph,
                                          const VertexSet& kept) {
  std::map<std::string, std::set<std::string>> surviving;  // type -> elements
  std::set<std::string> live_instances;
  for (VertexId id : kept) {
    const Vertex& v = graph.vertex(id);
    const Instance* inst = spec.configuration.find_instance(v.instance);
    if (!inst) continue;
    surviving[inst->type_name].insert(v.element);
    live_instances.insert(v.instance);
  }
  static const std::set<std::string> kNone;
  auto survivors_of = [&](const std::string& type) -> const std::set<std::string>& {
    auto it = surviving.find(type);
    return it == surviving.end() ? kNone : it->second;
  };

  ReducedSpecification out;
  out.spec.name = spec.name;

  for (const auto& type : spec.components) {
    const auto& names = survivors_of(type.name);
    if (names.empty()) {
      out.removed_types.insert(type.name);
      continue;
    }
    auto r = reduce_type(type.ports, type.computation, names);
    for (const auto& p : r.removed) out.removed_ports.insert(type.name + "." + p);
    if (!r.removed_events.empty())
      out.removed_events[type.name] = std::move(r.removed_events);
    out.spec.components.push_back(
        {type.name, std::move(r.elements), std::move(r.body), type.span});
  }
  for (const auto& type : spec.connectors) {
    const auto& names = survivors_of(type.name);
    if (names.empty()) {
      out.removed_types.insert(type.name);
      continue;
    }
    auto r = reduce_type(type.roles, type.glue, names);
    for (const auto& p : r.removed) out.removed_roles.insert(type.name + "." + p);
    if (!r.removed_events.empty())
      out.removed_events[type.name] = std::move(r.removed_events);
    out.spec.connectors.push_back(
        {type.name, std::move(r.elements), std::move(r.body), type.span});
  }

  for (const auto& inst : spec.configuration.instances) {
    if (live_instances.contains(inst.name))
      out.spec.configuration.instances.push_back(inst);
    else
      out.removed_instances.insert(inst.name);
  }

  auto kept_vertex = [&](const Endpoint& ep) {
    auto id = graph.find(ep.instance, ep.element);
    return id && kept.contains(*id);
  };
  for (const auto& att : spec.configuration.attachments) {
    if (kept_vertex(att.port) && kept_vertex(att.role))
      out.spec.configuration.attachments.push_back(att);
    else
      out.removed_attachments.insert(att.to_string());
  }
  return out;
}

ReducedSpecification slice(const Specification& spec,
                           const SlicingCriterion& criterion,
                           SliceDirection direction) {
  Aifg graph = build_aifg(spec);
  VertexSet start = resolve_criterion(spec, graph, criterion);
  return reduce_specification(spec, graph,
                              slice_graph(graph, start, direction).vertices);
}

std::string removals_to_json(const ReducedSpecification& reduced) {
  nlohmann::json doc;
  doc["removed_ports"] = reduced.removed_ports;
  doc["removed_roles"] = reduced.removed_roles;
  doc["removed_types"] = reduced.removed_types;
  doc["removed_instances"] = reduced.removed_instances;
  doc["removed_attachments"] = reduced.removed_attachments;
  nlohmann::json events = nlohmann::json::object();
  for (const auto& [type, list] : reduced.removed_events) {
    auto& arr = events[type] = nlohmann::json::array();
    for (const auto& ev : list)
      arr.push_back({{"path", ev.path},
                     {"position", ev.position},
                     {"event", ev.event.to_string()}});
  }
  doc["removed_events"] = std::move(events);
  return doc.dump();
}

}  // namespace archslice
