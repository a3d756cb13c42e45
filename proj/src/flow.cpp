#include "archslice/flow.hpp"

#include <algorithm>

namespace archslice {

namespace {

void walk(const ProcessExpr& p, std::vector<Event>& prefix,
          std::vector<EventPath>& out) {
  const auto& node = p.node().value;
  if (const auto* pre = std::get_if<Prefix>(&node)) {
    if (!pre->event.qualifier)
      throw AnalysisError("unqualified event '" + pre->event.to_string() +
                          "' in a Computation/Glue process");
    prefix.push_back(pre->event);
    walk(pre->rest, prefix, out);
    prefix.pop_back();
  } else if (const auto* ch = std::get_if<Choice>(&node)) {
    for (const auto& b : ch->branches) walk(b, prefix, out);
  } else {
    out.push_back({prefix, std::holds_alternative<Ref>(node)
                               ? EventPath::End::Recurse
                               : EventPath::End::Stop});
  }
}

void collect_unqualified(const ProcessExpr& p, DirectionClass& dc) {
  const auto& node = p.node().value;
  if (const auto* pre = std::get_if<Prefix>(&node)) {
    (pre->event.initiated() ? dc.output_capable : dc.input_capable) = true;
    collect_unqualified(pre->rest, dc);
  } else if (const auto* ch = std::get_if<Choice>(&node)) {
    for (const auto& b : ch->branches) collect_unqualified(b, dc);
  }
}

bool mentions(const std::vector<EventPath>& paths, std::string_view element) {
  for (const auto& path : paths)
    for (const auto& ev : path.events)
      if (ev.qualifier == element) return true;
  return false;
}

DirectionClass classify(const std::vector<Element>& elements,
                        const ProcessExpr& body, std::string_view element,
                        std::string_view type) {
  auto it = std::find_if(elements.begin(), elements.end(),
                         [&](const Element& e) { return e.name == element; });
  if (it == elements.end())
    throw AnalysisError("unknown element '" + std::string(element) + "' of " +
                        std::string(type));

  DirectionClass dc;
  bool seen = false;
  for (const auto& path : enumerate_paths(body)) {
    for (const auto& ev : path.events) {
      if (ev.qualifier != element) continue;
      seen = true;
      (ev.initiated() ? dc.output_capable : dc.input_capable) = true;
    }
  }
  if (!seen) collect_unqualified(it->behavior, dc);
  return dc;
}

std::set<InternalFlow> flows(const ProcessExpr& body) {
  std::set<InternalFlow> result;
  for (const auto& path : enumerate_paths(body)) {
    const auto& evs = path.events;
    for (std::size_t i = 0; i < evs.size(); ++i) {
      if (!evs[i].observed()) continue;
      for (std::size_t j = i + 1; j < evs.size(); ++j) {
        if (!evs[j].initiated() || *evs[j].qualifier == *evs[i].qualifier)
          continue;
        result.insert({*evs[i].qualifier, *evs[j].qualifier});
      }
    }
  }
  return result;
}

std::vector<Diagnostic> warnings(const std::vector<Element>& elements,
                                 const ProcessExpr& body, SourceSpan span,
                                 std::string_view type, const char* body_name) {
  std::vector<Diagnostic> out;
  auto paths = enumerate_paths(body);
  for (const auto& e : elements) {
    if (mentions(paths, e.name)) continue;
    out.push_back({Severity::Warning, e.span.known() ? e.span : span,
                   "'" + std::string(type) + "." + e.name + "' never occurs in " +
                       body_name + "; direction taken from its own behavior"});
  }
  return out;
}

}  // namespace

std::vector<EventPath> enumerate_paths(const ProcessExpr& process) {
  std::vector<EventPath> out;
  std::vector<Event> prefix;
  walk(process, prefix, out);
  return out;
}

DirectionClass classify_element(const ComponentType& type, std::string_view port) {
  return classify(type.ports, type.computation, port, type.name);
}

DirectionClass classify_element(const ConnectorType& type, std::string_view role) {
  return classify(type.roles, type.glue, role, type.name);
}

std::set<InternalFlow> internal_flows(const ComponentType& type) {
  return flows(type.computation);
}

std::set<InternalFlow> internal_flows(const ConnectorType& type) {
  return flows(type.glue);
}

std::vector<Diagnostic> flow_warnings(const ComponentType& type) {
  return warnings(type.ports, type.computation, type.span, type.name,
                  kComputationName);
}

std::vector<Diagnostic> flow_warnings(const ConnectorType& type) {
  return warnings(type.roles, type.glue, type.span, type.name, kGlueName);
}

}  // namespace archslice
