#pragma once

// Slicing properties checked over one specification. Each violated property
// is reported as "<property>: <detail>".

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "archslice/aifg.hpp"
#include "archslice/parser.hpp"
#include "archslice/slicer.hpp"
#include "support/oracles.hpp"
#include "support/reduction_check.hpp"

namespace archslice::testing {

struct PropertyReport {
  std::map<std::string, int> checks;  // property -> times checked
  std::vector<std::string> failures;

  void check(const std::string& property, bool ok, const std::string& detail) {
    ++checks[property];
    if (!ok) failures.push_back(property + ": " + detail);
  }
};

inline const char* direction_name(SliceDirection d) {
  return d == SliceDirection::Backward ? "backward" : "forward";
}

inline std::vector<std::string> elements_of(const Specification& spec,
                                            const std::string& instance) {
  std::vector<std::string> out;
  if (const auto* c = spec.component_of(instance))
    for (const auto& p : c->ports) out.push_back(p.name);
  if (const auto* c = spec.connector_of(instance))
    for (const auto& r : c->roles) out.push_back(r.name);
  return out;
}

/// Runs every slicing property on `spec`, choosing criteria with `rng`.
inline void check_slicing_properties(const Specification& spec, std::mt19937& rng,
                                     PropertyReport& report) {
  const std::string text = render(spec);
  report.check("round-trip", parse(text) == spec, spec.name);

  Aifg graph = build_aifg(spec);

  for (const auto& inst : spec.configuration.instances) {
    auto all = elements_of(spec, inst.name);
    // E1 is a random nonempty subset, E2 a superset of E1.
    std::vector<std::string> shuffled = all;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::size_t n1 = std::uniform_int_distribution<std::size_t>(1, all.size())(rng);
    std::size_t n2 = std::uniform_int_distribution<std::size_t>(n1, all.size())(rng);
    SlicingCriterion small{inst.name, {shuffled.begin(), shuffled.begin() + n1}};
    SlicingCriterion large{inst.name, {shuffled.begin(), shuffled.begin() + n2}};
    const std::string where = spec.name + " / " + inst.name;

    for (auto dir : {SliceDirection::Backward, SliceDirection::Forward}) {
      const std::string tag = where + " " + direction_name(dir);
      VertexSet vc_small = resolve_criterion(spec, graph, small);
      VertexSet vc_large = resolve_criterion(spec, graph, large);
      GraphSlice s_small = slice_graph(graph, vc_small, dir);
      GraphSlice s_large = slice_graph(graph, vc_large, dir);

      report.check("reflexivity",
                   std::includes(s_small.vertices.begin(), s_small.vertices.end(),
                                 vc_small.begin(), vc_small.end()),
                   tag);
      report.check("monotonicity",
                   std::includes(s_large.vertices.begin(), s_large.vertices.end(),
                                 s_small.vertices.begin(), s_small.vertices.end()),
                   tag);

      ReducedSpecification reduced = reduce_specification(spec, graph, s_small.vertices);
      const Specification& out = reduced.spec;

      auto diags = validate(out);
      report.check("re-validation", diags.empty(),
                   tag + (diags.empty() ? "" : ": " + diags.front().to_string()));
      bool reparses = false;
      try {
        reparses = parse(render(out)) == out;
      } catch (const ParseError&) {
      }
      report.check("re-parse", reparses, tag);

      std::string violation = reduction_violation(out, spec);
      report.check("pure reduction", violation.empty(), tag + ": " + violation);

      // Graph/spec agreement, per type element and per instance.
      std::map<std::string, std::set<std::string>> in_slice;
      std::set<std::string> live;
      for (VertexId id : s_small.vertices) {
        const Vertex& v = graph.vertex(id);
        in_slice[spec.configuration.find_instance(v.instance)->type_name].insert(v.element);
        live.insert(v.instance);
      }
      bool agree = true;
      for (const auto& t : spec.components) {
        const auto* kept = out.find_component(t.name);
        for (const auto& p : t.ports) {
          bool expected = in_slice[t.name].contains(p.name);
          bool present = kept && kept->find_port(p.name);
          agree &= expected == present;
        }
      }
      for (const auto& t : spec.connectors) {
        const auto* kept = out.find_connector(t.name);
        for (const auto& r : t.roles) {
          bool expected = in_slice[t.name].contains(r.name);
          bool present = kept && kept->find_role(r.name);
          agree &= expected == present;
        }
      }
      for (const auto& i : spec.configuration.instances)
        agree &= live.contains(i.name) == (out.configuration.find_instance(i.name) != nullptr);
      report.check("graph/spec agreement", agree, tag);

      // Idempotence: slicing the slice again changes nothing.
      bool idempotent = false;
      try {
        idempotent = slice(out, small, dir).spec == out;
      } catch (const std::exception& e) {
        report.failures.push_back("idempotence: " + tag + ": " + e.what());
      }
      report.check("idempotence", idempotent, tag);

      // The library entry point agrees with the step-by-step route.
      report.check("slice composition", slice(spec, small, dir).spec == out, tag);
    }
  }

  // Duality for every single-vertex criterion, against the brute-force
  // closure as a third opinion.
  auto reach = transitive_closure(graph);
  std::vector<VertexSet> forward(graph.size());
  for (std::uint32_t v = 0; v < graph.size(); ++v)
    forward[v] = forward_slice_graph(graph, {VertexId{v}});
  bool dual = true;
  bool matches_closure = true;
  for (std::uint32_t u = 0; u < graph.size(); ++u) {
    VertexSet back = backward_slice_graph(graph, {VertexId{u}});
    for (std::uint32_t v = 0; v < graph.size(); ++v) {
      bool in_back = back.contains(VertexId{v});
      dual &= in_back == forward[v].contains(VertexId{u});
      matches_closure &= in_back == static_cast<bool>(reach[v][u]);
    }
  }
  report.check("duality", dual, spec.name);
  report.check("closure oracle", matches_closure, spec.name);
}

}  // namespace archslice::testing
