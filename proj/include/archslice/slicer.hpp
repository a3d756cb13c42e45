#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "archslice/aifg.hpp"
#include "archslice/model.hpp"

namespace archslice {

class CriterionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance together with some of its ports (component) or roles
/// (connector).
struct SlicingCriterion {
  std::string instance;
  std::set<std::string> elements;
};

enum class SliceDirection { Backward, Forward };

struct GraphSlice {
  SliceDirection direction = SliceDirection::Backward;
  VertexSet criterion_vertices;
  VertexSet vertices;
};

/// An event dropped from a surviving Computation/Glue: the index of the path
/// it lies on (enumerate_paths order), its position on that path, and the
/// event itself.
struct RemovedEvent {
  std::size_t path = 0;
  std::size_t position = 0;
  Event event;

  friend bool operator==(const RemovedEvent&, const RemovedEvent&) = default;
};

/// The sliced spec plus what was cut away from the original. Ports and
/// roles are recorded as `Type.element`; attachments in their source form.
struct ReducedSpecification {
  Specification spec;
  std::set<std::string> removed_ports;
  std::set<std::string> removed_roles;
  std::set<std::string> removed_types;
  std::set<std::string> removed_instances;
  std::set<std::string> removed_attachments;
  std::map<std::string, std::vector<RemovedEvent>> removed_events;

  bool nothing_removed() const;
};

/// Vertices of `criterion`. Throws CriterionError for an unknown instance, an
/// element the instance's type does not declare, or an empty element set.
VertexSet resolve_criterion(const Specification& spec, const Aifg& graph,
                            const SlicingCriterion& criterion);

/// Every vertex with a (possibly empty) path into `criterion`.
VertexSet backward_slice_graph(const Aifg& graph, const VertexSet& criterion);

/// Every vertex reachable from `criterion`, including the criterion itself.
VertexSet forward_slice_graph(const Aifg& graph, const VertexSet& criterion);

GraphSlice slice_graph(const Aifg& graph, const VertexSet& criterion,
                       SliceDirection direction);

/// Maps a vertex set back onto the specification:
///  - a port/role survives iff some instance of its type has it in `kept`;
///    events on removed elements are cut from Computation/Glue, emptied
///    choice branches dropped, a single remaining branch unwrapped, and an
///    event-free body becomes STOP;
///  - types left without elements are dropped;
///  - an instance survives iff one of its own vertices is kept, an
///    attachment iff both of its endpoints are.
/// Declaration order is preserved throughout.
ReducedSpecification reduce_specification(const Specification& spec,
                                          const Aifg& graph,
                                          const VertexSet& kept);

/// Builds the graph, slices it in `direction` from `criterion` and reduces
/// the specification accordingly.
ReducedSpecification slice(const Specification& spec,
                           const SlicingCriterion& criterion,
                           SliceDirection direction);

/// Removal records as JSON (sorted keys, compact).
std::string removals_to_json(const ReducedSpecification& reduced);

}  // namespace archslice
