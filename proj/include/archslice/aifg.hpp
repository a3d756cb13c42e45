#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "archslice/model.hpp"

namespace archslice {

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VertexKind { Port, Role };

/// A port of one component instance or a role of one connector instance.
struct Vertex {
  VertexKind kind = VertexKind::Port;
  std::string instance;
  std::string element;

  std::string display_name() const { return instance + "." + element; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Index of a vertex in Aifg::vertices(). Ids follow display-name order.
struct VertexId {
  std::uint32_t value = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

using VertexSet = std::set<VertexId>;

/// Com: port to role. Con: role to port. Int: inside one instance.
enum class ArcKind { Com, Con, Int };

struct Arc {
  ArcKind kind = ArcKind::Com;
  VertexId from;
  VertexId to;

  friend bool operator==(const Arc&, const Arc&) = default;
};

const char* to_string(VertexKind kind);
const char* to_string(ArcKind kind);

/// Architecture information flow graph. Immutable once built; vertices are
/// sorted by display name and arcs by (from, to, kind).
class Aifg {
 public:
  Aifg() = default;

  /// Assembles a graph from explicit parts, sorting and deduplicating.
  /// Throws BuildError on duplicate vertices, dangling arc endpoints or arcs
  /// that break the Com/Con/Int endpoint discipline.
  static Aifg from_parts(std::vector<Vertex> vertices,
                         std::vector<std::tuple<ArcKind, Vertex, Vertex>> arcs);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Vertex& vertex(VertexId id) const { return vertices_[id.value]; }
  std::size_t size() const { return vertices_.size(); }

  std::optional<VertexId> find(std::string_view instance,
                               std::string_view element) const;

  std::span<const VertexId> successors(VertexId id) const {
    return succ_[id.value];
  }
  std::span<const VertexId> predecessors(VertexId id) const {
    return pred_[id.value];
  }

  std::size_t count(ArcKind kind) const;
  bool has_arc(ArcKind kind, std::string_view from, std::string_view to) const;

  VertexSet all_vertices() const;

  friend bool operator==(const Aifg& a, const Aifg& b) {
    return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> succ_;
  std::vector<std::vector<VertexId>> pred_;
};

/// Builds the graph of a spec that validates cleanly. Attachment arcs follow
/// the port's direction class; each instance gets its type's internal flows.
/// Compatibility warnings are appended to `warnings` when given.
/// Throws BuildError when an attached port can neither send nor receive.
Aifg build_aifg(const Specification& spec,
                std::vector<Diagnostic>* warnings = nullptr);

/// Graphviz digraph: one cluster per instance, Com solid, Con dashed,
/// Int dotted.
std::string to_dot(const Aifg& graph);

/// Compact JSON with sorted keys:
/// {"arcs":[{"from":..,"kind":..,"to":..}],"vertices":[{"element":..,"instance":..,"kind":..}]}
std::string to_json(const Aifg& graph);

/// Inverse of to_json. Throws BuildError on malformed input.
Aifg aifg_from_json(std::string_view json);

}  // namespace archslice
