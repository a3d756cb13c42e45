#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "archslice/model.hpp"

namespace archslice {

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Whether a port or role can receive data, emit data, or both.
struct DirectionClass {
  bool input_capable = false;
  bool output_capable = false;

  bool silent() const { return !input_capable && !output_capable; }
  friend bool operator==(const DirectionClass&, const DirectionClass&) = default;
};

/// One root-to-leaf walk through a single unfolding of a process, with every
/// choice resolved to one branch.
struct EventPath {
  enum class End { Recurse, Stop };

  std::vector<Event> events;
  End terminator = End::Stop;
};

/// Data flowing inside one component or connector from `source` to `target`.
struct InternalFlow {
  std::string source;
  std::string target;

  friend bool operator==(const InternalFlow&, const InternalFlow&) = default;
  friend auto operator<=>(const InternalFlow&, const InternalFlow&) = default;
};

/// Paths of a Computation or Glue body, one per leaf of its choice tree, in
/// left-to-right order. Throws AnalysisError on an unqualified event.
std::vector<EventPath> enumerate_paths(const ProcessExpr& process);

DirectionClass classify_element(const ComponentType& type, std::string_view port);
DirectionClass classify_element(const ConnectorType& type, std::string_view role);

/// Observed-then-initiated pairs along each path, between distinct elements.
std::set<InternalFlow> internal_flows(const ComponentType& type);
std::set<InternalFlow> internal_flows(const ConnectorType& type);

/// Warnings for elements that never occur in the Computation/Glue body and
/// so are classified from their own behavior instead.
std::vector<Diagnostic> flow_warnings(const ComponentType& type);
std::vector<Diagnostic> flow_warnings(const ConnectorType& type);

}  // namespace archslice
