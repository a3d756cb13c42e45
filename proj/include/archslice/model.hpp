#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace archslice {

/// Position of a token in the source text. A zero line means "no location"
/// (the value was built programmatically rather than parsed).
struct SourceSpan {
  int line = 0;
  int column = 0;
  int length = 1;

  bool known() const { return line > 0; }
};

enum class Direction { Initiated, Observed };

/// A CSP event. `qualifier` names the port or role the event happens on and
/// is only present inside Computation and Glue processes.
struct Event {
  std::string name;
  Direction direction = Direction::Observed;
  std::optional<std::string> data;
  std::optional<std::string> qualifier;
  SourceSpan span;

  bool initiated() const { return direction == Direction::Initiated; }
  bool observed() const { return direction == Direction::Observed; }

  /// Surface form: `Q.name!x`, `name!`, `name?x` or `name`.
  std::string to_string() const;

  friend bool operator==(const Event& a, const Event& b) {
    return a.name == b.name && a.direction == b.direction && a.data == b.data &&
           a.qualifier == b.qualifier;
  }
};

struct ProcessNode;

/// Immutable handle to a behavior tree. Copies share structure.
class ProcessExpr {
 public:
  /// Builds STOP.
  ProcessExpr();

  static ProcessExpr prefix(Event event, ProcessExpr rest);
  static ProcessExpr choice(std::vector<ProcessExpr> branches);
  static ProcessExpr ref(std::string name, SourceSpan span = {});
  static ProcessExpr stop();

  const ProcessNode& node() const { return *node_; }

  bool is_prefix() const;
  bool is_choice() const;
  bool is_ref() const;
  bool is_stop() const;

  /// Number of events in the whole tree.
  std::size_t event_count() const;

  friend bool operator==(const ProcessExpr& a, const ProcessExpr& b);

 private:
  explicit ProcessExpr(std::shared_ptr<const ProcessNode> node);
  std::shared_ptr<const ProcessNode> node_;
};

struct Prefix {
  Event event;
  ProcessExpr rest;
};

struct Choice {
  std::vector<ProcessExpr> branches;
};

struct Ref {
  std::string name;
  SourceSpan span;
};

struct Stop {};

struct ProcessNode {
  std::variant<Prefix, Choice, Ref, Stop> value;
};

/// A port of a component or a role of a connector.
struct Element {
  std::string name;
  ProcessExpr behavior;
  SourceSpan span;

  friend bool operator==(const Element& a, const Element& b) {
    return a.name == b.name && a.behavior == b.behavior;
  }
};

/// Process names a Computation or Glue body recurses to.
inline constexpr const char* kComputationName = "Computation";
inline constexpr const char* kGlueName = "Glue";

struct ComponentType {
  std::string name;
  std::vector<Element> ports;
  ProcessExpr computation;
  SourceSpan span;

  const Element* find_port(std::string_view port) const;

  friend bool operator==(const ComponentType& a, const ComponentType& b) {
    return a.name == b.name && a.ports == b.ports &&
           a.computation == b.computation;
  }
};

struct ConnectorType {
  std::string name;
  std::vector<Element> roles;
  ProcessExpr glue;
  SourceSpan span;

  const Element* find_role(std::string_view role) const;

  friend bool operator==(const ConnectorType& a, const ConnectorType& b) {
    return a.name == b.name && a.roles == b.roles && a.glue == b.glue;
  }
};

struct Instance {
  std::string name;
  std::string type_name;
  SourceSpan span;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.name == b.name && a.type_name == b.type_name;
  }
};

/// `instance.element` on one side of an attachment.
struct Endpoint {
  std::string instance;
  std::string element;

  std::string to_string() const { return instance + "." + element; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

/// `port as role`.
struct Attachment {
  Endpoint port;
  Endpoint role;
  SourceSpan span;

  std::string to_string() const {
    return port.to_string() + " as " + role.to_string();
  }

  friend bool operator==(const Attachment& a, const Attachment& b) {
    return a.port == b.port && a.role == b.role;
  }
};

struct Configuration {
  std::vector<Instance> instances;
  std::vector<Attachment> attachments;

  const Instance* find_instance(std::string_view name) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// An architectural specification: component types, connector types and the
/// configuration that instantiates and wires them.
struct Specification {
  std::string name;
  std::vector<ComponentType> components;
  std::vector<ConnectorType> connectors;
  Configuration configuration;

  const ComponentType* find_component(std::string_view type) const;
  const ConnectorType* find_connector(std::string_view type) const;

  /// Component type of a component instance, or null.
  const ComponentType* component_of(std::string_view instance) const;
  /// Connector type of a connector instance, or null.
  const ConnectorType* connector_of(std::string_view instance) const;

  friend bool operator==(const Specification&, const Specification&) = default;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  SourceSpan span;
  std::string message;

  /// `line:col: error: message`, or just `error: message` without a span.
  std::string to_string() const;
};

/// Checks every structural invariant of the model. Returns one error per
/// violation, in declaration order; empty means the spec is well formed.
std::vector<Diagnostic> validate(const Specification& spec);

}  // namespace archslice
