#include "archslice/model.hpp"

#include <algorithm>
#include <set>

namespace archslice {

std::string Event::to_string() const {
  std::string out;
  if (qualifier) {
    out += *qualifier;
    out += '.';
  }
  out += name;
  if (initiated()) {
    out += '!';
    if (data) out += *data;
  } else if (data) {
    out += '?';
    out += *data;
  }
  return out;
}

ProcessExpr::ProcessExpr()
    : node_(std::make_shared<const ProcessNode>(ProcessNode{Stop{}})) {}

ProcessExpr::ProcessExpr(std::shared_ptr<const ProcessNode> node)
    : node_(std::move(node)) {}

ProcessExpr ProcessExpr::prefix(Event event, ProcessExpr rest) {
  return ProcessExpr(std::make_shared<const ProcessNode>(
      ProcessNode{Prefix{std::move(event), std::move(rest)}}));
}

ProcessExpr ProcessExpr::choice(std::vector<ProcessExpr> branches) {
  return ProcessExpr(std::make_shared<const ProcessNode>(
      ProcessNode{Choice{std::move(branches)}}));
}

ProcessExpr ProcessExpr::ref(std::string name, SourceSpan span) {
  return ProcessExpr(std::make_shared<const ProcessNode>(
      ProcessNode{Ref{std::move(name), span}}));
}

ProcessExpr ProcessExpr::stop() { return ProcessExpr(); }

bool ProcessExpr::is_prefix() const {
  return std::holds_alternative<Prefix>(node_->value);
}
bool ProcessExpr::is_choice() const {
  return std::holds_alternative<Choice>(node_->value);
}
bool ProcessExpr::is_ref() const {
  return std::holds_alternative<Ref>(node_->value);
}
bool ProcessExpr::is_stop() const {
  return std::holds_alternative<Stop>(node_->value);
}

std::size_t ProcessExpr::event_count() const {
  if (const auto* p = std::get_if<Prefix>(&node_->value))
    return 1 + p->rest.event_count();
  if (const auto* c = std::get_if<Choice>(&node_->value)) {
    std::size_t n = 0;
    for (const auto& b : c->branches) n += b.event_count();
    return n;
  }
  return 0;
}

bool operator==(const ProcessExpr& a, const ProcessExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node_->value;
  const auto& y = b.node_->value;
  if (x.index() != y.index()) return false;
  if (const auto* p = std::get_if<Prefix>(&x)) {
    const auto& q = std::get<Prefix>(y);
    return p->event == q.event && p->rest == q.rest;
  }
  if (const auto* c = std::get_if<Choice>(&x))
    return c->branches == std::get<Choice>(y).branches;
  if (const auto* r = std::get_if<Ref>(&x))
    return r->name == std::get<Ref>(y).name;
  return true;
}

const Element* ComponentType::find_port(std::string_view port) const {
  auto it = std::find_if(ports.begin(), ports.end(),
                         [&](const Element& e) { return e.name == port; });
  return it == ports.end() ? nullptr : &*it;
}

const Element* ConnectorType::find_role(std::string_view role) const {
  auto it = std::find_if(roles.begin(), roles.end(),
                         [&](const Element& e) { return e.name == role; });
  return it == roles.end() ? nullptr : &*it;
}

const Instance* Configuration::find_instance(std::string_view name) const {
  auto it = std::find_if(instances.begin(), instances.end(),
                         [&](const Instance& i) { return i.name == name; });
  return it == instances.end() ? nullptr : &*it;
}

const ComponentType* Specification::find_component(std::string_view type) const {
  auto it = std::find_if(components.begin(), components.end(),
                         [&](const ComponentType& t) { return t.name == type; });
  return it == components.end() ? nullptr : &*it;
}

const ConnectorType* Specification::find_connector(std::string_view type) const {
  auto it = std::find_if(connectors.begin(), connectors.end(),
                         [&](const ConnectorType& t) { return t.name == type; });
  return it == connectors.end() ? nullptr : &*it;
}

const ComponentType* Specification::component_of(std::string_view instance) const {
  const Instance* inst = configuration.find_instance(instance);
  return inst ? find_component(inst->type_name) : nullptr;
}

const ConnectorType* Specification::connector_of(std::string_view instance) const {
  const Instance* inst = configuration.find_instance(instance);
  return inst ? find_connector(inst->type_name) : nullptr;
}

std::string Diagnostic::to_string() const {
  std::string out;
  if (span.known())
    out += std::to_string(span.line) + ":" + std::to_string(span.column) + ": ";
  out += severity == Severity::Error ? "error: " : "warning: ";
  out += message;
  return out;
}

namespace {

class Validator {
 public:
  explicit Validator(const Specification& spec) : spec_(spec) {}

  std::vector<Diagnostic> run() {
    check_type_names();
    for (const auto& c : spec_.components)
      check_type("component", c.name, c.span, c.ports, "port", c.computation,
                 kComputationName);
    for (const auto& c : spec_.connectors)
      check_type("connector", c.name, c.span, c.roles, "role", c.glue,
                 kGlueName);
    check_instances();
    check_attachments();
    return std::move(out_);
  }

 private:
  void error(SourceSpan span, std::string message) {
    out_.push_back({Severity::Error, span, std::move(message)});
  }

  void check_type_names() {
    std::set<std::string> seen;
    auto visit = [&](const std::string& name, SourceSpan span) {
      if (!seen.insert(name).second)
        error(span, "duplicate type name '" + name + "'");
    };
    for (const auto& c : spec_.components) visit(c.name, c.span);
    for (const auto& c : spec_.connectors) visit(c.name, c.span);
  }

  void check_type(const char* what, const std::string& type, SourceSpan span,
                  const std::vector<Element>& elements, const char* element_kind,
                  const ProcessExpr& body, const char* body_name) {
    std::set<std::string> names;
    for (const auto& e : elements) {
      if (!names.insert(e.name).second)
        error(e.span, std::string("duplicate ") + element_kind + " name '" +
                          e.name + "' in " + what + " " + type);
      check_process(e.behavior, e.name, e.span, nullptr, element_kind, type);
    }
    check_process(body, body_name, span, &names, element_kind, type);
  }

  // `qualifiers` is null for port/role behaviors, where events are
  // unqualified; otherwise it holds the names a qualifier may take.
  void check_process(const ProcessExpr& p, const std::string& self,
                     SourceSpan owner_span, const std::set<std::string>* qualifiers,
                     const char* element_kind, const std::string& type) {
    const auto& node = p.node().value;
    if (const auto* pre = std::get_if<Prefix>(&node)) {
      const Event& ev = pre->event;
      SourceSpan at = ev.span.known() ? ev.span : owner_span;
      if (ev.name.empty()) error(at, "event with empty name in " + type);
      if (qualifiers == nullptr) {
        if (ev.qualifier)
          error(at, "qualified event '" + ev.to_string() + "' in behavior of " +
                        type + "." + self);
      } else if (!ev.qualifier) {
        error(at, "unqualified event '" + ev.to_string() + "' in " + self +
                      " of " + type);
      } else if (!qualifiers->contains(*ev.qualifier)) {
        error(at, "event '" + ev.to_string() + "' in " + self + " of " + type +
                      " names undeclared " + element_kind + " '" +
                      *ev.qualifier + "'");
      }
      check_process(pre->rest, self, owner_span, qualifiers, element_kind, type);
    } else if (const auto* ch = std::get_if<Choice>(&node)) {
      if (ch->branches.size() < 2)
        error(owner_span, "choice with fewer than two branches in " + type);
      for (const auto& b : ch->branches)
        check_process(b, self, owner_span, qualifiers, element_kind, type);
    } else if (const auto* ref = std::get_if<Ref>(&node)) {
      if (ref->name != self)
        error(ref->span.known() ? ref->span : owner_span,
              "recursion to '" + ref->name + "' inside " + self + " of " +
                  type + " (only self-recursion is supported)");
    }
  }

  void check_instances() {
    std::set<std::string> seen;
    for (const auto& inst : spec_.configuration.instances) {
      if (!seen.insert(inst.name).second)
        error(inst.span, "duplicate instance name '" + inst.name + "'");
      if (!spec_.find_component(inst.type_name) &&
          !spec_.find_connector(inst.type_name))
        error(inst.span, "instance '" + inst.name + "' has undeclared type '" +
                             inst.type_name + "'");
    }
  }

  void check_attachments() {
    for (const auto& att : spec_.configuration.attachments) {
      const Instance* port_inst =
          spec_.configuration.find_instance(att.port.instance);
      if (!port_inst) {
        error(att.span, "attachment references undeclared instance '" +
                            att.port.instance + "'");
      } else if (const auto* type = spec_.find_component(port_inst->type_name)) {
        if (!type->find_port(att.port.element))
          error(att.span, "attachment references undeclared port '" +
                              att.port.to_string() + "'");
      } else {
        error(att.span, "attachment port side '" + att.port.instance +
                            "' is not a component instance");
      }

      const Instance* role_inst =
          spec_.configuration.find_instance(att.role.instance);
      if (!role_inst) {
        error(att.span, "attachment references undeclared instance '" +
                            att.role.instance + "'");
      } else if (const auto* type = spec_.find_connector(role_inst->type_name)) {
        if (!type->find_role(att.role.element))
          error(att.span, "attachment references undeclared role '" +
                              att.role.to_string() + "'");
      } else {
        error(att.span, "attachment role side '" + att.role.instance +
                            "' is not a connector instance");
      }
    }
  }

  const Specification& spec_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const Specification& spec) {
  return Validator(spec).run();
}

}  // namespace archslice
