#include "archslice/parser.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <utility>

namespace archslice {

ParseError::ParseError(SourceSpan span, std::string expected, std::string found)
    : std::runtime_error(std::to_string(span.line) + ":" +
                         std::to_string(span.column) + ": expected " + expected +
                         ", found " + found),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  Ident,
  Keyword,
  Arrow,
  ChoiceOp,
  LParen,
  RParen,
  Dot,
  Bang,
  Question,
  Colon,
  Equals,
  Eof,
};

constexpr std::array<std::string_view, 11> kKeywords = {
    "Configuration", "Component", "Port",        "Computation", "Connector",
    "Role",          "Glue",      "Instances",   "Attachments", "End",
    "STOP"};

bool is_keyword(std::string_view s) {
  for (auto k : kKeywords)
    if (k == s) return true;
  return false;
}

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  SourceSpan span;

  std::string describe() const {
    if (kind == Tok::Eof) return "end of input";
    return "'" + text + "'";
  }
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token tok;
    tok.span = {line_, column_, 1};
    if (pos_ >= text_.size()) {
      tok.kind = Tok::Eof;
      return tok;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        advance();
      tok.text = std::string(text_.substr(start, pos_ - start));
      tok.kind = is_keyword(tok.text) ? Tok::Keyword : Tok::Ident;
      tok.span.length = static_cast<int>(tok.text.size());
      return tok;
    }
    auto single = [&](Tok kind) {
      tok.kind = kind;
      tok.text = std::string(1, c);
      advance();
      return tok;
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '.': return single(Tok::Dot);
      case '!': return single(Tok::Bang);
      case '?': return single(Tok::Question);
      case ':': return single(Tok::Colon);
      case '=': return single(Tok::Equals);
      case '-':
        if (peek_char(1) == '>') {
          advance();
          advance();
          tok.kind = Tok::Arrow;
          tok.text = "->";
          tok.span.length = 2;
          return tok;
        }
        break;
      case '[':
        if (peek_char(1) == ']') {
          advance();
          advance();
          tok.kind = Tok::ChoiceOp;
          tok.text = "[]";
          tok.span.length = 2;
          return tok;
        }
        break;
      default:
        break;
    }
    throw ParseError(tok.span, "token", "unexpected character '" +
                                            std::string(1, c) + "'");
  }

 private:
  char peek_char(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '-' && peek_char(1) == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

  Specification document() {
    Specification spec;
    expect_keyword("Configuration");
    spec.name = expect_ident("identifier").text;
    while (at_keyword("Component") || at_keyword("Connector")) {
      if (at_keyword("Component"))
        spec.components.push_back(component());
      else
        spec.connectors.push_back(connector());
    }
    if (at_keyword("Instances")) {
      bump();
      while (tok_.kind == Tok::Ident) spec.configuration.instances.push_back(instance());
    }
    if (at_keyword("Attachments")) {
      bump();
      while (tok_.kind == Tok::Ident)
        spec.configuration.attachments.push_back(attachment());
    }
    expect_keyword("End");
    Token closing = expect_ident("identifier");
    if (closing.text != spec.name) fail("'" + spec.name + "'", closing);
    expect(Tok::Dot, "'.'");
    if (tok_.kind != Tok::Eof) fail("end of input", tok_);
    return spec;
  }

 private:
  ComponentType component() {
    ComponentType type;
    type.span = tok_.span;
    bump();
    type.name = expect_ident("identifier").text;
    do {
      type.ports.push_back(element("Port"));
    } while (at_keyword("Port"));
    expect_keyword("Computation");
    expect(Tok::Equals, "'='");
    type.computation = process(kComputationName);
    return type;
  }

  ConnectorType connector() {
    ConnectorType type;
    type.span = tok_.span;
    bump();
    type.name = expect_ident("identifier").text;
    do {
      type.roles.push_back(element("Role"));
    } while (at_keyword("Role"));
    expect_keyword("Glue");
    expect(Tok::Equals, "'='");
    type.glue = process(kGlueName);
    return type;
  }

  Element element(std::string_view keyword) {
    expect_keyword(keyword);
    Element e;
    Token name = expect_ident("identifier");
    e.name = name.text;
    e.span = name.span;
    expect(Tok::Equals, "'='");
    e.behavior = process(e.name);
    return e;
  }

  Instance instance() {
    Instance inst;
    inst.span = tok_.span;
    inst.name = expect_ident("identifier").text;
    expect(Tok::Colon, "':'");
    inst.type_name = expect_ident("identifier").text;
    return inst;
  }

  Attachment attachment() {
    Attachment att;
    att.span = tok_.span;
    att.port = endpoint();
    Token as = expect_ident("'as'");
    if (as.text != "as") fail("'as'", as);
    att.role = endpoint();
    return att;
  }

  Endpoint endpoint() {
    Endpoint ep;
    ep.instance = expect_ident("identifier").text;
    expect(Tok::Dot, "'.'");
    ep.element = expect_ident("identifier").text;
    return ep;
  }

  ProcessExpr process(const std::string& self) {
    std::vector<ProcessExpr> branches;
    branches.push_back(sequence(self));
    while (tok_.kind == Tok::ChoiceOp) {
      bump();
      branches.push_back(sequence(self));
    }
    if (branches.size() == 1) return std::move(branches.front());
    return ProcessExpr::choice(std::move(branches));
  }

  // A sequence is a run of events closed by at most one terminal term
  // (STOP, a recursion reference or a parenthesised process).
  ProcessExpr sequence(const std::string& self) {
    std::vector<Event> events;
    std::optional<ProcessExpr> tail;
    while (true) {
      if (tok_.kind == Tok::LParen) {
        bump();
        tail = process(self);
        expect(Tok::RParen, "')'");
      } else if (at_keyword("STOP")) {
        bump();
        tail = ProcessExpr::stop();
      } else if (tok_.kind == Tok::Keyword && tok_.text == self) {
        // `Computation` / `Glue` are keywords but also recursion targets.
        tail = ProcessExpr::ref(self, tok_.span);
        bump();
      } else {
        Token head = expect_ident("identifier");
        bool bare = tok_.kind != Tok::Dot && tok_.kind != Tok::Bang &&
                    tok_.kind != Tok::Question;
        if (bare && head.text == self && tok_.kind != Tok::Arrow) {
          tail = ProcessExpr::ref(head.text, head.span);
        } else {
          events.push_back(event_after(std::move(head)));
        }
      }
      if (tail) {
        if (tok_.kind == Tok::Arrow) fail("end of sequence", tok_);
        break;
      }
      if (tok_.kind != Tok::Arrow) break;
      bump();
    }
    ProcessExpr result = tail ? std::move(*tail) : ProcessExpr::stop();
    for (auto it = events.rbegin(); it != events.rend(); ++it)
      result = ProcessExpr::prefix(std::move(*it), std::move(result));
    return result;
  }

  Event event_after(Token head) {
    Event ev;
    ev.span = head.span;
    ev.name = std::move(head.text);
    if (tok_.kind == Tok::Dot) {
      bump();
      ev.qualifier = std::move(ev.name);
      ev.name = expect_ident("identifier").text;
    }
    if (tok_.kind == Tok::Bang) {
      bump();
      ev.direction = Direction::Initiated;
      if (tok_.kind == Tok::Ident) {
        ev.data = tok_.text;
        bump();
      }
    } else if (tok_.kind == Tok::Question) {
      bump();
      ev.direction = Direction::Observed;
      ev.data = expect_ident("identifier").text;
    } else {
      ev.direction = Direction::Observed;
    }
    return ev;
  }

  bool at_keyword(std::string_view kw) const {
    return tok_.kind == Tok::Keyword && tok_.text == kw;
  }

  void bump() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(std::string expected, const Token& found) {
    throw ParseError(found.span, std::move(expected), found.describe());
  }

  Token expect(Tok kind, const char* what) {
    if (tok_.kind != kind) fail(what, tok_);
    Token t = std::move(tok_);
    bump();
    return t;
  }

  Token expect_ident(const char* what) { return expect(Tok::Ident, what); }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail("'" + std::string(kw) + "'", tok_);
    bump();
  }

  Lexer lexer_;
  Token tok_;
};

void render_inline(const ProcessExpr& p, std::string& out);

void render_branch(const ProcessExpr& p, std::string& out) {
  if (p.is_prefix() || p.is_choice()) {
    out += '(';
    render_inline(p, out);
    out += ')';
  } else {
    render_inline(p, out);
  }
}

void render_inline(const ProcessExpr& p, std::string& out) {
  const auto& node = p.node().value;
  if (const auto* pre = std::get_if<Prefix>(&node)) {
    out += pre->event.to_string();
    out += " -> ";
    if (pre->rest.is_choice()) {
      out += '(';
      render_inline(pre->rest, out);
      out += ')';
    } else {
      render_inline(pre->rest, out);
    }
  } else if (const auto* ch = std::get_if<Choice>(&node)) {
    for (std::size_t i = 0; i < ch->branches.size(); ++i) {
      if (i) out += " [] ";
      render_branch(ch->branches[i], out);
    }
  } else if (const auto* ref = std::get_if<Ref>(&node)) {
    out += ref->name;
  } else {
    out += "STOP";
  }
}

// `head = body`, with the alternatives of a top-level choice on their own
// lines.
void render_definition(std::string_view head, const ProcessExpr& body,
                       std::string& out) {
  out += "    ";
  out += head;
  out += " = ";
  if (const auto* ch = std::get_if<Choice>(&body.node().value)) {
    for (std::size_t i = 0; i < ch->branches.size(); ++i) {
      if (i) out += "\n      [] ";
      render_branch(ch->branches[i], out);
    }
  } else {
    render_inline(body, out);
  }
  out += '\n';
}

}  // namespace

Specification parse(std::string_view text) { return Parser(text).document(); }

std::string render(const ProcessExpr& process) {
  std::string out;
  render_inline(process, out);
  return out;
}

std::string render(const Specification& spec) {
  std::string out = "Configuration " + spec.name + "\n";
  for (const auto& c : spec.components) {
    out += "  Component " + c.name + "\n";
    for (const auto& port : c.ports)
      render_definition("Port " + port.name, port.behavior, out);
    render_definition("Computation", c.computation, out);
  }
  for (const auto& c : spec.connectors) {
    out += "  Connector " + c.name + "\n";
    for (const auto& role : c.roles)
      render_definition("Role " + role.name, role.behavior, out);
    render_definition("Glue", c.glue, out);
  }
  out += "Instances\n";
  for (const auto& inst : spec.configuration.instances)
    out += "  " + inst.name + ": " + inst.type_name + "\n";
  out += "Attachments\n";
  for (const auto& att : spec.configuration.attachments)
    out += "  " + att.to_string() + "\n";
  out += "End " + spec.name + ".\n";
  return out;
}

}  // namespace archslice
