#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "archslice/model.hpp"

namespace archslice {

/// First lexical or syntactic error of a document.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string expected, std::string found);

  const SourceSpan& span() const { return span_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::string expected_;
  std::string found_;
};

/// Parses a `.wrt` document. Throws ParseError on the first violation.
///
/// Grammar summary:
///   spec     := "Configuration" ID typeDecl* "Instances" inst* "Attachments"
///               att* "End" ID "."
///   process  := seq ("[]" seq)*
///   seq      := term ("->" term)*
///   term     := "(" process ")" | "STOP" | event | ID
///   event    := (ID ".")? ID ("!" ID? | "?" ID)?
///
/// A bare identifier closing a sequence is a recursion reference when it
/// names the enclosing definition. A sequence that ends in an event is
/// completed with STOP.
Specification parse(std::string_view text);

/// Canonical text of a specification; parse(render(s)) == s.
std::string render(const Specification& spec);

/// Canonical single-line text of one process.
std::string render(const ProcessExpr& process);

}  // namespace archslice
