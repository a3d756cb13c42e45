#include <doctest.h>

#include "archslice/model.hpp"
#include "archslice/parser.hpp"
#include "support/fixtures.hpp"

using namespace archslice;

namespace {

bool mentions(const std::vector<Diagnostic>& diags, const std::string& text) {
  for (const auto& d : diags)
    if (d.message.find(text) != std::string::npos) return true;
  return false;
}

const char* kTwoTypes = R"(Configuration T
  Component A
    Port Out = send!x -> Out
    Computation = Out.send!x -> Computation
  Connector L
    Role In = send!x -> In
    Role Back = send?x -> Back
    Glue = In.send?x -> Back.send!x -> Glue
Instances
  a: A
  l: L
Attachments
  a.Out as l.In
End T.
)";

}  // namespace

TEST_CASE("gas station validates cleanly") {
  CHECK(validate(testing::gas_station()).empty());
}

TEST_CASE("attachment to an undeclared instance is reported once") {
  Specification spec = parse(kTwoTypes);
  spec.configuration.attachments.push_back({{"ghost", "Pay"}, {"l", "In"}, {}});
  auto diags = validate(spec);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].message.find("ghost") != std::string::npos);
}

TEST_CASE("duplicate port names are reported once") {
  std::string text = kTwoTypes;
  text.replace(text.find("    Computation"), 0, "    Port Out = recv?x -> Out\n");
  auto diags = validate(parse(text));
  REQUIRE(diags.size() == 1);
  CHECK(mentions(diags, "duplicate port name 'Out'"));
  CHECK(diags[0].span.line == 4);
}

TEST_CASE("qualifier discipline") {
  Specification spec = parse(kTwoTypes);
  SUBCASE("computation event naming an undeclared port") {
    Event ev{"send", Direction::Initiated, "x", "Nope", {}};
    spec.components[0].computation =
        ProcessExpr::prefix(ev, ProcessExpr::ref(kComputationName));
    CHECK(mentions(validate(spec), "undeclared port 'Nope'"));
  }
  SUBCASE("unqualified event in computation") {
    Event ev{"send", Direction::Initiated, "x", std::nullopt, {}};
    spec.components[0].computation =
        ProcessExpr::prefix(ev, ProcessExpr::ref(kComputationName));
    CHECK(mentions(validate(spec), "unqualified event"));
  }
  SUBCASE("qualified event in a port behavior") {
    Event ev{"send", Direction::Initiated, "x", "Out", {}};
    spec.components[0].ports[0].behavior = ProcessExpr::prefix(ev, ProcessExpr::stop());
    CHECK(mentions(validate(spec), "qualified event"));
  }
  SUBCASE("recursion to another process") {
    spec.connectors[0].glue = ProcessExpr::ref("Elsewhere");
    CHECK(mentions(validate(spec), "only self-recursion"));
  }
  SUBCASE("unary choice") {
    spec.connectors[0].glue = ProcessExpr::choice({ProcessExpr::ref(kGlueName)});
    CHECK(mentions(validate(spec), "fewer than two branches"));
  }
}

TEST_CASE("configuration invariants") {
  Specification spec = parse(kTwoTypes);
  SUBCASE("duplicate instance") {
    spec.configuration.instances.push_back({"a", "A", {}});
    CHECK(mentions(validate(spec), "duplicate instance name 'a'"));
  }
  SUBCASE("unknown type") {
    spec.configuration.instances.push_back({"z", "Zed", {}});
    CHECK(mentions(validate(spec), "undeclared type 'Zed'"));
  }
  SUBCASE("sides swapped") {
    spec.configuration.attachments = {{{"l", "In"}, {"a", "Out"}, {}}};
    auto diags = validate(spec);
    CHECK(mentions(diags, "'l' is not a component instance"));
    CHECK(mentions(diags, "'a' is not a connector instance"));
  }
  SUBCASE("undeclared role") {
    spec.configuration.attachments = {{{"a", "Out"}, {"l", "Nope"}, {}}};
    CHECK(mentions(validate(spec), "undeclared role 'l.Nope'"));
  }
  SUBCASE("duplicate type name across kinds") {
    spec.connectors[0].name = "A";
    spec.configuration.instances[1].type_name = "A";
    CHECK(mentions(validate(spec), "duplicate type name 'A'"));
  }
}

TEST_CASE("ports attached nowhere are allowed") {
  Specification spec = parse(kTwoTypes);
  spec.configuration.attachments.clear();
  CHECK(validate(spec).empty());
}

TEST_CASE("equality ignores source positions") {
  Specification a = parse(kTwoTypes);
  Specification b = parse(std::string("\n\n") + kTwoTypes);
  CHECK(a.components[0].span.line != b.components[0].span.line);
  CHECK(a == b);
}

TEST_CASE("event surface forms") {
  CHECK(Event{"pay", Direction::Initiated, "x", "Pay", {}}.to_string() == "Pay.pay!x");
  CHECK(Event{"take", Direction::Initiated, std::nullopt, std::nullopt, {}}.to_string() ==
        "take!");
  CHECK(Event{"pump", Direction::Observed, "x", std::nullopt, {}}.to_string() == "pump?x");
  CHECK(Event{"take", Direction::Observed, std::nullopt, "Oil1", {}}.to_string() ==
        "Oil1.take");
}
