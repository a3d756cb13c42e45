#include <doctest.h>

#include "archslice/flow.hpp"
#include "archslice/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generator.hpp"
#include "support/oracles.hpp"

using namespace archslice;

namespace {

std::vector<std::string> surface(const EventPath& path) {
  std::vector<std::string> out;
  for (const auto& ev : path.events) out.push_back(ev.to_string());
  return out;
}

using Flows = std::set<InternalFlow>;

}  // namespace

TEST_CASE("paths of the cashier computation") {
  auto spec = testing::gas_station();
  auto paths = enumerate_paths(spec.find_component("Cashier")->computation);
  REQUIRE(paths.size() == 2);
  CHECK(surface(paths[0]) == std::vector<std::string>{"Customer1.pay?x", "Topump.pump!x"});
  CHECK(surface(paths[1]) == std::vector<std::string>{"Customer2.pay?x", "Topump.pump!x"});
  CHECK(paths[0].terminator == EventPath::End::Recurse);
}

TEST_CASE("paths of the pump computation") {
  auto spec = testing::gas_station();
  auto paths = enumerate_paths(spec.find_component("Pump")->computation);
  REQUIRE(paths.size() == 2);
  CHECK(surface(paths[0]) ==
        std::vector<std::string>{"Fromcashier.pump?x", "Oil1.take", "Oil1.pump!x"});
  CHECK(surface(paths[1]) ==
        std::vector<std::string>{"Fromcashier.pump?x", "Oil2.take", "Oil2.pump!x"});
}

TEST_CASE("STOP has one empty path") {
  auto paths = enumerate_paths(ProcessExpr::stop());
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].events.empty());
  CHECK(paths[0].terminator == EventPath::End::Stop);
}

TEST_CASE("unqualified events are rejected") {
  auto p = ProcessExpr::prefix(Event{"take", Direction::Observed, {}, {}, {}},
                               ProcessExpr::stop());
  CHECK_THROWS_WITH_AS(enumerate_paths(p), "unqualified event 'take' in a Computation/Glue process",
                       AnalysisError);
}

TEST_CASE("direction classes from the fixture") {
  auto spec = testing::gas_station();
  const auto& customer = *spec.find_component("Customer");
  const auto& cashier = *spec.find_component("Cashier");
  const auto& pump = *spec.find_component("Pump");
  const auto& customer_pump = *spec.find_connector("Customer_Pump");

  CHECK(classify_element(customer, "Pay") == DirectionClass{false, true});
  CHECK(classify_element(customer, "Gas") == DirectionClass{true, true});
  CHECK(classify_element(cashier, "Customer1") == DirectionClass{true, false});
  CHECK(classify_element(cashier, "Topump") == DirectionClass{false, true});
  CHECK(classify_element(pump, "Fromcashier") == DirectionClass{true, false});
  CHECK(classify_element(pump, "Oil2") == DirectionClass{true, true});
  CHECK(classify_element(customer_pump, "Getoil") == DirectionClass{true, true});
  CHECK(classify_element(*spec.find_connector("Cashier_Pump"), "Know") ==
        DirectionClass{false, true});
  CHECK_THROWS_AS(classify_element(cashier, "Nope"), AnalysisError);
}

TEST_CASE("elements absent from the body fall back to their own behavior") {
  auto spec = parse(
      "Configuration X Component C "
      "Port Used = a -> Used "
      "Port Idle = ping! -> Idle "
      "Computation = Used.a -> Computation End X.");
  const auto& c = spec.components[0];
  CHECK(classify_element(c, "Idle") == DirectionClass{false, true});
  auto warnings = flow_warnings(c);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].severity == Severity::Warning);
  CHECK(warnings[0].message.find("C.Idle") != std::string::npos);
}

TEST_CASE("internal flows from the fixture") {
  auto spec = testing::gas_station();
  CHECK(internal_flows(*spec.find_component("Pump")) ==
        Flows{{"Fromcashier", "Oil1"}, {"Fromcashier", "Oil2"}});
  CHECK(internal_flows(*spec.find_connector("Customer_Cashier")) ==
        Flows{{"Givemoney", "Getmoney"}});
  CHECK(internal_flows(*spec.find_component("Cashier")) ==
        Flows{{"Customer1", "Topump"}, {"Customer2", "Topump"}});
  // Pay.pay!x, Gas.take!, Gas.pump?x: the only observed event is last.
  CHECK(internal_flows(*spec.find_component("Customer")).empty());
  CHECK(internal_flows(*spec.find_connector("Customer_Pump")) ==
        Flows{{"Getoil", "Giveoil"}, {"Giveoil", "Getoil"}});
  CHECK(internal_flows(*spec.find_connector("Cashier_Pump")) == Flows{{"Tell", "Know"}});
}

TEST_CASE("flows never wrap around recursion") {
  // Within one unfolding the observed event comes after the initiated one.
  auto spec = parse(
      "Configuration X Component C Port A = a! -> A Port B = b -> B "
      "Computation = A.a! -> B.b -> Computation End X.");
  CHECK(internal_flows(spec.components[0]).empty());
}

TEST_CASE("flow set agrees with the tree-descendant oracle") {
  testing::SpecGenerator gen(7);
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    auto elements = std::vector<Element>{{"p0", {}, {}}, {"p1", {}, {}}, {"p2", {}, {}}};
    ProcessExpr body = gen.body(elements, kComputationName, 2);
    if (body.event_count() > 8) continue;
    ComponentType type{"T", elements, body, {}};
    CAPTURE(render(body));
    CHECK(internal_flows(type) == testing::descendant_flows(body));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("adding a choice branch never removes flows") {
  testing::SpecGenerator gen(11);
  auto elements = std::vector<Element>{{"p0", {}, {}}, {"p1", {}, {}}, {"p2", {}, {}}};
  for (int round = 0; round < 200; ++round) {
    ProcessExpr body = gen.body(elements, kComputationName, 2);
    ProcessExpr extra = gen.body(elements, kComputationName, 1);
    ProcessExpr widened = ProcessExpr::choice({body, extra});
    auto before = internal_flows(ComponentType{"T", elements, body, {}});
    auto after = internal_flows(ComponentType{"T", elements, widened, {}});
    CAPTURE(render(widened));
    CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}

TEST_CASE("flows are consistent with direction classes") {
  testing::SpecGenerator gen(13);
  for (int round = 0; round < 50; ++round) {
    auto spec = gen.next();
    for (const auto& c : spec.components) {
      for (const auto& f : internal_flows(c)) {
        CHECK(f.source != f.target);
        CHECK(c.find_port(f.source));
        CHECK(c.find_port(f.target));
        CHECK(classify_element(c, f.source).input_capable);
        CHECK(classify_element(c, f.target).output_capable);
      }
    }
    for (const auto& c : spec.connectors) {
      for (const auto& f : internal_flows(c)) {
        CHECK(classify_element(c, f.source).input_capable);
        CHECK(classify_element(c, f.target).output_capable);
      }
    }
  }
}
