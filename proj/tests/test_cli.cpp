#include "support.hpp"

using namespace opensys;
using opensys::test::q;
using opensys::test::var;

namespace {

const char* kIntro = R"(# A + B -> 2 C, C -> D
network intro
  species A B C D
  reaction alpha: A + B -> 2 C rate 1
  reaction beta: C -> D rate 1
  inputs a1->A a2->A b->B
  outputs d->D
end
compose main = intro
)";

const char* kChain = R"(
network left
  species A
  reaction r: A -> 0 rate 1
  inputs x->A
  outputs y->A
end
network right
  species A
  reaction r: A -> 0 rate 0.25
  inputs y->A
  outputs z->A
end
compose main = left ; right
compose wide = left | left ; right | right
)";

std::size_t error_column(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("the intro network parses") {
    NetworkDocument doc = parse_document(kIntro);
    REQUIRE(doc.networks.size() == 1);
    const OpenNetwork& net = doc.networks[0].network;
    CHECK(net.network.species().size() == 4);
    CHECK(net.network.species().label(2) == "C");
    REQUIRE(net.network.reactions().size() == 2);
    const Reaction& alpha = net.network.reactions()[0];
    CHECK(alpha.name == "alpha");
    CHECK(alpha.input == std::vector<std::uint32_t>{1, 1, 0, 0});
    CHECK(alpha.output == std::vector<std::uint32_t>{0, 0, 2, 0});
    CHECK(net.inputs.table() == std::vector<std::size_t>{0, 0, 1});
    CHECK(net.inputs.dom().label(1) == "a2");
    CHECK(net.outputs.table() == std::vector<std::size_t>{3});
    CHECK(evaluate(doc, "main").apex().size() == 4);
  }

  TEST_CASE("empty documents") {
    NetworkDocument doc = parse_document("");
    CHECK(doc.networks.empty());
    CHECK(doc.compositions.empty());
    CHECK(parse_document("  # only a comment\n\n").networks.empty());
  }

  TEST_CASE("syntax errors carry positions") {
    const std::string bad = "network n\n  species A B\n  reaction r: A + -> B rate 1\nend\n";
    CHECK_THROWS_AS(parse_document(bad), ParseError);
    CHECK(error_column(bad) == 19);
    try {
      parse_document(bad);
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }

  TEST_CASE("semantic errors") {
    CHECK_THROWS_AS(parse_document("network n\n species A\n reaction r: B -> A rate 1\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_document("network n\n species A\n reaction r: A -> 0 rate x\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_document("network n\n species A\n"), ParseError);
    CHECK_THROWS_AS(parse_document("network n\n species A A\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_document("network n\nend\nnetwork n\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_document("network n\n species A\n inputs x->B\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_document("compose m = nowhere\n"), ParseError);
    // Outputs {y} of left do not match inputs {x} of left.
    std::string mismatch = std::string(kChain) + "compose bad = left ; left\n";
    CHECK_THROWS_AS(parse_document(mismatch), ParseError);
  }

  TEST_CASE("rates are exact") {
    NetworkDocument doc = parse_document(kChain);
    CHECK(doc.find_network("right")->network.network.reactions()[0].rate == q(1, 4));
  }

  TEST_CASE("composition merges shared species") {
    NetworkDocument doc = parse_document(kChain);
    OpenSystem main = evaluate(doc, "main");
    CHECK(main.apex().size() == 1);
    CHECK(main.decoration() == PolyVectorField(FinSet(1), {-var(1, 0) * q(5, 4)}));
    CHECK_THROWS_AS(evaluate(doc, "missing"), InvalidValue);
  }

  TEST_CASE("| binds tighter than ;") {
    NetworkDocument doc = parse_document(kChain);
    const Expr& e = doc.find_composition("wide")->expr;
    CHECK(e.kind == Expr::Kind::Sequence);
    CHECK(e.lhs->kind == Expr::Kind::Parallel);
    CHECK(e.rhs->kind == Expr::Kind::Parallel);
  }

  TEST_CASE("pretty-print round trip") {
    for (const char* text : {kIntro, kChain, ""}) {
      NetworkDocument doc = parse_document(text);
      CHECK(same_document(parse_document(pretty_print(doc)), doc));
    }
  }

  TEST_CASE("relation JSON round trip") {
    NetworkDocument doc = parse_document(kIntro);
    ConstraintRelation r = black_box(evaluate(doc, "main"));
    auto j = to_json(r);
    CHECK(j["internal"].size() == 4);
    CHECK(j["linear"] == false);
    CHECK(relation_from_json(j) == r);
    CHECK(relation_from_json_text(j.dump()) == r);
    CHECK_THROWS_AS(relation_from_json_text("{"), FormatError);
    auto broken = j;
    broken["linear"] = true;
    CHECK_THROWS_AS(relation_from_json(broken), FormatError);
  }

  TEST_CASE("decay JSON") {
    ConstraintRelation r = black_box(test::decay_system());
    auto j = to_json(r);
    CHECK(j["internal"].size() == 1);
    CHECK(j["equations"].size() == 3);
    CHECK(j["variables"][4] == "z.A");
    // bp then back is the native relation.
    CHECK(relation_from_json(to_json(to_outflow_convention(to_outflow_convention(r)))) == r);
  }

  TEST_CASE("system dump") {
    OpenSystem main = evaluate(parse_document(kChain), "main");
    std::string text = to_text(main);
    CHECK(text.find("dA/dt = -5/4*c.A") != std::string::npos);
    auto j = to_json(main);
    CHECK(j["species"].size() == 1);
  }

  TEST_CASE("law suite at size 2") {
    for (const auto& r : run_law_suite({2, 1})) CHECK_MESSAGE(r.passed(), (r.name + ": " + r.counterexample));
  }
}
