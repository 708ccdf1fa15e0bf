#include "support.hpp"

using namespace opensys;
using opensys::test::fn;

namespace {

Cospan gen(Generator g, std::size_t n) { return frobenius_generator(g, FinSet(n)); }

}  // namespace

TEST_SUITE("cospan") {
  TEST_CASE("identity is a unit up to iso") {
    RandomObjects rnd(11);
    for (int k = 0; k < 50; ++k) {
      Cospan c = rnd.cospan(rnd.uniform(0, 3), rnd.uniform(0, 3), 4);
      CHECK(iso_equal(cospan_compose(identity_cospan(c.left_foot()), c), c));
      CHECK(iso_equal(cospan_compose(c, identity_cospan(c.right_foot())), c));
    }
  }

  TEST_CASE("monoid unit law at one wire") {
    Cospan lhs = cospan_compose(monoidal_product(gen(Generator::Eta, 1), identity_cospan(FinSet(1))),
                                gen(Generator::Mu, 1));
    CHECK(iso_equal(lhs, identity_cospan(FinSet(1))));
  }

  TEST_CASE("composite apex from the equivalence closure") {
    // x -> {0,1} <- y with y hitting 1; y -> {0,1} <- z with y hitting 0.
    Cospan a(fn(2, {0}), fn(2, {1}));
    Cospan b(fn(2, {0}), fn(2, {1}));
    Cospan c = cospan_compose(a, b);
    CHECK(c.apex().size() == 3);
    CHECK(c.left()(0) != c.right()(0));
    CHECK_THROWS_AS(cospan_compose(a, Cospan(fn(1, {0, 0}), fn(1, {0}))), FootMismatch);
  }

  TEST_CASE("monoidal product") {
    Cospan a(fn(3, {0, 1}), fn(3, {2}));
    Cospan b(fn(1, {0}), fn(1, {0}));
    CHECK(monoidal_product(a, b).apex().size() == 4);
    CHECK(monoidal_product(a, Cospan()) == a);
  }

  TEST_CASE("category laws") {
    RandomObjects rnd(5);
    CHECK(check_cospan_category(2, 3, 100, rnd).passed());
  }

  TEST_CASE("Frobenius generators") {
    CHECK(gen(Generator::Mu, 1).left() == fn(1, {0, 0}));
    CHECK(gen(Generator::Mu, 1).right() == identity(FinSet(1)));
    CHECK(gen(Generator::Eta, 0) == Cospan(fn(0, {}), fn(0, {})));
    for (std::size_t n = 0; n <= 3; ++n) {
      CHECK(iso_equal(cospan_compose(gen(Generator::Delta, n), gen(Generator::Mu, n)), identity_cospan(FinSet(n))));
    }
    CHECK(check_frobenius_cospans(3).passed());
    CHECK(check_hypergraph_coherence(2).passed());
  }

  TEST_CASE("iso_equal") {
    Cospan id = identity_cospan(FinSet(2));
    CHECK(iso_equal(id, id));
    Cospan relabelled(fn(2, {1, 0}), fn(2, {1, 0}));
    CHECK(iso_equal(id, relabelled));
    Cospan junk(fn(2, {0}), fn(2, {0}));
    Cospan tight(fn(1, {0}), fn(1, {0}));
    CHECK_FALSE(iso_equal(junk, tight));
    CHECK_THROWS_AS(iso_equal(id, identity_cospan(FinSet(1))), FootMismatch);
  }

  TEST_CASE("corelations of a cospan") {
    Cospan junk(fn(3, {0}), fn(3, {0}));
    auto em = to_corelation(junk, FactSys::EpiMono);
    CHECK(em.corelation.apex().size() == 1);
    CHECK(em.witness == fn(3, {0}));

    auto all = to_corelation(junk, FactSys::AllIso);
    CHECK(all.corelation.cospan() == junk);
    CHECK(all.witness == identity(FinSet(3)));

    auto iso = to_corelation(junk, FactSys::IsoAll);
    CHECK(iso.corelation.apex().size() == 2);
    CHECK(iso.witness == fn(3, {0, 0}));

    Cospan tight(fn(2, {0}), fn(2, {1}));
    CHECK(iso_equal(to_corelation(tight, FactSys::EpiMono).corelation.cospan(), tight));
    CHECK_THROWS_AS(Corelation(junk, FactSys::EpiMono), InvalidValue);
  }

  TEST_CASE("corelation composition drops unreached points") {
    Corelation eta(gen(Generator::Eta, 1), FactSys::EpiMono);
    Corelation eps(gen(Generator::Epsilon, 1), FactSys::EpiMono);
    CHECK(cospan_compose(eta.cospan(), eps.cospan()).apex().size() == 1);
    CorelationComposite c = corelation_compose(eta, eps);
    CHECK(c.corelation.apex().size() == 0);
    CHECK(c.witness.cod().size() == 1);
  }

  TEST_CASE("corelation composition keeps points reached from Y only through the feet") {
    // x -> {0,1} <- y,y' with x -> 0, y -> 0, y' -> 1; then y,y' -> {0} <- z.
    Corelation a(Cospan(fn(2, {0}), fn(2, {0, 1})), FactSys::EpiMono);
    Corelation b(Cospan(fn(1, {0, 0}), fn(1, {0})), FactSys::EpiMono);
    CorelationComposite c = corelation_compose(a, b);
    Cospan plain = cospan_compose(a.cospan(), b.cospan());
    CHECK(iso_equal(c.corelation.cospan(), to_corelation(plain, FactSys::EpiMono).corelation.cospan()));
    CHECK(c.corelation.apex().size() == 1);
  }

  TEST_CASE("corelation composition against the cospan oracle") {
    RandomObjects rnd(3);
    for (FactSys s : {FactSys::EpiMono, FactSys::AllIso, FactSys::IsoAll}) {
      CHECK(check_corelation_compose(s, 3, 4, 200, rnd).passed());
    }
    Corelation a = rnd.corelation(FactSys::AllIso, 2, 1, 3), b = rnd.corelation(FactSys::AllIso, 1, 2, 3);
    CHECK(iso_equal(corelation_compose(a, b).corelation.cospan(), cospan_compose(a.cospan(), b.cospan())));
  }
}
