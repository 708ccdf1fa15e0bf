#include "support.hpp"

using namespace opensys;
using opensys::test::fn;

TEST_SUITE("finset") {
  TEST_CASE("identity tables") {
    CHECK(identity(FinSet(0)).table().empty());
    CHECK(identity(FinSet(3)).table() == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("labels are display only") {
    FinSet labelled(std::vector<std::string>{"A", "B"});
    CHECK(labelled == FinSet(2));
    CHECK(labelled.label(1) == "B");
    CHECK(FinSet(2).label(1) == "1");
    CHECK(labelled.find("B") == 1);
    CHECK_THROWS_AS(FinSet(std::vector<std::string>{"A", "A"}), InvalidValue);
  }

  TEST_CASE("function tables are validated") {
    CHECK_THROWS_AS(fn(2, {0, 2}), InvalidValue);
    CHECK_THROWS_AS(FinFunction(FinSet(2), FinSet(3), {0}), InvalidValue);
  }

  TEST_CASE("composition") {
    CHECK(compose(fn(3, {1, 2}), fn(1, {0, 0, 0})) == fn(1, {0, 0}));
    CHECK(compose(fn(2, {0, 1}), fn(2, {1, 0})) == fn(2, {1, 0}));
    CHECK_THROWS_AS(compose(fn(2, {0}), fn(1, {0, 0, 0})), CodomainMismatch);
  }

  TEST_CASE("composition is associative and unital on all small triples") {
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (std::size_t c = 0; c <= 2; ++c)
          for (std::size_t d = 0; d <= 2; ++d)
            for (const auto& f : all_functions(a, b))
              for (const auto& g : all_functions(b, c)) {
                CHECK(compose(identity(FinSet(a)), f) == f);
                for (const auto& h : all_functions(c, d)) {
                  CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
                }
              }
  }

  TEST_CASE("coproduct layout") {
    Coproduct c = coproduct(FinSet(2), FinSet(3));
    CHECK(c.sum.size() == 5);
    CHECK(c.inr.table() == std::vector<std::size_t>{2, 3, 4});
    CHECK(coproduct(FinSet(0), FinSet(3)).inr == identity(FinSet(3)));
  }

  TEST_CASE("copair") {
    CHECK(copair(identity(FinSet(1)), identity(FinSet(1))) == fn(1, {0, 0}));
    CHECK(copair(initial_map(FinSet(2)), fn(2, {1, 0})) == fn(2, {1, 0}));
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (const auto& f : all_functions(a, 2))
          for (const auto& g : all_functions(b, 2)) {
            Coproduct c = coproduct(FinSet(a), FinSet(b));
            CHECK(compose(c.inl, copair(f, g)) == f);
            CHECK(compose(c.inr, copair(f, g)) == g);
          }
    CHECK_THROWS_AS(copair(fn(1, {0}), fn(2, {0})), CodomainMismatch);
  }

  TEST_CASE("coequalizer classes are numbered by least member") {
    CHECK(coequalizer(fn(3, {0, 2}), fn(3, {0, 2})) == identity(FinSet(3)));
    CHECK(coequalizer(fn(2, {0}), fn(2, {1})) == fn(1, {0, 0}));
    CHECK(coequalizer(fn(4, {0, 2}), fn(4, {1, 3})) == fn(2, {0, 0, 1, 1}));
    CHECK(coequalizer(fn(3, {2}), fn(3, {0})) == fn(2, {0, 1, 0}));
  }

  TEST_CASE("pushouts") {
    Pushout empty = pushout(initial_map(FinSet(2)), initial_map(FinSet(1)));
    CHECK(empty.left == coproduct(FinSet(2), FinSet(1)).inl);
    CHECK(empty.right == coproduct(FinSet(2), FinSet(1)).inr);

    Pushout absorb = pushout(identity(FinSet(1)), identity(FinSet(1)));
    CHECK(absorb.left == identity(FinSet(1)));
    CHECK(absorb.right == identity(FinSet(1)));

    Pushout p = pushout(fn(2, {0}), fn(2, {0}));
    CHECK(p.left.cod().size() == 3);
    CHECK(p.left(0) == p.right(0));
    CHECK_THROWS_AS(pushout(fn(2, {0}), fn(2, {0, 1})), DomainMismatch);
  }

  TEST_CASE("epi-mono factorisation") {
    EpiMono constant = epi_mono_factor(fn(3, {0, 0, 0}));
    CHECK(constant.epi == fn(1, {0, 0, 0}));
    CHECK(constant.mono == fn(3, {0}));

    EpiMono injective = epi_mono_factor(fn(4, {2, 0}));
    CHECK(is_iso(injective.epi));
    CHECK(injective.mono == fn(4, {2, 0}));

    for (std::size_t a = 0; a <= 4; ++a)
      for (std::size_t b = 0; b <= 4; ++b)
        for (const auto& f : all_functions(a, b)) {
          EpiMono em = epi_mono_factor(f);
          CHECK(is_epi(em.epi));
          CHECK(is_mono(em.mono));
          CHECK(compose(em.epi, em.mono) == f);
        }
  }

  TEST_CASE("epi, mono, iso") {
    CHECK(is_iso(identity(FinSet(2))));
    CHECK(is_epi(fn(1, {0, 0})));
    CHECK_FALSE(is_mono(fn(1, {0, 0})));
    CHECK(is_mono(fn(2, {1})));
    CHECK_FALSE(is_epi(fn(2, {1})));
    CHECK(inverse(fn(3, {2, 0, 1})) == fn(3, {1, 2, 0}));
    CHECK_THROWS_AS(inverse(fn(1, {0, 0})), InvalidValue);
  }

  TEST_CASE("all_functions counts") {
    CHECK(all_functions(0, 0).size() == 1);
    CHECK(all_functions(2, 0).empty());
    CHECK(all_functions(3, 2).size() == 8);
    CHECK(all_functions(2, 3).front() == fn(3, {0, 0}));
  }

  TEST_CASE("finite-set laws") {
    CHECK(check_pushout_commutes(3).passed());
    CHECK(check_pushout_universal(2, 3).passed());
    CHECK(check_factorisation(2).passed());
    CHECK(check_mono_pushout_stability(3).passed());
    CHECK(check_coequalizer_epi(3).passed());
  }
}
