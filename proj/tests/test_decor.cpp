#include "support.hpp"

using namespace opensys;
using opensys::test::fn;

namespace {

using GraphMorphism = DecoratedMorphism<GraphDecoration>;

const std::shared_ptr<const GraphDecoration>& graphs() {
  static const auto instance = std::make_shared<const GraphDecoration>();
  return instance;
}

GraphMorphism graph(Cospan c, std::vector<EdgeMultiset::Edge> edges) {
  std::size_t n = c.apex().size();
  return GraphMorphism(graphs(), std::move(c), EdgeMultiset(n, std::move(edges)));
}

}  // namespace

TEST_SUITE("decor") {
  TEST_CASE("edge multisets are normalized") {
    CHECK(EdgeMultiset(3, {{2, 0}, {1, 1}}) == EdgeMultiset(3, {{1, 1}, {0, 2}}));
    CHECK_THROWS_AS(EdgeMultiset(2, {{0, 2}}), InvalidValue);
  }

  TEST_CASE("composite of one-edge morphisms carries both edges") {
    GraphMorphism a = graph(Cospan(fn(2, {0, 1}), fn(2, {1})), {{0, 1}});
    GraphMorphism b = graph(Cospan(fn(2, {0}), fn(2, {1})), {{0, 1}});
    GraphMorphism c = decorated_compose(a, b);
    CHECK(c.apex().size() == 3);
    const auto& i = c.cospan().left();
    std::size_t mid = i(1), far = c.cospan().right()(0);
    CHECK(c.decoration() == EdgeMultiset(3, {{i(0), mid}, {mid, far}}));
  }

  TEST_CASE("edges on points dropped by the corelation disappear") {
    // The middle vertex is reached only through the shared foot.
    GraphMorphism a = graph(Cospan(fn(2, {0}), fn(2, {1})), {{0, 1}});
    GraphMorphism b = graph(Cospan(fn(2, {0}), fn(2, {1})), {{0, 1}});
    GraphMorphism c = decorated_compose(a, b);
    CHECK(c.apex().size() == 2);
    CHECK(c.decoration().edges().empty());
  }

  TEST_CASE("identity and empty tensor") {
    GraphMorphism a = graph(Cospan(fn(2, {0, 1}), fn(2, {1})), {{0, 1}, {1, 1}});
    CHECK(decorated_equal(decorated_compose(decorated_identity(graphs(), FinSet(2)), a), a));
    CHECK(decorated_equal(decorated_compose(a, decorated_identity(graphs(), FinSet(1))), a));
    GraphMorphism empty = decorated_identity(graphs(), FinSet(0));
    CHECK(decorated_equal(decorated_tensor(a, empty), a));
    CHECK(decorated_tensor(a, a).decoration().edges().size() == 4);
  }

  TEST_CASE("decorated equality uses the decoration") {
    GraphMorphism a = graph(Cospan(fn(2, {0}), fn(2, {1})), {{0, 1}});
    GraphMorphism b = graph(Cospan(fn(2, {0}), fn(2, {1})), {{0, 0}});
    CHECK_FALSE(decorated_equal(a, b));
    GraphMorphism swapped = graph(Cospan(fn(2, {1}), fn(2, {0})), {{0, 1}});
    CHECK(decorated_equal(a, swapped));
  }

  TEST_CASE("construction checks") {
    CHECK_THROWS_AS(graph(Cospan(fn(2, {0}), fn(2, {0})), {}), InvalidValue);
    CHECK_THROWS_AS(GraphMorphism(graphs(), Cospan(fn(1, {0}), fn(1, {0})), EdgeMultiset(2, {})), InvalidValue);
    auto other = std::make_shared<const GraphDecoration>();
    GraphMorphism a = graph(Cospan(fn(1, {0}), fn(1, {0})), {});
    GraphMorphism b(other, Cospan(fn(1, {0}), fn(1, {0})), EdgeMultiset(1, {}));
    CHECK_THROWS_AS(decorated_compose(a, b), FunctorMismatch);
  }

  TEST_CASE("DecData morphisms") {
    DecDataMorphism<GraphDecoration, GraphDecoration> id(graphs(), graphs(), [](const EdgeMultiset& s) { return s; });
    DecDataMorphism<GraphDecoration, GraphDecoration> twice(graphs(), graphs(), double_edges);
    GraphMorphism a = graph(Cospan(fn(2, {0, 1}), fn(2, {1})), {{0, 1}});
    CHECK(decorated_equal(apply_decdata_morphism(id, a), a));
    auto composite = then(twice, twice);
    CHECK(decorated_equal(apply_decdata_morphism(composite, a),
                          apply_decdata_morphism(twice, apply_decdata_morphism(twice, a))));
    CHECK(apply_decdata_morphism(composite, a).decoration().edges().size() == 4);
    CHECK(m_contained(FactSys::EpiMono, FactSys::IsoAll));
    CHECK_FALSE(m_contained(FactSys::EpiMono, FactSys::AllIso));
  }

  TEST_CASE("decorated laws") {
    RandomObjects rnd(7);
    CHECK(check_graph_decorated_laws(3, 100, rnd).passed());
    CHECK(check_dynam_decorated_laws(3, 100, rnd).passed());
    CHECK(check_decdata_functor(3, 100, rnd).passed());
  }
}

TEST_SUITE("kan") {
  TEST_CASE("kappa") {
    auto x = kappa(*graphs(), FinSet(2), EdgeMultiset(2, {{0, 1}}));
    CHECK(x.e == identity(FinSet(2)));
    CHECK(x.s.edges().size() == 1);
    auto empty = kappa(*graphs(), FinSet(0), graphs()->unit());
    CHECK(empty.e.dom().size() == 0);
    CHECK_THROWS_AS(kappa(*graphs(), FinSet(3), EdgeMultiset(2, {})), SpaceMismatch);
  }

  TEST_CASE("identity cospan acts trivially") {
    LanFunctor<GraphDecoration> lan(graphs());
    auto x = lan_apply(*graphs(), Cospan(fn(2, {0, 1, 1}), fn(2, {0})),
                       kappa(*graphs(), FinSet(3), EdgeMultiset(3, {{0, 2}})));
    CHECK(lan.equal(lan_apply(*graphs(), identity_cospan(FinSet(1)), x), x));
  }

  TEST_CASE("kappa is natural on maps") {
    for (std::size_t n = 0; n <= 3; ++n)
      for (std::size_t m = 1; m <= 3; ++m)
        for (const auto& f : all_functions(n, m)) {
          EdgeMultiset s(n, n >= 2 ? std::vector<EdgeMultiset::Edge>{{0, 1}} : std::vector<EdgeMultiset::Edge>{});
          auto lhs = lan_apply(*graphs(), cospan_of(f), kappa(*graphs(), FinSet(n), s));
          auto rhs = kappa(*graphs(), FinSet(m), push(*graphs(), f, s));
          CHECK(lan_element_equal(*graphs(), lhs, rhs));
        }
  }

  TEST_CASE("Lan elements compose like decorated corelations") {
    GraphMorphism a = graph(Cospan(fn(2, {0, 1}), fn(2, {1})), {{0, 1}});
    GraphMorphism b = graph(Cospan(fn(2, {0}), fn(2, {1})), {{0, 1}});
    auto via_lan = lan_compose(*graphs(), FinSet(2), FinSet(1), FinSet(1), as_lan_element(a), as_lan_element(b));
    CHECK(lan_element_equal(*graphs(), via_lan, as_lan_element(decorated_compose(a, b))));
  }

  TEST_CASE("kan_on_morphism") {
    DecDataMorphism<GraphDecoration, GraphDecoration> twice(graphs(), graphs(), double_edges);
    GraphMorphism a = graph(Cospan(fn(2, {0, 1}), fn(2, {1})), {{0, 1}});
    auto lhs = kan_on_morphism(twice, as_lan_element(a));
    auto rhs = as_lan_element(apply_decdata_morphism(twice, a));
    CHECK(lan_element_equal(*graphs(), lhs, rhs));
  }

  TEST_CASE("oracle suites") {
    RandomObjects rnd(9);
    CHECK(check_lan_functor_laws(3, 50, rnd).passed());
    CHECK(check_kan_oracle_exhaustive(2).passed());
    CHECK(check_kan_oracle_random(3, 100, rnd).passed());
    CHECK(check_kan_morphisms_exhaustive(2).passed());
    CHECK(check_kan_morphisms_random(3, 100, rnd).passed());
  }
}
