#include <random>

#include "support.hpp"

using namespace opensys;
using opensys::test::fn;
using opensys::test::member;
using opensys::test::q;
using opensys::test::var;

namespace {

OpenSystem system_of(Cospan c, std::vector<Polynomial> field) {
  FinSet apex = c.apex();
  return OpenSystem(dynam_functor(), std::move(c), PolyVectorField(apex, std::move(field)));
}

std::size_t index(const ConstraintRelation& r, const std::string& name) { return *r.find_variable(name); }

}  // namespace

TEST_SUITE("blackbox") {
  TEST_CASE("steady-state graphs") {
    ConstraintRelation zero = steady_state_graph(PolyVectorField(FinSet(1)));
    CHECK(member(zero, {q(5), q(0)}) == Membership::Member);
    CHECK(member(zero, {q(5), q(1)}) == Membership::NotMember);

    ConstraintRelation square = steady_state_graph(PolyVectorField(FinSet(1), {var(1, 0) * var(1, 0)}));
    CHECK(member(square, {q(2), q(4)}) == Membership::Member);

    // v = A c with A = [[1, 2], [0, -1]].
    PolyVectorField v(FinSet(2), {var(2, 0) + var(2, 1) * q(2), -var(2, 1)});
    ConstraintRelation g = steady_state_graph(v);
    CHECK(member(g, {q(1), q(1), q(3), q(-1)}) == Membership::Member);
    CHECK(member(g, {q(1), q(1), q(3), q(1)}) == Membership::NotMember);
  }

  TEST_CASE("decay black box") {
    OpenSystem d = test::decay_system();
    ConstraintRelation r = black_box(d);
    CHECK(r.internal().size() == 1);
    const std::size_t n = r.variable_count();
    Polynomial c = var(n, 0), i = var(n, 1), c2 = var(n, 2), o = var(n, 3), z = var(n, 4);
    CHECK(r.equations() == std::vector<Polynomial>{c - z, c2 - z, -z - i - o});
    CHECK(member(r, {q(2), q(-1), q(2), q(-1)}) == Membership::Member);
    CHECK(member(r, {q(2), q(1), q(2), q(-3)}) == Membership::Member);
    CHECK(member(r, {q(2), q(1), q(2), q(1)}) == Membership::NotMember);
    CHECK(same_linear_relation(black_box_via_decorations(d), r));

    ConstraintRelation bp = to_outflow_convention(r);
    CHECK(bp.equations() == std::vector<Polynomial>{c - z, c2 - z, -z + i - o});
    CHECK(to_outflow_convention(bp) == r);
  }

  TEST_CASE("empty boundary and zero field") {
    OpenSystem nothing = system_of(Cospan(fn(0, {}), fn(0, {})), {});
    ConstraintRelation r = black_box(nothing);
    CHECK(r.variable_count() == 0);
    CHECK(member(r, {}) == Membership::Member);
  }

  TEST_CASE("the two routes agree") {
    RandomObjects rnd(12);
    CHECK(check_blackbox_structure(3, 30, rnd).passed());
    OpenSystem m = rnd.mass_action_system(2, 1, 3);
    CHECK(black_box_via_decorations(m).equations().size() > 0);
  }

  TEST_CASE("black box preserves composition") {
    OpenSystem d = test::decay_system();
    FunctorialityReport linear = check_functoriality(d, d);
    CHECK(linear.passed);
    CHECK(linear.exact);

    OpenSystem id = decorated_identity(dynam_functor(), FinSet(1));
    CHECK(same_linear_relation(black_box(decorated_compose(id, d)), black_box(d)));

    // A -> B then B -> C, split at B.
    OpenSystem ab = system_of(Cospan(fn(2, {0}), fn(2, {1})), {-var(2, 0), var(2, 0)});
    OpenSystem bc = system_of(Cospan(fn(2, {0}), fn(2, {1})), {-var(2, 0), var(2, 0)});
    CHECK(check_functoriality(ab, bc).exact);

    // Second-order chain 2A -> B, B + B -> C so the check samples.
    OpenSystem a2b = system_of(Cospan(fn(2, {0}), fn(2, {1})), {var(2, 0) * var(2, 0) * q(-2), var(2, 0) * var(2, 0)});
    OpenSystem b2c = system_of(Cospan(fn(2, {0}), fn(2, {1})), {var(2, 0) * var(2, 0) * q(-2), var(2, 0) * var(2, 0)});
    FunctorialityReport sampled = check_functoriality(a2b, b2c);
    CHECK_MESSAGE(sampled.passed, sampled.detail);
    CHECK_FALSE(sampled.exact);
    CHECK(sampled.samples_checked == 50);

    RandomObjects rnd(13);
    CHECK(check_blackbox_linear(30, rnd).passed());
    CHECK(check_blackbox_mass_action(5, 10, 1e-9, rnd).passed());
    CHECK(check_alpha_naturality_linear(2, 1, 20, rnd).passed());
    CHECK(check_alpha_naturality_sampled(5, 10, 1e-9, rnd).passed());
  }

  TEST_CASE("alpha is the decoration-level black box") {
    OpenSystem d = test::decay_system();
    RelationMorphism r = apply_decdata_morphism(black_box_morphism(), d);
    CHECK(r.apex().size() == 2);
    CHECK(same_linear_relation(relation_of(r), black_box(d)));
  }
}

TEST_SUITE("solver") {
  TEST_CASE("decay with fixed flows") {
    ConstraintRelation r = black_box(test::decay_system());
    SolveResult s = solve_steady_states(r, {{index(r, "fL.x"), q(1)}, {index(r, "fR.y"), q(-1)}});
    CHECK(s.exact);
    CHECK(s.basis.empty());
    CHECK(s.particular[index(r, "cL.x")] == 0);
    CHECK(s.particular[index(r, "z.A")] == 0);

    // -c_A = 1 + 0 forces a negative concentration.
    SolveResult neg = solve_steady_states(r, {{index(r, "fL.x"), q(1)}, {index(r, "fR.y"), q(0)}});
    CHECK(neg.particular[index(r, "z.A")] == -1);

    CHECK_THROWS_AS(solve_steady_states(r, {{index(r, "cL.x"), q(1)}, {index(r, "cR.y"), q(2)}}), InconsistentFixing);
  }

  TEST_CASE("A -> B with both species on the boundary") {
    OpenSystem ab = system_of(Cospan(fn(2, {0}), fn(2, {1})), {-var(2, 0), var(2, 0)});
    ConstraintRelation r = black_box(ab);
    SolveResult s = solve_steady_states(r, {{index(r, "fL.0"), q(-1)}, {index(r, "fR.0"), q(1)}});
    CHECK(s.particular[index(r, "z.0")] == 1);
    REQUIRE(s.basis.size() == 1);
    CHECK(s.basis[0][index(r, "z.1")] != 0);
    CHECK(s.basis[0][index(r, "z.0")] == 0);
  }

  TEST_CASE("zero field with zero flows leaves concentrations free") {
    OpenSystem still = system_of(Cospan(fn(1, {0}), fn(1, {0})), {Polynomial(1)});
    ConstraintRelation r = black_box(still);
    SolveResult s = solve_steady_states(r, {{index(r, "fL.0"), q(0)}, {index(r, "fR.0"), q(0)}});
    CHECK(s.basis.size() == 1);
  }

  TEST_CASE("nonlinear solves") {
    ConstraintRelation square = steady_state_graph(PolyVectorField(FinSet(1), {var(1, 0) * var(1, 0)}));
    SolveResult s = solve_steady_states(square, {{1, q(4)}});
    CHECK_FALSE(s.exact);
    REQUIRE(s.witnesses.size() == 1);
    CHECK(s.witnesses[0].values[0] == doctest::Approx(2.0).epsilon(1e-12));

    SolveOptions options;
    options.seeds = {{-1.0, 0.0}};
    options.require_nonnegative_concentrations = false;
    SolveResult negative = solve_steady_states(square, {{1, q(4)}}, options);
    CHECK(negative.witnesses.at(0).values[0] == doctest::Approx(-2.0).epsilon(1e-12));

    CHECK_THROWS_AS(solve_steady_states(square, {{1, q(-1)}}), NoConvergence);
  }

  TEST_CASE("sampled witnesses are members") {
    std::mt19937_64 rng(3);
    OpenSystem a2b = system_of(Cospan(fn(2, {0}), fn(2, {1})), {var(2, 0) * var(2, 0) * q(-2), var(2, 0) * var(2, 0)});
    ConstraintRelation r = black_box(a2b);
    for (int k = 0; k < 10; ++k) {
      auto w = sample_witness(r, rng);
      REQUIRE(w);
      CHECK(max_residual(r, w->values) <= 1e-9);
      std::span<const double> all(w->values);
      CHECK(is_member(r, all.first(r.boundary_variable_count()), all.subspan(r.boundary_variable_count())) ==
            Membership::Member);
    }
    RandomObjects rnd(14);
    CHECK(check_solver_witnesses(10, rnd).passed());
  }
}
