#include "support.hpp"

using namespace opensys;
using opensys::test::fn;
using opensys::test::member;
using opensys::test::q;
using opensys::test::var;

namespace {

ConstraintRelation gen(Generator g) { return frob_generator_R2(g); }
ConstraintRelation id1() { return identity_relation(FinSet(1)); }
bool same(const ConstraintRelation& a, const ConstraintRelation& b) { return same_linear_relation(a, b); }

}  // namespace

TEST_SUITE("sarel") {
  TEST_CASE("variable layout and names") {
    ConstraintRelation r = frob_of_cospan(Cospan(fn(1, {0, 0}), fn(1, {0})));
    CHECK(r.variable_count() == 7);
    CHECK(r.variable_name(0) == "cL.0");
    CHECK(r.variable_name(2) == "fL.0");
    CHECK(r.variable_name(4) == "cR.0");
    CHECK(r.variable_name(5) == "fR.0");
    CHECK(r.variable_name(6) == "z.0");
    CHECK(r.find_variable("fR.0") == 5);
    CHECK(r.kind(5) == VariableKind::Flow);
    CHECK(r.kind(6) == VariableKind::Concentration);
    CHECK_THROWS_AS(ConstraintRelation(FinSet(1), FinSet(1), FinSet(0), {var(3, 0)}), DimensionMismatch);
  }

  TEST_CASE("identity relation") {
    CHECK(member(id1(), {q(2), q(3), q(2), q(-3)}) == Membership::Member);
    CHECK(member(id1(), {q(2), q(3), q(2), q(3)}) == Membership::NotMember);
    CHECK(member(id1(), {q(2), q(3), q(1), q(-3)}) == Membership::NotMember);
    CHECK(same(relation_compose(id1(), id1()), id1()));
    CHECK(same(frob_of_cospan(identity_cospan(FinSet(2))), identity_relation(FinSet(2))));
  }

  TEST_CASE("generators in the relational presentation") {
    // Boundary order: cL.0, cL.1, fL.0, fL.1, cR.0, fR.0.
    ConstraintRelation mu = to_outflow_convention(gen(Generator::Mu));
    CHECK(member(mu, {q(2), q(2), q(1), q(3), q(2), q(4)}) == Membership::Member);
    CHECK(member(mu, {q(2), q(2), q(1), q(2), q(2), q(3)}) == Membership::Member);
    CHECK(member(mu, {q(2), q(2), q(1), q(3), q(2), q(5)}) == Membership::NotMember);
    CHECK(member(mu, {q(2), q(1), q(1), q(3), q(2), q(4)}) == Membership::NotMember);

    // eta: flow pinned to 0, concentration free.
    ConstraintRelation eta = gen(Generator::Eta);
    CHECK(member(eta, {q(7), q(0)}) == Membership::Member);
    CHECK(member(eta, {q(7), q(1)}) == Membership::NotMember);
    CHECK(to_outflow_convention(to_outflow_convention(mu)) == mu);
  }

  TEST_CASE("generators are Frob of the generator cospans") {
    for (Generator g : {Generator::Mu, Generator::Eta, Generator::Delta, Generator::Epsilon}) {
      CHECK(same(gen(g), frob_of_cospan(frobenius_generator(g, FinSet(1)))));
    }
  }

  TEST_CASE("special and counit laws") {
    CHECK(same(relation_compose(gen(Generator::Delta), gen(Generator::Mu)), id1()));
    ConstraintRelation counit =
        relation_compose(gen(Generator::Delta), relation_tensor(gen(Generator::Epsilon), id1()));
    CHECK(same(counit, id1()));
  }

  TEST_CASE("Frob of a merge map") {
    // {(b, b), (a0, a1) | (b), (a0 + a1)} up to the flow sign convention.
    ConstraintRelation merge = to_outflow_convention(frob_of_cospan(cospan_of(fn(1, {0, 0}))));
    CHECK(member(merge, {q(5), q(5), q(1), q(2), q(5), q(3)}) == Membership::Member);
    CHECK(member(merge, {q(5), q(4), q(1), q(2), q(5), q(3)}) == Membership::NotMember);
  }

  TEST_CASE("Frobenius law through frob_of_cospan") {
    ConstraintRelation lhs = relation_compose(gen(Generator::Mu), gen(Generator::Delta));
    ConstraintRelation rhs = relation_compose(relation_tensor(id1(), gen(Generator::Delta)),
                                              relation_tensor(gen(Generator::Mu), id1()));
    CHECK(same(lhs, rhs));
    CHECK(check_relation_frobenius().passed());
    CHECK(check_frobenius_relations_of_cospans(2).passed());
  }

  TEST_CASE("composition keeps both equation systems") {
    ConstraintRelation both = relation_compose(id1(), id1());
    // Shared c_Y and f_Y become internals next to both sides' own.
    CHECK(both.equations().size() == 2 * id1().equations().size());
    CHECK(both.internal().size() == 2 + 2 * id1().internal().size());
    CHECK_THROWS_AS(relation_compose(id1(), identity_relation(FinSet(2))), BoundaryMismatch);
  }

  TEST_CASE("elimination") {
    ConstraintRelation r = linear_eliminate(relation_compose(id1(), id1()));
    CHECK(r.internal().size() == 0);
    CHECK(same(r, id1()));
    CHECK(boundary_row_space(r) == boundary_row_space(id1()));
    ConstraintRelation square = steady_state_graph(PolyVectorField(FinSet(1), {var(1, 0) * var(1, 0)}));
    CHECK_THROWS_AS(linear_eliminate(square), NotLinear);
  }

  TEST_CASE("nonlinear membership needs a witness") {
    // {(c, f) | f = c^2} as a relation 1 -> 0.
    ConstraintRelation square = steady_state_graph(PolyVectorField(FinSet(1), {var(1, 0) * var(1, 0)}));
    CHECK(member(square, {q(2), q(4)}) == Membership::Member);
    CHECK(member(square, {q(2), q(5)}) == Membership::NotMember);
    ConstraintRelation hidden = relation_compose(id1(), square);
    std::vector<Rational> boundary{q(2), q(-4)};
    CHECK(is_member(hidden, std::span<const Rational>(boundary)) == Membership::NeedsWitness);
    std::vector<double> fb{2.0, -4.0};
    CHECK(is_member(square, std::span<const double>(std::vector<double>{2.0, 4.0})) == Membership::Member);
    CHECK_THROWS_AS(is_member(square, std::span<const double>(fb).first(1)), DimensionMismatch);
  }

  TEST_CASE("relation laws over generator terms") {
    RandomObjects rnd(6);
    CHECK(check_relation_terms(2, 30, rnd).passed());
    CHECK(check_frob_of_cospan_functor(3, 50, rnd).passed());
  }
}
