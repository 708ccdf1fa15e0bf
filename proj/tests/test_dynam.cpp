#include "support.hpp"

using namespace opensys;
using opensys::test::fn;
using opensys::test::q;
using opensys::test::var;

TEST_SUITE("polynomial") {
  TEST_CASE("exact rational parsing") {
    CHECK(parse_rational("3/2") == q(3, 2));
    CHECK(parse_rational("0.25") == q(1, 4));
    CHECK(parse_rational("-3") == q(-3));
    CHECK(parse_rational("+1.5") == q(3, 2));
    CHECK(parse_rational("4/6") == q(2, 3));
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "--1"}) {
      CHECK_THROWS_AS(parse_rational(bad), InvalidValue);
    }
  }

  TEST_CASE("arithmetic keeps no zero terms") {
    Polynomial x = var(2, 0), y = var(2, 1);
    Polynomial p = x * y * q(2) + x;
    CHECK((p - p).is_zero());
    CHECK(p.degree() == 2);
    CHECK_FALSE(p.is_linear());
    CHECK(p.coefficient({1, 1}) == 2);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(p.derivative(0) == y * q(2) + Polynomial::constant(2, 1));
    std::vector<Rational> at{q(3), q(1, 2)};
    CHECK(p.evaluate(std::span<const Rational>(at)) == q(6));
    CHECK_THROWS_AS(x + var(3, 0), DimensionMismatch);
  }

  TEST_CASE("substitution is a ring homomorphism") {
    RandomObjects rnd(2);
    CHECK(check_polynomial_ring(100, rnd).passed());
    Polynomial x = var(1, 0);
    std::vector<Polynomial> images{var(2, 0) + var(2, 1)};
    CHECK((x * x).substitute(images) == (var(2, 0) + var(2, 1)) * (var(2, 0) + var(2, 1)));
  }

  TEST_CASE("compiled evaluation and gradient") {
    Polynomial p = var(2, 0) * var(2, 0) * var(2, 1) * q(3) - var(2, 1);
    CompiledPolynomial c(p);
    std::vector<double> x{2.0, 0.5}, grad(2, 0.0);
    CHECK(c.evaluate(x) == doctest::Approx(5.5));
    c.accumulate_gradient(x, grad);
    CHECK(grad[0] == doctest::Approx(6.0));
    CHECK(grad[1] == doctest::Approx(11.0));
  }
}

TEST_SUITE("dynam") {
  TEST_CASE("mass action") {
    CHECK(mass_action(ReactionNetwork(FinSet(2), {})) == PolyVectorField(FinSet(2)));

    // A + B -> 2 C at rate 2.
    ReactionNetwork abc(FinSet(3), {Reaction{"alpha", {1, 1, 0}, {0, 0, 2}, q(2)}});
    PolyVectorField v = mass_action(abc);
    Polynomial ab = var(3, 0) * var(3, 1);
    CHECK(v[0] == ab * q(-2));
    CHECK(v[1] == ab * q(-2));
    CHECK(v[2] == ab * q(4));

    ReactionNetwork ab1(FinSet(2), {Reaction{"r", {1, 0}, {0, 1}, q(1)}});
    CHECK(mass_action(ab1) == PolyVectorField(FinSet(2), {-var(2, 0), var(2, 0)}));

    CHECK_THROWS_AS(ReactionNetwork(FinSet(1), {Reaction{"r", {1}, {0}, q(0)}}), InvalidValue);
    CHECK_THROWS_AS(ReactionNetwork(FinSet(2), {Reaction{"r", {1}, {0}, q(1)}}), InvalidValue);
  }

  TEST_CASE("pushforward") {
    PolyVectorField v(FinSet(2), {Polynomial::constant(2, 1), Polynomial::constant(2, 2)});
    CHECK(pushforward_field(identity(FinSet(2)), v) == v);
    CHECK(pushforward_field(fn(1, {0, 0}), v) == PolyVectorField(FinSet(1), {Polynomial::constant(1, 3)}));

    PolyVectorField decay2(FinSet(2), {-var(2, 0), -var(2, 1)});
    CHECK(pushforward_field(fn(1, {0, 0}), decay2) == PolyVectorField(FinSet(1), {-var(1, 0) * q(2)}));

    // Species that nothing maps onto get the zero component.
    CHECK(pushforward_field(fn(2, {1}), PolyVectorField(FinSet(1), {var(1, 0)})) ==
          PolyVectorField(FinSet(2), {Polynomial(2), var(2, 1)}));
    CHECK_THROWS_AS(pushforward_field(fn(1, {0}), v), SpaceMismatch);
  }

  TEST_CASE("composing decay systems adds their fields") {
    OpenSystem d = test::decay_system();
    OpenSystem twice = decorated_compose(d, d);
    CHECK(twice.apex().size() == 1);
    CHECK(twice.decoration() == PolyVectorField(FinSet(1), {-var(1, 0) * q(2)}));
  }

  TEST_CASE("tensor is block sum and identities transport trivially") {
    OpenSystem d = test::decay_system();
    OpenSystem both = decorated_tensor(d, d);
    CHECK(both.decoration() == PolyVectorField(FinSet(2), {-var(2, 0), -var(2, 1)}));
    CHECK(dynam_functor()->transport(identity_cospan(FinSet(1)), d.decoration()) == d.decoration());
  }

  TEST_CASE("open networks") {
    ReactionNetwork net(FinSet(2), {Reaction{"r", {1, 0}, {0, 1}, q(1)}});
    OpenSystem sys = open_network_to_morphism(OpenNetwork{net, fn(2, {0}), fn(2, {1})});
    CHECK(sys.cospan().left() == fn(2, {0}));
    CHECK(sys.decoration() == mass_action(net));
  }

  TEST_CASE("functor laws") {
    RandomObjects rnd(4);
    CHECK(check_dynam_functoriality(2).passed());
    CHECK(check_laxator_naturality(3, 100, rnd).passed());
  }
}
