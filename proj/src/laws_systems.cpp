#include <cmath>
#include <functional>

#include "opensys/laws.hpp"
#include "opensys/solver.hpp"

namespace opensys {

namespace {

std::string describe(const PolyVectorField& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.dimension(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + ")";
}

Polynomial random_polynomial(RandomObjects& gen, std::size_t n, std::size_t max_terms, std::uint32_t max_degree) {
  Polynomial p(n);
  std::size_t terms = gen.uniform(0, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    if (n > 0) {
      auto degree = static_cast<std::uint32_t>(gen.uniform(0, max_degree));
      for (std::uint32_t d = 0; d < degree; ++d) e[gen.uniform(0, n - 1)] += 1;
    }
    Rational c(static_cast<long>(gen.uniform(0, 6)) - 3, static_cast<long>(gen.uniform(1, 3)));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

// All exponent vectors over n variables of total degree <= max_degree.
std::vector<Exponents> monomials(std::size_t n, std::uint32_t max_degree) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  std::function<void(std::size_t, std::uint32_t)> go = [&](std::size_t k, std::uint32_t left) {
    if (k == n) {
      out.push_back(e);
      return;
    }
    for (std::uint32_t p = 0; p <= left; ++p) {
      e[k] = p;
      go(k + 1, left - p);
    }
    e[k] = 0;
  };
  go(0, max_degree);
  return out;
}

// Every field on n species with at most two (component, monomial) terms of
// coefficient 1 and degree <= 2.
std::vector<PolyVectorField> small_fields(std::size_t n) {
  FinSet space(n);
  std::vector<std::pair<std::size_t, Exponents>> atoms;
  for (std::size_t comp = 0; comp < n; ++comp) {
    for (const auto& m : monomials(n, 2)) atoms.emplace_back(comp, m);
  }
  std::vector<PolyVectorField> out{PolyVectorField(space)};
  auto build = [&](std::initializer_list<std::size_t> picks) {
    std::vector<Polynomial> comps(n, Polynomial(n));
    for (std::size_t k : picks) comps[atoms[k].first].add_term(atoms[k].second, 1);
    return PolyVectorField(space, std::move(comps));
  };
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    out.push_back(build({a}));
    for (std::size_t b = a + 1; b < atoms.size(); ++b) out.push_back(build({a, b}));
  }
  return out;
}

ConstraintRelation rseq(const ConstraintRelation& a, const ConstraintRelation& b) { return relation_compose(a, b); }
ConstraintRelation rpar(const ConstraintRelation& a, const ConstraintRelation& b) { return relation_tensor(a, b); }
bool same(const ConstraintRelation& a, const ConstraintRelation& b) { return same_linear_relation(a, b); }

ConstraintRelation swap_relation() {
  // (c0, c1 | c1, c0) with flows summing to zero across the crossing.
  const std::size_t n = 8;
  auto v = [](std::size_t k) { return Polynomial::variable(n, k); };
  // cL0 cL1 fL0 fL1 cR0 cR1 fR0 fR1
  return ConstraintRelation(FinSet(2), FinSet(2), FinSet(0),
                            {v(0) - v(5), v(1) - v(4), v(2) + v(7), v(3) + v(6)});
}

struct Term {
  Cospan cospan;
  ConstraintRelation relation;
  std::string text;
  std::size_t in() const { return cospan.left_foot().size(); }
  std::size_t out() const { return cospan.right_foot().size(); }
};

Term term_seq(const Term& a, const Term& b) {
  return {cospan_compose(a.cospan, b.cospan), rseq(a.relation, b.relation), "(" + a.text + " ; " + b.text + ")"};
}

Term term_par(const Term& a, const Term& b) {
  return {monoidal_product(a.cospan, b.cospan), rpar(a.relation, b.relation), "(" + a.text + " | " + b.text + ")"};
}

std::vector<Term> generator_terms() {
  FinSet one(1);
  std::vector<Term> out;
  for (Generator g : {Generator::Mu, Generator::Eta, Generator::Delta, Generator::Epsilon}) {
    out.push_back({frobenius_generator(g, one), frob_generator_R2(g), std::string(to_string(g))});
  }
  out.push_back({identity_cospan(one), identity_relation(one), "id"});
  out.push_back({swap_cospan(one, one), swap_relation(), "swap"});
  return out;
}

// A layer of generators side by side consuming exactly `in` wires.
Term random_layer(RandomObjects& gen, std::size_t in) {
  static const std::vector<Term> gens = generator_terms();
  if (in == 0) return gens[1];  // eta
  std::optional<Term> layer;
  for (std::size_t left = in; left > 0;) {
    std::vector<const Term*> fits;
    for (const auto& g : gens) {
      if (g.in() >= 1 && g.in() <= left) fits.push_back(&g);
    }
    const Term& pick = *fits[gen.uniform(0, fits.size() - 1)];
    layer = layer ? term_par(*layer, pick) : pick;
    left -= pick.in();
  }
  return *layer;
}

Term random_term(RandomObjects& gen, std::size_t depth) {
  static const std::vector<Term> gens = generator_terms();
  if (depth == 0) return gens[gen.uniform(0, gens.size() - 1)];
  Term a = random_term(gen, depth - 1);
  if (gen.coin() && a.out() + a.in() <= 4) return term_par(a, random_term(gen, depth - 1));
  return term_seq(a, random_layer(gen, a.out()));
}

}  // namespace

LawReport check_polynomial_ring(std::size_t cases, RandomObjects& gen) {
  LawReport r{"exact polynomial arithmetic"};
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t n = gen.uniform(0, 3), m = gen.uniform(0, 3);
    Polynomial p = random_polynomial(gen, n, 4, 3), q = random_polynomial(gen, n, 4, 3);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(random_polynomial(gen, m, 3, 2));
    const std::string what = "p = " + p.to_string() + ", q = " + q.to_string();
    r.record((p + q) - q == p, "(p + q) - q at " + what);
    r.record(p * q == q * p, "p q = q p at " + what);
    if (n > 0) {
      r.record((p + q).substitute(images) == p.substitute(images) + q.substitute(images), "substitution of a sum at " + what);
      r.record((p * q).substitute(images) == p.substitute(images) * q.substitute(images),
               "substitution of a product at " + what);
    }
  }
  return r;
}

LawReport check_dynam_functoriality(std::size_t max_species) {
  LawReport r{"D is a functor"};
  for (std::size_t a = 0; a <= max_species; ++a) {
    auto fields = small_fields(a);
    for (const auto& v : fields) {
      r.record(pushforward_field(identity(FinSet(a)), v) == v, "identity at " + describe(v));
    }
    for (std::size_t b = 0; b <= max_species; ++b) {
      for (const auto& f : all_functions(a, b)) {
        std::vector<PolyVectorField> pushed;
        pushed.reserve(fields.size());
        for (const auto& v : fields) pushed.push_back(pushforward_field(f, v));
        for (std::size_t c = 0; c <= max_species; ++c) {
          for (const auto& g : all_functions(b, c)) {
            FinFunction gf = compose(f, g);
            for (std::size_t k = 0; k < fields.size(); ++k) {
              bool ok = pushforward_field(gf, fields[k]) == pushforward_field(g, pushed[k]);
              r.check(ok, [&] { return "f = " + describe(f) + ", g = " + describe(g) + ", v = " + describe(fields[k]); });
            }
          }
        }
      }
    }
  }
  return r;
}

LawReport check_laxator_naturality(std::size_t max_size, std::size_t cases, RandomObjects& gen) {
  LawReport r{"block sum is natural"};
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t a = gen.uniform(0, max_size), b = gen.uniform(a == 0 ? 0 : 1, max_size), c = gen.uniform(0, max_size),
                d = gen.uniform(c == 0 ? 0 : 1, max_size);
    FinFunction f = gen.function(a, b), g = gen.function(c, d);
    PolyVectorField v = gen.field(FinSet(a), 3, 2), w = gen.field(FinSet(c), 3, 2);
    r.record(pushforward_field(coproduct_map(f, g), block_sum(v, w)) ==
                 block_sum(pushforward_field(f, v), pushforward_field(g, w)),
             "f = " + describe(f) + ", g = " + describe(g) + ", v = " + describe(v) + ", w = " + describe(w));
  }
  return r;
}

LawReport check_relation_frobenius() {
  LawReport r{"Frobenius axioms for R (+) R"};
  FinSet one(1);
  ConstraintRelation id = identity_relation(one), mu = frob_generator_R2(Generator::Mu),
                     eta = frob_generator_R2(Generator::Eta), delta = frob_generator_R2(Generator::Delta),
                     eps = frob_generator_R2(Generator::Epsilon), swap = swap_relation();
  r.record(same(rseq(rpar(mu, id), mu), rseq(rpar(id, mu), mu)), "associativity");
  r.record(same(rseq(rpar(eta, id), mu), id) && same(rseq(rpar(id, eta), mu), id), "unit");
  r.record(same(rseq(delta, rpar(delta, id)), rseq(delta, rpar(id, delta))), "coassociativity");
  r.record(same(rseq(delta, rpar(eps, id)), id) && same(rseq(delta, rpar(id, eps)), id), "counit");
  r.record(same(rseq(swap, mu), mu), "commutativity");
  r.record(same(rseq(delta, swap), delta), "cocommutativity");
  ConstraintRelation middle = rseq(mu, delta);
  r.record(same(rseq(rpar(delta, id), rpar(id, mu)), middle) && same(rseq(rpar(id, delta), rpar(mu, id)), middle),
           "Frobenius law");
  r.record(same(rseq(delta, mu), id), "special law");
  r.record(same(swap, frob_of_cospan(swap_cospan(one, one))), "swap is Frob of the symmetry");
  for (Generator g : {Generator::Mu, Generator::Eta, Generator::Delta, Generator::Epsilon}) {
    r.record(same(frob_generator_R2(g), frob_of_cospan(frobenius_generator(g, one))),
             std::string(to_string(g)) + " is Frob of the generator cospan");
  }
  return r;
}

LawReport check_frobenius_relations_of_cospans(std::size_t max_size) {
  LawReport r{"Frobenius axioms for Frob of generator cospans"};
  for (std::size_t n = 0; n <= max_size; ++n) {
    FinSet x(n);
    auto g = [&](Generator which) { return frob_of_cospan(frobenius_generator(which, x)); };
    ConstraintRelation id = identity_relation(x), mu = g(Generator::Mu), eta = g(Generator::Eta),
                       delta = g(Generator::Delta), eps = g(Generator::Epsilon),
                       swap = frob_of_cospan(swap_cospan(x, x));
    const std::string at = " at |X| = " + std::to_string(n);
    r.record(same(rseq(rpar(mu, id), mu), rseq(rpar(id, mu), mu)), "associativity" + at);
    r.record(same(rseq(rpar(eta, id), mu), id) && same(rseq(rpar(id, eta), mu), id), "unit" + at);
    r.record(same(rseq(delta, rpar(delta, id)), rseq(delta, rpar(id, delta))), "coassociativity" + at);
    r.record(same(rseq(delta, rpar(eps, id)), id) && same(rseq(delta, rpar(id, eps)), id), "counit" + at);
    r.record(same(rseq(swap, mu), mu), "commutativity" + at);
    r.record(same(rseq(delta, swap), delta), "cocommutativity" + at);
    ConstraintRelation middle = rseq(mu, delta);
    r.record(same(rseq(rpar(delta, id), rpar(id, mu)), middle) && same(rseq(rpar(id, delta), rpar(mu, id)), middle),
             "Frobenius law" + at);
    r.record(same(rseq(delta, mu), id), "special law" + at);
  }
  return r;
}

LawReport check_relation_terms(std::size_t depth, std::size_t deep_cases, RandomObjects& gen) {
  LawReport r{"relation category laws over generator terms"};
  auto gens = generator_terms();
  // by_count[k]: every term with exactly k generator leaves.
  std::vector<std::vector<Term>> by_count(std::max<std::size_t>(depth, 1) + 1);
  by_count[1] = gens;
  for (std::size_t k = 2; k < by_count.size(); ++k) {
    for (std::size_t i = 1; i < k; ++i) {
      for (const auto& a : by_count[i]) {
        for (const auto& b : by_count[k - i]) {
          by_count[k].push_back(term_par(a, b));
          if (a.out() == b.in()) by_count[k].push_back(term_seq(a, b));
        }
      }
    }
  }
  auto check_term = [&](const Term& t) {
    r.record(same(frob_of_cospan(t.cospan), t.relation), "Frob of the cospan of " + t.text);
    r.record(same(rseq(identity_relation(FinSet(t.in())), t.relation), t.relation) &&
                 same(rseq(t.relation, identity_relation(FinSet(t.out()))), t.relation),
             "unit laws at " + t.text);
  };
  for (const auto& level : by_count) {
    for (const auto& t : level) check_term(t);
  }
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      for (const auto& c : gens) {
        r.record(same(rpar(rpar(a.relation, b.relation), c.relation), rpar(a.relation, rpar(b.relation, c.relation))),
                 "tensor associativity at " + a.text + " | " + b.text + " | " + c.text);
        if (a.out() != b.in() || b.out() != c.in()) continue;
        r.record(same(rseq(rseq(a.relation, b.relation), c.relation), rseq(a.relation, rseq(b.relation, c.relation))),
                 "associativity at " + a.text + " ; " + b.text + " ; " + c.text);
      }
      for (const auto& c : gens) {
        if (a.out() != c.in()) continue;
        for (const auto& d : gens) {
          if (b.out() != d.in()) continue;
          r.record(same(rseq(rpar(a.relation, b.relation), rpar(c.relation, d.relation)),
                        rpar(rseq(a.relation, c.relation), rseq(b.relation, d.relation))),
                   "interchange at " + a.text + ", " + b.text + ", " + c.text + ", " + d.text);
        }
      }
    }
  }
  for (std::size_t k = 0; k < deep_cases; ++k) {
    Term t = random_term(gen, depth);
    check_term(t);
    Term l1 = random_layer(gen, t.out());
    Term l2 = random_layer(gen, l1.out());
    r.record(same(rseq(rseq(t.relation, l1.relation), l2.relation), rseq(t.relation, rseq(l1.relation, l2.relation))),
             "associativity at " + t.text + " ; " + l1.text + " ; " + l2.text);
  }
  return r;
}

LawReport check_frob_of_cospan_functor(std::size_t max_size, std::size_t cases, RandomObjects& gen) {
  LawReport r{"Frob is a monoidal functor on cospans"};
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t x = gen.uniform(0, max_size), y = gen.uniform(0, max_size), z = gen.uniform(0, max_size);
    Cospan a = gen.cospan(x, y, max_size), b = gen.cospan(y, z, max_size), c = gen.cospan(z, x, max_size);
    r.record(same(frob_of_cospan(cospan_compose(a, b)), rseq(frob_of_cospan(a), frob_of_cospan(b))),
             "composition at " + describe(a) + " ; " + describe(b));
    r.record(same(frob_of_cospan(monoidal_product(a, c)), rpar(frob_of_cospan(a), frob_of_cospan(c))),
             "tensor at " + describe(a) + " | " + describe(c));
  }
  for (std::size_t n = 0; n <= max_size; ++n) {
    r.record(same(frob_of_cospan(identity_cospan(FinSet(n))), identity_relation(FinSet(n))),
             "identity at |X| = " + std::to_string(n));
  }
  return r;
}

namespace {

const SarelDecoration& sarel() { return *sarel_functor(); }

ConstraintRelation transported_graph(const FinFunction& f, const PolyVectorField& v) {
  return sarel().transport(cospan_of(f), steady_state_graph(v));
}

PolyVectorField matrix_field(std::size_t n, const std::vector<int>& entries) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p(n);
    for (std::size_t j = 0; j < n; ++j) p += Polynomial::variable(n, j) * Rational(entries[i * n + j]);
    comps.push_back(std::move(p));
  }
  return PolyVectorField(FinSet(n), std::move(comps));
}

}  // namespace

LawReport check_alpha_naturality_linear(std::size_t max_size, std::size_t exhaustive_size, std::size_t random_cases,
                                        RandomObjects& gen) {
  LawReport r{"alpha is natural (linear fields)"};
  for (std::size_t n = 0; n <= max_size; ++n) {
    std::vector<PolyVectorField> fields;
    if (n <= exhaustive_size) {
      std::vector<int> entries(n * n, -2);
      while (true) {
        fields.push_back(matrix_field(n, entries));
        std::size_t k = 0;
        while (k < entries.size() && entries[k] == 2) entries[k++] = -2;
        if (k == entries.size()) break;
        ++entries[k];
      }
    } else {
      for (std::size_t k = 0; k < random_cases; ++k) fields.push_back(gen.linear_field(FinSet(n)));
    }
    for (std::size_t m = 0; m <= max_size; ++m) {
      for (const auto& f : all_functions(n, m)) {
        for (const auto& v : fields) {
          bool ok = sarel().equal(transported_graph(f, v), steady_state_graph(pushforward_field(f, v)));
          r.check(ok, [&] { return "f = " + describe(f) + ", v = " + describe(v); });
        }
      }
    }
  }
  return r;
}

LawReport check_alpha_naturality_sampled(std::size_t fields, std::size_t points, double tolerance,
                                         RandomObjects& gen) {
  LawReport r{"alpha is natural (sampled, degree-2 monomial fields)"};
  NewtonOptions newton;
  newton.tolerance = tolerance;
  for (std::size_t k = 0; k < fields; ++k) {
    std::size_t n = gen.uniform(1, 3), m = gen.uniform(1, 3);
    FinFunction f = gen.function(n, m);
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e(n, 0);
      e[gen.uniform(0, n - 1)] += 1;
      e[gen.uniform(0, n - 1)] += 1;
      long c = static_cast<long>(gen.uniform(0, 3)) - 2;
      comps.push_back(Polynomial::monomial(e, Rational(c >= 0 ? c + 1 : c)));
    }
    PolyVectorField v(FinSet(n), std::move(comps));
    ConstraintRelation lhs = transported_graph(f, v);
    ConstraintRelation rhs = steady_state_graph(pushforward_field(f, v));
    const std::string what = "f = " + describe(f) + ", v = " + describe(v);
    // lhs internals: shared concentrations and flows on X, then one point per Y.
    auto hint_for = [&](const std::vector<double>& c_y) {
      std::vector<double> cx(n);
      for (std::size_t x = 0; x < n; ++x) cx[x] = c_y[f(x)];
      std::vector<double> hint(cx);
      for (std::size_t x = 0; x < n; ++x) hint.push_back(-v[x].evaluate(std::span<const double>(cx)));
      hint.insert(hint.end(), c_y.begin(), c_y.end());
      return hint;
    };
    for (std::size_t p = 0; p < points; ++p) {
      auto w = sample_witness(lhs, gen.engine(), 20, newton);
      bool ok = w.has_value();
      if (ok) {
        std::vector<double> boundary(w->values.begin(), w->values.begin() + static_cast<std::ptrdiff_t>(2 * m));
        ok = is_member(rhs, std::span<const double>(boundary), std::nullopt, tolerance) == Membership::Member;
      }
      r.record(ok, "lhs sample " + std::to_string(p) + " at " + what);

      std::uniform_real_distribution<double> conc(0.1, 2.0);
      std::vector<double> c_y(m);
      for (auto& c : c_y) c = conc(gen.engine());
      std::vector<double> boundary(c_y);
      PolyVectorField pushed = pushforward_field(f, v);
      for (std::size_t y = 0; y < m; ++y) boundary.push_back(pushed[y].evaluate(std::span<const double>(c_y)));
      r.record(complete_witness(lhs, boundary, {hint_for(c_y)}, gen.engine(), 10, newton).has_value(),
               "rhs sample " + std::to_string(p) + " at " + what);
    }
  }
  return r;
}

LawReport check_blackbox_linear(std::size_t cases, RandomObjects& gen) {
  LawReport r{"black box preserves composition (linear, exact)"};
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t x = gen.uniform(0, 3), y = gen.uniform(0, 3), z = gen.uniform(0, 3);
    OpenSystem a = gen.linear_system(x, y, 3), b = gen.linear_system(y, z, 3);
    FunctorialityReport rep = check_functoriality(a, b);
    r.record(rep.passed && rep.exact, describe(a.cospan()) + " v = " + describe(a.decoration()) + " ; " +
                                          describe(b.cospan()) + " w = " + describe(b.decoration()) + ": " + rep.detail);
  }
  return r;
}

LawReport check_blackbox_mass_action(std::size_t cases, std::size_t samples, double tolerance, RandomObjects& gen) {
  LawReport r{"black box preserves composition (mass action, sampled)"};
  FunctorialityOptions options;
  options.samples = static_cast<int>(samples);
  options.tolerance = tolerance;
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t x = gen.uniform(0, 3), y = gen.uniform(1, 3), z = gen.uniform(0, 3);
    OpenSystem a = gen.mass_action_system(x, y, 3), b = gen.mass_action_system(y, z, 3);
    options.seed = gen.engine()();
    FunctorialityReport rep = check_functoriality(a, b, options);
    r.record(rep.passed, describe(a.cospan()) + " v = " + describe(a.decoration()) + " ; " + describe(b.cospan()) +
                             " w = " + describe(b.decoration()) + ": " + rep.detail);
  }
  return r;
}

LawReport check_blackbox_structure(std::size_t max_size, std::size_t cases, RandomObjects& gen) {
  LawReport r{"black box is a hypergraph functor"};
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t x = gen.uniform(0, max_size), y = gen.uniform(0, max_size);
    OpenSystem a = gen.linear_system(x, y, max_size), b = gen.linear_system(y, x, max_size);
    r.record(same(black_box(a), black_box_via_decorations(a)), "routes differ at " + describe(a.cospan()) +
                                                                   " v = " + describe(a.decoration()));
    r.record(same(black_box(decorated_tensor(a, b)), rpar(black_box(a), black_box(b))),
             "tensor at " + describe(a.cospan()) + " | " + describe(b.cospan()));
  }
  for (std::size_t n = 0; n <= max_size; ++n) {
    FinSet x(n);
    r.record(same(black_box(decorated_identity(dynam_functor(), x)), identity_relation(x)),
             "identity at |X| = " + std::to_string(n));
    for (Generator g : {Generator::Mu, Generator::Eta, Generator::Delta, Generator::Epsilon}) {
      ConstraintRelation lifted = black_box(lift_frobenius(dynam_functor(), g, x));
      bool ok = same(lifted, frob_of_cospan(frobenius_generator(g, x)));
      if (n == 1) ok = ok && same(lifted, frob_generator_R2(g));
      r.record(ok, std::string(to_string(g)) + " at |X| = " + std::to_string(n));
    }
  }
  return r;
}

LawReport check_solver_witnesses(std::size_t cases, RandomObjects& gen) {
  LawReport r{"solver witnesses are members"};
  for (std::size_t k = 0; k < cases; ++k) {
    bool linear = k % 2 == 0;
    std::size_t x = gen.uniform(0, 2), y = gen.uniform(0, 2);
    OpenSystem sys = linear ? gen.linear_system(x, y, 3) : gen.mass_action_system(x, y, 3);
    ConstraintRelation rel = black_box(sys);
    std::optional<WitnessPoint> w;
    std::map<std::size_t, Rational> fixed;
    if (rel.is_linear()) {
      // An exact point: particular solution plus integer multiples of the directions.
      SolveResult all = solve_steady_states(rel, {});
      std::vector<Rational> point = all.particular;
      for (const auto& b : all.basis) {
        Rational t(static_cast<long>(gen.uniform(0, 4)) - 2);
        for (std::size_t v = 0; v < point.size(); ++v) point[v] += t * b[v];
      }
      w = WitnessPoint{};
      for (std::size_t v = 0; v < point.size(); ++v) {
        w->values.push_back(point[v].get_d());
        if (v < rel.boundary_variable_count() && rel.kind(v) == VariableKind::Flow) fixed[v] = point[v];
      }
    } else {
      w = sample_witness(rel, gen.engine());
      if (!w) {
        r.record(false, "no steady state sampled for " + describe(sys.decoration()));
        continue;
      }
      // Fix the boundary flows, solve for the rest from a perturbed start.
      for (std::size_t v = 0; v < rel.boundary_variable_count(); ++v) {
        if (rel.kind(v) == VariableKind::Flow) fixed[v] = Rational(w->values[v]);
      }
    }
    SolveOptions options;
    std::vector<double> seed = w->values;
    for (auto& s : seed) s += 1e-3;
    options.seeds = {seed};
    options.require_nonnegative_concentrations = false;
    try {
      SolveResult res = solve_steady_states(rel, fixed, options);
      bool ok = !res.witnesses.empty();
      if (res.exact) {
        std::span<const Rational> all(res.particular);
        ok = ok && is_member(rel, all.first(rel.boundary_variable_count()), all.subspan(rel.boundary_variable_count())) ==
                       Membership::Member;
      }
      for (const auto& wp : res.witnesses) {
        std::span<const double> all(wp.values);
        ok = ok && is_member(rel, all.first(rel.boundary_variable_count()), all.subspan(rel.boundary_variable_count())) ==
                       Membership::Member;
      }
      r.record(ok, "v = " + describe(sys.decoration()));
    } catch (const Error& e) {
      r.record(false, "v = " + describe(sys.decoration()) + ": " + e.what());
    }
  }
  return r;
}

std::vector<LawReport> run_law_suite(const LawSuiteOptions& options) {
  const std::size_t n = std::max<std::size_t>(options.size, 1);
  const std::size_t small = std::min<std::size_t>(n, 2), medium = std::min<std::size_t>(n, 3);
  RandomObjects gen(options.seed);
  std::vector<LawReport> out;
  out.push_back(check_pushout_commutes(medium));
  out.push_back(check_pushout_universal(small, 3));
  out.push_back(check_factorisation(medium));
  out.push_back(check_mono_pushout_stability(medium));
  out.push_back(check_coequalizer_epi(medium));
  out.push_back(check_cospan_category(small, n + 1, 200, gen));
  out.push_back(check_frobenius_cospans(medium));
  out.push_back(check_hypergraph_coherence(small));
  for (FactSys s : {FactSys::EpiMono, FactSys::AllIso, FactSys::IsoAll}) {
    out.push_back(check_corelation_compose(s, n, n + 1, 200, gen));
  }
  out.push_back(check_graph_decorated_laws(n, 100, gen));
  out.push_back(check_dynam_decorated_laws(n, 100, gen));
  out.push_back(check_decdata_functor(n, 100, gen));
  out.push_back(check_lan_functor_laws(n, 100, gen));
  out.push_back(check_kan_oracle_exhaustive(small));
  out.push_back(check_kan_oracle_random(n, 200, gen));
  out.push_back(check_kan_morphisms_exhaustive(small));
  out.push_back(check_kan_morphisms_random(n, 200, gen));
  out.push_back(check_polynomial_ring(200, gen));
  out.push_back(check_dynam_functoriality(small));
  out.push_back(check_laxator_naturality(n, 100, gen));
  out.push_back(check_relation_frobenius());
  out.push_back(check_frobenius_relations_of_cospans(medium));
  out.push_back(check_relation_terms(3, 100, gen));
  out.push_back(check_frob_of_cospan_functor(n, 100, gen));
  out.push_back(check_alpha_naturality_linear(medium, small, 100, gen));
  out.push_back(check_alpha_naturality_sampled(5, 10, 1e-9, gen));
  out.push_back(check_blackbox_linear(50, gen));
  out.push_back(check_blackbox_mass_action(5, 10, 1e-9, gen));
  out.push_back(check_blackbox_structure(medium, 50, gen));
  out.push_back(check_solver_witnesses(20, gen));
  return out;
}

}  // namespace opensys
