#include <functional>
#include <sstream>

#include "opensys/kan.hpp"
#include "opensys/laws.hpp"

namespace opensys {

void LawReport::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  if (failures++ == 0) counterexample = what;
}

void LawReport::merge(const LawReport& other) {
  cases += other.cases;
  if (other.failures > 0 && failures == 0) counterexample = other.name + ": " + other.counterexample;
  failures += other.failures;
}

namespace {

Cospan seq(const Cospan& a, const Cospan& b) { return cospan_compose(a, b); }
Cospan par(const Cospan& a, const Cospan& b) { return monoidal_product(a, b); }
Cospan gen(Generator g, const FinSet& x) { return frobenius_generator(g, x); }
FinSet sum(const FinSet& a, const FinSet& b) { return coproduct(a, b).sum; }

// Tables of every surjection onto {0..n-1} numbered by first occurrence,
// i.e. one representative per partition of the domain.
std::vector<FinFunction> canonical_surjections(std::size_t length) {
  std::vector<FinFunction> out;
  std::vector<std::size_t> table(length);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t pos, std::size_t used) {
    if (pos == length) {
      out.emplace_back(used, table);
      return;
    }
    for (std::size_t v = 0; v <= used; ++v) {
      table[pos] = v;
      go(pos + 1, std::max(used, v + 1));
    }
  };
  go(0, 0);
  return out;
}

// Every cospan x -> n <- y with n <= max_apex.
std::vector<Cospan> all_cospans(std::size_t x, std::size_t y, std::size_t max_apex) {
  std::vector<Cospan> out;
  for (std::size_t n = 0; n <= max_apex; ++n) {
    for (const auto& f : all_functions(x, n)) {
      for (const auto& g : all_functions(y, n)) out.emplace_back(f, g);
    }
  }
  return out;
}

// One epi-mono corelation per partition of x + y.
std::vector<Cospan> all_epi_corelations(std::size_t x, std::size_t y) {
  std::vector<Cospan> out;
  for (const auto& s : canonical_surjections(x + y)) {
    std::vector<std::size_t> l(s.table().begin(), s.table().begin() + static_cast<std::ptrdiff_t>(x));
    std::vector<std::size_t> r(s.table().begin() + static_cast<std::ptrdiff_t>(x), s.table().end());
    out.emplace_back(FinFunction(s.cod().size(), l), FinFunction(s.cod().size(), r));
  }
  return out;
}

// The empty multiset and every single edge.
std::vector<EdgeMultiset> small_decorations(std::size_t n) {
  std::vector<EdgeMultiset> out{EdgeMultiset(n, {})};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) out.emplace_back(n, std::vector<EdgeMultiset::Edge>{{a, b}});
  }
  return out;
}

std::string describe(const EdgeMultiset& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < s.edges().size(); ++k) {
    os << (k ? " " : "") << s.edges()[k].first << "-" << s.edges()[k].second;
  }
  os << "}";
  return os.str();
}

template <class F>
std::string describe(const DecoratedMorphism<F>& m) {
  if constexpr (std::is_same_v<typename F::Decoration, EdgeMultiset>) {
    return describe(m.cospan()) + " " + describe(m.decoration());
  } else {
    return describe(m.cospan());
  }
}

const std::shared_ptr<const GraphDecoration>& graph_functor() {
  static const auto instance = std::make_shared<const GraphDecoration>();
  return instance;
}

}  // namespace

LawReport check_pushout_commutes(std::size_t max_size) {
  LawReport r{"pushout squares commute"};
  for (std::size_t a = 0; a <= max_size; ++a) {
    for (std::size_t b = 0; b <= max_size; ++b) {
      auto fs = all_functions(a, b);
      for (std::size_t c = 0; c <= max_size; ++c) {
        auto gs = all_functions(a, c);
        for (const auto& f : fs) {
          for (const auto& g : gs) {
            Pushout p = pushout(f, g);
            r.check(compose(f, p.left) == compose(g, p.right) && is_epi(copair(p.left, p.right)),
                    [&] { return "f = " + describe(f) + ", g = " + describe(g); });
          }
        }
      }
    }
  }
  return r;
}

LawReport check_pushout_universal(std::size_t max_size, std::size_t max_target) {
  LawReport r{"pushout universal property"};
  for (std::size_t a = 0; a <= max_size; ++a) {
    for (std::size_t b = 0; b <= max_size; ++b) {
      for (std::size_t c = 0; c <= max_size; ++c) {
        for (const auto& f : all_functions(a, b)) {
          for (const auto& g : all_functions(a, c)) {
            Pushout p = pushout(f, g);
            const std::size_t np = p.left.cod().size();
            for (std::size_t t = 0; t <= max_target; ++t) {
              auto hs = all_functions(np, t);
              for (const auto& u : all_functions(b, t)) {
                for (const auto& v : all_functions(c, t)) {
                  if (!(compose(f, u) == compose(g, v))) continue;
                  std::size_t mediating = 0;
                  for (const auto& h : hs) {
                    if (compose(p.left, h) == u && compose(p.right, h) == v) ++mediating;
                  }
                  r.record(mediating == 1, "f = " + describe(f) + ", g = " + describe(g) + ", cocone " + describe(u) +
                                               ", " + describe(v) + ": " + std::to_string(mediating) +
                                               " mediating maps");
                }
              }
            }
          }
        }
      }
    }
  }
  return r;
}

LawReport check_factorisation(std::size_t max_size) {
  LawReport r{"epi-mono factorisation"};
  // factors[a][b][k] for the k-th map a -> b in all_functions order.
  std::vector<std::vector<std::vector<FinFunction>>> maps(max_size + 1, std::vector<std::vector<FinFunction>>(max_size + 1));
  std::vector<std::vector<std::vector<EpiMono>>> factors(max_size + 1,
                                                          std::vector<std::vector<EpiMono>>(max_size + 1));
  for (std::size_t a = 0; a <= max_size; ++a) {
    for (std::size_t b = 0; b <= max_size; ++b) {
      maps[a][b] = all_functions(a, b);
      for (const auto& f : maps[a][b]) {
        EpiMono em = epi_mono_factor(f);
        r.check(is_epi(em.epi) && is_mono(em.mono) && compose(em.epi, em.mono) == f, [&] { return "f = " + describe(f); });
        factors[a][b].push_back(std::move(em));
      }
    }
  }
  // Unique diagonal: for v f = f' u, exactly one s with s e = e' u and m' s = v m.
  for (std::size_t a = 0; a <= max_size; ++a) {
    for (std::size_t b = 0; b <= max_size; ++b) {
      for (std::size_t c = 0; c <= max_size; ++c) {
        for (std::size_t d = 0; d <= max_size; ++d) {
          for (std::size_t fi = 0; fi < maps[a][b].size(); ++fi) {
            const auto& f = maps[a][b][fi].table();
            const EpiMono& em = factors[a][b][fi];
            for (const auto& uf : maps[a][c]) {
              const auto& u = uf.table();
              for (std::size_t gi = 0; gi < maps[c][d].size(); ++gi) {
                const auto& f2 = maps[c][d][gi].table();
                const EpiMono& em2 = factors[c][d][gi];
                for (const auto& vf : maps[b][d]) {
                  const auto& v = vf.table();
                  bool commutes = true;
                  for (std::size_t k = 0; k < a && commutes; ++k) commutes = v[f[k]] == f2[u[k]];
                  if (!commutes) continue;
                  const std::size_t ni = em.mono.dom().size(), nj = em2.mono.dom().size();
                  std::size_t diagonals = 0;
                  for (const auto& s : all_functions(ni, nj)) {
                    bool ok = true;
                    for (std::size_t k = 0; k < a && ok; ++k) ok = s(em.epi(k)) == em2.epi(u[k]);
                    for (std::size_t i = 0; i < ni && ok; ++i) ok = em2.mono(s(i)) == v[em.mono(i)];
                    if (ok) ++diagonals;
                  }
                  r.check(diagonals == 1, [&] {
                    return "f = " + describe(maps[a][b][fi]) + ", f' = " + describe(maps[c][d][gi]) +
                           ", u = " + describe(uf) + ", v = " + describe(vf) + ": " + std::to_string(diagonals) +
                           " diagonals";
                  });
                }
              }
            }
          }
        }
      }
    }
  }
  return r;
}

LawReport check_mono_pushout_stability(std::size_t max_size) {
  LawReport r{"monos stable under pushout"};
  for (std::size_t a = 0; a <= max_size; ++a) {
    for (std::size_t b = 0; b <= max_size; ++b) {
      for (const auto& m : all_functions(a, b)) {
        if (!is_mono(m)) continue;
        for (std::size_t c = 0; c <= max_size; ++c) {
          for (const auto& g : all_functions(a, c)) {
            r.record(is_mono(pushout(m, g).right), "m = " + describe(m) + ", g = " + describe(g));
          }
        }
      }
    }
  }
  return r;
}

LawReport check_coequalizer_epi(std::size_t max_size) {
  LawReport r{"coequalizers are epi"};
  for (std::size_t a = 0; a <= max_size; ++a) {
    for (std::size_t b = 0; b <= max_size; ++b) {
      auto fs = all_functions(a, b);
      for (const auto& f : fs) {
        for (const auto& g : fs) {
          FinFunction q = coequalizer(f, g);
          r.record(is_epi(q) && compose(f, q) == compose(g, q), "f = " + describe(f) + ", g = " + describe(g));
        }
      }
    }
  }
  return r;
}

LawReport check_cospan_category(std::size_t exhaustive_size, std::size_t random_size, std::size_t random_cases,
                                RandomObjects& gen) {
  LawReport r{"cospan category laws"};
  const std::size_t e = exhaustive_size;
  std::vector<std::vector<std::vector<Cospan>>> all(e + 1, std::vector<std::vector<Cospan>>(e + 1));
  for (std::size_t x = 0; x <= e; ++x) {
    for (std::size_t y = 0; y <= e; ++y) all[x][y] = all_cospans(x, y, e);
  }
  for (std::size_t x = 0; x <= e; ++x) {
    for (std::size_t y = 0; y <= e; ++y) {
      for (const auto& c : all[x][y]) {
        r.record(iso_equal(seq(identity_cospan(FinSet(x)), c), c) && iso_equal(seq(c, identity_cospan(FinSet(y))), c),
                 "unit law at " + describe(c));
      }
    }
  }
  for (std::size_t x = 0; x <= e; ++x) {
    for (std::size_t y = 0; y <= e; ++y) {
      for (std::size_t z = 0; z <= e; ++z) {
        for (std::size_t w = 0; w <= e; ++w) {
          for (const auto& a : all[x][y]) {
            for (const auto& b : all[y][z]) {
              Cospan ab = seq(a, b);
              for (const auto& c : all[z][w]) {
                r.check(iso_equal(seq(ab, c), seq(a, seq(b, c))), [&] {
                  return "associativity at " + describe(a) + " ; " + describe(b) + " ; " + describe(c);
                });
              }
            }
          }
        }
      }
    }
  }
  for (std::size_t k = 0; k < random_cases; ++k) {
    std::size_t x = gen.uniform(0, random_size), y = gen.uniform(0, random_size), z = gen.uniform(0, random_size),
                w = gen.uniform(0, random_size);
    Cospan a = gen.cospan(x, y, random_size), b = gen.cospan(y, z, random_size), c = gen.cospan(z, w, random_size);
    r.record(iso_equal(seq(seq(a, b), c), seq(a, seq(b, c))) && iso_equal(seq(identity_cospan(FinSet(x)), a), a),
             "random case " + describe(a) + " ; " + describe(b) + " ; " + describe(c));
  }
  return r;
}

LawReport check_frobenius_cospans(std::size_t max_size) {
  LawReport r{"Frobenius axioms in Cospan(FinSet)"};
  for (std::size_t n = 0; n <= max_size; ++n) {
    FinSet x(n);
    Cospan id = identity_cospan(x);
    Cospan mu = gen(Generator::Mu, x), eta = gen(Generator::Eta, x), delta = gen(Generator::Delta, x),
           eps = gen(Generator::Epsilon, x);
    Cospan swap = swap_cospan(x, x);
    const std::string at = " at |X| = " + std::to_string(n);
    r.record(iso_equal(seq(par(mu, id), mu), seq(par(id, mu), mu)), "associativity" + at);
    r.record(iso_equal(seq(par(eta, id), mu), id) && iso_equal(seq(par(id, eta), mu), id), "unit" + at);
    r.record(iso_equal(seq(delta, par(delta, id)), seq(delta, par(id, delta))), "coassociativity" + at);
    r.record(iso_equal(seq(delta, par(eps, id)), id) && iso_equal(seq(delta, par(id, eps)), id), "counit" + at);
    r.record(iso_equal(seq(swap, mu), mu), "commutativity" + at);
    r.record(iso_equal(seq(delta, swap), delta), "cocommutativity" + at);
    Cospan middle = seq(mu, delta);
    r.record(iso_equal(seq(par(delta, id), par(id, mu)), middle) && iso_equal(seq(par(id, delta), par(mu, id)), middle),
             "Frobenius law" + at);
    r.record(iso_equal(seq(delta, mu), id), "special law" + at);
  }
  return r;
}

LawReport check_hypergraph_coherence(std::size_t max_size) {
  LawReport r{"hypergraph coherence"};
  for (std::size_t nx = 0; nx <= max_size; ++nx) {
    for (std::size_t ny = 0; ny <= max_size; ++ny) {
      FinSet x(nx), y(ny), xy = sum(x, y);
      const std::string at = " at |X| = " + std::to_string(nx) + ", |Y| = " + std::to_string(ny);
      Cospan shuffle_in = par(par(identity_cospan(x), swap_cospan(y, x)), identity_cospan(y));
      Cospan shuffle_out = par(par(identity_cospan(x), swap_cospan(x, y)), identity_cospan(y));
      r.record(iso_equal(gen(Generator::Mu, xy), seq(shuffle_in, par(gen(Generator::Mu, x), gen(Generator::Mu, y)))),
               "mu" + at);
      r.record(iso_equal(gen(Generator::Eta, xy), par(gen(Generator::Eta, x), gen(Generator::Eta, y))), "eta" + at);
      r.record(iso_equal(gen(Generator::Delta, xy),
                         seq(par(gen(Generator::Delta, x), gen(Generator::Delta, y)), shuffle_out)),
               "delta" + at);
      r.record(iso_equal(gen(Generator::Epsilon, xy), par(gen(Generator::Epsilon, x), gen(Generator::Epsilon, y))),
               "epsilon" + at);
    }
  }
  return r;
}

LawReport check_corelation_compose(FactSys system, std::size_t max_foot, std::size_t max_apex, std::size_t cases,
                                   RandomObjects& gen) {
  LawReport r{"corelation composition (" + std::string(to_string(system)) + ")"};
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t x = gen.uniform(0, max_foot), y = gen.uniform(0, max_foot), z = gen.uniform(0, max_foot);
    Cospan a = gen.cospan(x, y, max_apex), b = gen.cospan(y, z, max_apex);
    Corelation ca = to_corelation(a, system).corelation, cb = to_corelation(b, system).corelation;
    Cospan composed = corelation_compose(ca, cb).corelation.cospan();
    Cospan expected = to_corelation(seq(ca.cospan(), cb.cospan()), system).corelation.cospan();
    Cospan from_original = to_corelation(seq(a, b), system).corelation.cospan();
    r.record(iso_equal(composed, expected) && iso_equal(composed, from_original),
             describe(a) + " ; " + describe(b));
  }
  return r;
}

namespace {

template <class F, class Make>
LawReport decorated_laws(const std::string& name, std::size_t max_size, std::size_t cases, RandomObjects& gen,
                         Make make) {
  LawReport r{name};
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t x = gen.uniform(0, max_size), y = gen.uniform(0, max_size), z = gen.uniform(0, max_size),
                w = gen.uniform(0, max_size);
    DecoratedMorphism<F> a = make(x, y), b = make(y, z), c = make(z, w);
    auto fn = a.functor();
    bool unit = decorated_equal(decorated_compose(decorated_identity(fn, a.left_foot()), a), a) &&
                decorated_equal(decorated_compose(a, decorated_identity(fn, a.right_foot())), a);
    r.record(unit, "unit law at " + describe(a));
    r.record(decorated_equal(decorated_compose(decorated_compose(a, b), c),
                             decorated_compose(a, decorated_compose(b, c))),
             "associativity at " + describe(a) + " ; " + describe(b) + " ; " + describe(c));
  }
  return r;
}

}  // namespace

LawReport check_graph_decorated_laws(std::size_t max_size, std::size_t cases, RandomObjects& gen) {
  return decorated_laws<GraphDecoration>("decorated laws (graph instance)", max_size, cases, gen,
                                         [&](std::size_t x, std::size_t y) {
                                           Corelation c = gen.corelation(FactSys::EpiMono, x, y, max_size + 1);
                                           EdgeMultiset s = gen.edges(c.apex().size(), 2);
                                           return DecoratedMorphism<GraphDecoration>(graph_functor(), c, s);
                                         });
}

LawReport check_dynam_decorated_laws(std::size_t max_size, std::size_t cases, RandomObjects& gen) {
  return decorated_laws<DynamDecoration>("decorated laws (Dynam)", max_size, cases, gen,
                                         [&](std::size_t x, std::size_t y) {
                                           Cospan c = gen.cospan(x, y, max_size);
                                           return OpenSystem(dynam_functor(), c, gen.field(c.apex(), 3, 2));
                                         });
}

LawReport check_decdata_functor(std::size_t max_size, std::size_t cases, RandomObjects& gen) {
  LawReport r{"(id, double_edges) is a hypergraph functor"};
  DecDataMorphism<GraphDecoration, GraphDecoration> phi(graph_functor(), graph_functor(), double_edges);
  auto make = [&](std::size_t x, std::size_t y) {
    Corelation c = gen.corelation(FactSys::EpiMono, x, y, max_size + 1);
    return DecoratedMorphism<GraphDecoration>(graph_functor(), c, gen.edges(c.apex().size(), 2));
  };
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t x = gen.uniform(0, max_size), y = gen.uniform(0, max_size), z = gen.uniform(0, max_size);
    auto a = make(x, y), b = make(y, z), c = make(z, x);
    r.record(decorated_equal(apply_decdata_morphism(phi, decorated_compose(a, b)),
                             decorated_compose(apply_decdata_morphism(phi, a), apply_decdata_morphism(phi, b))),
             "composition at " + describe(a) + " ; " + describe(b));
    r.record(decorated_equal(apply_decdata_morphism(phi, decorated_tensor(a, c)),
                             decorated_tensor(apply_decdata_morphism(phi, a), apply_decdata_morphism(phi, c))),
             "tensor at " + describe(a) + " | " + describe(c));
  }
  for (std::size_t n = 0; n <= max_size; ++n) {
    FinSet x(n);
    r.record(decorated_equal(apply_decdata_morphism(phi, decorated_identity(graph_functor(), x)),
                             decorated_identity(graph_functor(), x)),
             "identity at |X| = " + std::to_string(n));
    for (Generator g : {Generator::Mu, Generator::Eta, Generator::Delta, Generator::Epsilon}) {
      r.record(decorated_equal(apply_decdata_morphism(phi, lift_frobenius(graph_functor(), g, x)),
                               lift_frobenius(graph_functor(), g, x)),
               std::string(to_string(g)) + " at |X| = " + std::to_string(n));
    }
  }
  return r;
}

namespace {

using GraphLan = LanElement<EdgeMultiset>;

GraphLan random_lan_element(RandomObjects& gen, std::size_t x, std::size_t max_apex) {
  std::size_t n = gen.uniform(x == 0 ? 0 : 1, std::max<std::size_t>(max_apex, 1));
  FinFunction e = epi_mono_factor(gen.function(x, n)).epi;
  EdgeMultiset s = gen.edges(e.cod().size(), 2);
  return {std::move(e), std::move(s)};
}

std::string describe(const GraphLan& x) { return describe(x.e) + " " + describe(x.s); }

bool kan_case(const DecoratedMorphism<GraphDecoration>& a, const DecoratedMorphism<GraphDecoration>& b) {
  const GraphDecoration& g = *graph_functor();
  GraphLan via_corel = as_lan_element(decorated_compose(a, b));
  GraphLan via_lan = lan_compose(g, a.left_foot(), a.right_foot(), b.right_foot(), as_lan_element(a),
                                 as_lan_element(b));
  return lan_element_equal(g, via_corel, via_lan);
}

bool kan_morphism_case(const DecoratedMorphism<GraphDecoration>& a) {
  static const DecDataMorphism<GraphDecoration, GraphDecoration> phi(graph_functor(), graph_functor(), double_edges);
  GraphLan lhs = as_lan_element(apply_decdata_morphism(phi, a));
  GraphLan rhs = kan_on_morphism(phi, as_lan_element(a));
  return lan_element_equal(*graph_functor(), lhs, rhs);
}

std::vector<DecoratedMorphism<GraphDecoration>> all_small_graph_morphisms(std::size_t x, std::size_t y) {
  std::vector<DecoratedMorphism<GraphDecoration>> out;
  for (const auto& c : all_epi_corelations(x, y)) {
    for (const auto& s : small_decorations(c.apex().size())) out.emplace_back(graph_functor(), c, s);
  }
  return out;
}

}  // namespace

LawReport check_lan_functor_laws(std::size_t max_size, std::size_t cases, RandomObjects& gen) {
  LawReport r{"Lan F is a lax monoidal functor"};
  LanFunctor<GraphDecoration> lan(graph_functor());
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t x = gen.uniform(0, max_size), y = gen.uniform(0, max_size), z = gen.uniform(0, max_size),
                x2 = gen.uniform(0, max_size), y2 = gen.uniform(0, max_size);
    GraphLan a = random_lan_element(gen, x, max_size), b = random_lan_element(gen, x2, max_size);
    Cospan f = gen.cospan(x, y, max_size), g = gen.cospan(y, z, max_size), h = gen.cospan(x2, y2, max_size);
    r.record(lan.equal(lan.transport(identity_cospan(FinSet(x)), a), a), "identity at " + describe(a));
    r.record(lan.equal(lan.transport(seq(f, g), a), lan.transport(g, lan.transport(f, a))),
             "composition at " + describe(a) + " along " + describe(f) + " ; " + describe(g));
    r.record(lan.equal(lan.transport(par(f, h), lan.laxator(a, b)), lan.laxator(lan.transport(f, a), lan.transport(h, b))),
             "laxator naturality at " + describe(a) + ", " + describe(b));
  }
  return r;
}

LawReport check_kan_oracle_exhaustive(std::size_t max_size) {
  LawReport r{"decorated corelations agree with Lan elements (exhaustive)"};
  for (std::size_t x = 0; x <= max_size; ++x) {
    for (std::size_t y = 0; y <= max_size; ++y) {
      auto as = all_small_graph_morphisms(x, y);
      for (std::size_t z = 0; z <= max_size; ++z) {
        auto bs = all_small_graph_morphisms(y, z);
        for (const auto& a : as) {
          for (const auto& b : bs) r.check(kan_case(a, b), [&] { return describe(a) + " ; " + describe(b); });
        }
      }
    }
  }
  return r;
}

LawReport check_kan_oracle_random(std::size_t size, std::size_t cases, RandomObjects& gen) {
  LawReport r{"decorated corelations agree with Lan elements (random)"};
  for (std::size_t k = 0; k < cases; ++k) {
    Corelation ca = gen.corelation(FactSys::EpiMono, size, size, size + 1);
    Corelation cb = gen.corelation(FactSys::EpiMono, size, size, size + 1);
    DecoratedMorphism<GraphDecoration> a(graph_functor(), ca, gen.edges(ca.apex().size(), 3));
    DecoratedMorphism<GraphDecoration> b(graph_functor(), cb, gen.edges(cb.apex().size(), 3));
    r.record(kan_case(a, b), describe(a) + " ; " + describe(b));
  }
  return r;
}

LawReport check_kan_morphisms_exhaustive(std::size_t max_size) {
  LawReport r{"apply_decdata_morphism agrees with kan_on_morphism (exhaustive)"};
  for (std::size_t x = 0; x <= max_size; ++x) {
    for (std::size_t y = 0; y <= max_size; ++y) {
      for (const auto& a : all_small_graph_morphisms(x, y)) r.record(kan_morphism_case(a), describe(a));
    }
  }
  return r;
}

LawReport check_kan_morphisms_random(std::size_t size, std::size_t cases, RandomObjects& gen) {
  LawReport r{"apply_decdata_morphism agrees with kan_on_morphism (random)"};
  for (std::size_t k = 0; k < cases; ++k) {
    Corelation c = gen.corelation(FactSys::EpiMono, size, size, size + 1);
    DecoratedMorphism<GraphDecoration> a(graph_functor(), c, gen.edges(c.apex().size(), 3));
    r.record(kan_morphism_case(a), describe(a));
  }
  return r;
}

}  // namespace opensys
