#include "opensys/cospan.hpp"

#include <algorithm>
#include <numeric>

#include "opensys/error.hpp"

namespace opensys {

std::string_view to_string(FactSys s) {
  switch (s) {
    case FactSys::AllIso: return "all-iso";
    case FactSys::IsoAll: return "iso-all";
    case FactSys::EpiMono: return "epi-mono";
  }
  return "?";
}

bool in_e(FactSys s, const FinFunction& f) {
  switch (s) {
    case FactSys::AllIso: return true;
    case FactSys::IsoAll: return is_iso(f);
    case FactSys::EpiMono: return is_epi(f);
  }
  return false;
}

bool in_m(FactSys s, const FinFunction& f) {
  switch (s) {
    case FactSys::AllIso: return is_iso(f);
    case FactSys::IsoAll: return true;
    case FactSys::EpiMono: return is_mono(f);
  }
  return false;
}

EpiMono factor(FactSys s, const FinFunction& f) {
  switch (s) {
    case FactSys::AllIso: return {f, identity(f.cod())};
    case FactSys::IsoAll: return {identity(f.dom()), f};
    case FactSys::EpiMono: return epi_mono_factor(f);
  }
  return epi_mono_factor(f);
}

Cospan::Cospan(FinFunction left, FinFunction right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.cod() == right_.cod())) {
    throw CodomainMismatch("cospan legs land in apexes of size " + std::to_string(left_.cod().size()) +
                           " and " + std::to_string(right_.cod().size()));
  }
}

Cospan identity_cospan(const FinSet& x) { return Cospan(identity(x), identity(x)); }

Cospan cospan_of(const FinFunction& f) { return Cospan(f, identity(f.cod())); }

Cospan opposite_of(const FinFunction& f) { return Cospan(identity(f.cod()), f); }

Cospan opposite(const Cospan& c) { return Cospan(c.right(), c.left()); }

Cospan swap_cospan(const FinSet& x, const FinSet& y) { return cospan_of(swap_map(x, y)); }

CospanComposite cospan_compose_detailed(const Cospan& a, const Cospan& b) {
  if (!(a.right_foot() == b.left_foot())) {
    throw FootMismatch("cannot compose cospans over feet of size " +
                       std::to_string(a.right_foot().size()) + " and " +
                       std::to_string(b.left_foot().size()));
  }
  Pushout p = pushout(a.right(), b.left());
  Cospan result(compose(a.left(), p.left), compose(b.right(), p.right));
  return {std::move(result), std::move(p)};
}

Cospan cospan_compose(const Cospan& a, const Cospan& b) { return cospan_compose_detailed(a, b).result; }

Cospan monoidal_product(const Cospan& a, const Cospan& b) {
  return Cospan(coproduct_map(a.left(), b.left()), coproduct_map(a.right(), b.right()));
}

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::Mu: return "mu";
    case Generator::Eta: return "eta";
    case Generator::Delta: return "delta";
    case Generator::Epsilon: return "epsilon";
  }
  return "?";
}

Cospan frobenius_generator(Generator which, const FinSet& x) {
  switch (which) {
    case Generator::Mu: return Cospan(copair(identity(x), identity(x)), identity(x));
    case Generator::Eta: return Cospan(initial_map(x), identity(x));
    case Generator::Delta: return opposite(frobenius_generator(Generator::Mu, x));
    case Generator::Epsilon: return opposite(frobenius_generator(Generator::Eta, x));
  }
  return identity_cospan(x);
}

std::optional<FinFunction> find_apex_iso(const Cospan& a, const Cospan& b,
                                         const std::function<bool(const FinFunction&)>& accept,
                                         std::size_t bound) {
  if (!(a.left_foot() == b.left_foot()) || !(a.right_foot() == b.right_foot())) {
    throw FootMismatch("iso comparison of cospans with different feet");
  }
  const std::size_t n = a.apex().size();
  const std::size_t m = b.apex().size();
  const bool a_epi = is_epi(a.copaired());
  const bool b_epi = is_epi(b.copaired());
  if (!a_epi && !b_epi && n > bound && m > bound) {
    throw ApexTooLarge("apex bijection search over " + std::to_string(n) + " points exceeds bound " +
                       std::to_string(bound));
  }
  if (n != m) return std::nullopt;

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(n, unset), pre(n, unset);
  auto force = [&](const FinFunction& la, const FinFunction& lb) {
    for (std::size_t k = 0; k < la.size(); ++k) {
      std::size_t u = la(k), v = lb(k);
      if (phi[u] == unset && pre[v] == unset) {
        phi[u] = v;
        pre[v] = u;
      } else if (phi[u] != v || pre[v] != u) {
        return false;
      }
    }
    return true;
  };
  if (!force(a.left(), b.left()) || !force(a.right(), b.right())) return std::nullopt;

  std::vector<std::size_t> free_a, free_b;
  for (std::size_t k = 0; k < n; ++k) {
    if (phi[k] == unset) free_a.push_back(k);
    if (pre[k] == unset) free_b.push_back(k);
  }
  if (free_a.size() != free_b.size()) return std::nullopt;

  auto build = [&]() { return FinFunction(a.apex(), b.apex(), phi); };
  std::sort(free_b.begin(), free_b.end());
  do {
    for (std::size_t k = 0; k < free_a.size(); ++k) phi[free_a[k]] = free_b[k];
    FinFunction candidate = build();
    if (!accept || accept(candidate)) return candidate;
  } while (std::next_permutation(free_b.begin(), free_b.end()));
  return std::nullopt;
}

bool iso_equal(const Cospan& a, const Cospan& b, std::size_t bound) {
  return find_apex_iso(a, b, {}, bound).has_value();
}

Corelation::Corelation(Cospan cospan, FactSys system) : cospan_(std::move(cospan)), system_(system) {
  if (!in_e(system_, cospan_.copaired())) {
    throw InvalidValue("cospan is not a " + std::string(to_string(system_)) + " corelation");
  }
}

CorelationWithWitness to_corelation(const Cospan& c, FactSys system) {
  const FinSet& x = c.left_foot();
  const FinSet& y = c.right_foot();
  EpiMono em = factor(system, c.copaired());
  Coproduct xy = coproduct(x, y);
  Cospan part(compose(xy.inl, em.epi), compose(xy.inr, em.epi));
  return {Corelation(std::move(part), system), std::move(em.mono)};
}

CorelationComposite corelation_compose(const Corelation& a, const Corelation& b) {
  if (a.system() != b.system()) throw InvalidValue("corelations over different factorisation systems");
  CospanComposite cc = cospan_compose_detailed(a.cospan(), b.cospan());
  CorelationWithWitness cw = to_corelation(cc.result, a.system());
  return {std::move(cw.corelation), std::move(cw.witness), std::move(cc.pushout)};
}

Corelation corelation_tensor(const Corelation& a, const Corelation& b) {
  if (a.system() != b.system()) throw InvalidValue("corelations over different factorisation systems");
  return Corelation(monoidal_product(a.cospan(), b.cospan()), a.system());
}

std::string describe(const Cospan& c) {
  auto table = [](const FinFunction& f) {
    std::string out = "[";
    for (std::size_t k = 0; k < f.size(); ++k) out += (k ? " " : "") + std::to_string(f(k));
    return out + "]";
  };
  return std::to_string(c.left_foot().size()) + " -" + table(c.left()) + "-> " + std::to_string(c.apex().size()) +
         " <-" + table(c.right()) + "- " + std::to_string(c.right_foot().size());
}

}  // namespace opensys
