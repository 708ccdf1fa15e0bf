#include "opensys/random.hpp"

#include <algorithm>

namespace opensys {

std::size_t RandomObjects::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

FinFunction RandomObjects::function(std::size_t n, std::size_t m) {
  std::vector<std::size_t> table(n);
  for (auto& t : table) t = uniform(0, m - 1);
  return FinFunction(m, std::move(table));
}

Cospan RandomObjects::cospan(std::size_t x, std::size_t y, std::size_t max_apex) {
  std::size_t n = uniform(x + y == 0 ? 0 : 1, std::max<std::size_t>(max_apex, 1));
  return Cospan(function(x, n), function(y, n));
}

Corelation RandomObjects::corelation(FactSys system, std::size_t x, std::size_t y, std::size_t max_apex) {
  return to_corelation(cospan(x, y, max_apex), system).corelation;
}

EdgeMultiset RandomObjects::edges(std::size_t vertices, std::size_t max_edges) {
  std::vector<EdgeMultiset::Edge> out;
  if (vertices > 0) {
    std::size_t count = uniform(0, max_edges);
    for (std::size_t k = 0; k < count; ++k) out.emplace_back(uniform(0, vertices - 1), uniform(0, vertices - 1));
  }
  return EdgeMultiset(vertices, std::move(out));
}

PolyVectorField RandomObjects::field(const FinSet& space, std::size_t max_terms, std::uint32_t max_degree) {
  const std::size_t n = space.size();
  std::vector<Polynomial> comps(n, Polynomial(n));
  if (n == 0) return PolyVectorField(space, std::move(comps));
  std::size_t terms = uniform(0, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    auto degree = static_cast<std::uint32_t>(uniform(0, max_degree));
    for (std::uint32_t d = 0; d < degree; ++d) e[uniform(0, n - 1)] += 1;
    long c = static_cast<long>(uniform(0, 3)) - 2;
    if (c >= 0) ++c;
    comps[uniform(0, n - 1)].add_term(e, Rational(c));
  }
  return PolyVectorField(space, std::move(comps));
}

PolyVectorField RandomObjects::linear_field(const FinSet& space) {
  const std::size_t n = space.size();
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p(n);
    for (std::size_t j = 0; j < n; ++j) {
      long c = static_cast<long>(uniform(0, 4)) - 2;
      p += Polynomial::variable(n, j) * Rational(c);
    }
    comps.push_back(std::move(p));
  }
  return PolyVectorField(space, std::move(comps));
}

ReactionNetwork RandomObjects::network(std::size_t species, std::size_t reactions, std::uint32_t max_order) {
  static const Rational rates[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  std::vector<Reaction> rs;
  for (std::size_t r = 0; r < reactions; ++r) {
    Reaction reaction{"r" + std::to_string(r), std::vector<std::uint32_t>(species, 0),
                      std::vector<std::uint32_t>(species, 0), rates[uniform(0, 3)]};
    if (species > 0) {
      auto in = static_cast<std::uint32_t>(uniform(1, max_order));
      auto out = static_cast<std::uint32_t>(uniform(0, max_order));
      for (std::uint32_t k = 0; k < in; ++k) reaction.input[uniform(0, species - 1)] += 1;
      for (std::uint32_t k = 0; k < out; ++k) reaction.output[uniform(0, species - 1)] += 1;
    }
    rs.push_back(std::move(reaction));
  }
  return ReactionNetwork(FinSet(species), std::move(rs));
}

OpenSystem RandomObjects::linear_system(std::size_t x, std::size_t y, std::size_t max_species) {
  Cospan c = cospan(x, y, max_species);
  return OpenSystem(dynam_functor(), c, linear_field(c.apex()));
}

OpenSystem RandomObjects::mass_action_system(std::size_t x, std::size_t y, std::size_t max_species) {
  Cospan c = cospan(x, y, max_species);
  ReactionNetwork net = network(c.apex().size(), uniform(1, 3), 2);
  return OpenSystem(dynam_functor(), c, mass_action(net));
}

}  // namespace opensys
