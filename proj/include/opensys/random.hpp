#pragma once

#include <cstddef>
#include <random>

#include "opensys/blackbox.hpp"
#include "opensys/graph_decoration.hpp"

namespace opensys {

/// Seeded generators of random objects for law checks and tests.
class RandomObjects {
 public:
  explicit RandomObjects(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }

  /// A function n -> m; m must be positive unless n is zero.
  FinFunction function(std::size_t n, std::size_t m);
  /// A cospan between the given feet with apex in [1, max_apex] (0 allowed
  /// when both feet are empty).
  Cospan cospan(std::size_t x, std::size_t y, std::size_t max_apex);
  Corelation corelation(FactSys system, std::size_t x, std::size_t y, std::size_t max_apex);

  EdgeMultiset edges(std::size_t vertices, std::size_t max_edges);

  /// Up to `max_terms` monomials of degree <= max_degree with coefficients in
  /// {-2, ..., 2} \ {0}, spread over the components.
  PolyVectorField field(const FinSet& space, std::size_t max_terms, std::uint32_t max_degree);
  /// v(c) = A c with entries of A in {-2, ..., 2}.
  PolyVectorField linear_field(const FinSet& space);

  ReactionNetwork network(std::size_t species, std::size_t reactions, std::uint32_t max_order);
  /// Open system over a random cospan with the given feet, decorated by a
  /// linear field or by mass action.
  OpenSystem linear_system(std::size_t x, std::size_t y, std::size_t max_species);
  OpenSystem mass_action_system(std::size_t x, std::size_t y, std::size_t max_species);

 private:
  std::mt19937_64 rng_;
};

}  // namespace opensys
