#pragma once

#include <doctest.h>

#include <initializer_list>
#include <vector>

#include "opensys/blackbox.hpp"
#include "opensys/cospan.hpp"
#include "opensys/dsl.hpp"
#include "opensys/error.hpp"
#include "opensys/kan.hpp"
#include "opensys/laws.hpp"
#include "opensys/random.hpp"
#include "opensys/serialize.hpp"
#include "opensys/solver.hpp"

namespace opensys::test {

inline FinFunction fn(std::size_t cod, std::vector<std::size_t> table) { return FinFunction(cod, std::move(table)); }

inline Polynomial var(std::size_t nvars, std::size_t k) { return Polynomial::variable(nvars, k); }

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exact membership of a boundary point, internals solved for.
inline Membership member(const ConstraintRelation& r, std::vector<Rational> boundary) {
  return is_member(r, std::span<const Rational>(boundary));
}

/// The one-species decay system x -> A <- y with dA/dt = -c_A.
inline OpenSystem decay_system() {
  FinSet a(std::vector<std::string>{"A"});
  FinFunction in(FinSet(std::vector<std::string>{"x"}), a, {0});
  FinFunction out(FinSet(std::vector<std::string>{"y"}), a, {0});
  return OpenSystem(dynam_functor(), Cospan(in, out), PolyVectorField(a, {-var(1, 0)}));
}

}  // namespace opensys::test
