#pragma once

#include <memory>
#include <string>
#include <vector>

#include "opensys/decor.hpp"
#include "opensys/polynomial.hpp"

namespace opensys {

/// A polynomial vector field on R^N: one component per element of `space`,
/// every component a polynomial in the |N| positional variables.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  /// The zero field on `space`.
  explicit PolyVectorField(FinSet space);
  /// Throws DimensionMismatch on a wrong component count or variable count.
  PolyVectorField(FinSet space, std::vector<Polynomial> components);

  const FinSet& space() const { return space_; }
  std::size_t dimension() const { return space_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t k) const { return components_[k]; }
  bool is_linear() const;

  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.space_ == b.space_ && a.components_ == b.components_;
  }

 private:
  FinSet space_;
  std::vector<Polynomial> components_;
};

struct Reaction {
  std::string name;
  std::vector<std::uint32_t> input;   // stoichiometry consumed, per species
  std::vector<std::uint32_t> output;  // stoichiometry produced, per species
  Rational rate;
};

class ReactionNetwork {
 public:
  ReactionNetwork() = default;
  /// Throws InvalidValue on a wrong stoichiometry length or a non-positive rate.
  ReactionNetwork(FinSet species, std::vector<Reaction> reactions);

  const FinSet& species() const { return species_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }

 private:
  FinSet species_;
  std::vector<Reaction> reactions_;
};

struct OpenNetwork {
  ReactionNetwork network;
  FinFunction inputs;   // X -> species
  FinFunction outputs;  // Y -> species
};

/// v_i(c) = sum_r rate_r (out_i(r) - in_i(r)) prod_j c_j^in_j(r).
PolyVectorField mass_action(const ReactionNetwork& net);

/// p o f^* for f : X -> Y and p a polynomial on R^X: every variable x is
/// replaced by the variable f(x), giving a polynomial on R^Y.
Polynomial pullback(const FinFunction& f, const Polynomial& p);

/// D(f)(v) = f_* o v o f^*. Throws SpaceMismatch unless v lives over dom f.
PolyVectorField pushforward_field(const FinFunction& f, const PolyVectorField& v);

/// Block sum of fields over N + M.
PolyVectorField block_sum(const PolyVectorField& v, const PolyVectorField& w);

/// The decoration functor D of algebraic vector fields, on FinSet with the
/// (all, iso) factorisation system, so that D-corelations are D-cospans.
class DynamDecoration {
 public:
  using Decoration = PolyVectorField;

  FactSys system() const { return FactSys::AllIso; }
  /// Along N --f--> P <--m-- P' (m a bijection): push forward along m^-1 o f.
  Decoration transport(const Cospan& c, const Decoration& v) const;
  Decoration laxator(const Decoration& v, const Decoration& w) const { return block_sum(v, w); }
  Decoration unit() const { return PolyVectorField(FinSet(0)); }
  bool equal(const Decoration& v, const Decoration& w) const { return v.components() == w.components(); }
  std::size_t carrier(const Decoration& v) const { return v.dimension(); }
};

static_assert(DecorationFunctor<DynamDecoration>);

using OpenSystem = DecoratedMorphism<DynamDecoration>;

/// The shared D instance.
const std::shared_ptr<const DynamDecoration>& dynam_functor();

/// (X -> N <- Y, mass_action(network)).
OpenSystem open_network_to_morphism(const OpenNetwork& onet);

}  // namespace opensys
