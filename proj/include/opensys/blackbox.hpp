#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "opensys/decor.hpp"
#include "opensys/dynam.hpp"
#include "opensys/sarel.hpp"

namespace opensys {

/// The decoration functor S: a decoration on N is a relation N -> 0, i.e. a
/// subset of R^N (+) R^N given by constraints. Transport along
/// N --f--> P <--m-- P' composes with Frob of that cospan. (iso, all) system.
class SarelDecoration {
 public:
  using Decoration = ConstraintRelation;

  FactSys system() const { return FactSys::IsoAll; }
  /// Throws BoundaryMismatch unless the relation is N -> 0 for the cospan's N.
  Decoration transport(const Cospan& c, const Decoration& r) const;
  Decoration laxator(const Decoration& r, const Decoration& s) const { return relation_tensor(r, s); }
  Decoration unit() const;
  /// Linear decorations are compared as subspaces, others structurally.
  bool equal(const Decoration& r, const Decoration& s) const;
  std::size_t carrier(const Decoration& r) const { return r.left().size(); }
};

static_assert(DecorationFunctor<SarelDecoration>);

using RelationMorphism = DecoratedMorphism<SarelDecoration>;

const std::shared_ptr<const SarelDecoration>& sarel_functor();

/// alpha_N(v) = { (c, f) | f = v(c) } as a relation N -> 0.
ConstraintRelation steady_state_graph(const PolyVectorField& v);

/// The morphism of decorating data (id, alpha) : D -> S.
const DecDataMorphism<DynamDecoration, SarelDecoration>& black_box_morphism();

/// The relation X -> Y of an S-decorated corelation: its decoration pulled
/// back to X + Y and split into the two feet.
ConstraintRelation relation_of(const RelationMorphism& r);

/// Steady states of an open system, written out directly: one internal
/// concentration per species, boundary concentrations read off through the
/// legs, and at every species v_n(c) equal to the total boundary flow there.
ConstraintRelation black_box(const OpenSystem& sys);

/// The same relation obtained by applying (id, alpha)Corel and reading off
/// the result with relation_of.
ConstraintRelation black_box_via_decorations(const OpenSystem& sys);

struct FunctorialityOptions {
  int samples = 25;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
};

struct FunctorialityReport {
  bool passed = false;
  /// Decided by exact linear algebra rather than sampling.
  bool exact = false;
  int samples_checked = 0;
  std::string detail;
};

/// Compares black_box(b o a) with black_box(b) o black_box(a). Linear fields
/// are compared exactly; otherwise witnesses are sampled from each side and
/// completed to witnesses of the other.
FunctorialityReport check_functoriality(const OpenSystem& a, const OpenSystem& b,
                                        const FunctorialityOptions& options = {});

}  // namespace opensys
