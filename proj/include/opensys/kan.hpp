#pragma once

#include <memory>
#include <utility>

#include "opensys/decor.hpp"

namespace opensys {

/// An element (X --e--> N, s in F N) of Lan F (X), with e in E of the
/// source system. Represents an isomorphism class of objects of X/E.
template <class Dec>
struct LanElement {
  FinFunction e;
  Dec s;
};

/// kappa_X : F X -> Lan F X, s |-> (X == X, s).
template <DecorationFunctor F>
LanElement<typename F::Decoration> kappa(const F& source, const FinSet& x, typename F::Decoration s) {
  if (source.carrier(s) != x.size()) throw SpaceMismatch("decoration does not live over X");
  return {identity(x), std::move(s)};
}

/// Lan F (f) for a cospan f = (X -> M <- Y): push out e along the left leg,
/// factor j_M o right leg as m e', and return (e', F(m^op) F(j_N) s).
template <DecorationFunctor F>
LanElement<typename F::Decoration> lan_apply(const F& source, const Cospan& f,
                                             const LanElement<typename F::Decoration>& x) {
  if (!(f.left_foot() == x.e.dom())) {
    throw FootMismatch("cospan foot of size " + std::to_string(f.left_foot().size()) +
                       " applied to a Lan element over a set of size " + std::to_string(x.e.dom().size()));
  }
  Pushout p = pushout(x.e, f.left());
  EpiMono em = factor(source.system(), compose(f.right(), p.right));
  return {std::move(em.epi), source.transport(Cospan(p.left, em.mono), x.s)};
}

/// Equality of isomorphism classes: a bijection of codomains commuting with
/// the e's that transports one decoration onto the other.
template <DecorationFunctor F>
bool lan_element_equal(const F& source, const LanElement<typename F::Decoration>& x,
                       const LanElement<typename F::Decoration>& y, std::size_t bound = kDefaultIsoSearchBound) {
  if (!(x.e.dom() == y.e.dom())) throw FootMismatch("Lan elements over different sets");
  Cospan cx(x.e, initial_map(x.e.cod()));
  Cospan cy(y.e, initial_map(y.e.cod()));
  return find_apex_iso(
             cx, cy, [&](const FinFunction& phi) { return source.equal(push(source, phi, x.s), y.s); }, bound)
      .has_value();
}

/// Lan F as decorating data on Cospan(FinSet): a cospan algebra with
/// system (I, C). Laxator (e, s), (e', t) |-> (e + e', phi(s, t)).
template <DecorationFunctor F>
class LanFunctor {
 public:
  using Decoration = LanElement<typename F::Decoration>;

  explicit LanFunctor(std::shared_ptr<const F> source) : source_(std::move(source)) {}

  const std::shared_ptr<const F>& source() const { return source_; }
  FactSys system() const { return FactSys::IsoAll; }
  Decoration transport(const Cospan& c, const Decoration& x) const { return lan_apply(*source_, c, x); }
  Decoration laxator(const Decoration& x, const Decoration& y) const {
    return {coproduct_map(x.e, y.e), source_->laxator(x.s, y.s)};
  }
  Decoration unit() const { return {FinFunction(FinSet(0), FinSet(0), {}), source_->unit()}; }
  bool equal(const Decoration& x, const Decoration& y) const { return lan_element_equal(*source_, x, y); }
  std::size_t carrier(const Decoration& x) const { return x.e.dom().size(); }

 private:
  std::shared_ptr<const F> source_;
};

/// beta_X of Kan(A, alpha) with A = id: factor e = m' e' in the target
/// system and return (e', G(m'^op) alpha_N(s)).
template <DecorationFunctor F, DecorationFunctor G>
LanElement<typename G::Decoration> kan_on_morphism(const DecDataMorphism<F, G>& phi,
                                                   const LanElement<typename F::Decoration>& x) {
  EpiMono em = factor(phi.target->system(), x.e);
  return {std::move(em.epi), phi.target->transport(opposite_of(em.mono), phi.alpha(x.s))};
}

/// The identification of a decorated corelation (X -> N <- Y, s) with the
/// Lan element ([i, o], s) over X + Y.
template <DecorationFunctor F>
LanElement<typename F::Decoration> as_lan_element(const DecoratedMorphism<F>& m) {
  return {m.cospan().copaired(), m.decoration()};
}

/// Composition in (Lan F)Corel_(I,C): apply Lan F to the cospan
/// X+Y+Y+Z --(id + [id,id] + id)--> X+Y+Z <--[i_X, i_Z]-- X+Z after the laxator.
template <DecorationFunctor F>
LanElement<typename F::Decoration> lan_compose(const F& source, const FinSet& x, const FinSet& y, const FinSet& z,
                                               const LanElement<typename F::Decoration>& a,
                                               const LanElement<typename F::Decoration>& b) {
  if (a.e.dom().size() != x.size() + y.size() || b.e.dom().size() != y.size() + z.size()) {
    throw FootMismatch("Lan elements do not live over X+Y and Y+Z");
  }
  const std::size_t nx = x.size(), ny = y.size(), nz = z.size();
  std::vector<std::size_t> merge, include;
  for (std::size_t k = 0; k < nx + ny; ++k) merge.push_back(k);
  for (std::size_t k = 0; k < ny + nz; ++k) merge.push_back(nx + k);
  for (std::size_t k = 0; k < nx; ++k) include.push_back(k);
  for (std::size_t k = 0; k < nz; ++k) include.push_back(nx + ny + k);
  const std::size_t apex = nx + ny + nz;
  Cospan comp(FinFunction(apex, std::move(merge)), FinFunction(apex, std::move(include)));
  LanElement<typename F::Decoration> joint{coproduct_map(a.e, b.e), source.laxator(a.s, b.s)};
  return lan_apply(source, comp, joint);
}

}  // namespace opensys
