#pragma once

#include <concepts>
#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "opensys/cospan.hpp"
#include "opensys/error.hpp"

namespace opensys {

/// A lax symmetric monoidal functor F : (C;M^op, +) -> (Set, x) on FinSet,
/// where (E, M) is `system()`.
///
/// `transport(c, s)` applies F to a morphism N --f--> P <--m-- P' of C;M^op
/// (m in M) and returns a decoration on P'. `carrier(s)` is the size of the
/// finite set a decoration lives over; `equal` decides equality in F(N).
template <class F>
concept DecorationFunctor = requires(const F& f, const typename F::Decoration& s, const Cospan& c) {
  typename F::Decoration;
  { f.system() } -> std::same_as<FactSys>;
  { f.transport(c, s) } -> std::same_as<typename F::Decoration>;
  { f.laxator(s, s) } -> std::same_as<typename F::Decoration>;
  { f.unit() } -> std::same_as<typename F::Decoration>;
  { f.equal(s, s) } -> std::same_as<bool>;
  { f.carrier(s) } -> std::convertible_to<std::size_t>;
};

namespace detail {

template <DecorationFunctor F>
void check_transport_leg(const F& functor, const Cospan& c) {
  if (!in_m(functor.system(), c.right())) {
    throw InvalidValue("transport along a cospan whose right leg is not in M of " +
                       std::string(to_string(functor.system())));
  }
}

}  // namespace detail

/// Transport along a plain map f : N -> P.
template <DecorationFunctor F>
typename F::Decoration push(const F& functor, const FinFunction& f, const typename F::Decoration& s) {
  return functor.transport(cospan_of(f), s);
}

/// A decorated corelation (X -> N <- Y, s in F N).
template <DecorationFunctor F>
class DecoratedMorphism {
 public:
  using Decoration = typename F::Decoration;

  /// Throws InvalidValue if the corelation's system differs from the
  /// functor's or the decoration does not live over the apex.
  DecoratedMorphism(std::shared_ptr<const F> functor, Corelation corelation, Decoration decoration)
      : functor_(std::move(functor)), corelation_(std::move(corelation)), decoration_(std::move(decoration)) {
    if (corelation_.system() != functor_->system()) {
      throw InvalidValue("corelation system does not match the decoration functor");
    }
    if (functor_->carrier(decoration_) != corelation_.apex().size()) {
      throw InvalidValue("decoration lives over a set of size " +
                         std::to_string(functor_->carrier(decoration_)) + ", apex has size " +
                         std::to_string(corelation_.apex().size()));
    }
  }

  /// Convenience: the cospan must already be in E.
  DecoratedMorphism(std::shared_ptr<const F> functor, Cospan cospan, Decoration decoration)
      : DecoratedMorphism(functor, Corelation(std::move(cospan), functor->system()), std::move(decoration)) {}

  const std::shared_ptr<const F>& functor() const { return functor_; }
  const Corelation& corelation() const { return corelation_; }
  const Cospan& cospan() const { return corelation_.cospan(); }
  const Decoration& decoration() const { return decoration_; }
  const FinSet& left_foot() const { return corelation_.left_foot(); }
  const FinSet& right_foot() const { return corelation_.right_foot(); }
  const FinSet& apex() const { return corelation_.apex(); }

 private:
  std::shared_ptr<const F> functor_;
  Corelation corelation_;
  Decoration decoration_;
};

namespace detail {

template <DecorationFunctor F>
void check_same_functor(const DecoratedMorphism<F>& a, const DecoratedMorphism<F>& b) {
  if (a.functor() != b.functor()) throw FunctorMismatch("decorated morphisms over different functors");
}

}  // namespace detail

/// The empty decoration F(!) phi_I on N.
template <DecorationFunctor F>
typename F::Decoration empty_decoration(const F& functor, const FinSet& n) {
  return push(functor, initial_map(n), functor.unit());
}

/// A corelation with its empty decoration.
template <DecorationFunctor F>
DecoratedMorphism<F> undecorated(std::shared_ptr<const F> functor, const Corelation& c) {
  auto s = empty_decoration(*functor, c.apex());
  return DecoratedMorphism<F>(std::move(functor), c, std::move(s));
}

template <DecorationFunctor F>
DecoratedMorphism<F> decorated_identity(std::shared_ptr<const F> functor, const FinSet& x) {
  FactSys sys = functor->system();
  return undecorated(std::move(functor), to_corelation(identity_cospan(x), sys).corelation);
}

/// Embed a cospan as the E-part of itself with the empty decoration.
template <DecorationFunctor F>
DecoratedMorphism<F> lift_cospan(std::shared_ptr<const F> functor, const Cospan& c) {
  FactSys sys = functor->system();
  return undecorated(std::move(functor), to_corelation(c, sys).corelation);
}

template <DecorationFunctor F>
DecoratedMorphism<F> lift_frobenius(std::shared_ptr<const F> functor, Generator which, const FinSet& x) {
  return lift_cospan(std::move(functor), frobenius_generator(which, x));
}

/// `a` followed by `b`: the decoration is F(m^op) F[j_N, j_M] phi(s, t).
template <DecorationFunctor F>
DecoratedMorphism<F> decorated_compose(const DecoratedMorphism<F>& a, const DecoratedMorphism<F>& b) {
  detail::check_same_functor(a, b);
  const F& functor = *a.functor();
  CorelationComposite cc = corelation_compose(a.corelation(), b.corelation());
  auto joint = functor.laxator(a.decoration(), b.decoration());
  Cospan transport(copair(cc.pushout.left, cc.pushout.right), cc.witness);
  auto s = functor.transport(transport, joint);
  return DecoratedMorphism<F>(a.functor(), std::move(cc.corelation), std::move(s));
}

template <DecorationFunctor F>
DecoratedMorphism<F> decorated_tensor(const DecoratedMorphism<F>& a, const DecoratedMorphism<F>& b) {
  detail::check_same_functor(a, b);
  return DecoratedMorphism<F>(a.functor(), corelation_tensor(a.corelation(), b.corelation()),
                              a.functor()->laxator(a.decoration(), b.decoration()));
}

/// An apex bijection phi witnessing a ~ b with F(phi)(s_a) = s_b, if any.
template <DecorationFunctor F>
std::optional<FinFunction> decorated_iso(const DecoratedMorphism<F>& a, const DecoratedMorphism<F>& b,
                                         std::size_t bound = kDefaultIsoSearchBound) {
  detail::check_same_functor(a, b);
  if (!(a.left_foot() == b.left_foot()) || !(a.right_foot() == b.right_foot())) return std::nullopt;
  const F& functor = *a.functor();
  return find_apex_iso(
      a.cospan(), b.cospan(),
      [&](const FinFunction& phi) { return functor.equal(push(functor, phi, a.decoration()), b.decoration()); },
      bound);
}

template <DecorationFunctor F>
bool decorated_equal(const DecoratedMorphism<F>& a, const DecoratedMorphism<F>& b,
                     std::size_t bound = kDefaultIsoSearchBound) {
  return decorated_iso(a, b, bound).has_value();
}

/// True when A(M) is contained in M' for A = identity.
inline bool m_contained(FactSys source, FactSys target) {
  switch (source) {
    case FactSys::AllIso: return true;
    case FactSys::EpiMono: return target != FactSys::AllIso;
    case FactSys::IsoAll: return target == FactSys::IsoAll;
  }
  return false;
}

/// A morphism (A, alpha) : F -> G of decorating data with A the identity on
/// FinSet and alpha_N : F N -> G N a monoidal natural family.
template <DecorationFunctor F, DecorationFunctor G>
struct DecDataMorphism {
  using Alpha = std::function<typename G::Decoration(const typename F::Decoration&)>;

  /// Throws InvalidValue unless M of the source lies in M of the target.
  DecDataMorphism(std::shared_ptr<const F> src, std::shared_ptr<const G> tgt, Alpha a)
      : source(std::move(src)), target(std::move(tgt)), alpha(std::move(a)) {
    if (!m_contained(source->system(), target->system())) {
      throw InvalidValue("identity functor does not send M of " + std::string(to_string(source->system())) +
                         " into M of " + std::string(to_string(target->system())));
    }
  }

  std::shared_ptr<const F> source;
  std::shared_ptr<const G> target;
  Alpha alpha;
};

/// (B, beta) o (A, alpha) = (BA, beta o alpha).
template <DecorationFunctor F, DecorationFunctor G, DecorationFunctor H>
DecDataMorphism<F, H> then(const DecDataMorphism<F, G>& first, const DecDataMorphism<G, H>& second) {
  if (first.target != second.source) throw SourceMismatch("DecData morphisms are not composable");
  return DecDataMorphism<F, H>(first.source, second.target,
                               [a = first.alpha, b = second.alpha](const typename F::Decoration& s) {
                                 return b(a(s));
                               });
}

/// The hypergraph functor (A, alpha)Corel on one morphism: factor [i, o] in
/// the target system as m' e', keep e' as the corelation and decorate with
/// G(m'^op)(alpha_N(s)).
template <DecorationFunctor F, DecorationFunctor G>
DecoratedMorphism<G> apply_decdata_morphism(const DecDataMorphism<F, G>& phi, const DecoratedMorphism<F>& f) {
  if (f.functor() != phi.source) throw SourceMismatch("decorated morphism is not over the morphism's source");
  CorelationWithWitness cw = to_corelation(f.cospan(), phi.target->system());
  auto s = phi.target->transport(opposite_of(cw.witness), phi.alpha(f.decoration()));
  return DecoratedMorphism<G>(phi.target, std::move(cw.corelation), std::move(s));
}

}  // namespace opensys
