#include "opensys/dynam.hpp"

#include <algorithm>

namespace opensys {

PolyVectorField::PolyVectorField(FinSet space) : space_(std::move(space)) {
  components_.assign(space_.size(), Polynomial(space_.size()));
}

PolyVectorField::PolyVectorField(FinSet space, std::vector<Polynomial> components)
    : space_(std::move(space)), components_(std::move(components)) {
  if (components_.size() != space_.size()) {
    throw DimensionMismatch("vector field has " + std::to_string(components_.size()) + " components on a space of size " +
                            std::to_string(space_.size()));
  }
  for (const auto& p : components_) {
    if (p.nvars() != space_.size()) throw DimensionMismatch("vector field component over the wrong variables");
  }
}

bool PolyVectorField::is_linear() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_linear(); });
}

ReactionNetwork::ReactionNetwork(FinSet species, std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
  for (const auto& r : reactions_) {
    if (r.input.size() != species_.size() || r.output.size() != species_.size()) {
      throw InvalidValue("reaction '" + r.name + "' has stoichiometry of the wrong length");
    }
    if (r.rate <= 0) throw InvalidValue("reaction '" + r.name + "' has a non-positive rate");
  }
}

PolyVectorField mass_action(const ReactionNetwork& net) {
  const std::size_t n = net.species().size();
  std::vector<Polynomial> v(n, Polynomial(n));
  for (const auto& r : net.reactions()) {
    Exponents e(r.input.begin(), r.input.end());
    for (std::size_t i = 0; i < n; ++i) {
      Rational net_change = Rational(r.output[i]) - Rational(r.input[i]);
      if (net_change != 0) v[i].add_term(e, r.rate * net_change);
    }
  }
  return PolyVectorField(net.species(), std::move(v));
}

Polynomial pullback(const FinFunction& f, const Polynomial& p) {
  if (p.nvars() != f.dom().size()) throw SpaceMismatch("polynomial is not over the domain of the map");
  return p.rename(f.table(), f.cod().size());
}

PolyVectorField pushforward_field(const FinFunction& f, const PolyVectorField& v) {
  if (!(v.space() == f.dom())) {
    throw SpaceMismatch("field on a space of size " + std::to_string(v.dimension()) + " pushed along a map from size " +
                        std::to_string(f.dom().size()));
  }
  const std::size_t m = f.cod().size();
  std::vector<Polynomial> out(m, Polynomial(m));
  for (std::size_t x = 0; x < f.size(); ++x) out[f(x)] += pullback(f, v[x]);
  return PolyVectorField(f.cod(), std::move(out));
}

PolyVectorField block_sum(const PolyVectorField& v, const PolyVectorField& w) {
  Coproduct s = coproduct(v.space(), w.space());
  const std::size_t n = s.sum.size();
  std::vector<Polynomial> out;
  out.reserve(n);
  for (const auto& p : v.components()) out.push_back(p.rename(s.inl.table(), n));
  for (const auto& p : w.components()) out.push_back(p.rename(s.inr.table(), n));
  return PolyVectorField(s.sum, std::move(out));
}

PolyVectorField DynamDecoration::transport(const Cospan& c, const PolyVectorField& v) const {
  detail::check_transport_leg(*this, c);
  if (v.dimension() != c.left_foot().size()) throw SpaceMismatch("vector field does not live over the left foot");
  return pushforward_field(compose(c.left(), inverse(c.right())).with_sets(v.space(), c.right_foot()), v);
}

const std::shared_ptr<const DynamDecoration>& dynam_functor() {
  static const std::shared_ptr<const DynamDecoration> instance = std::make_shared<const DynamDecoration>();
  return instance;
}

OpenSystem open_network_to_morphism(const OpenNetwork& onet) {
  return OpenSystem(dynam_functor(), Cospan(onet.inputs, onet.outputs), mass_action(onet.network));
}

}  // namespace opensys
