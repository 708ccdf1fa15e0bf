#include "opensys/sarel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <Eigen/Dense>

#include "opensys/error.hpp"

namespace opensys {

namespace {

// Variable offsets of a relation with the given boundary and internal sizes.
struct Layout {
  std::size_t left, right, internal;

  std::size_t cl(std::size_t k) const { return k; }
  std::size_t fl(std::size_t k) const { return left + k; }
  std::size_t cr(std::size_t k) const { return 2 * left + k; }
  std::size_t fr(std::size_t k) const { return 2 * left + right + k; }
  std::size_t z(std::size_t k) const { return 2 * (left + right) + k; }
  std::size_t boundary() const { return 2 * (left + right); }
  std::size_t total() const { return boundary() + internal; }
};

Layout layout_of(const ConstraintRelation& r) { return {r.left().size(), r.right().size(), r.internal().size()}; }

FinSet unique_labelled(std::vector<std::string> labels) {
  std::unordered_set<std::string> used;
  for (auto& l : labels) {
    while (used.count(l)) l += "'";
    used.insert(l);
  }
  return FinSet(std::move(labels));
}

std::vector<std::string> labels_of(const FinSet& s, const std::string& prefix = "") {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(prefix + s.label(k));
  return out;
}

std::vector<Polynomial> renamed(const std::vector<Polynomial>& ps, const std::vector<std::size_t>& map,
                                std::size_t nvars, const std::vector<int>& signs = {}) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.rename(map, nvars, signs));
  return out;
}

std::vector<VariableKind> kinds_or_default(std::vector<VariableKind> kinds, std::size_t n) {
  if (kinds.empty()) kinds.assign(n, VariableKind::Concentration);
  return kinds;
}

}  // namespace

ConstraintRelation::ConstraintRelation(FinSet left, FinSet right, FinSet internal, std::vector<Polynomial> equations,
                                       std::vector<Polynomial> inequalities, std::vector<VariableKind> internal_kinds)
    : left_(std::move(left)),
      right_(std::move(right)),
      internal_(std::move(internal)),
      equations_(std::move(equations)),
      inequalities_(std::move(inequalities)),
      internal_kinds_(kinds_or_default(std::move(internal_kinds), internal_.size())) {
  if (internal_kinds_.size() != internal_.size()) {
    throw DimensionMismatch("internal variable kinds do not match the internal set");
  }
  const std::size_t n = variable_count();
  for (const auto* list : {&equations_, &inequalities_}) {
    for (const auto& p : *list) {
      if (p.nvars() != n) {
        throw DimensionMismatch("constraint over " + std::to_string(p.nvars()) + " variables, relation has " +
                                std::to_string(n));
      }
      if (!p.is_linear()) linear_ = false;
    }
  }
}

VariableKind ConstraintRelation::kind(std::size_t var) const {
  Layout l = layout_of(*this);
  if (var >= l.boundary()) return internal_kinds_.at(var - l.boundary());
  if (var < l.fl(0) || (var >= l.cr(0) && var < l.fr(0))) return VariableKind::Concentration;
  return VariableKind::Flow;
}

std::string ConstraintRelation::variable_name(std::size_t var) const {
  Layout l = layout_of(*this);
  if (var < l.fl(0)) return "cL." + left_.label(var);
  if (var < l.cr(0)) return "fL." + left_.label(var - l.fl(0));
  if (var < l.fr(0)) return "cR." + right_.label(var - l.cr(0));
  if (var < l.z(0)) return "fR." + right_.label(var - l.fr(0));
  return "z." + internal_.label(var - l.z(0));
}

std::optional<std::size_t> ConstraintRelation::find_variable(const std::string& name) const {
  for (std::size_t k = 0; k < variable_count(); ++k) {
    if (variable_name(k) == name) return k;
  }
  return std::nullopt;
}

ConstraintRelation identity_relation(const FinSet& x) { return frob_of_cospan(identity_cospan(x)); }

ConstraintRelation frob_generator_R2(Generator which) {
  FinSet one(1), two(2), none(0);
  auto var = [](std::size_t n, std::size_t k) { return Polynomial::variable(n, k); };
  switch (which) {
    case Generator::Mu: {
      Layout l{2, 1, 0};
      const std::size_t n = l.total();
      return ConstraintRelation(two, one, none,
                                {var(n, l.cl(0)) - var(n, l.cr(0)), var(n, l.cl(1)) - var(n, l.cr(0)),
                                 var(n, l.fl(0)) + var(n, l.fl(1)) + var(n, l.fr(0))});
    }
    case Generator::Eta: {
      Layout l{0, 1, 0};
      return ConstraintRelation(none, one, none, {var(l.total(), l.fr(0))});
    }
    case Generator::Delta: return transpose(frob_generator_R2(Generator::Mu));
    case Generator::Epsilon: return transpose(frob_generator_R2(Generator::Eta));
  }
  return identity_relation(one);
}

ConstraintRelation frob_of_cospan(const Cospan& c) {
  Layout l{c.left_foot().size(), c.right_foot().size(), c.apex().size()};
  const std::size_t n = l.total();
  std::vector<Polynomial> eqs;
  for (std::size_t x = 0; x < l.left; ++x) {
    eqs.push_back(Polynomial::variable(n, l.cl(x)) - Polynomial::variable(n, l.z(c.left()(x))));
  }
  for (std::size_t y = 0; y < l.right; ++y) {
    eqs.push_back(Polynomial::variable(n, l.cr(y)) - Polynomial::variable(n, l.z(c.right()(y))));
  }
  std::vector<Polynomial> balance(l.internal, Polynomial(n));
  for (std::size_t x = 0; x < l.left; ++x) balance[c.left()(x)] += Polynomial::variable(n, l.fl(x));
  for (std::size_t y = 0; y < l.right; ++y) balance[c.right()(y)] += Polynomial::variable(n, l.fr(y));
  for (auto& b : balance) {
    if (!b.is_zero()) eqs.push_back(std::move(b));
  }
  return ConstraintRelation(c.left_foot(), c.right_foot(), c.apex(), std::move(eqs));
}

ConstraintRelation relation_compose(const ConstraintRelation& u, const ConstraintRelation& v) {
  if (!(u.right() == v.left())) {
    throw BoundaryMismatch("cannot compose relations over boundaries of size " + std::to_string(u.right().size()) +
                           " and " + std::to_string(v.left().size()));
  }
  Layout lu = layout_of(u), lv = layout_of(v);
  const std::size_t ny = lu.right;
  Layout out{lu.left, lv.right, 2 * ny + lu.internal + lv.internal};
  const std::size_t n = out.total();
  auto shared_c = [&](std::size_t k) { return out.z(k); };
  auto shared_f = [&](std::size_t k) { return out.z(ny + k); };

  std::vector<std::size_t> mu(lu.total()), mv(lv.total());
  std::vector<int> su(lu.total(), 1);
  for (std::size_t k = 0; k < lu.left; ++k) {
    mu[lu.cl(k)] = out.cl(k);
    mu[lu.fl(k)] = out.fl(k);
  }
  for (std::size_t k = 0; k < ny; ++k) {
    mu[lu.cr(k)] = shared_c(k);
    mu[lu.fr(k)] = shared_f(k);
    su[lu.fr(k)] = -1;
  }
  for (std::size_t k = 0; k < lu.internal; ++k) mu[lu.z(k)] = out.z(2 * ny + k);
  for (std::size_t k = 0; k < ny; ++k) {
    mv[lv.cl(k)] = shared_c(k);
    mv[lv.fl(k)] = shared_f(k);
  }
  for (std::size_t k = 0; k < lv.right; ++k) {
    mv[lv.cr(k)] = out.cr(k);
    mv[lv.fr(k)] = out.fr(k);
  }
  for (std::size_t k = 0; k < lv.internal; ++k) mv[lv.z(k)] = out.z(2 * ny + lu.internal + k);

  std::vector<Polynomial> eqs = renamed(u.equations(), mu, n, su);
  for (auto& p : renamed(v.equations(), mv, n)) eqs.push_back(std::move(p));
  std::vector<Polynomial> ineqs = renamed(u.inequalities(), mu, n, su);
  for (auto& p : renamed(v.inequalities(), mv, n)) ineqs.push_back(std::move(p));

  std::vector<std::string> labels = labels_of(u.right(), "c.");
  for (auto& l : labels_of(u.right(), "f.")) labels.push_back(std::move(l));
  for (auto& l : labels_of(u.internal())) labels.push_back(std::move(l));
  for (auto& l : labels_of(v.internal())) labels.push_back(std::move(l));
  std::vector<VariableKind> kinds(ny, VariableKind::Concentration);
  kinds.insert(kinds.end(), ny, VariableKind::Flow);
  kinds.insert(kinds.end(), u.internal_kinds().begin(), u.internal_kinds().end());
  kinds.insert(kinds.end(), v.internal_kinds().begin(), v.internal_kinds().end());

  return ConstraintRelation(u.left(), v.right(), unique_labelled(std::move(labels)), std::move(eqs), std::move(ineqs),
                            std::move(kinds));
}

ConstraintRelation relation_tensor(const ConstraintRelation& u, const ConstraintRelation& v) {
  Layout lu = layout_of(u), lv = layout_of(v);
  Layout out{lu.left + lv.left, lu.right + lv.right, lu.internal + lv.internal};
  std::vector<std::size_t> mu(lu.total()), mv(lv.total());
  for (std::size_t k = 0; k < lu.left; ++k) {
    mu[lu.cl(k)] = out.cl(k);
    mu[lu.fl(k)] = out.fl(k);
  }
  for (std::size_t k = 0; k < lv.left; ++k) {
    mv[lv.cl(k)] = out.cl(lu.left + k);
    mv[lv.fl(k)] = out.fl(lu.left + k);
  }
  for (std::size_t k = 0; k < lu.right; ++k) {
    mu[lu.cr(k)] = out.cr(k);
    mu[lu.fr(k)] = out.fr(k);
  }
  for (std::size_t k = 0; k < lv.right; ++k) {
    mv[lv.cr(k)] = out.cr(lu.right + k);
    mv[lv.fr(k)] = out.fr(lu.right + k);
  }
  for (std::size_t k = 0; k < lu.internal; ++k) mu[lu.z(k)] = out.z(k);
  for (std::size_t k = 0; k < lv.internal; ++k) mv[lv.z(k)] = out.z(lu.internal + k);
  const std::size_t n = out.total();
  std::vector<Polynomial> eqs = renamed(u.equations(), mu, n);
  for (auto& p : renamed(v.equations(), mv, n)) eqs.push_back(std::move(p));
  std::vector<Polynomial> ineqs = renamed(u.inequalities(), mu, n);
  for (auto& p : renamed(v.inequalities(), mv, n)) ineqs.push_back(std::move(p));
  std::vector<std::string> labels = labels_of(u.internal());
  for (auto& l : labels_of(v.internal())) labels.push_back(std::move(l));
  std::vector<VariableKind> kinds = u.internal_kinds();
  kinds.insert(kinds.end(), v.internal_kinds().begin(), v.internal_kinds().end());
  return ConstraintRelation(coproduct(u.left(), v.left()).sum, coproduct(u.right(), v.right()).sum,
                            unique_labelled(std::move(labels)), std::move(eqs), std::move(ineqs), std::move(kinds));
}

ConstraintRelation transpose(const ConstraintRelation& r) {
  Layout l = layout_of(r);
  Layout out{l.right, l.left, l.internal};
  std::vector<std::size_t> map(l.total());
  for (std::size_t k = 0; k < l.left; ++k) {
    map[l.cl(k)] = out.cr(k);
    map[l.fl(k)] = out.fr(k);
  }
  for (std::size_t k = 0; k < l.right; ++k) {
    map[l.cr(k)] = out.cl(k);
    map[l.fr(k)] = out.fl(k);
  }
  for (std::size_t k = 0; k < l.internal; ++k) map[l.z(k)] = out.z(k);
  return ConstraintRelation(r.right(), r.left(), r.internal(), renamed(r.equations(), map, l.total()),
                            renamed(r.inequalities(), map, l.total()), r.internal_kinds());
}

ConstraintRelation to_outflow_convention(const ConstraintRelation& r) {
  Layout l = layout_of(r);
  std::vector<std::size_t> map(l.total());
  std::iota(map.begin(), map.end(), std::size_t{0});
  std::vector<int> signs(l.total(), 1);
  for (std::size_t k = 0; k < l.left; ++k) signs[l.fl(k)] = -1;
  return ConstraintRelation(r.left(), r.right(), r.internal(), renamed(r.equations(), map, l.total(), signs),
                            renamed(r.inequalities(), map, l.total(), signs), r.internal_kinds());
}

ConstraintRelation linear_eliminate(const ConstraintRelation& r) {
  if (!r.is_linear()) throw NotLinear("elimination needs a linear relation");
  if (!r.inequalities().empty()) throw NotLinear("exact elimination does not handle inequalities");
  Layout l = layout_of(r);
  const std::size_t nb = l.boundary();
  std::vector<std::size_t> column_of(l.total());
  for (std::size_t k = 0; k < l.internal; ++k) column_of[l.z(k)] = k;
  for (std::size_t b = 0; b < nb; ++b) column_of[b] = l.internal + b;
  RationalMatrix m = affine_rows(r.equations(), column_of);
  std::vector<std::size_t> pivots = m.reduce();

  std::vector<Polynomial> eqs;
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    if (pivots[row] < l.internal) continue;
    if (pivots[row] == l.internal + nb) {
      eqs.assign(1, Polynomial::constant(nb, 1));
      break;
    }
    Polynomial p(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      const Rational& c = m(row, l.internal + b);
      if (c != 0) p += Polynomial::variable(nb, b) * c;
    }
    p += Polynomial::constant(nb, m(row, l.internal + nb));
    eqs.push_back(std::move(p));
  }
  return ConstraintRelation(r.left(), r.right(), FinSet(0), std::move(eqs));
}

RationalMatrix boundary_row_space(const ConstraintRelation& r) {
  ConstraintRelation e = linear_eliminate(r);
  std::vector<std::size_t> column_of(e.variable_count());
  std::iota(column_of.begin(), column_of.end(), std::size_t{0});
  RationalMatrix m = affine_rows(e.equations(), column_of);
  m.reduce();
  return m;
}

bool same_linear_relation(const ConstraintRelation& a, const ConstraintRelation& b) {
  if (!(a.left() == b.left()) || !(a.right() == b.right())) return false;
  return boundary_row_space(a) == boundary_row_space(b);
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NotMember: return "not-member";
    case Membership::NeedsWitness: return "needs-witness";
  }
  return "?";
}

Membership is_member(const ConstraintRelation& r, std::span<const Rational> boundary,
                     std::optional<std::span<const Rational>> internals) {
  Layout l = layout_of(r);
  if (boundary.size() != l.boundary()) {
    throw DimensionMismatch("expected " + std::to_string(l.boundary()) + " boundary values, got " +
                            std::to_string(boundary.size()));
  }
  if (internals && internals->size() != l.internal) {
    throw DimensionMismatch("expected " + std::to_string(l.internal) + " internal values");
  }
  if (internals || l.internal == 0) {
    std::vector<Rational> point(boundary.begin(), boundary.end());
    if (internals) point.insert(point.end(), internals->begin(), internals->end());
    for (const auto& p : r.equations()) {
      if (p.evaluate(point) != 0) return Membership::NotMember;
    }
    for (const auto& q : r.inequalities()) {
      if (q.evaluate(point) <= 0) return Membership::NotMember;
    }
    return Membership::Member;
  }
  if (!r.is_linear() || !r.inequalities().empty()) return Membership::NeedsWitness;

  RationalMatrix m(0, l.internal + 1);
  std::vector<Rational> row(l.internal + 1);
  for (const auto& p : r.equations()) {
    std::fill(row.begin(), row.end(), Rational(0));
    for (const auto& [e, c] : p.terms()) {
      std::size_t k = 0;
      while (k < e.size() && e[k] == 0) ++k;
      if (k == e.size()) {
        row[l.internal] += c;
      } else if (k >= l.boundary()) {
        row[k - l.boundary()] += c;
      } else {
        row[l.internal] += c * boundary[k];
      }
    }
    m.append_row(row);
  }
  std::vector<std::size_t> pivots = m.reduce();
  bool consistent = pivots.empty() || pivots.back() != l.internal;
  return consistent ? Membership::Member : Membership::NotMember;
}

double max_residual(const ConstraintRelation& r, std::span<const double> values) {
  if (values.size() != r.variable_count()) throw DimensionMismatch("assignment has the wrong length");
  double worst = 0.0;
  for (const auto& p : r.equations()) worst = std::max(worst, std::abs(p.evaluate(values)));
  return worst;
}

Membership is_member(const ConstraintRelation& r, std::span<const double> boundary,
                     std::optional<std::span<const double>> internals, double tolerance) {
  Layout l = layout_of(r);
  if (boundary.size() != l.boundary()) {
    throw DimensionMismatch("expected " + std::to_string(l.boundary()) + " boundary values, got " +
                            std::to_string(boundary.size()));
  }
  if (internals && internals->size() != l.internal) {
    throw DimensionMismatch("expected " + std::to_string(l.internal) + " internal values");
  }
  if (internals || l.internal == 0) {
    std::vector<double> point(boundary.begin(), boundary.end());
    if (internals) point.insert(point.end(), internals->begin(), internals->end());
    if (max_residual(r, point) > tolerance) return Membership::NotMember;
    for (const auto& q : r.inequalities()) {
      if (!(q.evaluate(std::span<const double>(point)) > 0.0)) return Membership::NotMember;
    }
    return Membership::Member;
  }
  if (!r.is_linear() || !r.inequalities().empty()) return Membership::NeedsWitness;

  const auto rows = static_cast<Eigen::Index>(r.equations().size());
  const auto cols = static_cast<Eigen::Index>(l.internal);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (const auto& [e, c] : r.equations()[static_cast<std::size_t>(i)].terms()) {
      std::size_t k = 0;
      while (k < e.size() && e[k] == 0) ++k;
      double cd = c.get_d();
      if (k == e.size()) {
        rhs(i) -= cd;
      } else if (k >= l.boundary()) {
        a(i, static_cast<Eigen::Index>(k - l.boundary())) += cd;
      } else {
        rhs(i) -= cd * boundary[k];
      }
    }
  }
  Eigen::VectorXd z = a.completeOrthogonalDecomposition().solve(rhs);
  std::vector<double> zs(z.data(), z.data() + z.size());
  return is_member(r, boundary, std::span<const double>(zs), tolerance);
}

std::string to_text(const ConstraintRelation& r) {
  std::ostringstream os;
  auto name = [&](std::size_t k) { return r.variable_name(k); };
  for (const auto& p : r.equations()) os << p.to_string(name) << " = 0\n";
  for (const auto& q : r.inequalities()) os << q.to_string(name) << " > 0\n";
  return os.str();
}

}  // namespace opensys
