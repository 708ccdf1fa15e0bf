#include "opensys/blackbox.hpp"

#include <random>
#include <sstream>

#include "opensys/error.hpp"
#include "opensys/solver.hpp"

namespace opensys {

ConstraintRelation SarelDecoration::transport(const Cospan& c, const ConstraintRelation& r) const {
  if (!(r.left() == c.left_foot()) || r.right().size() != 0) {
    throw BoundaryMismatch("decoration is not a relation on the cospan's source");
  }
  return transpose(relation_compose(transpose(r), frob_of_cospan(c)));
}

ConstraintRelation SarelDecoration::unit() const { return ConstraintRelation(FinSet(0), FinSet(0), FinSet(0), {}); }

bool SarelDecoration::equal(const ConstraintRelation& r, const ConstraintRelation& s) const {
  if (!(r.left() == s.left()) || !(r.right() == s.right())) return false;
  if (r.is_linear() && s.is_linear() && r.inequalities().empty() && s.inequalities().empty()) {
    return same_linear_relation(r, s);
  }
  return r == s;
}

const std::shared_ptr<const SarelDecoration>& sarel_functor() {
  static const auto instance = std::make_shared<const SarelDecoration>();
  return instance;
}

ConstraintRelation steady_state_graph(const PolyVectorField& v) {
  const std::size_t n = v.dimension();
  const std::size_t nvars = 2 * n;
  std::vector<std::size_t> into(n);
  for (std::size_t k = 0; k < n; ++k) into[k] = k;
  std::vector<Polynomial> eqs;
  for (std::size_t k = 0; k < n; ++k) {
    eqs.push_back(Polynomial::variable(nvars, n + k) - v[k].rename(into, nvars));
  }
  return ConstraintRelation(v.space(), FinSet(0), FinSet(0), std::move(eqs));
}

const DecDataMorphism<DynamDecoration, SarelDecoration>& black_box_morphism() {
  static const DecDataMorphism<DynamDecoration, SarelDecoration> instance(dynam_functor(), sarel_functor(),
                                                                          steady_state_graph);
  return instance;
}

ConstraintRelation relation_of(const RelationMorphism& r) {
  const std::size_t nx = r.left_foot().size(), ny = r.right_foot().size();
  ConstraintRelation whole = r.functor()->transport(opposite_of(r.cospan().copaired()), r.decoration());
  const std::size_t nz = whole.internal().size();
  // cL(X+Y), fL(X+Y), z  ->  cL(X), fL(X), cR(Y), fR(Y), z
  std::vector<std::size_t> map(whole.variable_count());
  for (std::size_t x = 0; x < nx; ++x) {
    map[x] = x;
    map[nx + ny + x] = nx + x;
  }
  for (std::size_t y = 0; y < ny; ++y) {
    map[nx + y] = 2 * nx + y;
    map[2 * nx + ny + y] = 2 * nx + ny + y;
  }
  const std::size_t total = 2 * (nx + ny) + nz;
  for (std::size_t k = 0; k < nz; ++k) map[2 * (nx + ny) + k] = 2 * (nx + ny) + k;
  std::vector<Polynomial> eqs, ineqs;
  for (const auto& p : whole.equations()) eqs.push_back(p.rename(map, total));
  for (const auto& p : whole.inequalities()) ineqs.push_back(p.rename(map, total));
  return ConstraintRelation(r.left_foot(), r.right_foot(), whole.internal(), std::move(eqs), std::move(ineqs),
                            whole.internal_kinds());
}

ConstraintRelation black_box(const OpenSystem& sys) {
  const FinFunction& i = sys.cospan().left();
  const FinFunction& o = sys.cospan().right();
  const PolyVectorField& v = sys.decoration();
  const std::size_t nx = i.dom().size(), ny = o.dom().size(), nn = sys.apex().size();
  const std::size_t b = 2 * (nx + ny), total = b + nn;
  auto var = [&](std::size_t k) { return Polynomial::variable(total, k); };
  auto z = [&](std::size_t n) { return var(b + n); };

  std::vector<Polynomial> eqs;
  for (std::size_t x = 0; x < nx; ++x) eqs.push_back(var(x) - z(i(x)));
  for (std::size_t y = 0; y < ny; ++y) eqs.push_back(var(2 * nx + y) - z(o(y)));
  std::vector<std::size_t> into(nn);
  for (std::size_t n = 0; n < nn; ++n) into[n] = b + n;
  std::vector<Polynomial> balance;
  for (std::size_t n = 0; n < nn; ++n) balance.push_back(v[n].rename(into, total));
  for (std::size_t x = 0; x < nx; ++x) balance[i(x)] -= var(nx + x);
  for (std::size_t y = 0; y < ny; ++y) balance[o(y)] -= var(2 * nx + ny + y);
  for (auto& p : balance) {
    if (!p.is_zero()) eqs.push_back(std::move(p));
  }
  return ConstraintRelation(i.dom(), o.dom(), sys.apex(), std::move(eqs));
}

ConstraintRelation black_box_via_decorations(const OpenSystem& sys) {
  return relation_of(apply_decdata_morphism(black_box_morphism(), sys));
}

namespace {

std::vector<double> boundary_part(const ConstraintRelation& r, const WitnessPoint& w) {
  return {w.values.begin(), w.values.begin() + static_cast<std::ptrdiff_t>(r.boundary_variable_count())};
}

std::string describe(const ConstraintRelation& r, const std::vector<double>& boundary) {
  std::ostringstream os;
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    if (k) os << ", ";
    os << r.variable_name(k) << "=" << boundary[k];
  }
  return os.str();
}

}  // namespace

FunctorialityReport check_functoriality(const OpenSystem& a, const OpenSystem& b,
                                        const FunctorialityOptions& options) {
  OpenSystem composite = decorated_compose(a, b);
  ConstraintRelation lhs = black_box(composite);
  ConstraintRelation rhs = relation_compose(black_box(a), black_box(b));
  FunctorialityReport report;

  if (lhs.is_linear() && rhs.is_linear()) {
    report.exact = true;
    report.passed = same_linear_relation(lhs, rhs);
    if (!report.passed) report.detail = "steady-state subspaces differ";
    return report;
  }

  // Internals: lhs has one concentration per point of the pushout P; rhs has
  // shared c_Y, shared f_Y, then a's and b's species.
  CospanComposite cc = cospan_compose_detailed(a.cospan(), b.cospan());
  const FinFunction& jn = cc.pushout.left;
  const FinFunction& jm = cc.pushout.right;
  const FinFunction& o = a.cospan().right();
  const std::size_t ny = o.dom().size(), nn = a.apex().size(), nm = b.apex().size();
  const std::size_t np = cc.result.apex().size();
  const std::size_t lhs_b = lhs.boundary_variable_count(), rhs_b = rhs.boundary_variable_count();

  std::mt19937_64 rng(options.seed);
  NewtonOptions newton;
  newton.tolerance = options.tolerance;

  for (int s = 0; s < options.samples; ++s) {
    auto w = sample_witness(lhs, rng, 20, newton);
    if (!w) {
      report.detail = "could not sample a steady state of the composite";
      return report;
    }
    std::vector<double> hint(rhs.internal().size(), 0.0);
    for (std::size_t y = 0; y < ny; ++y) hint[y] = w->values[lhs_b + jn(o(y))];
    for (std::size_t n = 0; n < nn; ++n) hint[2 * ny + n] = w->values[lhs_b + jn(n)];
    for (std::size_t m = 0; m < nm; ++m) hint[2 * ny + nn + m] = w->values[lhs_b + jm(m)];
    auto boundary = boundary_part(lhs, *w);
    if (!complete_witness(rhs, boundary, {hint}, rng, 10, newton)) {
      report.detail = "composite steady state not in the composed relation: " + describe(lhs, boundary);
      return report;
    }
    ++report.samples_checked;
  }
  for (int s = 0; s < options.samples; ++s) {
    auto w = sample_witness(rhs, rng, 20, newton);
    if (!w) {
      report.detail = "could not sample a point of the composed relation";
      return report;
    }
    std::vector<double> hint(np, 1.0);
    for (std::size_t n = 0; n < nn; ++n) hint[jn(n)] = w->values[rhs_b + 2 * ny + n];
    for (std::size_t m = 0; m < nm; ++m) hint[jm(m)] = w->values[rhs_b + 2 * ny + nn + m];
    auto boundary = boundary_part(rhs, *w);
    if (!complete_witness(lhs, boundary, {hint}, rng, 10, newton)) {
      report.detail = "composed relation point not a steady state of the composite: " + describe(rhs, boundary);
      return report;
    }
    ++report.samples_checked;
  }
  report.passed = true;
  return report;
}

}  // namespace opensys
