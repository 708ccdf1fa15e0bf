#include "opensys/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "opensys/error.hpp"

namespace opensys {

namespace {

struct CompiledSystem {
  explicit CompiledSystem(const ConstraintRelation& r) {
    for (const auto& p : r.equations()) equations.emplace_back(p);
  }

  Eigen::VectorXd values(const std::vector<double>& x) const {
    Eigen::VectorXd f(static_cast<Eigen::Index>(equations.size()));
    for (std::size_t i = 0; i < equations.size(); ++i) f(static_cast<Eigen::Index>(i)) = equations[i].evaluate(x);
    return f;
  }

  Eigen::MatrixXd jacobian(const std::vector<double>& x, const std::vector<std::size_t>& columns) const {
    Eigen::MatrixXd j(static_cast<Eigen::Index>(equations.size()), static_cast<Eigen::Index>(columns.size()));
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < equations.size(); ++i) {
      std::fill(grad.begin(), grad.end(), 0.0);
      equations[i].accumulate_gradient(x, grad);
      for (std::size_t c = 0; c < columns.size(); ++c) {
        j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = grad[columns[c]];
      }
    }
    return j;
  }

  std::vector<CompiledPolynomial> equations;
};

double max_abs(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

NewtonResult newton_solve(const ConstraintRelation& r, std::vector<double> start, const std::vector<bool>& fixed,
                          const NewtonOptions& options) {
  if (start.size() != r.variable_count() || fixed.size() != r.variable_count()) {
    throw DimensionMismatch("Newton start has the wrong length");
  }
  CompiledSystem sys(r);
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < fixed.size(); ++k) {
    if (!fixed[k]) free.push_back(k);
  }
  NewtonResult result{std::move(start), 0.0, false, 0};
  Eigen::VectorXd f = sys.values(result.x);
  double norm = f.norm();
  // Polish well below the tolerance; accept at the tolerance.
  const double polish = std::min(options.tolerance * 1e-3, 1e-13);
  for (; result.iterations < options.max_iterations; ++result.iterations) {
    if (max_abs(f) <= polish || free.empty()) break;
    Eigen::MatrixXd j = sys.jacobian(result.x, free);
    Eigen::VectorXd step = j.completeOrthogonalDecomposition().solve(-f);
    if (!step.allFinite() || step.norm() == 0.0) break;
    double t = 1.0;
    bool improved = false;
    std::vector<double> trial = result.x;
    for (int halving = 0; halving < 40; ++halving, t *= 0.5) {
      for (std::size_t c = 0; c < free.size(); ++c) {
        trial[free[c]] = result.x[free[c]] + t * step(static_cast<Eigen::Index>(c));
      }
      Eigen::VectorXd ft = sys.values(trial);
      if (ft.allFinite() && ft.norm() < norm) {
        result.x = trial;
        f = std::move(ft);
        norm = f.norm();
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  result.residual = max_abs(f);
  result.converged = result.residual <= options.tolerance;
  return result;
}

std::optional<WitnessPoint> sample_witness(const ConstraintRelation& r, std::mt19937_64& rng, int attempts,
                                           const NewtonOptions& options) {
  std::uniform_real_distribution<double> conc(0.1, 2.0), flow(-2.0, 2.0);
  std::vector<bool> fixed(r.variable_count(), false);
  for (int a = 0; a < attempts; ++a) {
    std::vector<double> start(r.variable_count());
    for (std::size_t k = 0; k < start.size(); ++k) {
      start[k] = r.kind(k) == VariableKind::Concentration ? conc(rng) : flow(rng);
    }
    NewtonResult res = newton_solve(r, std::move(start), fixed, options);
    if (res.converged) return WitnessPoint{std::move(res.x)};
  }
  return std::nullopt;
}

std::optional<WitnessPoint> complete_witness(const ConstraintRelation& r, std::span<const double> boundary,
                                             const std::vector<std::vector<double>>& hints, std::mt19937_64& rng,
                                             int random_attempts, const NewtonOptions& options) {
  const std::size_t nb = r.boundary_variable_count();
  if (boundary.size() != nb) throw DimensionMismatch("boundary assignment has the wrong length");
  std::vector<bool> fixed(r.variable_count(), false);
  std::fill(fixed.begin(), fixed.begin() + static_cast<std::ptrdiff_t>(nb), true);
  auto attempt = [&](std::vector<double> internals) -> std::optional<WitnessPoint> {
    std::vector<double> start(boundary.begin(), boundary.end());
    start.insert(start.end(), internals.begin(), internals.end());
    NewtonResult res = newton_solve(r, std::move(start), fixed, options);
    if (res.converged) return WitnessPoint{std::move(res.x)};
    return std::nullopt;
  };
  for (const auto& h : hints) {
    if (h.size() != r.internal().size()) throw DimensionMismatch("internal hint has the wrong length");
    if (auto w = attempt(h)) return w;
  }
  std::uniform_real_distribution<double> conc(0.1, 2.0), flow(-2.0, 2.0);
  for (int a = 0; a < random_attempts; ++a) {
    std::vector<double> internals(r.internal().size());
    for (std::size_t k = 0; k < internals.size(); ++k) {
      internals[k] = r.kind(nb + k) == VariableKind::Concentration ? conc(rng) : flow(rng);
    }
    if (auto w = attempt(std::move(internals))) return w;
  }
  return std::nullopt;
}

namespace {

SolveResult solve_linear(const ConstraintRelation& r, const std::map<std::size_t, Rational>& fixed) {
  const std::size_t n = r.variable_count();
  std::vector<std::size_t> unknowns;
  std::vector<std::size_t> column(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!fixed.count(k)) {
      column[k] = unknowns.size();
      unknowns.push_back(k);
    }
  }
  const std::size_t u = unknowns.size();
  RationalMatrix m(0, u + 1);
  std::vector<Rational> row(u + 1);
  for (const auto& p : r.equations()) {
    std::fill(row.begin(), row.end(), Rational(0));
    for (const auto& [e, c] : p.terms()) {
      std::size_t k = 0;
      while (k < e.size() && e[k] == 0) ++k;
      if (k == e.size()) {
        row[u] -= c;
      } else if (column[k] != n) {
        row[column[k]] += c;
      } else {
        row[u] -= c * fixed.at(k);
      }
    }
    m.append_row(row);
  }
  std::vector<std::size_t> pivots = m.reduce();
  if (!pivots.empty() && pivots.back() == u) throw InconsistentFixing("the fixed values admit no steady state");

  SolveResult out;
  out.exact = true;
  out.particular.assign(n, Rational(0));
  for (const auto& [k, v] : fixed) out.particular[k] = v;
  std::vector<bool> is_pivot(u, false);
  for (std::size_t row_index = 0; row_index < pivots.size(); ++row_index) {
    is_pivot[pivots[row_index]] = true;
    out.particular[unknowns[pivots[row_index]]] = m(row_index, u);
  }
  for (std::size_t c = 0; c < u; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> direction(n, Rational(0));
    direction[unknowns[c]] = 1;
    for (std::size_t row_index = 0; row_index < pivots.size(); ++row_index) {
      direction[unknowns[pivots[row_index]]] = -m(row_index, c);
    }
    out.basis.push_back(std::move(direction));
  }
  WitnessPoint w;
  for (const auto& q : out.particular) w.values.push_back(q.get_d());
  out.witnesses.push_back(std::move(w));
  return out;
}

}  // namespace

SolveResult solve_steady_states(const ConstraintRelation& r, const std::map<std::size_t, Rational>& fixed,
                                const SolveOptions& options) {
  const std::size_t n = r.variable_count();
  for (const auto& [k, v] : fixed) {
    if (k >= n) throw DimensionMismatch("fixed variable index out of range");
  }
  if (r.is_linear() && r.inequalities().empty()) return solve_linear(r, fixed);

  std::vector<bool> is_fixed(n, false);
  for (const auto& [k, v] : fixed) is_fixed[k] = true;
  std::vector<std::vector<double>> seeds = options.seeds;
  if (seeds.empty()) seeds.emplace_back(n, 1.0);

  SolveResult out;
  out.best_residual = std::numeric_limits<double>::infinity();
  bool any_converged = false;
  for (auto seed : seeds) {
    if (seed.size() != n) throw DimensionMismatch("seed has the wrong length");
    for (const auto& [k, v] : fixed) seed[k] = v.get_d();
    NewtonResult res = newton_solve(r, std::move(seed), is_fixed, options.newton);
    out.best_residual = std::min(out.best_residual, res.residual);
    if (!res.converged) continue;
    any_converged = true;
    if (options.require_nonnegative_concentrations) {
      bool negative = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (r.kind(k) == VariableKind::Concentration && res.x[k] < -options.newton.tolerance) negative = true;
      }
      if (negative) continue;
    }
    bool duplicate = std::any_of(out.witnesses.begin(), out.witnesses.end(), [&](const WitnessPoint& w) {
      double d = 0.0;
      for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(w.values[k] - res.x[k]));
      return d < 1e-7;
    });
    if (!duplicate) out.witnesses.push_back(WitnessPoint{std::move(res.x)});
  }
  if (!any_converged) {
    throw NoConvergence("no seed converged; best residual " + std::to_string(out.best_residual));
  }
  return out;
}

}  // namespace opensys
