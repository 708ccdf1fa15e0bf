#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "opensys/sarel.hpp"

namespace opensys {

/// A full assignment of a relation's variables (boundary, then internals).
struct WitnessPoint {
  std::vector<double> values;
};

struct NewtonOptions {
  int max_iterations = 200;
  double tolerance = 1e-9;
};

struct NewtonResult {
  std::vector<double> x;
  double residual = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Damped Gauss-Newton on the equations of `r` over the variables not marked
/// fixed, taking minimum-norm steps so under- and over-determined systems are
/// both handled. Converged means max |equation| <= tolerance.
NewtonResult newton_solve(const ConstraintRelation& r, std::vector<double> start, const std::vector<bool>& fixed,
                          const NewtonOptions& options = {});

/// Projects a random start onto the solution set of `r`. Concentrations are
/// drawn from [0.1, 2], flows from [-2, 2].
std::optional<WitnessPoint> sample_witness(const ConstraintRelation& r, std::mt19937_64& rng, int attempts = 20,
                                           const NewtonOptions& options = {});

/// Decides whether boundary values extend to a witness of `r` by solving for
/// the internals from `hints` first and then from random starts.
std::optional<WitnessPoint> complete_witness(const ConstraintRelation& r, std::span<const double> boundary,
                                             const std::vector<std::vector<double>>& hints, std::mt19937_64& rng,
                                             int random_attempts = 10, const NewtonOptions& options = {});

struct SolveOptions {
  /// Starting points for the nonlinear solver: full-length assignments. Fixed
  /// entries are overwritten. When empty, the all-ones point is used.
  std::vector<std::vector<double>> seeds;
  NewtonOptions newton;
  bool require_nonnegative_concentrations = true;
};

struct SolveResult {
  bool exact = false;
  std::vector<WitnessPoint> witnesses;
  /// Linear case: a particular solution and a basis of the solution
  /// directions, over all variables.
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> basis;
  double best_residual = 0.0;
};

/// Steady states of `r` with some variables fixed. Linear relations are
/// solved exactly; otherwise damped Newton runs from each seed and converged
/// points are kept (concentrations must be nonnegative when requested).
/// Throws InconsistentFixing (linear, no solution) or NoConvergence.
SolveResult solve_steady_states(const ConstraintRelation& r, const std::map<std::size_t, Rational>& fixed,
                                const SolveOptions& options = {});

}  // namespace opensys
