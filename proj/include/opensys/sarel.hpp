#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opensys/cospan.hpp"
#include "opensys/linear.hpp"
#include "opensys/polynomial.hpp"

namespace opensys {

enum class VariableKind { Concentration, Flow };

/// A semialgebraic relation R^X (+) R^X -> R^Y (+) R^Y kept in implicit form:
///
///   { (c_X, f_X, c_Y, f_Y) | exists z. P_i(c, f, z) = 0, Q_j(c, f, z) > 0 }.
///
/// Variables are positional: left concentrations, left flows, right
/// concentrations, right flows, then internals. Composition uses the
/// sum-to-zero convention on shared flows.
class ConstraintRelation {
 public:
  ConstraintRelation() = default;
  /// Throws DimensionMismatch if a polynomial is not over exactly the
  /// declared variables.
  ConstraintRelation(FinSet left, FinSet right, FinSet internal, std::vector<Polynomial> equations,
                     std::vector<Polynomial> inequalities = {}, std::vector<VariableKind> internal_kinds = {});

  const FinSet& left() const { return left_; }
  const FinSet& right() const { return right_; }
  const FinSet& internal() const { return internal_; }
  const std::vector<Polynomial>& equations() const { return equations_; }
  const std::vector<Polynomial>& inequalities() const { return inequalities_; }
  const std::vector<VariableKind>& internal_kinds() const { return internal_kinds_; }
  bool is_linear() const { return linear_; }

  std::size_t boundary_variable_count() const { return 2 * (left_.size() + right_.size()); }
  std::size_t variable_count() const { return boundary_variable_count() + internal_.size(); }

  std::size_t left_concentration(std::size_t k) const { return k; }
  std::size_t left_flow(std::size_t k) const { return left_.size() + k; }
  std::size_t right_concentration(std::size_t k) const { return 2 * left_.size() + k; }
  std::size_t right_flow(std::size_t k) const { return 2 * left_.size() + right_.size() + k; }
  std::size_t internal_variable(std::size_t k) const { return boundary_variable_count() + k; }

  VariableKind kind(std::size_t var) const;
  /// cL.x, fL.x, cR.y, fR.y, z.n
  std::string variable_name(std::size_t var) const;
  std::optional<std::size_t> find_variable(const std::string& name) const;

  friend bool operator==(const ConstraintRelation& a, const ConstraintRelation& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.internal_ == b.internal_ &&
           a.equations_ == b.equations_ && a.inequalities_ == b.inequalities_ &&
           a.internal_kinds_ == b.internal_kinds_;
  }

 private:
  FinSet left_;
  FinSet right_;
  FinSet internal_;
  std::vector<Polynomial> equations_;
  std::vector<Polynomial> inequalities_;
  std::vector<VariableKind> internal_kinds_;
  bool linear_ = true;
};

/// The identity {c = c', f + f' = 0} on X.
ConstraintRelation identity_relation(const FinSet& x);

/// The Frobenius structure on R (+) R: copy on concentrations, addition on
/// flows, presented without internals.
ConstraintRelation frob_generator_R2(Generator which);

/// Frob(c) for X --i--> N <--o-- Y: concentrations pulled back from an
/// internal point of R^N, flows summing to zero at every n in N.
ConstraintRelation frob_of_cospan(const Cospan& c);

/// u followed by v: shared concentrations identified, shared flows summing
/// to zero, no elimination. Throws BoundaryMismatch.
ConstraintRelation relation_compose(const ConstraintRelation& u, const ConstraintRelation& v);
ConstraintRelation relation_tensor(const ConstraintRelation& u, const ConstraintRelation& v);
/// The same subset read as a relation Y -> X.
ConstraintRelation transpose(const ConstraintRelation& r);

/// Presentation with relational (equality) composition on flows: negates
/// the left-boundary flows. An involution.
ConstraintRelation to_outflow_convention(const ConstraintRelation& r);

/// Exact elimination of internals for a linear relation; the result has no
/// internals and its equations are the reduced row echelon rows over the
/// boundary variables (an inconsistent system becomes the single equation
/// 1 = 0). Throws NotLinear.
ConstraintRelation linear_eliminate(const ConstraintRelation& r);

/// Canonical form [A | b] of the affine boundary subspace of a linear
/// relation, for equality tests.
RationalMatrix boundary_row_space(const ConstraintRelation& r);

/// Equal affine subspaces of boundary vectors. Throws NotLinear.
bool same_linear_relation(const ConstraintRelation& a, const ConstraintRelation& b);

enum class Membership { Member, NotMember, NeedsWitness };

std::string_view to_string(Membership m);

/// Exact membership of a boundary point. Linear relations are decided by
/// solving for the internals; otherwise a full internal assignment is needed.
/// Throws DimensionMismatch.
Membership is_member(const ConstraintRelation& r, std::span<const Rational> boundary,
                     std::optional<std::span<const Rational>> internals = std::nullopt);

/// Floating membership within `tolerance`. Linear relations without a
/// witness are decided by a least-squares solve for the internals.
Membership is_member(const ConstraintRelation& r, std::span<const double> boundary,
                     std::optional<std::span<const double>> internals = std::nullopt, double tolerance = 1e-9);

/// Largest absolute equation residual at a full assignment.
double max_residual(const ConstraintRelation& r, std::span<const double> values);

/// One line per equation, "p = 0".
std::string to_text(const ConstraintRelation& r);

}  // namespace opensys
