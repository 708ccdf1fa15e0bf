#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace opensys {

using Rational = mpq_class;

/// Parses "3", "-3/2", "0.25", "+1.5" exactly. Throws InvalidValue.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" or "p" form.
std::string to_string(const Rational& q);

using Exponents = std::vector<std::uint32_t>;

/// A multivariate polynomial with exact rational coefficients over a fixed
/// number of positional variables. No zero coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t k);
  static Polynomial monomial(Exponents exps, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_linear() const { return degree() <= 1; }
  Rational coefficient(const Exponents& exps) const;
  /// Constant term of a polynomial.
  Rational constant_term() const;
  /// Coefficient of x_k in a polynomial of degree <= 1.
  Rational linear_coefficient(std::size_t k) const;

  /// Adds c * x^exps. Throws DimensionMismatch on a wrong exponent length.
  void add_term(const Exponents& exps, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// The substitution x_k |-> sign_k * y_{map[k]} into `new_nvars` variables.
  /// `signs` may be empty (all +1). Variables may be merged.
  Polynomial rename(std::span<const std::size_t> map, std::size_t new_nvars,
                    std::span<const int> signs = {}) const;
  /// General substitution x_k |-> images[k]; a ring homomorphism.
  Polynomial substitute(std::span<const Polynomial> images) const;
  Polynomial derivative(std::size_t k) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Human-readable form using the given variable names.
  std::string to_string(const std::function<std::string(std::size_t)>& name) const;
  std::string to_string() const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

/// Polynomial with double coefficients prepared for repeated floating
/// evaluation and differentiation.
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(const Polynomial& p);

  double evaluate(std::span<const double> x) const;
  /// Adds d p / d x_k to grad[k] for all k.
  void accumulate_gradient(std::span<const double> x, std::span<double> grad) const;

 private:
  struct Term {
    double coef;
    std::vector<std::pair<std::size_t, std::uint32_t>> factors;
  };
  std::vector<Term> terms_;
};

}  // namespace opensys
