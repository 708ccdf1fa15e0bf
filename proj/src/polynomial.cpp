#include "opensys/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "opensys/error.hpp"

namespace opensys {

Rational parse_rational(std::string_view text) {
  auto fail = [&] { return InvalidValue("not a rational number: '" + std::string(text) + "'"); };
  std::string s(text);
  if (s.empty()) throw fail();
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  auto digits = [&](std::size_t from) {
    std::size_t to = from;
    while (to < s.size() && std::isdigit(static_cast<unsigned char>(s[to]))) ++to;
    return to;
  };
  std::size_t int_end = digits(pos);
  Rational value;
  if (int_end < s.size() && s[int_end] == '/') {
    std::size_t den_end = digits(int_end + 1);
    if (int_end == pos || den_end == int_end + 1 || den_end != s.size()) throw fail();
    mpz_class num(s.substr(pos, int_end - pos), 10), den(s.substr(int_end + 1), 10);
    if (den == 0) throw fail();
    value = Rational(num, den);
  } else if (int_end < s.size() && s[int_end] == '.') {
    std::size_t frac_end = digits(int_end + 1);
    if (frac_end != s.size() || (int_end == pos && frac_end == int_end + 1)) throw fail();
    std::string whole = s.substr(pos, int_end - pos), frac = s.substr(int_end + 1);
    mpz_class num(whole + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = Rational(num, den);
  } else {
    if (int_end == pos || int_end != s.size()) throw fail();
    value = Rational(mpz_class(s.substr(pos), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw DimensionMismatch("variable index out of range");
  Exponents e(nvars, 0);
  e[k] = 1;
  Polynomial p(nvars);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(Exponents exps, const Rational& c) {
  Polynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0})));
  }
  return d;
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

Rational Polynomial::linear_coefficient(std::size_t k) const {
  Exponents e(nvars_, 0);
  e[k] = 1;
  return coefficient(e);
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) {
    throw DimensionMismatch("exponent vector of length " + std::to_string(exps.size()) + " for " +
                            std::to_string(nvars_) + " variables");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw DimensionMismatch("adding polynomials over different variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw DimensionMismatch("subtracting polynomials over different variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("multiplying polynomials over different variable sets");
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::rename(std::span<const std::size_t> map, std::size_t new_nvars,
                              std::span<const int> signs) const {
  if (map.size() != nvars_ || (!signs.empty() && signs.size() != nvars_)) {
    throw DimensionMismatch("renaming map does not cover every variable");
  }
  Polynomial out(new_nvars);
  Exponents target(new_nvars);
  for (const auto& [e, c] : terms_) {
    std::fill(target.begin(), target.end(), 0);
    bool flip = false;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (map[k] >= new_nvars) throw DimensionMismatch("renaming target out of range");
      target[map[k]] += e[k];
      if (!signs.empty() && signs[k] < 0 && (e[k] % 2 == 1)) flip = !flip;
    }
    out.add_term(target, flip ? Rational(-c) : c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) throw DimensionMismatch("substitution does not cover every variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t k = 0; k < nvars_; ++k) {
      for (std::uint32_t p = 0; p < e[k]; ++p) term = term * images[k];
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t k) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] -= 1;
    out.add_term(d, c * e[k]);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has the wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      for (std::uint32_t p = 0; p < e[k]; ++p) term *= point[k];
    }
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has the wrong length");
  return CompiledPolynomial(*this).evaluate(point);
}

std::string Polynomial::to_string(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first.
  std::vector<std::pair<const Exponents*, const Rational*>> order;
  for (const auto& [e, c] : terms_) order.emplace_back(&e, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    auto da = std::accumulate(a.first->begin(), a.first->end(), 0u);
    auto db = std::accumulate(b.first->begin(), b.first->end(), 0u);
    if (da != db) return da > db;
    return *a.first > *b.first;
  });
  for (const auto& [ep, cp] : order) {
    const Exponents& e = *ep;
    Rational c = *cp;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool is_const = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool unit = c == 1;
    if (!unit || is_const) {
      os << opensys::to_string(c);
      if (!is_const) os << "*";
    }
    bool first_factor = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << name(k);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

std::string Polynomial::to_string() const {
  return to_string([](std::size_t k) { return "x" + std::to_string(k); });
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    Term t{c.get_d(), {}};
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) t.factors.emplace_back(k, e[k]);
    }
    terms_.push_back(std::move(t));
  }
}

double CompiledPolynomial::evaluate(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coef;
    for (const auto& [k, p] : t.factors) v *= std::pow(x[k], static_cast<double>(p));
    sum += v;
  }
  return sum;
}

void CompiledPolynomial::accumulate_gradient(std::span<const double> x, std::span<double> grad) const {
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      double v = t.coef * t.factors[i].second *
                 std::pow(x[t.factors[i].first], static_cast<double>(t.factors[i].second) - 1.0);
      for (std::size_t j = 0; j < t.factors.size(); ++j) {
        if (j != i) v *= std::pow(x[t.factors[j].first], static_cast<double>(t.factors[j].second));
      }
      grad[t.factors[i].first] += v;
    }
  }
}

}  // namespace opensys
