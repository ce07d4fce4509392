#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace coxeter {

using Rational = mpq_class;

/// Univariate polynomial with rational coefficients, stored low degree first.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(std::size_t power, const Rational& coeff = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator-(Polynomial p) { return p *= -1; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

/// The n-th cyclotomic polynomial, by dividing t^n - 1 by every Phi_d, d | n, d < n.
Polynomial cyclotomic_polynomial(unsigned n);

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
/// `lo` must not be a root.
std::size_t count_roots(const std::vector<Polynomial>& chain, const Rational& lo,
                        const Rational& hi);

}  // namespace coxeter
