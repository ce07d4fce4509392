#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/polynomial.hpp"

namespace coxeter {

/// Edge label of a Coxeter matrix. Infinity is encoded as 0, both in memory
/// and in group files.
using Label = unsigned;
inline constexpr Label kInfinity = 0;

enum class Sign { kNegative = -1, kZero = 0, kPositive = 1 };

/// The real cyclotomic field Q(theta), theta = 2cos(pi/M).
///
/// Immutable after construction; share it through the pointer returned by
/// make_field_context. For M = 1 the field is Q itself and theta is never
/// needed; the minimal polynomial is recorded as t + 2 for completeness.
class FieldContext {
 public:
  unsigned conductor() const { return conductor_; }
  std::size_t degree() const { return degree_; }
  const Polynomial& minimal_polynomial() const { return minpoly_; }
  /// (lo, hi) containing theta and no other root of the minimal polynomial.
  const std::pair<Rational, Rational>& isolating_interval() const { return isolating_; }
  double theta_approx() const { return theta_approx_; }

  /// theta^k reduced to the power basis, for k in [degree, 2*degree - 2].
  const std::vector<Rational>& reduction_row(std::size_t k) const { return reduction_[k - degree_]; }

 private:
  friend std::shared_ptr<const FieldContext> make_field_context(unsigned conductor);
  friend class AlgReal;

  FieldContext() = default;
  Sign sign_of(std::span<const Rational> coeffs) const;

  unsigned conductor_ = 1;
  std::size_t degree_ = 1;
  Polynomial minpoly_;
  std::pair<Rational, Rational> isolating_;
  // A much narrower interval around theta with cached endpoint powers; the
  // sign routine starts from it and only bisects further when it must.
  Rational fine_lo_, fine_hi_;
  std::vector<Rational> fine_lo_pow_, fine_hi_pow_;
  std::vector<std::vector<Rational>> reduction_;
  double theta_approx_ = 0.0;
};

/// Builds the field for conductor M >= 1. Throws std::invalid_argument on 0.
std::shared_ptr<const FieldContext> make_field_context(unsigned conductor);

/// The minimal polynomial of 2cos(pi/M), obtained from Phi_{2M} by rewriting
/// it in powers of (x + 1/x). Requires M >= 2.
Polynomial real_cyclotomic_minpoly(unsigned conductor);

/// An element of Q(theta), kept reduced modulo the minimal polynomial.
class AlgReal {
 public:
  explicit AlgReal(const FieldContext& field, const Rational& value = 0);
  AlgReal(const FieldContext& field, std::vector<Rational> coeffs);

  static AlgReal zero(const FieldContext& f) { return AlgReal(f); }
  static AlgReal one(const FieldContext& f) { return AlgReal(f, 1); }
  /// theta itself; for degree-1 fields this is the rational 2cos(pi/M).
  static AlgReal theta(const FieldContext& f);

  const FieldContext& field() const { return *field_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  Sign sign() const;
  bool is_positive() const { return sign() == Sign::kPositive; }
  bool is_negative() const { return sign() == Sign::kNegative; }

  AlgReal inverse() const;
  double to_double() const;
  std::string to_string() const;

  AlgReal& operator+=(const AlgReal& rhs);
  AlgReal& operator-=(const AlgReal& rhs);
  AlgReal& operator*=(const AlgReal& rhs);
  AlgReal& operator*=(const Rational& rhs);

  friend AlgReal operator+(AlgReal a, const AlgReal& b) { return a += b; }
  friend AlgReal operator-(AlgReal a, const AlgReal& b) { return a -= b; }
  friend AlgReal operator*(const AlgReal& a, const AlgReal& b);
  friend AlgReal operator*(AlgReal a, const Rational& b) { return a *= b; }
  friend AlgReal operator-(AlgReal a);
  friend AlgReal operator/(const AlgReal& a, const AlgReal& b) { return a * b.inverse(); }
  friend bool operator==(const AlgReal& a, const AlgReal& b);

 private:
  void check_same_field(const AlgReal& other) const;

  const FieldContext* field_;
  std::vector<Rational> coeffs_;
};

/// 2cos(pi/m) in the given field; m = 2 gives 0 and m = kInfinity gives 2.
/// Throws std::invalid_argument when a finite m >= 3 does not divide M.
AlgReal two_cos_pi_over(const FieldContext& field, Label m);

/// Evaluates p(x) for x in the field, by Horner's rule.
AlgReal evaluate_at(const Polynomial& p, const AlgReal& x);

}  // namespace coxeter
