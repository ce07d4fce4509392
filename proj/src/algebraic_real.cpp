#include "coxeter/algebraic_real.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace coxeter {

namespace {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// x^k + x^-k expressed as a polynomial in y = x + 1/x:
// D_0 = 2, D_1 = y, D_k = y D_{k-1} - D_{k-2}.
std::vector<Polynomial> dickson_table(std::size_t up_to) {
  std::vector<Polynomial> d{Polynomial{2}, Polynomial{0, 1}};
  const Polynomial y{0, 1};
  while (d.size() <= up_to) d.push_back(y * d[d.size() - 1] - d[d.size() - 2]);
  return d;
}

}  // namespace

Polynomial real_cyclotomic_minpoly(unsigned conductor) {
  if (conductor < 2) throw std::invalid_argument("real_cyclotomic_minpoly: conductor must be >= 2");
  const Polynomial phi = cyclotomic_polynomial(2 * conductor);
  const std::size_t half = static_cast<std::size_t>(phi.degree()) / 2;
  const auto dickson = dickson_table(half);
  // x^-half * Phi(x) = c_half + sum_k c_{half+k} (x^k + x^-k), since Phi is palindromic.
  Polynomial psi{};
  psi += Polynomial(std::vector<Rational>{phi.coefficient(half)});
  for (std::size_t k = 1; k <= half; ++k) psi += dickson[k] * phi.coefficient(half + k);
  return psi;
}

std::shared_ptr<const FieldContext> make_field_context(unsigned conductor) {
  if (conductor == 0) throw std::invalid_argument("make_field_context: M must be positive");
  std::shared_ptr<FieldContext> ctx(new FieldContext());
  ctx->conductor_ = conductor;
  ctx->theta_approx_ = 2.0 * std::cos(std::numbers::pi / static_cast<double>(conductor));

  if (conductor == 1) {
    ctx->minpoly_ = Polynomial{2, 1};
  } else {
    ctx->minpoly_ = real_cyclotomic_minpoly(conductor);
    if (ctx->minpoly_.degree() != static_cast<int>(euler_phi(2 * conductor) / 2))
      throw std::logic_error("make_field_context: unexpected minimal polynomial degree");
  }
  ctx->degree_ = static_cast<std::size_t>(ctx->minpoly_.degree());

  if (ctx->degree_ == 1) {
    Rational root = -ctx->minpoly_.coefficient(0);
    ctx->isolating_ = {root - 1, root + 1};
    ctx->fine_lo_ = ctx->fine_hi_ = root;
    return ctx;
  }

  // Degree >= 2 means M >= 4, where 1 < theta < 2 and theta is the largest
  // root of the minimal polynomial (roots are 2cos(k pi/M), gcd(k, 2M) = 1).
  const auto chain = sturm_chain(ctx->minpoly_);
  Rational lo = 1, hi = 2;
  const Rational coarse_width(1, 1 << 16);
  while (hi - lo > coarse_width || count_roots(chain, lo, hi) != 1) {
    Rational mid = (lo + hi) / 2;
    if (count_roots(chain, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  ctx->isolating_ = {lo, hi};

  // Refine by sign bisection on the minimal polynomial to width 2^-64.
  const int sign_lo = sgn(ctx->minpoly_.evaluate(lo));
  Rational fine_width = 1;
  fine_width /= Rational(mpz_class(1) << 64);
  while (hi - lo > fine_width) {
    Rational mid = (lo + hi) / 2;
    if (sgn(ctx->minpoly_.evaluate(mid)) == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  ctx->fine_lo_ = lo;
  ctx->fine_hi_ = hi;
  ctx->fine_lo_pow_.assign(ctx->degree_, Rational(1));
  ctx->fine_hi_pow_.assign(ctx->degree_, Rational(1));
  for (std::size_t k = 1; k < ctx->degree_; ++k) {
    ctx->fine_lo_pow_[k] = ctx->fine_lo_pow_[k - 1] * lo;
    ctx->fine_hi_pow_[k] = ctx->fine_hi_pow_[k - 1] * hi;
  }

  // theta^k mod minpoly for k = d .. 2d-2.
  const std::size_t d = ctx->degree_;
  std::vector<Rational> row(d);
  for (std::size_t j = 0; j < d; ++j) row[j] = -ctx->minpoly_.coefficient(j);
  ctx->reduction_.push_back(row);
  for (std::size_t k = d + 1; k + 1 < 2 * d; ++k) {
    const auto& prev = ctx->reduction_.back();
    std::vector<Rational> next(d);
    for (std::size_t j = 1; j < d; ++j) next[j] = prev[j - 1];
    for (std::size_t j = 0; j < d; ++j) next[j] += prev[d - 1] * row[j];
    ctx->reduction_.push_back(std::move(next));
  }
  return ctx;
}

Sign FieldContext::sign_of(std::span<const Rational> coeffs) const {
  if (degree_ == 1) return static_cast<Sign>(sgn(coeffs[0]));
  bool all_zero = true;
  for (const auto& c : coeffs) all_zero = all_zero && c == 0;
  if (all_zero) return Sign::kZero;

  // theta > 0, so c * theta^k ranges over c*[lo^k, hi^k] with endpoints
  // swapped for negative c.
  auto bounds = [&](const std::vector<Rational>& lo_pow, const std::vector<Rational>& hi_pow) {
    Rational lower = 0, upper = 0;
    for (std::size_t k = 0; k < degree_; ++k) {
      const Rational& c = coeffs[k];
      if (c > 0) {
        lower += c * lo_pow[k];
        upper += c * hi_pow[k];
      } else if (c < 0) {
        lower += c * hi_pow[k];
        upper += c * lo_pow[k];
      }
    }
    return std::pair{lower, upper};
  };

  auto [lower, upper] = bounds(fine_lo_pow_, fine_hi_pow_);
  if (lower > 0) return Sign::kPositive;
  if (upper < 0) return Sign::kNegative;

  Rational lo = fine_lo_, hi = fine_hi_;
  const int sign_lo = sgn(minpoly_.evaluate(lo));
  std::vector<Rational> lo_pow(degree_), hi_pow(degree_);
  for (;;) {
    Rational mid = (lo + hi) / 2;
    if (sgn(minpoly_.evaluate(mid)) == sign_lo)
      lo = mid;
    else
      hi = mid;
    lo_pow[0] = hi_pow[0] = 1;
    for (std::size_t k = 1; k < degree_; ++k) {
      lo_pow[k] = lo_pow[k - 1] * lo;
      hi_pow[k] = hi_pow[k - 1] * hi;
    }
    std::tie(lower, upper) = bounds(lo_pow, hi_pow);
    if (lower > 0) return Sign::kPositive;
    if (upper < 0) return Sign::kNegative;
  }
}

AlgReal::AlgReal(const FieldContext& field, const Rational& value)
    : field_(&field), coeffs_(field.degree()) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

AlgReal::AlgReal(const FieldContext& field, std::vector<Rational> coeffs) : field_(&field) {
  // Reduce an arbitrary-length polynomial in theta modulo the minimal polynomial.
  const std::size_t d = field.degree();
  if (coeffs.size() > d) {
    auto [q, r] = divmod(Polynomial(std::move(coeffs)), field.minimal_polynomial());
    coeffs = r.coefficients();
  }
  coeffs.resize(d);
  for (auto& x : coeffs) x.canonicalize();
  coeffs_ = std::move(coeffs);
}

AlgReal AlgReal::theta(const FieldContext& f) {
  if (f.degree() == 1) return AlgReal(f, -f.minimal_polynomial().coefficient(0));
  std::vector<Rational> c(f.degree());
  c[1] = 1;
  return AlgReal(f, std::move(c));
}

bool AlgReal::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Sign AlgReal::sign() const { return field_->sign_of(coeffs_); }

void AlgReal::check_same_field(const AlgReal& other) const {
  if (field_ != other.field_) throw std::invalid_argument("AlgReal: operands from different fields");
}

AlgReal& AlgReal::operator+=(const AlgReal& rhs) {
  check_same_field(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

AlgReal& AlgReal::operator-=(const AlgReal& rhs) {
  check_same_field(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

AlgReal& AlgReal::operator*=(const AlgReal& rhs) { return *this = *this * rhs; }

AlgReal& AlgReal::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

AlgReal operator*(const AlgReal& a, const AlgReal& b) {
  a.check_same_field(b);
  const FieldContext& f = *a.field_;
  const std::size_t d = f.degree();
  if (d == 1) return AlgReal(f, a.coeffs_[0] * b.coeffs_[0]);

  std::vector<Rational> full(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      full[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  AlgReal out(f);
  for (std::size_t k = 0; k < d; ++k) out.coeffs_[k] = std::move(full[k]);
  for (std::size_t k = d; k < 2 * d - 1; ++k) {
    if (full[k] == 0) continue;
    const auto& row = f.reduction_row(k);
    for (std::size_t j = 0; j < d; ++j) out.coeffs_[j] += full[k] * row[j];
  }
  return out;
}

AlgReal operator-(AlgReal a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const AlgReal& a, const AlgReal& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

AlgReal AlgReal::inverse() const {
  if (is_zero()) throw std::domain_error("AlgReal: inverse of zero");
  const FieldContext& f = *field_;
  if (f.degree() == 1) return AlgReal(f, 1 / coeffs_[0]);
  // Extended Euclid on (a, minpoly): track s with s*a == r (mod minpoly).
  Polynomial r0 = f.minimal_polynomial(), r1 = Polynomial(coeffs_);
  Polynomial s0{}, s1{1};
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant because the minimal polynomial is irreducible.
  Polynomial inv = s1 * (1 / r1.leading());
  return AlgReal(f, inv.coefficients());
}

double AlgReal::to_double() const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * field_->theta_approx() + coeffs_[k].get_d();
  return acc;
}

std::string AlgReal::to_string() const {
  return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.end())).to_string("t");
}

AlgReal two_cos_pi_over(const FieldContext& field, Label m) {
  if (m == kInfinity) return AlgReal(field, 2);
  if (m == 1) throw std::invalid_argument("two_cos_pi_over: m must be >= 2");
  if (m == 2) return AlgReal::zero(field);
  if (field.conductor() % m != 0) {
    std::ostringstream os;
    os << "two_cos_pi_over: m = " << m << " does not divide the field conductor " << field.conductor();
    throw std::invalid_argument(os.str());
  }
  // 2cos(k pi/M) = zeta^k + zeta^-k = D_k(theta) with k = M/m.
  const std::size_t k = field.conductor() / m;
  const auto dickson = dickson_table(k);
  return evaluate_at(dickson[k], AlgReal::theta(field));
}

AlgReal evaluate_at(const Polynomial& p, const AlgReal& x) {
  AlgReal acc = AlgReal::zero(x.field());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + AlgReal(x.field(), *it);
  return acc;
}

}  // namespace coxeter
