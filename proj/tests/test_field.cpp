#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "coxeter/algebraic_real.hpp"
#include "coxeter/polynomial.hpp"

using namespace coxeter;

namespace {

// Random element with small integer coefficients.
AlgReal sample(const FieldContext& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<Rational> c;
  for (std::size_t k = 0; k < f.degree(); ++k) c.emplace_back(d(rng), 1 + (d(rng) + 5) % 3);
  return AlgReal(f, c);
}

double approx(const AlgReal& a) {
  double x = 0, p = 1;
  for (const auto& c : a.coefficients()) {
    x += c.get_d() * p;
    p *= a.field().theta_approx();
  }
  return x;
}

}  // namespace

TEST_CASE("polynomial arithmetic and division") {
  const Polynomial p{-1, 0, 1};  // t^2 - 1
  const Polynomial q{1, 1};
  auto [quot, rem] = divmod(p, q);
  CHECK(quot == Polynomial{-1, 1});
  CHECK(rem.is_zero());
  CHECK(p.degree() == 2);
  CHECK(Polynomial().degree() == -1);
  CHECK(p.derivative() == Polynomial{0, 2});
  CHECK(p.evaluate(3) == 8);
  CHECK((p * q) == Polynomial{-1, -1, 1, 1});
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "t^2 - 1");
  CHECK_THROWS_AS(divmod(p, Polynomial()), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials multiply to t^n - 1") {
  for (unsigned n = 1; n <= 30; ++n) {
    Polynomial prod{1};
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
    CHECK(prod == Polynomial::monomial(n) - Polynomial{1});
  }
  CHECK(cyclotomic_polynomial(8) == Polynomial{1, 0, 0, 0, 1});
}

TEST_CASE("sturm chain counts real roots") {
  const Polynomial p = Polynomial{-2, 0, 1} * Polynomial{-3, 1};  // roots +-sqrt2, 3
  const auto chain = sturm_chain(p);
  CHECK(count_roots(chain, -10, 10) == 3);
  CHECK(count_roots(chain, 0, 2) == 1);
  CHECK(count_roots(chain, 3, 4) == 0);  // half-open (lo, hi]
  CHECK(count_roots(chain, 2, 3) == 1);
}

TEST_CASE("field contexts") {
  SUBCASE("M = 1 is the rationals") {
    auto f = make_field_context(1);
    CHECK(f->degree() == 1);
    CHECK(f->minimal_polynomial() == Polynomial{2, 1});
    CHECK(two_cos_pi_over(*f, 2).is_zero());
    CHECK(two_cos_pi_over(*f, kInfinity) == AlgReal(*f, 2));
  }
  SUBCASE("M = 4 gives sqrt 2") {
    auto f = make_field_context(4);
    CHECK(f->minimal_polynomial() == Polynomial{-2, 0, 1});
    const AlgReal t = AlgReal::theta(*f);
    CHECK(t * t == AlgReal(*f, 2));
    CHECK(std::abs(f->theta_approx() - std::sqrt(2.0)) < 1e-12);
    CHECK((t - AlgReal::one(*f)).sign() == Sign::kPositive);
  }
  SUBCASE("M = 6 gives sqrt 3") {
    auto f = make_field_context(6);
    CHECK(f->minimal_polynomial() == Polynomial{-3, 0, 1});
    CHECK((AlgReal::one(*f) - AlgReal::theta(*f)).sign() == Sign::kNegative);
  }
  SUBCASE("M = 5 has degree 2 and theta is the golden ratio") {
    auto f = make_field_context(5);
    CHECK(f->minimal_polynomial() == Polynomial{-1, -1, 1});
    CHECK(std::abs(f->theta_approx() - std::numbers::phi) < 1e-12);
  }
  CHECK_THROWS_AS(make_field_context(0), std::invalid_argument);
}

TEST_CASE("minimal polynomials agree with floating point and have the right degree") {
  for (unsigned M = 2; M <= 40; ++M) {
    auto f = make_field_context(M);
    const double theta = 2 * std::cos(std::numbers::pi / M);
    CAPTURE(M);
    CHECK(std::abs(f->minimal_polynomial().evaluate(Rational(theta)).get_d()) < 1e-6);
    // degree = phi(2M) / 2 by direct totient count
    unsigned phi = 0;
    for (unsigned k = 1; k <= 2 * M; ++k) phi += std::gcd(k, 2 * M) == 1;
    CHECK(f->degree() == std::max(1u, phi / 2));
    CHECK(evaluate_at(f->minimal_polynomial(), AlgReal::theta(*f)).is_zero());
    CHECK(std::abs(f->theta_approx() - theta) < 1e-12);
  }
}

TEST_CASE("two_cos_pi_over") {
  auto f = make_field_context(12);
  CHECK(two_cos_pi_over(*f, 2).is_zero());
  CHECK(two_cos_pi_over(*f, 3) == AlgReal::one(*f));
  CHECK(two_cos_pi_over(*f, kInfinity) == AlgReal(*f, 2));
  for (Label m : {3u, 4u, 6u, 12u}) {
    const AlgReal v = two_cos_pi_over(*f, m);
    CHECK(v.sign() == Sign::kPositive);
    CHECK(std::abs(v.to_double() - 2 * std::cos(std::numbers::pi / m)) < 1e-12);
  }
  CHECK_THROWS_AS(two_cos_pi_over(*f, 5), std::invalid_argument);
  CHECK_THROWS_AS(two_cos_pi_over(*f, 1), std::invalid_argument);
}

TEST_CASE("field axioms hold exactly on random elements") {
  std::mt19937_64 rng(7);
  for (unsigned M : {1u, 4u, 5u, 12u, 15u}) {
    auto f = make_field_context(M);
    for (int trial = 0; trial < 40; ++trial) {
      const AlgReal a = sample(*f, rng), b = sample(*f, rng), c = sample(*f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + AlgReal::zero(*f) == a);
      CHECK(-(-a) == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == AlgReal::one(*f));
    }
  }
}

TEST_CASE("exact signs agree with floating point") {
  std::mt19937_64 rng(11);
  for (unsigned M : {4u, 5u, 7u, 12u}) {
    auto f = make_field_context(M);
    for (int trial = 0; trial < 60; ++trial) {
      const AlgReal a = sample(*f, rng) * sample(*f, rng) - sample(*f, rng);
      const double x = approx(a);
      CHECK(std::abs(a.to_double() - x) < 1e-9);
      if (std::abs(x) > 1e-9) CHECK(a.sign() == (x > 0 ? Sign::kPositive : Sign::kNegative));
      if (a.is_zero()) CHECK(a.sign() == Sign::kZero);
    }
  }
  // Tiny but nonzero: theta = sqrt 2 lies between 140/99 and 99/70, about 7e-5 from each.
  auto f = make_field_context(4);
  CHECK((AlgReal::theta(*f) - AlgReal(*f, Rational(140, 99))).sign() == Sign::kPositive);
  CHECK((AlgReal::theta(*f) - AlgReal(*f, Rational(99, 70))).sign() == Sign::kNegative);
  CHECK((AlgReal::theta(*f) - AlgReal(*f, Rational(141421357, 100000000))).sign() == Sign::kNegative);
}

TEST_CASE("mixing fields is rejected") {
  auto f = make_field_context(4), g = make_field_context(4);
  CHECK_THROWS_AS(AlgReal::one(*f) + AlgReal::one(*g), std::invalid_argument);
  CHECK_THROWS_AS(AlgReal::zero(*f).inverse(), std::domain_error);
}
