#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"

using namespace qtorus;

TEST_CASE("cyclotomic polynomials match the reference table") {
  for (const auto& [n, coeffs] : qtest::oracle()["cyclotomic_polynomial"].items()) {
    const IntPoly expected = coeffs.get<IntPoly>();
    CHECK_MESSAGE(cyclotomic_polynomial(std::stoi(n)) == expected, "n = " << n);
  }
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
}

TEST_CASE("context basics") {
  for (int r = 3; r <= 12; ++r) {
    const auto& ctx = CycloContext::get(r);
    CHECK(ctx.order() == 4 * r);
    CHECK(ctx.degree() == static_cast<int>(ctx.modulus().size()) - 1);
    CHECK(ctx.modulus().back() == 1);
    CHECK(&CycloContext::get(r) == &ctx);
  }
  CHECK(CycloContext::get(3).degree() == 4);
  CHECK(CycloContext::get(8).degree() == 16);
  CHECK_THROWS_AS(CycloContext::get(2), std::invalid_argument);
}

TEST_CASE("powers of t") {
  const auto& ctx = CycloContext::get(3);
  CHECK(t_power(ctx, 12) == qtest::integer(3, 1));
  CHECK(t_power(ctx, 6) == qtest::integer(3, -1));
  CHECK(t_power(ctx, 1).coeffs()[1] == 1);
  for (int r = 3; r <= 8; ++r) {
    const auto& c = CycloContext::get(r);
    for (int e = -9 * r; e <= 9 * r; e += 5) {
      CHECK(t_power(c, e) * t_power(c, -e) == CycloElement::integer(c, 1));
      const auto z = t_power(c, e).to_complex();
      const double angle = std::numbers::pi * e / (2.0 * r);
      CHECK(std::abs(z - std::complex<double>(std::cos(angle), std::sin(angle))) < 1e-12);
    }
  }
}

TEST_CASE("quantum integers match the reference values") {
  for (const auto& row : qtest::oracle()["qint"]) {
    const int r = row["r"];
    const long n = row["n"];
    CHECK_MESSAGE(qint(CycloContext::get(r), n) == qtest::element(row["value"], r), "r = " << r << ", n = " << n);
  }
}

TEST_CASE("quantum integer symmetries and numeric shadow") {
  for (int r = 3; r <= 12; ++r) {
    const auto& ctx = CycloContext::get(r);
    CHECK(qint(ctx, r).is_zero());
    CHECK(qint(ctx, 0).is_zero());
    CHECK(qint(ctx, 1) == CycloElement::integer(ctx, 1));
    CHECK(qint(ctx, 2) == t_power(ctx, 2) + t_power(ctx, -2));
    for (int n = -3 * r; n <= 3 * r; ++n) {
      CHECK(qint(ctx, n + 2 * r) == qint(ctx, n));
      CHECK(qint(ctx, 2 * r - n) == -qint(ctx, n));
      CHECK(qint(ctx, -n) == -qint(ctx, n));
      const double expected = std::sin(n * std::numbers::pi / r) / std::sin(std::numbers::pi / r);
      CHECK(std::abs(qint(ctx, n).to_complex() - std::complex<double>(expected, 0)) < 1e-9);
    }
  }
}

TEST_CASE("X squared") {
  for (const auto& row : qtest::oracle()["x_squared"]) {
    const int r = row["r"];
    const auto& ctx = CycloContext::get(r);
    CHECK(x_squared(ctx) == qtest::element(row["value"], r));
    CHECK(std::abs(x_squared(ctx).to_complex().real() - row["numeric"].get<double>()) < 1e-9);
    CHECK(std::abs(ctx.x_numeric() * ctx.x_numeric() - row["numeric"].get<double>()) < 1e-9);
  }
  CHECK(x_squared(CycloContext::get(3)) == qtest::integer(3, 2));
  CHECK(x_squared(CycloContext::get(4)) == qtest::integer(4, 4));
}

TEST_CASE("sine orthogonality") {
  for (int r = 3; r <= 8; ++r) {
    const auto& ctx = CycloContext::get(r);
    for (int k = 1; k < r; ++k) {
      for (int m = 1; m < r; ++m) {
        CycloElement sum(ctx);
        for (int j = 1; j < r; ++j) sum += qint(ctx, k * j) * qint(ctx, j * m);
        CHECK(sum == (k == m ? x_squared(ctx) : CycloElement(ctx)));
      }
    }
  }
}

TEST_CASE("field arithmetic") {
  const auto& ctx = CycloContext::get(5);
  const CycloElement d = t_power(ctx, 2) - t_power(ctx, -2);
  CHECK(d.inverse() * d == CycloElement::integer(ctx, 1));
  CHECK(ctx.qint_denominator_inverse() == d.inverse());
  CHECK_THROWS_AS(CycloElement(ctx).inverse(), std::domain_error);
  const CycloElement a = qint(ctx, 3) + t_power(ctx, 7) * 3;
  const CycloElement b = t_power(ctx, -1) - CycloElement::integer(ctx, 2);
  CHECK(a * b == b * a);
  CHECK((a + b) * a == a * a + b * a);
  CHECK(a * b * b.inverse() == a);
  CHECK(a - a == CycloElement(ctx));
  CHECK_THROWS_AS(a + qint(CycloContext::get(4), 1), std::invalid_argument);
}

TEST_CASE("X-graded scalars") {
  const auto& ctx = CycloContext::get(4);
  const CycloElement c = qint(ctx, 3), d = t_power(ctx, 5);
  const Scalar prod = Scalar(c, 1) * Scalar(d, 1);
  CHECK(prod.xpow() == 0);
  CHECK(prod.value() == c * d * x_squared(ctx));
  CHECK(Scalar(CycloElement(ctx), 1) == Scalar(CycloElement(ctx), 0));
  CHECK(Scalar(c, -2) == Scalar(c * x_squared(ctx).inverse(), 0));
  CHECK(Scalar(c, 3) == Scalar(c * x_squared(ctx), 1));
  CHECK(Scalar(c, 1) * Scalar(c, 1).inverse() == Scalar(CycloElement::integer(ctx, 1)));
  CHECK_THROWS_AS(Scalar(c, 1) + Scalar(d, 0), GradingError);
  CHECK(Scalar(c, 1) + Scalar(CycloElement(ctx), 0) == Scalar(c, 1));
  CHECK(std::abs(Scalar(CycloElement::integer(ctx, 1), 1).to_complex().real() - 2.0) < 1e-12);
}

TEST_CASE("power sums reduce like explicit monomial sums") {
  const auto& ctx = CycloContext::get(6);
  PowerSum s(ctx);
  CycloElement expected(ctx);
  for (int e = -30; e <= 30; e += 7) {
    s.add(e, e % 3 - 1);
    expected += t_power(ctx, e) * static_cast<long>(e % 3 - 1);
  }
  CHECK(s.reduce() == expected);
}
