#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace qtorus;

namespace {

template <class Ring>
NCWord<Ring> e(const Ring& ring, std::int64_t p, std::int64_t q) {
  return NCWord<Ring>::monomial(ring, p, q, ring.from_int(1));
}

template <class Ring>
SymbolElement<Ring> random_symbol(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3), lattice(-5, 5), coeff(1, 3), expo(-3, 3);
  SymbolElement<Ring> s(ring);
  for (int i = terms(rng); i > 0; --i) {
    const int p = lattice(rng), q = lattice(rng);
    s.add(p, q, ring.from_int(coeff(rng)) * ring.t_power(expo(rng)));
  }
  return s;
}

template <class Ring>
NCWord<Ring> random_word(const Ring& ring, std::mt19937_64& rng) {
  NCWord<Ring> w(ring);
  const auto s = random_symbol(ring, rng);
  for (const auto& [key, c] : s.terms()) w.add(key.first, key.second, c);
  return w;
}

}  // namespace

TEST_CASE("Laurent polynomials") {
  const LaurentPoly a = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, Rational(1, 2));
  const LaurentPoly b = LaurentPoly::monomial(1) - LaurentPoly::integer(2);
  CHECK((a * b).terms().size() == 4);
  CHECK(a * b == b * a);
  CHECK(a - a == LaurentPoly());
  CHECK((a * LaurentPoly::integer(0)).is_zero());
  CHECK(LaurentPoly::monomial(3) * LaurentPoly::monomial(-3) == LaurentPoly::integer(1));
}

TEST_CASE("Weyl words") {
  const LaurentRing formal;
  CHECK(weyl_multiply(e(formal, 1, 0), e(formal, 0, 1)) == formal.t_power(1) * e(formal, 1, 1));
  CHECK(weyl_multiply(e(formal, 0, 1), e(formal, 1, 0)) == formal.t_power(-1) * e(formal, 1, 1));
  const NCWord<LaurentRing> one = e(formal, 0, 0);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_word(formal, rng), b = random_word(formal, rng), c = random_word(formal, rng);
    CHECK(weyl_multiply(one, a) == a);
    CHECK(weyl_multiply(a, one) == a);
    CHECK(weyl_multiply(weyl_multiply(a, b), c) == weyl_multiply(a, weyl_multiply(b, c)));
  }
  const CycloRing c4(CycloContext::get(4));
  for (int i = 0; i < 30; ++i) {
    const auto a = random_word(c4, rng), b = random_word(c4, rng), c = random_word(c4, rng);
    CHECK(weyl_multiply(weyl_multiply(a, b), c) == weyl_multiply(a, weyl_multiply(b, c)));
  }
  const CycloRing c5(CycloContext::get(5));
  CHECK_THROWS_AS(weyl_multiply(e(c4, 1, 0), e(c5, 1, 0)), std::invalid_argument);
}

TEST_CASE("noncommutative cosines") {
  const LaurentRing formal;
  CHECK(nc_cosine(formal, 0, 0) == NCWord<LaurentRing>::monomial(formal, 0, 0, formal.from_int(2)));
  CHECK(nc_cosine(formal, 1, 0) == e(formal, 1, 0) + e(formal, -1, 0));
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      for (int p = -3; p <= 3; ++p) {
        for (int q = -3; q <= 3; ++q) {
          const std::int64_t d = m * q - n * p;
          CHECK(weyl_multiply(nc_cosine(formal, m, n), nc_cosine(formal, p, q)) ==
                formal.t_power(d) * nc_cosine(formal, m + p, n + q) +
                    formal.t_power(-d) * nc_cosine(formal, m - p, n - q));
        }
      }
    }
  }
}

TEST_CASE("star product on symbols") {
  const LaurentRing formal;
  using Sym = SymbolElement<LaurentRing>;
  const Sym c10 = Sym::symbol(formal, 1, 0), c01 = Sym::symbol(formal, 0, 1), c11 = Sym::symbol(formal, 1, 1);
  Sym expected(formal);
  expected.add(1, 1, formal.t_power(1));
  expected.add(1, -1, formal.t_power(-1));
  CHECK(star_multiply(c10, c01) == expected);
  CHECK(Sym::symbol(formal, -2, 3) == Sym::symbol(formal, 2, -3));
  CHECK(Sym::symbol(formal, 0, -2).terms().begin()->first == LatticePoint{0, 2});
  CHECK(star_multiply(Sym::symbol(formal, 2, -1), Sym::symbol(formal, 0, 0)) ==
        formal.from_int(2) * Sym::symbol(formal, 2, -1));
  CHECK(star_multiply(star_multiply(c10, c01), c11) == star_multiply(c10, star_multiply(c01, c11)));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_symbol(formal, rng), b = random_symbol(formal, rng), c = random_symbol(formal, rng);
    CHECK(star_multiply(star_multiply(a, b), c) == star_multiply(a, star_multiply(b, c)));
    CHECK(symbol_to_nc(star_multiply(a, b)) == weyl_multiply(symbol_to_nc(a), symbol_to_nc(b)));
  }
}

TEST_CASE("clock and shift model") {
  for (int r = 3; r <= 6; ++r) {
    const auto& ctx = CycloContext::get(r);
    const CycloRing ring(ctx);
    const ClockShiftModel model = clock_shift_model(ctx);
    CHECK(model.u * model.v == t_power(ctx, 2) * (model.v * model.u));
    CycloMatrix up = model.identity(), vp = model.identity();
    for (int i = 0; i < 2 * r; ++i) {
      up = up * model.u;
      vp = vp * model.v;
    }
    CHECK(up == model.identity());
    CHECK(vp == model.identity());
    CHECK(model.evaluate(e(ring, 1, 0)) == model.u);
    CHECK(model.evaluate(e(ring, 0, 1)) == model.v);
    CHECK(model.evaluate(e(ring, 1, 1)) == t_power(ctx, -1) * (model.u * model.v));
    for (int m = -2; m <= 2; ++m) {
      for (int n = -2; n <= 2; ++n) {
        for (int p = -2; p <= 2; ++p) {
          for (int q = -2; q <= 2; ++q) {
            const auto a = nc_cosine(ring, m, n), b = nc_cosine(ring, p, q);
            CHECK(model.evaluate(weyl_multiply(a, b)) == model.evaluate(a) * model.evaluate(b));
          }
        }
      }
    }
  }
}

TEST_CASE("operator representation of symbols") {
  const auto& c3 = CycloContext::get(3);
  const CycloRing ring(c3);
  using Sym = SymbolElement<CycloRing>;
  CHECK(rep_operator(c3, Sym::symbol(ring, 0, 0)) == Scalar(qtest::integer(3, 2)) * identity_matrix(c3));
  const Sym a = Sym::symbol(ring, 1, 0), b = Sym::symbol(ring, 0, 1);
  CHECK(rep_operator(c3, star_multiply(a, b)) == rep_operator(c3, a) * rep_operator(c3, b));
  CHECK(rep_operator(c3, Sym::symbol(ring, 2, -3)) == c_matrix(c3, -2, 3));
  for (int r = 3; r <= 5; ++r) {
    const auto& ctx = CycloContext::get(r);
    const CycloRing rr(ctx);
    std::mt19937_64 rng(r);
    for (int i = 0; i < 20; ++i) {
      const auto x = random_symbol(rr, rng), y = random_symbol(rr, rng);
      CHECK(rep_operator(ctx, star_multiply(x, y)) == rep_operator(ctx, x) * rep_operator(ctx, y));
    }
  }
  CHECK_THROWS_AS(rep_operator(CycloContext::get(4), a), std::invalid_argument);
}

TEST_CASE("kernel comparison") {
  const KernelReport zero = kernel_compare(CycloContext::get(3), 0);
  CHECK(zero.symbols == 1);
  CHECK(zero.dim_ker_op == 0);
  CHECK(zero.dim_ker_nc == 0);
  CHECK(zero.nc_subset_op);
  for (const auto& row : qtest::oracle()["kernel"]) {
    const KernelReport rep = kernel_compare(CycloContext::get(row["level"]), row["N"]);
    CHECK(rep.symbols == row["symbols"].get<std::size_t>());
    CHECK(rep.dim_ker_op == row["dim_ker_op"].get<std::size_t>());
    CHECK(rep.dim_ker_clock == row["dim_ker_clock"].get<std::size_t>());
    CHECK(rep.dim_ker_nc == 0);
    CHECK(rep.nc_subset_op);
    CHECK(rep.clock_subset_op);
    const std::size_t rank = rep.symbols - rep.dim_ker_op;
    CHECK(rank <= static_cast<std::size_t>((rep.level - 1) * (rep.level - 1)));
  }
  CHECK_THROWS_AS(kernel_compare(CycloContext::get(3), -1), std::invalid_argument);
}
