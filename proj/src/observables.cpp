#include "qtorus/observables.hpp"

#include <numeric>
#include <sstream>

namespace qtorus {

SlopeData SlopeData::of(std::int64_t p, std::int64_t q) {
  SlopeData s{p, q, std::gcd(p, q), 0, 0};
  if (s.d != 0) {
    s.p_prime = p / s.d;
    s.q_prime = q / s.d;
  }
  return s;
}

TorusVector c_action(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k) {
  TorusVector v(ctx);
  v.add_color(k - p, Scalar(t_power(ctx, -p * q + 2 * q * k)));
  v.add_color(k + p, Scalar(t_power(ctx, -p * q - 2 * q * k)));
  return v;
}

OperatorMatrix c_matrix(const CycloContext& ctx, std::int64_t p, std::int64_t q) {
  OperatorMatrix m = zero_matrix(ctx);
  const int dim = ctx.level() - 1;
  for (int k = 1; k <= dim; ++k) {
    const TorusVector col = c_action(ctx, p, q, k);
    for (int i = 1; i <= dim; ++i) m(i - 1, k - 1) = col.at(i);
  }
  return m;
}

OperatorMatrix s_matrix_op(const CycloContext& ctx, std::int64_t p, std::int64_t q) {
  const auto slope = SlopeData::of(p, q);
  OperatorMatrix s = zero_matrix(ctx);
  if (slope.d == 0) return s;
  for (std::int64_t m = slope.d - 1; m > 0; m -= 2) s += c_matrix(ctx, m * slope.p_prime, m * slope.q_prime);
  if (slope.d % 2 == 1) s += identity_matrix(ctx);
  return s;
}

CycloElement pairing_form(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k,
                          std::int64_t m) {
  CycloElement a = qint(ctx, k * (m + q)).times_t_power(-2 * m * p);
  CycloElement b = qint(ctx, k * (m - q)).times_t_power(2 * m * p);
  return (a + b).times_t_power(-p * q);
}

CycloElement four_term_form(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k,
                            std::int64_t m) {
  PowerSum num(ctx);
  num.add(2 * (q * k - p * m + k * m), 1);
  num.add(2 * (q * k + p * m - k * m), -1);
  num.add(2 * (-q * k + p * m + k * m), 1);
  num.add(2 * (-q * k - p * m - k * m), -1);
  return (num.reduce() * ctx.qint_denominator_inverse()).times_t_power(-p * q);
}

ProductToSum product_to_sum(const CycloContext& ctx, std::int64_t m, std::int64_t n, std::int64_t p,
                            std::int64_t q) {
  const std::int64_t d = m * q - n * p;
  OperatorMatrix lhs = c_matrix(ctx, m, n) * c_matrix(ctx, p, q);
  OperatorMatrix plus = Scalar(t_power(ctx, d)) * c_matrix(ctx, m + p, n + q);
  OperatorMatrix minus = Scalar(t_power(ctx, -d)) * c_matrix(ctx, m - p, n - q);
  OperatorMatrix rhs = plus + minus;
  auto mismatch = lhs.first_difference(rhs);
  return ProductToSum{d, std::move(lhs), std::move(rhs), std::move(plus), std::move(minus), mismatch};
}

ProductToSum checked_product_to_sum(const CycloContext& ctx, std::int64_t m, std::int64_t n,
                                    std::int64_t p, std::int64_t q) {
  ProductToSum res = product_to_sum(ctx, m, n, p, q);
  if (res.mismatch) {
    const auto [i, j] = *res.mismatch;
    std::ostringstream os;
    os << "product-to-sum failed at r=" << ctx.level() << " for C(" << m << "," << n << ")*C(" << p << ","
       << q << "): entry (" << i + 1 << "," << j + 1 << ") lhs=" << res.lhs(i, j).to_string()
       << " rhs=" << res.rhs(i, j).to_string();
    throw VerificationError(os.str());
  }
  return res;
}

}  // namespace qtorus
