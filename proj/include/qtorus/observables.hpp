// Quantized observables on the torus: the cosine operators C(p,q), the
// sine-ratio operators S(p,q), and the product-to-sum rule they satisfy.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qtorus/torus_space.hpp"

namespace qtorus {

/// (p, q) = d * (p', q') with d = gcd(|p|, |q|); p', q' undefined when d = 0.
struct SlopeData {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t d = 0;
  std::int64_t p_prime = 0;
  std::int64_t q_prime = 0;

  static SlopeData of(std::int64_t p, std::int64_t q);
};

/// C(p,q) V^k = t^{-pq} (t^{2qk} V^{k-p} + t^{-2qk} V^{k+p}), colors reduced.
TorusVector c_action(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k);

/// Matrix of C(p,q); column k-1 is c_action(p, q, k).
OperatorMatrix c_matrix(const CycloContext& ctx, std::int64_t p, std::int64_t q);

/// S(n p', n q') via the Chebyshev inversion of C = S_{n+1} - S_{n-1}:
/// sum of C(m p', m q') over m = n-1, n-3, ... > 0, plus the identity for odd n.
OperatorMatrix s_matrix_op(const CycloContext& ctx, std::int64_t p, std::int64_t q);

/// t^{-pq} ([k(m+q)] t^{-2mp} + [k(m-q)] t^{2mp}).
CycloElement pairing_form(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k,
                          std::int64_t m);

/// t^{-pq}/(t^2 - t^-2) * (t^{2(qk-pm+km)} - t^{2(qk+pm-km)} + t^{2(-qk+pm+km)} - t^{2(-qk-pm-km)}).
CycloElement four_term_form(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k,
                            std::int64_t m);

struct ProductToSum {
  std::int64_t d = 0;  // m*q - n*p
  OperatorMatrix lhs;  // C(m,n) * C(p,q)
  OperatorMatrix rhs;  // t^d C(m+p,n+q) + t^{-d} C(m-p,n-q)
  OperatorMatrix plus_term;
  OperatorMatrix minus_term;
  /// First differing entry (0-based), empty when the identity holds.
  std::optional<std::pair<std::size_t, std::size_t>> mismatch;

  bool ok() const { return !mismatch.has_value(); }
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates both sides of the product-to-sum rule for C(m,n) * C(p,q).
ProductToSum product_to_sum(const CycloContext& ctx, std::int64_t m, std::int64_t n, std::int64_t p,
                            std::int64_t q);

/// Same as product_to_sum but throws VerificationError naming the first
/// differing entry and both values.
ProductToSum checked_product_to_sum(const CycloContext& ctx, std::int64_t m, std::int64_t n,
                                    std::int64_t p, std::int64_t q);

}  // namespace qtorus
