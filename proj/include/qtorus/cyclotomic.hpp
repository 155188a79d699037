// Exact arithmetic in the cyclotomic field Q(t), t = exp(i*pi/(2r)).
//
// Elements are stored as coefficient vectors of their canonical remainder
// modulo the 4r-th cyclotomic polynomial, so equality is coefficient-wise.
// The normalization constant X = sqrt(sum_{j=1}^{r-1} [j]^2) is irrational
// and is carried as a Z/2 grading on Scalar, with X^2 folded into the value.

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qtorus {

using Rational = mpq_class;

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<std::int64_t>;

/// Phi_n(x), computed as (x^n - 1) divided by Phi_d for every proper divisor d.
IntPoly cyclotomic_polynomial(int n);

class CycloElement;

/// Raised when two Scalars of different X-parity are added.  X is irrational,
/// so such a sum has no representation and indicates a bookkeeping error.
class GradingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Per-level data: the modulus, reductions of x^e, and cached constants.
/// Contexts are created once per level and live for the whole process;
/// they are immutable after construction and safe to share across threads.
class CycloContext {
 public:
  /// Throws std::invalid_argument for r < 3.
  static const CycloContext& get(int level);

  CycloContext(const CycloContext&) = delete;
  CycloContext& operator=(const CycloContext&) = delete;
  ~CycloContext();

  int level() const { return level_; }
  int order() const { return 4 * level_; }
  int degree() const { return degree_; }
  const IntPoly& modulus() const { return modulus_; }

  /// Coefficients of x^e mod Phi_{4r} for 0 <= e < 4r (dense, length degree).
  std::span<const std::int64_t> power_residue(int e) const {
    return {residues_.data() + static_cast<std::size_t>(e) * degree_,
            static_cast<std::size_t>(degree_)};
  }

  const CycloElement& x_squared() const { return *x_squared_; }
  const CycloElement& x_squared_inverse() const { return *x_squared_inverse_; }
  /// 1 / (t^2 - t^-2), the denominator of the quantum integers.
  const CycloElement& qint_denominator_inverse() const { return *qden_inverse_; }
  /// Positive real value of X.
  double x_numeric() const { return x_numeric_; }
  std::complex<double> zeta() const;

 private:
  explicit CycloContext(int level);

  int level_;
  int degree_;
  IntPoly modulus_;
  std::vector<std::int64_t> residues_;
  std::unique_ptr<CycloElement> x_squared_;
  std::unique_ptr<CycloElement> x_squared_inverse_;
  std::unique_ptr<CycloElement> qden_inverse_;
  double x_numeric_ = 0.0;
};

class CycloElement {
 public:
  /// Zero of the field.
  explicit CycloElement(const CycloContext& ctx);
  /// Reduces a polynomial in t of any length modulo Phi_{4r}.
  CycloElement(const CycloContext& ctx, std::vector<Rational> poly);

  static CycloElement integer(const CycloContext& ctx, long value);

  const CycloContext& context() const { return *ctx_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycloElement& operator+=(const CycloElement& o);
  CycloElement& operator-=(const CycloElement& o);
  CycloElement& operator*=(const CycloElement& o);
  CycloElement& operator*=(long k);

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(CycloElement a, long k) { return a *= k; }
  friend CycloElement operator*(long k, CycloElement a) { return a *= k; }
  CycloElement operator-() const;

  friend bool operator==(const CycloElement& a, const CycloElement& b);

  /// Multiplicative inverse; throws std::domain_error for zero.
  CycloElement inverse() const;
  /// Multiplies by t^e.  Cheaper than a general product.
  CycloElement times_t_power(std::int64_t e) const;

  std::complex<double> to_complex() const;
  /// Human-readable polynomial in t, e.g. "t^2 - 1/2*t + 3".
  std::string to_string() const;

 private:
  void require_same(const CycloElement& o) const;

  const CycloContext* ctx_;
  std::vector<Rational> coeffs_;
};

/// t^e for any integer e.
CycloElement t_power(const CycloContext& ctx, std::int64_t e);

/// Quantum integer [n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2}), evaluated as
/// the balanced power sum; [0] = 0 and [-n] = -[n].
CycloElement qint(const CycloContext& ctx, std::int64_t n);

/// X^2 = sum_{j=1}^{r-1} [j]^2.
inline const CycloElement& x_squared(const CycloContext& ctx) { return ctx.x_squared(); }

/// Integer combination of powers of t, with exponents kept modulo 4r.
/// Used to accumulate long sums of monomials before a single reduction.
class PowerSum {
 public:
  explicit PowerSum(const CycloContext& ctx) : ctx_(&ctx), counts_(ctx.order(), 0) {}
  void add(std::int64_t exponent, std::int64_t count = 1);
  CycloElement reduce() const;

 private:
  const CycloContext* ctx_;
  std::vector<std::int64_t> counts_;
};

/// A cyclotomic value times X^xpow, kept canonical with xpow in {0, 1}.
class Scalar {
 public:
  explicit Scalar(const CycloContext& ctx) : value_(ctx), xpow_(0) {}
  explicit Scalar(CycloElement value, int xpow = 0);

  const CycloElement& value() const { return value_; }
  int xpow() const { return xpow_; }
  const CycloContext& context() const { return value_.context(); }
  bool is_zero() const { return value_.is_zero(); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const { return Scalar(-value_, xpow_); }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  CycloElement value_;
  int xpow_;
};

}  // namespace qtorus
