// The level-r torus space V(T^2) with basis V^1(alpha), ..., V^{r-1}(alpha).
//
// Basis indices are 1-based in every public function, matching the usual
// labelling of colors; Matrix storage underneath is 0-based.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/cyclotomic.hpp"
#include "qtorus/linalg.hpp"

namespace qtorus {

using OperatorMatrix = Matrix<Scalar>;

/// V^k(alpha) for an arbitrary integer color k equals sign * V^index.
struct ReducedColor {
  int sign = 0;   // -1, 0 or +1
  int index = 0;  // 1..r-1 when sign != 0, otherwise 0
  friend bool operator==(const ReducedColor&, const ReducedColor&) = default;
};

/// Closed-form extension of colors: period 2r, V^0 = V^r = 0, V^{-k} = -V^k.
ReducedColor reduce_color(const CycloContext& ctx, std::int64_t k);

class TorusVector {
 public:
  explicit TorusVector(const CycloContext& ctx);
  /// The (reduced) vector V^k(alpha).
  static TorusVector color(const CycloContext& ctx, std::int64_t k);

  const CycloContext& context() const { return *ctx_; }
  int dimension() const { return static_cast<int>(coeffs_.size()); }

  /// Coefficient of V^index, 1 <= index <= r-1.
  const Scalar& at(int index) const { return coeffs_.at(index - 1); }
  Scalar& at(int index) { return coeffs_.at(index - 1); }

  /// this += coeff * V^k(alpha) with k reduced.
  void add_color(std::int64_t k, const Scalar& coeff);

  TorusVector& operator+=(const TorusVector& o);
  TorusVector& operator-=(const TorusVector& o);
  friend TorusVector operator+(TorusVector a, const TorusVector& b) { return a += b; }
  friend TorusVector operator-(TorusVector a, const TorusVector& b) { return a -= b; }
  friend TorusVector operator*(const Scalar& s, const TorusVector& v);
  friend TorusVector operator*(const OperatorMatrix& m, const TorusVector& v);
  friend bool operator==(const TorusVector& a, const TorusVector& b);

  /// "[c_1, ..., c_{r-1}]" in exact form.
  std::string to_string() const;

 private:
  const CycloContext* ctx_;
  std::vector<Scalar> coeffs_;
};

/// V^n(alpha) by running x_{n+1} = M x_n - x_{n-1} outward from the basis,
/// with M the fusion matrix of V^2 and x_r = 0.  Independent of reduce_color.
TorusVector recursion_oracle(const CycloContext& ctx, std::int64_t n);

/// <V^k, V^m> = [km] after reducing both colors.
CycloElement pairing(const CycloContext& ctx, std::int64_t k, std::int64_t m);
/// Bilinear extension: sum_j v_j <V^j, V^m>.
Scalar pairing(const TorusVector& v, std::int64_t m);

OperatorMatrix zero_matrix(const CycloContext& ctx);
OperatorMatrix identity_matrix(const CycloContext& ctx);

/// S-move, entries [mn] * X^{-1}.
OperatorMatrix smove_matrix(const CycloContext& ctx);
/// T^power, diagonal with entries t^{power*(j^2-1)}.
OperatorMatrix tmove_matrix(const CycloContext& ctx, std::int64_t power = 1);

/// <beta_j, beta_k> on the annulus: delta_{jk} X / [j].
Scalar annulus_pairing(const CycloContext& ctx, int j, int k);

}  // namespace qtorus
