#include "qtorus/torus_space.hpp"

#include <stdexcept>

namespace qtorus {

ReducedColor reduce_color(const CycloContext& ctx, std::int64_t k) {
  const std::int64_t r = ctx.level();
  std::int64_t kk = k % (2 * r);
  if (kk < 0) kk += 2 * r;
  if (kk == 0 || kk == r) return {};
  if (kk < r) return {1, static_cast<int>(kk)};
  return {-1, static_cast<int>(2 * r - kk)};
}

TorusVector::TorusVector(const CycloContext& ctx)
    : ctx_(&ctx), coeffs_(static_cast<std::size_t>(ctx.level() - 1), Scalar(ctx)) {}

TorusVector TorusVector::color(const CycloContext& ctx, std::int64_t k) {
  TorusVector v(ctx);
  v.add_color(k, Scalar(CycloElement::integer(ctx, 1)));
  return v;
}

void TorusVector::add_color(std::int64_t k, const Scalar& coeff) {
  const auto red = reduce_color(*ctx_, k);
  if (red.sign == 0 || coeff.is_zero()) return;
  if (red.sign > 0) {
    at(red.index) += coeff;
  } else {
    at(red.index) -= coeff;
  }
}

TorusVector& TorusVector::operator+=(const TorusVector& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TorusVector& TorusVector::operator-=(const TorusVector& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TorusVector operator*(const Scalar& s, const TorusVector& v) {
  TorusVector out(v.context());
  for (std::size_t i = 0; i < v.coeffs_.size(); ++i) out.coeffs_[i] = s * v.coeffs_[i];
  return out;
}

TorusVector operator*(const OperatorMatrix& m, const TorusVector& v) {
  if (m.cols() != v.coeffs_.size()) throw std::invalid_argument("matrix/vector size mismatch");
  TorusVector out(v.context());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero() || v.coeffs_[j].is_zero()) continue;
      out.coeffs_[i] += m(i, j) * v.coeffs_[j];
    }
  }
  return out;
}

bool operator==(const TorusVector& a, const TorusVector& b) { return a.coeffs_ == b.coeffs_; }

std::string TorusVector::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? ", " : "") + coeffs_[i].to_string();
  return s + "]";
}

TorusVector recursion_oracle(const CycloContext& ctx, std::int64_t n) {
  const int r = ctx.level();
  const int dim = r - 1;
  using IntVec = std::vector<long>;
  auto fuse = [dim](const IntVec& x) {  // multiplication by V^2
    IntVec y(dim, 0);
    for (int k = 0; k < dim; ++k) {
      if (k > 0) y[k - 1] += x[k];
      if (k + 1 < dim) y[k + 1] += x[k];
    }
    return y;
  };
  auto basis = [dim](int k) {
    IntVec e(dim, 0);
    if (k >= 1 && k <= dim) e[k - 1] = 1;
    return e;
  };

  IntVec result;
  if (n >= 1 && n <= r) {
    result = basis(static_cast<int>(n));
  } else if (n > r) {
    IntVec prev = basis(r - 1), cur = basis(r);  // x_{r-1}, x_r = 0
    for (std::int64_t i = r; i < n; ++i) {
      IntVec next = fuse(cur);
      for (int k = 0; k < dim; ++k) next[k] -= prev[k];
      prev = std::move(cur);
      cur = std::move(next);
    }
    result = std::move(cur);
  } else {
    IntVec prev = basis(2), cur = basis(1);  // x_2, x_1
    for (std::int64_t i = 1; i > n; --i) {
      IntVec next = fuse(cur);
      for (int k = 0; k < dim; ++k) next[k] -= prev[k];
      prev = std::move(cur);
      cur = std::move(next);
    }
    result = std::move(cur);
  }

  TorusVector out(ctx);
  for (int k = 0; k < dim; ++k) {
    if (result[k] != 0) out.at(k + 1) = Scalar(CycloElement::integer(ctx, result[k]));
  }
  return out;
}

CycloElement pairing(const CycloContext& ctx, std::int64_t k, std::int64_t m) {
  const auto a = reduce_color(ctx, k);
  const auto b = reduce_color(ctx, m);
  if (a.sign == 0 || b.sign == 0) return CycloElement(ctx);
  return qint(ctx, static_cast<std::int64_t>(a.index) * b.index) * static_cast<long>(a.sign * b.sign);
}

Scalar pairing(const TorusVector& v, std::int64_t m) {
  const auto& ctx = v.context();
  Scalar sum(ctx);
  for (int j = 1; j <= v.dimension(); ++j) {
    if (v.at(j).is_zero()) continue;
    sum += v.at(j) * Scalar(pairing(ctx, j, m));
  }
  return sum;
}

OperatorMatrix zero_matrix(const CycloContext& ctx) {
  const auto n = static_cast<std::size_t>(ctx.level() - 1);
  return OperatorMatrix(n, n, Scalar(ctx));
}

OperatorMatrix identity_matrix(const CycloContext& ctx) {
  const auto n = static_cast<std::size_t>(ctx.level() - 1);
  return OperatorMatrix::identity(n, Scalar(ctx), Scalar(CycloElement::integer(ctx, 1)));
}

OperatorMatrix smove_matrix(const CycloContext& ctx) {
  OperatorMatrix s = zero_matrix(ctx);
  const int dim = ctx.level() - 1;
  for (int m = 1; m <= dim; ++m) {
    for (int n = 1; n <= dim; ++n) s(m - 1, n - 1) = Scalar(qint(ctx, m * n), -1);
  }
  return s;
}

OperatorMatrix tmove_matrix(const CycloContext& ctx, std::int64_t power) {
  OperatorMatrix t = zero_matrix(ctx);
  const int dim = ctx.level() - 1;
  for (std::int64_t j = 1; j <= dim; ++j) t(j - 1, j - 1) = Scalar(t_power(ctx, power * (j * j - 1)));
  return t;
}

Scalar annulus_pairing(const CycloContext& ctx, int j, int k) {
  const int dim = ctx.level() - 1;
  if (j < 1 || j > dim || k < 1 || k > dim) throw std::out_of_range("annulus basis index out of range");
  if (j != k) return Scalar(ctx);
  return Scalar(qint(ctx, j).inverse(), 1);
}

}  // namespace qtorus
