#include "qtorus/star_nctorus.hpp"

#include <vector>

namespace qtorus {

LaurentPoly LaurentPoly::monomial(std::int64_t e, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out += LaurentPoly::monomial(ea + eb, ca * cb);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (e != 0) os << "*t^" << e;
  }
  return os.str();
}

namespace {

std::size_t wrap(std::int64_t j, std::int64_t n) {
  std::int64_t m = j % n;
  return static_cast<std::size_t>(m < 0 ? m + n : m);
}

}  // namespace

CycloMatrix ClockShiftModel::identity() const {
  const std::size_t n = u.rows();
  return CycloMatrix::identity(n, CycloElement(*ctx), CycloElement::integer(*ctx, 1));
}

CycloMatrix ClockShiftModel::evaluate(const NCWord<CycloRing>& word) const {
  if (word.ring().ctx != ctx) throw std::invalid_argument("mixed cyclotomic levels");
  const std::int64_t n = static_cast<std::int64_t>(u.rows());
  CycloMatrix out(u.rows(), u.cols(), CycloElement(*ctx));
  // t^{-pq} U^p V^q e_j = t^{-pq} t^{2p(j+q)} e_{j+q}
  for (const auto& [key, c] : word.terms()) {
    const auto [p, q] = key;
    for (std::int64_t j = 0; j < n; ++j) {
      out(wrap(j + q, n), static_cast<std::size_t>(j)) += c.times_t_power(-p * q + 2 * p * (j + q));
    }
  }
  return out;
}

ClockShiftModel clock_shift_model(const CycloContext& ctx) {
  const std::size_t n = 2 * static_cast<std::size_t>(ctx.level());
  CycloMatrix u(n, n, CycloElement(ctx));
  CycloMatrix v(n, n, CycloElement(ctx));
  for (std::size_t j = 0; j < n; ++j) {
    u(j, j) = t_power(ctx, 2 * static_cast<std::int64_t>(j));
    v((j + 1) % n, j) = CycloElement::integer(ctx, 1);
  }
  return ClockShiftModel{&ctx, std::move(u), std::move(v)};
}

OperatorMatrix rep_operator(const CycloContext& ctx, const SymbolElement<CycloRing>& a) {
  if (a.ring().ctx != &ctx) throw std::invalid_argument("mixed cyclotomic levels");
  OperatorMatrix out = zero_matrix(ctx);
  for (const auto& [key, c] : a.terms()) out += Scalar(c) * c_matrix(ctx, key.first, key.second);
  return out;
}

namespace {

using Column = std::vector<CycloElement>;

// Kernel basis of the linear map whose values on the symbols are `cols`.
std::vector<Column> kernel_of(const CycloContext& ctx, const std::vector<Column>& cols) {
  const std::size_t n = cols.size();
  const std::size_t m = n == 0 ? 0 : cols.front().size();
  CycloMatrix a(m, n, CycloElement(ctx));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) a(i, j) = cols[j][i];
  }
  return nullspace(std::move(a), CycloElement::integer(ctx, 1));
}

bool annihilates(const CycloContext& ctx, const std::vector<Column>& cols, const Column& v) {
  const std::size_t m = cols.empty() ? 0 : cols.front().size();
  for (std::size_t i = 0; i < m; ++i) {
    CycloElement acc(ctx);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!v[j].is_zero() && !cols[j][i].is_zero()) acc += v[j] * cols[j][i];
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool kernel_subset(const CycloContext& ctx, const std::vector<Column>& kernel,
                   const std::vector<Column>& target_cols) {
  for (const auto& v : kernel) {
    if (!annihilates(ctx, target_cols, v)) return false;
  }
  return true;
}

}  // namespace

KernelReport kernel_compare(const CycloContext& ctx, int bound) {
  if (bound < 0) throw std::invalid_argument("kernel_compare: bound must be non-negative");
  const CycloRing ring(ctx);
  std::vector<LatticePoint> symbols;
  for (std::int64_t p = 0; p <= bound; ++p) {
    for (std::int64_t q = p == 0 ? 0 : -bound; q <= bound; ++q) symbols.emplace_back(p, q);
  }

  const std::int64_t side = 2 * static_cast<std::int64_t>(bound) + 1;
  const ClockShiftModel clock = clock_shift_model(ctx);
  std::vector<Column> op_cols, nc_cols, clock_cols;
  for (const auto& [p, q] : symbols) {
    const OperatorMatrix c = c_matrix(ctx, p, q);
    Column op;
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < c.cols(); ++j) {
        if (c(i, j).xpow() != 0) throw GradingError("curve operator entry with odd X-degree");
        op.push_back(c(i, j).value());
      }
    }
    op_cols.push_back(std::move(op));

    const auto word = nc_cosine(ring, p, q);
    Column nc(static_cast<std::size_t>(side * side), CycloElement(ctx));
    for (const auto& [key, coeff] : word.terms()) {
      nc[static_cast<std::size_t>((key.first + bound) * side + key.second + bound)] += coeff;
    }
    nc_cols.push_back(std::move(nc));

    const CycloMatrix mat = clock.evaluate(word);
    Column cl;
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      for (std::size_t j = 0; j < mat.cols(); ++j) cl.push_back(mat(i, j));
    }
    clock_cols.push_back(std::move(cl));
  }

  KernelReport rep;
  rep.level = ctx.level();
  rep.bound = bound;
  rep.symbols = symbols.size();
  const auto ker_op = kernel_of(ctx, op_cols);
  const auto ker_nc = kernel_of(ctx, nc_cols);
  const auto ker_clock = kernel_of(ctx, clock_cols);
  rep.dim_ker_op = ker_op.size();
  rep.dim_ker_nc = ker_nc.size();
  rep.dim_ker_clock = ker_clock.size();
  rep.nc_subset_op = kernel_subset(ctx, ker_nc, op_cols);
  rep.clock_subset_op = kernel_subset(ctx, ker_clock, op_cols);
  return rep;
}

}  // namespace qtorus
