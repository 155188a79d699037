#include "qtorus/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace qtorus {

namespace {

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  IntPoly poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

// ---------------------------------------------------------------- context

CycloContext::CycloContext(int level) : level_(level) {
  modulus_ = cyclotomic_polynomial(order());
  degree_ = static_cast<int>(modulus_.size()) - 1;

  // x^e mod Phi: shift the previous residue and fold the overflow term.
  residues_.assign(static_cast<std::size_t>(order()) * degree_, 0);
  std::vector<std::int64_t> cur(degree_, 0);
  cur[0] = 1;
  for (int e = 0; e < order(); ++e) {
    std::copy(cur.begin(), cur.end(), residues_.begin() + static_cast<std::ptrdiff_t>(e) * degree_);
    const std::int64_t top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < degree_; ++i) cur[i] -= top * modulus_[i];
  }

  CycloElement xsq(*this);
  for (int j = 1; j < level_; ++j) {
    const CycloElement q = qint(*this, j);
    xsq += q * q;
  }
  x_squared_inverse_ = std::make_unique<CycloElement>(xsq.inverse());
  x_numeric_ = std::sqrt(xsq.to_complex().real());
  x_squared_ = std::make_unique<CycloElement>(std::move(xsq));
  qden_inverse_ = std::make_unique<CycloElement>((t_power(*this, 2) - t_power(*this, -2)).inverse());
}

CycloContext::~CycloContext() = default;

const CycloContext& CycloContext::get(int level) {
  if (level < 3) throw std::invalid_argument("level r must be at least 3");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloContext>> contexts;
  std::lock_guard lock(mutex);
  auto& slot = contexts[level];
  if (!slot) slot.reset(new CycloContext(level));
  return *slot;
}

std::complex<double> CycloContext::zeta() const {
  return std::polar(1.0, std::numbers::pi / (2.0 * level_));
}

// ---------------------------------------------------------------- element

CycloElement::CycloElement(const CycloContext& ctx) : ctx_(&ctx), coeffs_(ctx.degree()) {}

CycloElement::CycloElement(const CycloContext& ctx, std::vector<Rational> poly)
    : ctx_(&ctx), coeffs_(ctx.degree()) {
  const int order = ctx.order();
  const int deg = ctx.degree();
  for (std::size_t e = 0; e < poly.size(); ++e) {
    if (sgn(poly[e]) == 0) continue;
    if (static_cast<int>(e) < deg) {
      coeffs_[e] += poly[e];
      continue;
    }
    auto res = ctx.power_residue(static_cast<int>(e % order));
    for (int i = 0; i < deg; ++i) {
      if (res[i] != 0) coeffs_[i] += poly[e] * res[i];
    }
  }
}

CycloElement CycloElement::integer(const CycloContext& ctx, long value) {
  CycloElement out(ctx);
  out.coeffs_[0] = value;
  return out;
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

void CycloElement::require_same(const CycloElement& o) const {
  if (ctx_ != o.ctx_) throw std::invalid_argument("mixed cyclotomic levels");
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(o.coeffs_[i]) != 0) coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(o.coeffs_[i]) != 0) coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

CycloElement& CycloElement::operator*=(long k) {
  for (auto& c : coeffs_) {
    if (sgn(c) != 0) c *= k;
  }
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& o) {
  *this = *this * o;
  return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  a.require_same(b);
  const int deg = a.ctx_->degree();
  std::vector<Rational> acc(2 * deg - 1);
  for (int i = 0; i < deg; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      acc[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycloElement(*a.ctx_, std::move(acc));
}

CycloElement CycloElement::operator-() const {
  CycloElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  a.require_same(b);
  return a.coeffs_ == b.coeffs_;
}

CycloElement CycloElement::times_t_power(std::int64_t e) const {
  const int deg = ctx_->degree();
  const auto shift = floor_mod(e, ctx_->order());
  std::vector<Rational> poly(static_cast<std::size_t>(deg + shift));
  for (int i = 0; i < deg; ++i) poly[i + shift] = coeffs_[i];
  return CycloElement(*ctx_, std::move(poly));
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  // Solve (multiplication-by-this matrix) * c = e_0 by Gauss-Jordan over Q.
  const int deg = ctx_->degree();
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1));
  CycloElement col(*this);
  for (int j = 0; j < deg; ++j) {
    for (int i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
    col = col.times_t_power(1);
  }
  m[0][deg] = 1;
  for (int c = 0; c < deg; ++c) {
    int piv = c;
    while (piv < deg && sgn(m[piv][c]) == 0) ++piv;
    if (piv == deg) throw std::logic_error("singular multiplication matrix");
    std::swap(m[piv], m[c]);
    const Rational inv = 1 / m[c][c];
    for (int j = c; j <= deg; ++j) m[c][j] *= inv;
    for (int i = 0; i < deg; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j <= deg; ++j) m[i][j] -= f * m[c][j];
    }
  }
  CycloElement out(*ctx_);
  for (int i = 0; i < deg; ++i) out.coeffs_[i] = m[i][deg];
  return out;
}

std::complex<double> CycloElement::to_complex() const {
  const auto z = ctx_->zeta();
  std::complex<double> pw(1.0, 0.0);
  std::complex<double> sum(0.0, 0.0);
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) sum += c.get_d() * pw;
    pw *= z;
  }
  return sum;
}

std::string CycloElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

CycloElement t_power(const CycloContext& ctx, std::int64_t e) {
  const auto res = ctx.power_residue(static_cast<int>(floor_mod(e, ctx.order())));
  std::vector<Rational> poly(res.begin(), res.end());
  return CycloElement(ctx, std::move(poly));
}

CycloElement qint(const CycloContext& ctx, std::int64_t n) {
  if (n == 0) return CycloElement(ctx);
  // [n] is 2r-periodic, so |n| mod 2r terms suffice.
  const std::int64_t mag = (n < 0 ? -n : n) % (2 * ctx.level());
  PowerSum sum(ctx);
  for (std::int64_t j = 0; j < mag; ++j) sum.add(2 * (mag - 1 - 2 * j), n < 0 ? -1 : 1);
  return sum.reduce();
}

// ---------------------------------------------------------------- PowerSum

void PowerSum::add(std::int64_t exponent, std::int64_t count) {
  counts_[floor_mod(exponent, ctx_->order())] += count;
}

CycloElement PowerSum::reduce() const {
  const int deg = ctx_->degree();
  std::vector<std::int64_t> acc(deg, 0);
  for (int e = 0; e < ctx_->order(); ++e) {
    if (counts_[e] == 0) continue;
    auto res = ctx_->power_residue(e);
    for (int i = 0; i < deg; ++i) acc[i] += counts_[e] * res[i];
  }
  std::vector<Rational> poly(acc.begin(), acc.end());
  return CycloElement(*ctx_, std::move(poly));
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(CycloElement value, int xpow) : value_(std::move(value)), xpow_(0) {
  if (value_.is_zero()) return;
  // xpow = 2*half + parity with parity in {0,1}.
  const int parity = ((xpow % 2) + 2) % 2;
  const int half = (xpow - parity) / 2;
  const auto& ctx = value_.context();
  const CycloElement& fold = half > 0 ? ctx.x_squared() : ctx.x_squared_inverse();
  for (int i = 0; i < std::abs(half); ++i) value_ = value_ * fold;
  xpow_ = parity;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (xpow_ != o.xpow_) throw GradingError("adding Scalars of different X-parity");
  value_ += o.value_;
  if (value_.is_zero()) xpow_ = 0;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar(a.context());
  return Scalar(a.value_ * b.value_, a.xpow_ + b.xpow_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.xpow_ == b.xpow_ && a.value_ == b.value_;
}

Scalar Scalar::inverse() const { return Scalar(value_.inverse(), -xpow_); }

std::complex<double> Scalar::to_complex() const {
  const auto v = value_.to_complex();
  return xpow_ == 0 ? v : v * context().x_numeric();
}

std::string Scalar::to_string() const {
  if (xpow_ == 0) return value_.to_string();
  return "(" + value_.to_string() + ")*X";
}

}  // namespace qtorus
