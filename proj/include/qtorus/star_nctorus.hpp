// Cosine symbols with the product-to-sum star product, the noncommutative
// torus UV = t^2 VU in Weyl-ordered form, a finite clock-and-shift model of
// it, and comparisons between these and the operator representation.

#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qtorus/observables.hpp"

namespace qtorus {

/// Finite sum of c_e t^e with rational c_e, t a formal variable.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t e, const Rational& c = 1);
  static LaurentPoly integer(long n) { return monomial(0, n); }

  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  std::map<std::int64_t, Rational> terms_;  // no zero coefficients
};

/// Scalars as formal Laurent polynomials in t.
struct LaurentRing {
  using value_type = LaurentPoly;
  value_type zero() const { return {}; }
  value_type from_int(long n) const { return LaurentPoly::integer(n); }
  value_type t_power(std::int64_t e) const { return LaurentPoly::monomial(e); }
  std::string name() const { return "laurent"; }
  friend bool operator==(const LaurentRing&, const LaurentRing&) { return true; }
};

/// Scalars in Q(t) with t = exp(i*pi/(2r)).
struct CycloRing {
  using value_type = CycloElement;
  const CycloContext* ctx;

  explicit CycloRing(const CycloContext& c) : ctx(&c) {}
  value_type zero() const { return CycloElement(*ctx); }
  value_type from_int(long n) const { return CycloElement::integer(*ctx, n); }
  value_type t_power(std::int64_t e) const { return qtorus::t_power(*ctx, e); }
  std::string name() const { return "cyclotomic-" + std::to_string(ctx->level()); }
  friend bool operator==(const CycloRing& a, const CycloRing& b) { return a.ctx == b.ctx; }
};

using LatticePoint = std::pair<std::int64_t, std::int64_t>;

namespace detail {

template <class Ring>
void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw std::invalid_argument("mixed scalar rings: " + a.name() + " vs " + b.name());
}

template <class V>
void accumulate(std::map<LatticePoint, V>& terms, const LatticePoint& key, const V& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace detail

/// sum c_{pq} e_{(p,q)} with Weyl words e_{(p,q)} = t^{-pq} U^p V^q.
template <class Ring>
class NCWord {
 public:
  using value_type = typename Ring::value_type;

  explicit NCWord(Ring ring) : ring_(std::move(ring)) {}

  static NCWord monomial(const Ring& ring, std::int64_t p, std::int64_t q, const value_type& c) {
    NCWord w(ring);
    w.add(p, q, c);
    return w;
  }

  const Ring& ring() const { return ring_; }
  const std::map<LatticePoint, value_type>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::int64_t p, std::int64_t q, const value_type& c) { detail::accumulate(terms_, {p, q}, c); }

  NCWord& operator+=(const NCWord& o) {
    detail::require_same_ring(ring_, o.ring_);
    for (const auto& [k, c] : o.terms_) detail::accumulate(terms_, k, c);
    return *this;
  }
  NCWord& operator-=(const NCWord& o) {
    detail::require_same_ring(ring_, o.ring_);
    for (const auto& [k, c] : o.terms_) detail::accumulate(terms_, k, -c);
    return *this;
  }
  friend NCWord operator+(NCWord a, const NCWord& b) { return a += b; }
  friend NCWord operator-(NCWord a, const NCWord& b) { return a -= b; }

  friend NCWord operator*(const value_type& s, const NCWord& w) {
    NCWord out(w.ring_);
    for (const auto& [k, c] : w.terms_) detail::accumulate(out.terms_, k, s * c);
    return out;
  }

  friend bool operator==(const NCWord& a, const NCWord& b) {
    detail::require_same_ring(a.ring_, b.ring_);
    return a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  std::map<LatticePoint, value_type> terms_;
};

/// e_{(m,n)} e_{(p,q)} = t^{mq-np} e_{(m+p,n+q)}, extended bilinearly.
template <class Ring>
NCWord<Ring> weyl_multiply(const NCWord<Ring>& a, const NCWord<Ring>& b) {
  detail::require_same_ring(a.ring(), b.ring());
  NCWord<Ring> out(a.ring());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const auto [m, n] = ka;
      const auto [p, q] = kb;
      out.add(m + p, n + q, a.ring().t_power(m * q - n * p) * (ca * cb));
    }
  }
  return out;
}

/// t^{-pq} (U^p V^q + U^{-p} V^{-q}) = e_{(p,q)} + e_{(-p,-q)}.
template <class Ring>
NCWord<Ring> nc_cosine(const Ring& ring, std::int64_t p, std::int64_t q) {
  NCWord<Ring> w(ring);
  w.add(p, q, ring.from_int(1));
  w.add(-p, -q, ring.from_int(1));
  return w;
}

/// Representative of the orbit {(p,q), (-p,-q)}: p > 0, or p = 0 and q >= 0.
inline LatticePoint canonical_orbit(std::int64_t p, std::int64_t q) {
  if (p < 0 || (p == 0 && q < 0)) return {-p, -q};
  return {p, q};
}

/// Finite combination of cosine symbols C(p,q) = C(-p,-q).
template <class Ring>
class SymbolElement {
 public:
  using value_type = typename Ring::value_type;

  explicit SymbolElement(Ring ring) : ring_(std::move(ring)) {}

  static SymbolElement symbol(const Ring& ring, std::int64_t p, std::int64_t q) {
    SymbolElement s(ring);
    s.add(p, q, ring.from_int(1));
    return s;
  }

  const Ring& ring() const { return ring_; }
  const std::map<LatticePoint, value_type>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::int64_t p, std::int64_t q, const value_type& c) {
    detail::accumulate(terms_, canonical_orbit(p, q), c);
  }

  SymbolElement& operator+=(const SymbolElement& o) {
    detail::require_same_ring(ring_, o.ring_);
    for (const auto& [k, c] : o.terms_) detail::accumulate(terms_, k, c);
    return *this;
  }
  SymbolElement& operator-=(const SymbolElement& o) {
    detail::require_same_ring(ring_, o.ring_);
    for (const auto& [k, c] : o.terms_) detail::accumulate(terms_, k, -c);
    return *this;
  }
  friend SymbolElement operator+(SymbolElement a, const SymbolElement& b) { return a += b; }
  friend SymbolElement operator-(SymbolElement a, const SymbolElement& b) { return a -= b; }

  friend SymbolElement operator*(const value_type& s, const SymbolElement& x) {
    SymbolElement out(x.ring_);
    for (const auto& [k, c] : x.terms_) detail::accumulate(out.terms_, k, s * c);
    return out;
  }

  friend bool operator==(const SymbolElement& a, const SymbolElement& b) {
    detail::require_same_ring(a.ring_, b.ring_);
    return a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  std::map<LatticePoint, value_type> terms_;
};

/// C(m,n) * C(p,q) = t^{mq-np} C(m+p,n+q) + t^{np-mq} C(m-p,n-q), bilinearly.
template <class Ring>
SymbolElement<Ring> star_multiply(const SymbolElement<Ring>& a, const SymbolElement<Ring>& b) {
  detail::require_same_ring(a.ring(), b.ring());
  const Ring& ring = a.ring();
  SymbolElement<Ring> out(ring);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const auto [m, n] = ka;
      const auto [p, q] = kb;
      const auto c = ca * cb;
      const std::int64_t d = m * q - n * p;
      out.add(m + p, n + q, ring.t_power(d) * c);
      out.add(m - p, n - q, ring.t_power(-d) * c);
    }
  }
  return out;
}

/// Image of a symbol combination under C(p,q) -> nc_cosine(p,q).
template <class Ring>
NCWord<Ring> symbol_to_nc(const SymbolElement<Ring>& s) {
  NCWord<Ring> out(s.ring());
  for (const auto& [k, c] : s.terms()) out += c * nc_cosine(s.ring(), k.first, k.second);
  return out;
}

using CycloMatrix = Matrix<CycloElement>;

/// U = diag(t^{2j}), V = cyclic shift e_j -> e_{j+1}, both 2r x 2r.
struct ClockShiftModel {
  const CycloContext* ctx;
  CycloMatrix u;
  CycloMatrix v;

  /// sum c_{pq} t^{-pq} U^p V^q as a 2r x 2r matrix.
  CycloMatrix evaluate(const NCWord<CycloRing>& word) const;
  CycloMatrix identity() const;
};

ClockShiftModel clock_shift_model(const CycloContext& ctx);

/// Linear extension of C(p,q) -> c_matrix(p,q).
OperatorMatrix rep_operator(const CycloContext& ctx, const SymbolElement<CycloRing>& a);

struct KernelReport {
  int level = 0;
  int bound = 0;
  std::size_t symbols = 0;
  std::size_t dim_ker_op = 0;
  std::size_t dim_ker_nc = 0;
  bool nc_subset_op = false;
  std::size_t dim_ker_clock = 0;
  bool clock_subset_op = false;
};

/// Exact kernels of symbol -> operator, symbol -> Weyl word and
/// symbol -> clock-and-shift matrix over {C(p,q) : 0 <= p <= N, |q| <= N}.
KernelReport kernel_compare(const CycloContext& ctx, int bound);

}  // namespace qtorus
