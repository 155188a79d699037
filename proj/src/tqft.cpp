#include "qtorus/tqft.hpp"

#include <numeric>
#include <sstream>

namespace qtorus {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Floor division for a positive divisor.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

IntMatrix2 mul(const IntMatrix2& x, const IntMatrix2& y) {
  IntMatrix2 z{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return z;
}

TorusVector apply_word(const CycloContext& ctx, const MoveWord& word, TorusVector v) {
  const OperatorMatrix s = smove_matrix(ctx);
  for (const auto& tok : word.tokens()) {
    if (tok.kind == MoveToken::Kind::S) {
      v = s * v;
    } else {
      for (std::int64_t j = 1; j <= v.dimension(); ++j) {
        auto& x = v.at(static_cast<int>(j));
        if (!x.is_zero()) x = Scalar(t_power(ctx, tok.power * (j * j - 1))) * x;
      }
    }
  }
  return v;
}

// Pairing matrix [mj] with X-grading 0.
OperatorMatrix torus_pairing_matrix(const CycloContext& ctx) {
  OperatorMatrix p = zero_matrix(ctx);
  const int dim = ctx.level() - 1;
  for (int m = 1; m <= dim; ++m) {
    for (int j = 1; j <= dim; ++j) p(m - 1, j - 1) = Scalar(qint(ctx, m * j));
  }
  return p;
}

// Diagonal curve weight t^{2dj} + t^{-2dj}.
OperatorMatrix curve_weight(const CycloContext& ctx, std::int64_t d) {
  OperatorMatrix w = zero_matrix(ctx);
  for (std::int64_t j = 1; j < ctx.level(); ++j) {
    w(j - 1, j - 1) = Scalar(t_power(ctx, 2 * d * j) + t_power(ctx, -2 * d * j));
  }
  return w;
}

void require_slot(const TensorInvariant& inv, std::size_t slot) {
  if (slot >= inv.rank()) throw std::out_of_range("tensor slot out of range");
}

}  // namespace

// ---------------------------------------------------------------- continued fractions

ContinuedFraction neg_cfrac(std::int64_t p_prime, std::int64_t q_prime) {
  if (p_prime == 0 || q_prime == 0) {
    throw DegenerateSlopeError("continued fraction needs p' and q' both nonzero");
  }
  if (std::gcd(p_prime, q_prime) != 1) throw std::invalid_argument("slope must be coprime");
  // Expand x = p'/q' = a_1 - 1/(a_2 - 1/(...)) with a_1 = ceil(x) and each
  // remainder 1/(a - x) > 1, so later coefficients are >= 2.
  std::int64_t num = q_prime > 0 ? p_prime : -p_prime;
  std::int64_t den = q_prime > 0 ? q_prime : -q_prime;
  ContinuedFraction cf;
  while (true) {
    const std::int64_t a = -floor_div(-num, den);
    cf.a.push_back(a);
    const std::int64_t rest = a * den - num;
    if (rest == 0) break;
    num = den;
    den = rest;
  }
  return cf;
}

Rational evaluate_cfrac(const ContinuedFraction& cf) {
  if (cf.a.empty()) return Rational(0);
  Rational z = -Rational(cf.a.back());
  for (std::size_t i = cf.a.size() - 1; i-- > 0;) {
    if (sgn(z) == 0) throw std::domain_error("continued fraction has a vanishing denominator");
    z = -Rational(cf.a[i]) - 1 / z;
  }
  if (sgn(z) == 0) throw std::domain_error("continued fraction has a vanishing denominator");
  return -1 / z;
}

// ---------------------------------------------------------------- move words

MoveWord MoveWord::from_cfrac(const ContinuedFraction& cf) {
  std::vector<MoveToken> toks{{MoveToken::Kind::S, 1}};
  for (auto a : cf.a) {
    toks.push_back({MoveToken::Kind::T, -a});
    toks.push_back({MoveToken::Kind::S, 1});
  }
  return MoveWord(std::move(toks));
}

int MoveWord::s_count() const {
  int n = 0;
  for (const auto& t : tokens_) n += t.kind == MoveToken::Kind::S ? 1 : 0;
  return n;
}

MoveWord MoveWord::inverse() const {
  std::vector<MoveToken> toks(tokens_.rbegin(), tokens_.rend());
  for (auto& t : toks) {
    if (t.kind == MoveToken::Kind::T) t.power = -t.power;
  }
  return MoveWord(std::move(toks));
}

std::string MoveWord::to_string() const {
  if (tokens_.empty()) return "1";
  std::ostringstream os;
  for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) {
    if (it != tokens_.rbegin()) os << ' ';
    if (it->kind == MoveToken::Kind::S) {
      os << 'S';
    } else {
      os << "T^" << it->power;
    }
  }
  return os.str();
}

MoveWord slope_move_word(std::int64_t p_prime, std::int64_t q_prime) {
  if (std::gcd(p_prime, q_prime) != 1) throw std::invalid_argument("slope must be coprime");
  if (p_prime == 0) return MoveWord();
  if (q_prime == 0) return MoveWord::from_cfrac({});
  return MoveWord::from_cfrac(neg_cfrac(p_prime, q_prime));
}

IntMatrix2 word_matrix(const MoveWord& word) {
  IntMatrix2 m{{{1, 0}, {0, 1}}};
  for (const auto& t : word.tokens()) {
    const IntMatrix2 g = t.kind == MoveToken::Kind::S ? IntMatrix2{{{0, -1}, {1, 0}}}
                                                      : IntMatrix2{{{1, t.power}, {0, 1}}};
    m = mul(g, m);
  }
  return m;
}

bool sl2_word_check(const ContinuedFraction& cf, std::int64_t p_prime, std::int64_t q_prime) {
  const IntMatrix2 w = word_matrix(MoveWord::from_cfrac(cf));
  const std::int64_t x = w[1][0], y = w[1][1];
  return (x == p_prime && y == q_prime) || (x == -p_prime && y == -q_prime);
}

OperatorMatrix move_matrix(const CycloContext& ctx, const MoveWord& word) {
  OperatorMatrix m = identity_matrix(ctx);
  const OperatorMatrix s = smove_matrix(ctx);
  for (const auto& t : word.tokens()) {
    m = (t.kind == MoveToken::Kind::S ? s : tmove_matrix(ctx, t.power)) * m;
  }
  return m;
}

// ---------------------------------------------------------------- tensors

Scalar TensorInvariant::get(const Index& index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Scalar(*ctx_) : it->second;
}

void TensorInvariant::add(const Index& index, const Scalar& value) {
  if (index.size() != rank_) throw std::invalid_argument("tensor index has the wrong rank");
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

bool operator==(const TensorInvariant& a, const TensorInvariant& b) {
  return a.rank_ == b.rank_ && a.entries_ == b.entries_;
}

TensorInvariant cylinder_annulus_invariant(const CycloContext& ctx) {
  TensorInvariant inv(ctx, 4);
  for (int n = 1; n < ctx.level(); ++n) inv.add({n, n, n, n}, Scalar(qint(ctx, n), -1));
  return inv;
}

TensorInvariant solid_torus_shell_invariant(const CycloContext& ctx) {
  return glue_annuli(cylinder_annulus_invariant(ctx), 0, 1);
}

TensorInvariant tensor_product(const TensorInvariant& a, const TensorInvariant& b) {
  TensorInvariant out(a.context(), a.rank() + b.rank());
  for (const auto& [ia, va] : a.entries()) {
    for (const auto& [ib, vb] : b.entries()) {
      TensorInvariant::Index idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(idx, va * vb);
    }
  }
  return out;
}

TensorInvariant glue_annuli(const TensorInvariant& inv, std::size_t slot_a, std::size_t slot_b) {
  require_slot(inv, slot_a);
  require_slot(inv, slot_b);
  if (slot_a == slot_b) throw std::out_of_range("cannot glue a slot to itself");
  const auto& ctx = inv.context();
  std::vector<Scalar> weight;  // X / [k]
  for (int k = 1; k < ctx.level(); ++k) weight.emplace_back(qint(ctx, k).inverse(), 1);

  TensorInvariant out(ctx, inv.rank() - 2);
  for (const auto& [idx, v] : inv.entries()) {
    if (idx[slot_a] != idx[slot_b]) continue;
    TensorInvariant::Index rest;
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (s != slot_a && s != slot_b) rest.push_back(idx[s]);
    }
    out.add(rest, weight[idx[slot_a] - 1] * v);
  }
  return out;
}

TensorInvariant merge_annulus_slots(const TensorInvariant& inv, std::size_t keep, std::size_t drop) {
  require_slot(inv, keep);
  require_slot(inv, drop);
  TensorInvariant out(inv.context(), inv.rank() - 1);
  for (const auto& [idx, v] : inv.entries()) {
    if (idx[keep] != idx[drop]) throw std::logic_error("merged annulus slots carry different colors");
    TensorInvariant::Index rest = idx;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
    out.add(rest, v);
  }
  return out;
}

TensorInvariant apply_move_word(const TensorInvariant& inv, std::size_t slot, const MoveWord& word) {
  require_slot(inv, slot);
  const auto& ctx = inv.context();
  const OperatorMatrix m = move_matrix(ctx, word);
  TensorInvariant out(ctx, inv.rank());
  for (const auto& [idx, v] : inv.entries()) {
    const int j = idx[slot];
    for (int i = 1; i < ctx.level(); ++i) {
      const Scalar& mij = m(i - 1, j - 1);
      if (mij.is_zero()) continue;
      TensorInvariant::Index dst = idx;
      dst[slot] = i;
      out.add(dst, mij * v);
    }
  }
  return out;
}

TensorInvariant link_complement_invariant(const CycloContext& ctx, std::int64_t p_prime,
                                          std::int64_t q_prime) {
  const MoveWord word = slope_move_word(p_prime, q_prime);
  const TensorInvariant shell = solid_torus_shell_invariant(ctx);
  // First copy: outer torus moved to the (p',q') curve.  Second copy: outer
  // torus moved to the longitude.
  const TensorInvariant first = apply_move_word(shell, 1, word);
  const TensorInvariant second = apply_move_word(shell, 1, MoveWord({{MoveToken::Kind::S, 1}}));
  // Expand one annulus of each outer torus through a cylinder, then glue.
  // Slots: [k, J | c0 c1 c2 c3 | delta, J'].
  TensorInvariant inv = tensor_product(tensor_product(first, cylinder_annulus_invariant(ctx)), second);
  inv = glue_annuli(inv, 1, 2);  // [k, c1, c2, c3, delta, J']
  inv = glue_annuli(inv, 1, 5);  // [k, c2, c3, delta]
  inv = merge_annulus_slots(inv, 1, 2);  // [k, j, delta]
  return apply_move_word(inv, 1, word.inverse());
}

Scalar bracket_from_invariant(const TensorInvariant& inv, int c, int k, std::int64_t m) {
  const auto& ctx = inv.context();
  const auto rc = reduce_color(ctx, c);
  const auto rk = reduce_color(ctx, k);
  Scalar sum(ctx);
  if (rc.sign == 0 || rk.sign == 0) return sum;
  for (int j = 1; j < ctx.level(); ++j) {
    const Scalar entry = inv.get({rk.index, j, rc.index});
    if (!entry.is_zero()) sum += Scalar(pairing(ctx, j, m)) * entry;
  }
  return Scalar(CycloElement::integer(ctx, rc.sign * rk.sign)) * sum;
}

// ---------------------------------------------------------------- brackets

Scalar bracket_S(const CycloContext& ctx, std::int64_t p_prime, std::int64_t q_prime, std::int64_t c,
                 std::int64_t k, std::int64_t m) {
  const MoveWord word = slope_move_word(p_prime, q_prime);
  TorusVector v = apply_word(ctx, word, TorusVector::color(ctx, k));
  for (std::int64_t j = 1; j < ctx.level(); ++j) {
    auto& x = v.at(static_cast<int>(j));
    if (x.is_zero()) continue;
    // Second copy's S-move [cj]/X times the gluing factor X/[j].
    x = Scalar(qint(ctx, c * j) * qint(ctx, j).inverse()) * x;
  }
  v = apply_word(ctx, word.inverse(), std::move(v));
  return pairing(v, m);
}

Scalar literal_bracket_S(const CycloContext& ctx, const ContinuedFraction& cf, std::int64_t c,
                         std::int64_t k, std::int64_t m) {
  const int dim = ctx.level() - 1;
  const std::size_t n = cf.a.size();
  const std::size_t depth = 2 * n + 2;
  double terms = 1;
  for (std::size_t i = 0; i < depth; ++i) terms *= dim;
  if (terms > 1.0e6) throw std::length_error("literal bracket sum is too large");

  std::vector<CycloElement> weight;  // index j-1: [cj]/[j]
  for (int j = 1; j <= dim; ++j) weight.push_back(qint(ctx, c * j) * qint(ctx, j).inverse());

  // j[0] = k, j[1..2n+2] summed, then [m j_{2n+2}].
  std::vector<std::int64_t> j(depth + 1, 1);
  j[0] = k;
  CycloElement total(ctx);
  while (true) {
    CycloElement term = CycloElement::integer(ctx, 1);
    std::int64_t texp = 0;
    for (std::size_t i = 1; i <= n + 1; ++i) {
      term *= qint(ctx, j[i] * j[i - 1]);
      if (i <= n) texp -= cf.a[i - 1] * (j[i] * j[i] - 1);
    }
    term *= weight[j[n + 1] - 1];
    for (std::size_t i = n + 2; i <= depth; ++i) {
      term *= qint(ctx, j[i] * j[i - 1]);
      if (i <= 2 * n + 1) texp += cf.a[2 * n + 1 - i] * (j[i] * j[i] - 1);
    }
    term *= qint(ctx, m * j[depth]);
    total += term.times_t_power(texp);

    std::size_t pos = 1;
    while (pos <= depth && j[pos] == dim) j[pos++] = 1;
    if (pos > depth) break;
    ++j[pos];
  }
  return Scalar(std::move(total), -static_cast<int>(depth));
}

CycloElement c_bracket(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k,
                       std::int64_t m) {
  const auto slope = SlopeData::of(p, q);
  if (slope.d == 0) return pairing(ctx, k, m) * 2;
  const MoveWord word = slope_move_word(slope.p_prime, slope.q_prime);
  TorusVector v = apply_word(ctx, word, TorusVector::color(ctx, k));
  v = curve_weight(ctx, slope.d) * v;
  v = apply_word(ctx, word.inverse(), std::move(v));
  const Scalar out = pairing(v, m);
  if (out.xpow() != 0) throw GradingError("pipeline bracket kept an odd power of X");
  return out.value();
}

OperatorMatrix conjugated_curve_operator(const CycloContext& ctx, std::int64_t p, std::int64_t q) {
  const auto slope = SlopeData::of(p, q);
  if (slope.d == 0) return Scalar(CycloElement::integer(ctx, 2)) * identity_matrix(ctx);
  const MoveWord word = slope_move_word(slope.p_prime, slope.q_prime);
  return move_matrix(ctx, word.inverse()) * curve_weight(ctx, slope.d) * move_matrix(ctx, word);
}

OperatorMatrix c_bracket_matrix(const CycloContext& ctx, std::int64_t p, std::int64_t q) {
  OperatorMatrix b = torus_pairing_matrix(ctx) * conjugated_curve_operator(ctx, p, q);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j).xpow() != 0) throw GradingError("pipeline bracket kept an odd power of X");
    }
  }
  return b;
}

// ---------------------------------------------------------------- Gauss sum collapse

LemmaCheck lemma_check(const CycloContext& ctx, const LemmaTuple& tp) {
  const auto [a, b, c, d, e] = tp;
  // Left side times (t^2 - t^-2)^3, expanded into monomials.
  PowerSum acc(ctx);
  for (std::int64_t x = 1; x < ctx.level(); ++x) {
    for (std::int64_t y = 1; y < ctx.level(); ++y) {
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          for (int s3 : {1, -1}) {
            const std::int64_t base = 2 * s1 * a * x + b * x * x + 2 * s2 * c * y;
            const std::int64_t sign = s1 * s2 * s3;
            acc.add(base + 2 * s3 * x * (y + d) + 2 * e * y, sign);
            acc.add(base + 2 * s3 * x * (y - d) - 2 * e * y, sign);
          }
        }
      }
    }
  }
  const CycloElement& dinv = ctx.qint_denominator_inverse();
  CycloElement lhs = acc.reduce() * dinv * dinv * dinv;

  const std::int64_t w = 2 * (b * e - d) * c;
  CycloElement rhs = (qint(ctx, a * (c + e)).times_t_power(w) + qint(ctx, a * (c - e)).times_t_power(-w))
                         .times_t_power(b * c * c + b * e * e - 2 * d * e) *
                     ctx.x_squared();
  const bool equal = lhs == rhs;
  return LemmaCheck{std::move(lhs), std::move(rhs), equal};
}

bool CollapseResult::all_steps_hold() const {
  for (const auto& s : steps) {
    if (!s.failures.empty()) return false;
  }
  return true;
}

CollapseResult collapse_via_lemma(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k,
                                  std::int64_t m, LemmaMemo* memo) {
  const auto slope = SlopeData::of(p, q);
  if (slope.d == 0) return CollapseResult{Scalar(pairing(ctx, k, m) * 2), {}, 0, 0, 0};
  if (slope.p_prime == 0) {
    // No moves: the diagonal curve weight acts on V^k directly.
    CycloElement w = t_power(ctx, 2 * slope.d * k) + t_power(ctx, -2 * slope.d * k);
    return CollapseResult{Scalar(pairing(ctx, k, m) * w), {}, 0, 0, slope.d};
  }

  const ContinuedFraction cf = slope.q_prime == 0 ? ContinuedFraction{} : neg_cfrac(slope.p_prime, slope.q_prime);
  const std::size_t n = cf.a.size();
  const int dim = ctx.level() - 1;

  auto holds = [&](const LemmaTuple& t) {
    if (!memo) return lemma_check(ctx, t).equal;
    const auto key = std::pair{ctx.level(), t};
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
    const bool ok = lemma_check(ctx, t).equal;
    memo->emplace(key, ok);
    return ok;
  };

  // Pattern [x(y+s)] t^{2ey} + [x(y-s)] t^{-2ey}; initially the curve weight.
  std::int64_t s = 0;
  std::int64_t e = slope.d;
  std::int64_t kappa = 0;
  std::vector<LemmaStep> steps;
  for (std::size_t i = 1; i <= n; ++i) {
    LemmaStep step;
    step.b = -cf.a[n - i];
    step.shift = s;
    step.twist = e;
    // Outer indices: a is the next left move index (k itself on the last
    // step), c the matching right index.
    std::vector<std::int64_t> outer_a;
    if (i < n) {
      for (int j = 1; j <= dim; ++j) outer_a.push_back(j);
    } else {
      outer_a.push_back(k);
    }
    for (auto a : outer_a) {
      for (std::int64_t c = 1; c <= dim; ++c) {
        const LemmaTuple t{a, step.b, c, s, e};
        ++step.applications;
        if (!holds(t)) step.failures.push_back(t);
      }
    }
    kappa += step.b * e * e - 2 * s * e;
    const std::int64_t next_e = step.b * e - s;
    s = e;
    e = next_e;
    steps.push_back(std::move(step));
  }

  // Remaining sum over the last two indices, evaluated directly.
  CycloElement f(ctx);
  for (std::int64_t y = 1; y <= dim; ++y) {
    const CycloElement pattern =
        qint(ctx, k * (y + s)).times_t_power(2 * e * y) + qint(ctx, k * (y - s)).times_t_power(-2 * e * y);
    CycloElement inner(ctx);
    for (std::int64_t z = 1; z <= dim; ++z) inner += qint(ctx, m * z) * qint(ctx, z * y);
    f += inner * pattern;
  }
  // X^{-2n-2} from the moves, X^{2n} from the n steps.
  Scalar value(f.times_t_power(kappa), -2);
  return CollapseResult{std::move(value), std::move(steps), floor_mod(kappa, ctx.order()), s, e};
}

}  // namespace qtorus
