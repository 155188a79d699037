// The torus-knot computation behind the action formula of C(p,q), carried
// out with a TQFT with corners: negative continued fractions, words in the
// S and T moves, cylinder and gluing rules for annuli, and the iterated
// Gauss sums that collapse to the closed form.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtorus/observables.hpp"

namespace qtorus {

/// Slope with p' = 0 or q' = 0 handed to the continued-fraction expansion.
class DegenerateSlopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficients a_1..a_n of q'/p' = -1/(-a_1 - 1/(-a_2 - ... - 1/(-a_n))).
/// Normalized so that a_i >= 2 for i >= 2; a_1 is any integer.
struct ContinuedFraction {
  std::vector<std::int64_t> a;
  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Requires gcd(p', q') = 1 and p' q' != 0.
ContinuedFraction neg_cfrac(std::int64_t p_prime, std::int64_t q_prime);

/// Evaluates the expansion back to q'/p'; the empty list evaluates to 0.
/// Throws std::domain_error when an intermediate denominator vanishes.
Rational evaluate_cfrac(const ContinuedFraction& cf);

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

struct MoveToken {
  enum class Kind { S, T };
  Kind kind = Kind::S;
  std::int64_t power = 1;  // exponent of T; unused for S
  friend bool operator==(const MoveToken&, const MoveToken&) = default;
};

/// Torus moves listed in the order they are applied; the word
/// [S, T^{-a_1}, S, ..., T^{-a_n}, S] is the composite S T^{-a_n} ... S T^{-a_1} S.
class MoveWord {
 public:
  MoveWord() = default;
  explicit MoveWord(std::vector<MoveToken> tokens) : tokens_(std::move(tokens)) {}

  static MoveWord from_cfrac(const ContinuedFraction& cf);

  const std::vector<MoveToken>& tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }
  int s_count() const;
  /// Reverse order with T exponents negated; S is an involution on V(T^2).
  MoveWord inverse() const;
  /// Composite in operator notation, e.g. "S T^-2 S".
  std::string to_string() const;

  friend bool operator==(const MoveWord&, const MoveWord&) = default;

 private:
  std::vector<MoveToken> tokens_;
};

/// Move word carrying the (0,1) curve to the (p',q') curve.  Degenerate
/// slopes: p' = 0 needs no move (empty word), q' = 0 is the single S.
MoveWord slope_move_word(std::int64_t p_prime, std::int64_t q_prime);

/// Integer composite with S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].
IntMatrix2 word_matrix(const MoveWord& word);

/// True when the move word of cf carries the (0,1) curve to +-(p',q').  Curves
/// transform contragrediently to the S, T matrices, so the image is read off
/// the second row of the integer composite: (0,1) * W = +-(p', q').
bool sl2_word_check(const ContinuedFraction& cf, std::int64_t p_prime, std::int64_t q_prime);

/// Composite of the graded S-move and T-move matrices on V(T^2).
OperatorMatrix move_matrix(const CycloContext& ctx, const MoveWord& word);

/// Sparse tensor in the bases beta_j of boundary annuli/tori; index values
/// are 1..r-1, one per slot.
class TensorInvariant {
 public:
  using Index = std::vector<int>;

  TensorInvariant(const CycloContext& ctx, std::size_t rank) : ctx_(&ctx), rank_(rank) {}

  const CycloContext& context() const { return *ctx_; }
  std::size_t rank() const { return rank_; }
  std::size_t support_size() const { return entries_.size(); }
  const std::map<Index, Scalar>& entries() const { return entries_; }

  Scalar get(const Index& index) const;
  void add(const Index& index, const Scalar& value);

  friend bool operator==(const TensorInvariant& a, const TensorInvariant& b);

 private:
  const CycloContext* ctx_;
  std::size_t rank_;
  std::map<Index, Scalar> entries_;  // zero entries are never stored
};

/// Cylinder over an annulus: sum_n ([n]/X) beta_n^{(x)4}.
TensorInvariant cylinder_annulus_invariant(const CycloContext& ctx);

/// A x S^1, the cylinder over an annulus with its two ends glued:
/// sum_k beta_k (x) beta_k.
TensorInvariant solid_torus_shell_invariant(const CycloContext& ctx);

/// Disjoint union: slots of a followed by slots of b.
TensorInvariant tensor_product(const TensorInvariant& a, const TensorInvariant& b);

/// Glues two annulus slots: contracts them diagonally with weight X/[k].
/// Throws std::out_of_range for a bad slot.
TensorInvariant glue_annuli(const TensorInvariant& inv, std::size_t slot_a, std::size_t slot_b);

/// Drops slot `drop`, which must agree with slot `keep` on the support
/// (two annuli of one torus carry the same color).
TensorInvariant merge_annulus_slots(const TensorInvariant& inv, std::size_t keep, std::size_t drop);

/// Changes the decomposition of one torus slot by the given moves.
TensorInvariant apply_move_word(const TensorInvariant& inv, std::size_t slot, const MoveWord& word);

/// Invariant of the complement of the (p',q') torus curve together with the
/// two solid-torus cores, assembled from two copies of A x S^1, a cylinder
/// over an annulus, and the moves.  Slot 0: inner core torus; slot 1: torus
/// to be paired with the outer core; slot 2: curve-color slot.
TensorInvariant link_complement_invariant(const CycloContext& ctx, std::int64_t p_prime,
                                          std::int64_t q_prime);

/// Reads the bracket <V^c-colored curve; cores V^k, V^m> from the invariant.
Scalar bracket_from_invariant(const TensorInvariant& inv, int c, int k, std::int64_t m);

/// Bracket of the (p',q') curve colored V^c with cores V^k (inside) and V^m
/// (outside), evaluated as a chain of (r-1)-dimensional contractions.
Scalar bracket_S(const CycloContext& ctx, std::int64_t p_prime, std::int64_t q_prime, std::int64_t c,
                 std::int64_t k, std::int64_t m);

/// Same bracket as an explicit nested sum over all 2n+2 move indices.
/// Throws std::length_error past about a million terms.
Scalar literal_bracket_S(const CycloContext& ctx, const ContinuedFraction& cf, std::int64_t c,
                         std::int64_t k, std::int64_t m);

/// <C(p,q) V^k, V^m> via the move pipeline, with the curve weight
/// ([(d+1)j] - [(d-1)j]) / [j] = t^{2dj} + t^{-2dj} inserted directly.
/// Throws GradingError if the X-grading does not cancel.
CycloElement c_bracket(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k,
                       std::int64_t m);

/// Entry (m-1, k-1) is c_bracket(p, q, k, m), for all basis k, m at once.
OperatorMatrix c_bracket_matrix(const CycloContext& ctx, std::int64_t p, std::int64_t q);

/// Conjugate W^{-1} C(0,d) W of the diagonal curve operator by the slope's
/// move word; equals c_matrix(p, q).
OperatorMatrix conjugated_curve_operator(const CycloContext& ctx, std::int64_t p, std::int64_t q);

struct LemmaTuple {
  std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0;
  friend auto operator<=>(const LemmaTuple&, const LemmaTuple&) = default;
};

struct LemmaCheck {
  CycloElement lhs;
  CycloElement rhs;
  bool equal = false;
};

/// Both sides of the two-index Gauss sum identity
///   sum_{x,y=1}^{r-1} [ax] t^{bx^2} [cy] ([x(y+d)] t^{2ey} + [x(y-d)] t^{-2ey})
///     = X^2 t^{bc^2+be^2-2de} ([a(c+e)] t^{2(be-d)c} + [a(c-e)] t^{-2(be-d)c}).
LemmaCheck lemma_check(const CycloContext& ctx, const LemmaTuple& tuple);

/// One application round of the identity inside the collapse.
struct LemmaStep {
  std::int64_t b = 0;      // -a_i of the move being absorbed
  std::int64_t shift = 0;  // d-slot of the identity before this step
  std::int64_t twist = 0;  // e-slot of the identity before this step
  std::size_t applications = 0;
  std::vector<LemmaTuple> failures;
};

struct CollapseResult {
  Scalar value;
  std::vector<LemmaStep> steps;
  /// Accumulated power of t pulled out by the steps (mod 4r).
  std::int64_t prefactor_exponent = 0;
  /// Shift and twist of the surviving pattern [k(j+s)] t^{2ej} + [k(j-s)] t^{-2ej}.
  std::int64_t final_shift = 0;
  std::int64_t final_twist = 0;

  bool all_steps_hold() const;
};

/// Memo of identity checks shared across collapses (not thread-safe).
using LemmaMemo = std::map<std::pair<int, LemmaTuple>, bool>;

/// Evaluates <C(p,q) V^k, V^m> by collapsing the iterated Gauss sum one
/// pair of move indices at a time with the two-index identity, checking
/// every generated application, and summing the last two indices directly.
CollapseResult collapse_via_lemma(const CycloContext& ctx, std::int64_t p, std::int64_t q, std::int64_t k,
                                  std::int64_t m, LemmaMemo* memo = nullptr);

}  // namespace qtorus
