#ifndef PBW_RANKS_HPP
#define PBW_RANKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbw/classify.hpp"

namespace pbw {

/// Symbolic cardinal for the formula tables: finite naturals, aleph_n for
/// n in N, 2^{aleph_n}, and the marker "infinity" used for unbounded
/// Sierpinski rank.
class CardExpr {
 public:
  enum class Tag { Finite, Aleph, PowAleph, Infinity };

  static CardExpr finite(std::uint64_t k) { return CardExpr(Tag::Finite, k); }
  static CardExpr aleph(std::uint64_t n) { return CardExpr(Tag::Aleph, n); }
  static CardExpr pow_aleph(std::uint64_t n) {
    return CardExpr(Tag::PowAleph, n);
  }
  static CardExpr infinity() { return CardExpr(Tag::Infinity, 0); }

  Tag tag() const { return tag_; }
  std::uint64_t arg() const { return arg_; }

  bool is_finite() const { return tag_ == Tag::Finite; }

  friend bool operator==(CardExpr a, CardExpr b) {
    return a.tag_ == b.tag_ && a.arg_ == b.arg_;
  }

  /// Partial order: only comparisons independent of the continuum
  /// hypothesis are answered.
  static std::optional<int> compare(CardExpr a, CardExpr b);

  friend CardExpr operator+(CardExpr a, CardExpr b);

  std::string to_string() const;

 private:
  CardExpr(Tag t, std::uint64_t a) : tag_(t), arg_(a) {}
  Tag tag_;
  std::uint64_t arg_;
};

/// Number of infinite cardinals not exceeding aleph_n.
CardExpr rho(CardExpr aleph_n);  // throws IndexUnsupported off the alephs

/// Relative rank of `top` modulo `base` in PB_X with |X| = aleph_n.
/// Throws PairNotCovered for pairs outside the table.
CardExpr relrank(MonoidClass top, MonoidClass base, CardExpr aleph_n);

/// Sierpinski rank; infinite ground sets take aleph_n, finite take
/// finite(k) with k >= 3 (where it equals the rank).
CardExpr sierpinski(MonoidClass m, CardExpr x);

/// Semigroup Bergman property over an infinite ground set.
bool bergman(MonoidClass m);

/// rank of the named monoid over a finite ground set of size k >= 3.
std::uint64_t finite_rank(MonoidClass m, std::uint64_t k);

/// The full table for |X| = aleph_n: relative ranks, Sierpinski ranks and
/// the Bergman column, formatted line by line.
std::vector<std::string> rank_table(std::uint64_t aleph_index);

}  // namespace pbw

#endif  // PBW_RANKS_HPP
