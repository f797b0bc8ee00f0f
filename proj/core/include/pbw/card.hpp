#ifndef PBW_CARD_HPP
#define PBW_CARD_HPP

#include <cstdint>
#include <string>

namespace pbw {

// Cardinal value restricted to the naturals together with aleph_0.
// Addition saturates at aleph_0; the order is Finite(k) < Aleph0.
class Card {
 public:
  constexpr Card() : finite_(true), value_(0) {}
  constexpr explicit Card(std::uint64_t k) : finite_(true), value_(k) {}

  static constexpr Card aleph0() {
    Card c;
    c.finite_ = false;
    c.value_ = 0;
    return c;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  // Only meaningful when finite.
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(Card a, Card b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator!=(Card a, Card b) { return !(a == b); }
  friend constexpr bool operator<(Card a, Card b) {
    if (a.finite_ && b.finite_) return a.value_ < b.value_;
    return a.finite_ && !b.finite_;
  }
  friend constexpr bool operator<=(Card a, Card b) { return a < b || a == b; }
  friend constexpr bool operator>(Card a, Card b) { return b < a; }
  friend constexpr bool operator>=(Card a, Card b) { return b <= a; }

  friend constexpr Card operator+(Card a, Card b) {
    if (a.finite_ && b.finite_) return Card(a.value_ + b.value_);
    return aleph0();
  }
  Card& operator+=(Card b) {
    *this = *this + b;
    return *this;
  }
  friend constexpr Card operator*(std::uint64_t k, Card a) {
    if (a.finite_) return Card(k * a.value_);
    return k == 0 ? Card(0) : aleph0();
  }

  friend constexpr Card max(Card a, Card b) { return a < b ? b : a; }

  std::string to_string() const;

 private:
  bool finite_;
  std::uint64_t value_;
};

inline constexpr Card kAleph0 = Card::aleph0();

// The parameter tuple of a Brauer graph, over Card so the finite and the
// countable backends share one type.  On the finite backend every entry is
// finite and defect == codef.
struct ParamProfile {
  Card t, h, hstar, s, sstar;
  Card defect, codef;
  Card fix, shift, supp;

  friend bool operator==(ParamProfile const& a, ParamProfile const& b) {
    return a.t == b.t && a.h == b.h && a.hstar == b.hstar && a.s == b.s &&
           a.sstar == b.sstar && a.defect == b.defect && a.codef == b.codef &&
           a.fix == b.fix && a.shift == b.shift && a.supp == b.supp;
  }

  // Equality of the five orbit parameters (t, h, h*, s, s*) only.
  bool same_shape(ParamProfile const& o) const {
    return t == o.t && h == o.h && hstar == o.hstar && s == o.s &&
           sstar == o.sstar;
  }

  std::string to_string() const;
};

}  // namespace pbw

#endif  // PBW_CARD_HPP
