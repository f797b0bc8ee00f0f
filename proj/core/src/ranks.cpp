#include "pbw/ranks.hpp"

#include <sstream>

namespace pbw {

std::optional<int> CardExpr::compare(CardExpr a, CardExpr b) {
  using T = Tag;
  if (a == b) return 0;
  auto neg = compare(b, a);
  auto rank_class = [](CardExpr x) {
    switch (x.tag()) {
      case T::Finite: return 0;
      case T::Aleph: return 1;
      case T::PowAleph: return 2;
      case T::Infinity: return 3;
    }
    return 3;
  };
  if (a.tag() == b.tag()) {
    if (a.arg() < b.arg()) return -1;
    if (a.arg() > b.arg()) return 1;
    return 0;
  }
  if (a.tag() == T::Finite) return -1;
  if (b.tag() == T::Finite) return 1;
  if (a.tag() == T::Infinity) return 1;
  if (b.tag() == T::Infinity) return -1;
  // aleph_m vs 2^{aleph_n}: decided only when m <= n (then <) or when
  // 2^{aleph_n} <= aleph_n+... cannot happen; m > n is CH-sensitive
  if (a.tag() == T::Aleph && b.tag() == T::PowAleph)
    return a.arg() <= b.arg() ? std::optional<int>(-1) : std::nullopt;
  if (a.tag() == T::PowAleph && b.tag() == T::Aleph) {
    if (neg && *neg == -1) return 1;
    return std::nullopt;
  }
  (void)rank_class;
  return std::nullopt;
}

CardExpr operator+(CardExpr a, CardExpr b) {
  if (a.is_finite() && b.is_finite()) return CardExpr::finite(a.arg() + b.arg());
  auto cmp = CardExpr::compare(a, b);
  if (cmp) return *cmp >= 0 ? a : b;
  throw PbwError(ErrorCode::Unsupported, "sum not determined");
}

std::string CardExpr::to_string() const {
  switch (tag_) {
    case Tag::Finite: return std::to_string(arg_);
    case Tag::Aleph: return "aleph" + std::to_string(arg_);
    case Tag::PowAleph: return "2^aleph" + std::to_string(arg_);
    case Tag::Infinity: return "infinity";
  }
  return "?";
}

CardExpr rho(CardExpr x) {
  if (x.tag() != CardExpr::Tag::Aleph)
    throw PbwError(ErrorCode::IndexUnsupported,
                   "rho defined here for aleph_n with n a natural");
  return CardExpr::finite(x.arg() + 1);
}

CardExpr relrank(MonoidClass top, MonoidClass base, CardExpr x) {
  if (x.tag() != CardExpr::Tag::Aleph)
    throw PbwError(ErrorCode::IndexUnsupported, "ground set must be aleph_n");
  std::uint64_t r = x.arg() + 1;  // rho
  using M = MonoidClass;
  auto fin = [](std::uint64_t v) { return CardExpr::finite(v); };
  if (top == base) return fin(0);
  switch (top) {
    case M::PB:
      switch (base) {
        case M::S: return fin(2);
        case M::GL: return fin(1);
        case M::GR: return fin(1);
        case M::E: return fin(2);
        case M::F: return fin(2);
        case M::FL: return fin(1);
        case M::FR: return fin(1);
        default: break;
      }
      break;
    case M::FL:
      switch (base) {
        case M::F: return fin(1 + r);
        case M::E: return CardExpr::pow_aleph(x.arg());
        case M::GL: return fin(2 + 2 * r);
        case M::S: return fin(3 + 3 * r);
        default: break;
      }
      break;
    case M::FR:
      switch (base) {
        case M::F: return fin(1 + r);
        case M::E: return CardExpr::pow_aleph(x.arg());
        case M::GR: return fin(2 + 2 * r);
        case M::S: return fin(3 + 3 * r);
        default: break;
      }
      break;
    case M::F:
      switch (base) {
        case M::E: return CardExpr::pow_aleph(x.arg());
        case M::S: return fin(2 + 2 * r);
        default: break;
      }
      break;
    case M::GL:
      if (base == M::S) return fin(2 + 2 * r);
      break;
    case M::GR:
      if (base == M::S) return fin(2 + 2 * r);
      break;
    default:
      break;
  }
  throw PbwError(ErrorCode::PairNotCovered,
                 class_name(top) + " over " + class_name(base));
}

CardExpr sierpinski(MonoidClass m, CardExpr x) {
  using M = MonoidClass;
  if (x.tag() == CardExpr::Tag::Aleph) {
    std::uint64_t n = x.arg();
    switch (m) {
      case M::PB: return CardExpr::finite(2);
      case M::S: return CardExpr::finite(2);
      case M::E: return CardExpr::infinity();
      case M::GL:
      case M::GR:
      case M::F: return CardExpr::finite(2 * n + 6);
      case M::FL:
      case M::FR: return CardExpr::finite(3 * n + 8);
    }
  }
  if (x.tag() == CardExpr::Tag::Finite) {
    // over a finite ground set the Sierpinski rank equals the rank
    return CardExpr::finite(finite_rank(m, x.arg()));
  }
  throw PbwError(ErrorCode::Unsupported,
                 "Sierpinski rank tabulated for aleph_n and finite ground sets");
}

bool bergman(MonoidClass m) {
  switch (m) {
    case MonoidClass::PB: return true;
    case MonoidClass::S:
      throw PbwError(ErrorCode::Unsupported, "not tabulated for S");
    default: return false;
  }
}

std::uint64_t finite_rank(MonoidClass m, std::uint64_t k) {
  if (k < 3)
    throw PbwError(ErrorCode::Unsupported, "finite ranks tabulated for k >= 3");
  using M = MonoidClass;
  switch (m) {
    case M::S:
    case M::GL:
    case M::GR:
      // one-sided units collapse to the units over a finite ground set
      return 2;
    case M::PB:
    case M::F:
    case M::FL:
    case M::FR:
      // F, FL, FR all equal PB over a finite ground set
      return 4;
    case M::E:
      return 1 + (k + 1) * k / 2;  // 1 + binom(k+1, 2)
  }
  throw PbwError(ErrorCode::Unsupported, "finite_rank");
}

std::vector<std::string> rank_table(std::uint64_t n) {
  CardExpr x = CardExpr::aleph(n);
  std::vector<std::string> out;
  std::ostringstream head;
  head << "aleph " << n << "  (rho = " << n + 1 << ")";
  out.push_back(head.str());
  using M = MonoidClass;
  std::vector<std::pair<M, M>> pairs = {
      {M::PB, M::S},  {M::PB, M::GL}, {M::PB, M::GR}, {M::PB, M::E},
      {M::PB, M::F},  {M::PB, M::FL}, {M::PB, M::FR}, {M::FL, M::F},
      {M::FR, M::F},  {M::FL, M::E},  {M::FR, M::E},  {M::FL, M::GL},
      {M::FR, M::GR}, {M::FL, M::S},  {M::FR, M::S},  {M::F, M::E},
      {M::F, M::S},   {M::GL, M::S},  {M::GR, M::S},
  };
  for (auto [t, b] : pairs)
    out.push_back("relrank " + class_name(t) + " " + class_name(b) + " = " +
                  relrank(t, b, x).to_string());
  for (auto m : {M::PB, M::S, M::E, M::GL, M::GR, M::F, M::FL, M::FR})
    out.push_back("SR " + class_name(m) + " = " + sierpinski(m, x).to_string());
  for (auto m : {M::PB, M::E, M::GL, M::GR, M::F, M::FL, M::FR})
    out.push_back("bergman " + class_name(m) + " = " +
                  (bergman(m) ? "yes" : "no"));
  return out;
}

}  // namespace pbw
