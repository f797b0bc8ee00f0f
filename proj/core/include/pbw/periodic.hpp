#ifndef PBW_PERIODIC_HPP
#define PBW_PERIODIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbw/card.hpp"
#include "pbw/error.hpp"

namespace pbw {

// Vertices of a Brauer graph on the ground set N (0-based): (row, index)
// with row 0 the upper row and row 1 the lower row.
struct PVertex {
  int row;
  std::int64_t index;

  friend bool operator==(PVertex a, PVertex b) {
    return a.row == b.row && a.index == b.index;
  }
  friend bool operator!=(PVertex a, PVertex b) { return !(a == b); }
  friend bool operator<(PVertex a, PVertex b) {
    return a.row != b.row ? a.row < b.row : a.index < b.index;
  }
};

inline PVertex upper(std::int64_t i) { return {0, i}; }
inline PVertex lower(std::int64_t i) { return {1, i}; }

enum class RuleKind { Singleton, Transversal, Hook };

// Residue rule: for index i >= m with i = r (mod p), the partner of the
// vertex in this row is the vertex at index i+d, in the other row for
// Transversal and in the same row for Hook.
struct Rule {
  RuleKind kind = RuleKind::Singleton;
  std::int64_t offset = 0;

  static Rule singleton() { return {RuleKind::Singleton, 0}; }
  static Rule transversal(std::int64_t d) { return {RuleKind::Transversal, d}; }
  static Rule hook(std::int64_t d) { return {RuleKind::Hook, d}; }

  friend bool operator==(Rule a, Rule b) {
    return a.kind == b.kind &&
           (a.kind == RuleKind::Singleton || a.offset == b.offset);
  }
};

struct PEdge {
  PVertex a, b;
  friend bool operator==(PEdge x, PEdge y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(PEdge x, PEdge y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

class PeriodicDescriptor;
struct ValidationReport;
ValidationReport validate(PeriodicDescriptor& d);

/// Finitely presented Brauer graph on N: explicit edges near the boundary
/// plus one residue rule per row and residue class mod p, in force from
/// index m on.  A rule instance whose partner index would land below m is
/// void; the prefix edges decide those vertices (absent edge = singleton).
/// Prefix edges win wherever they speak.
class PeriodicDescriptor {
 public:
  PeriodicDescriptor() = default;
  PeriodicDescriptor(std::int64_t m, std::int64_t p, std::vector<PEdge> prefix,
                     std::vector<Rule> upper_rules, std::vector<Rule> lower_rules);

  std::int64_t prefix_bound() const { return m_; }
  std::int64_t period() const { return p_; }
  std::vector<PEdge> const& prefix_edges() const { return prefix_; }
  Rule rule(int row, std::int64_t r) const {
    return row == 0 ? upper_rules_[r] : lower_rules_[r];
  }

  bool validated() const { return validated_; }

  /// Index from which partner queries are answered by rules alone, with the
  /// partner index itself in rule territory.
  std::int64_t periodic_from() const { return periodic_from_; }
  std::int64_t max_offset() const { return max_offset_; }

  // Spill margin: prefix edges may touch indices < m + spill_margin().
  std::int64_t spill_margin() const;

  std::optional<PVertex> partner(PVertex v) const;

  friend bool operator==(PeriodicDescriptor const& a, PeriodicDescriptor const& b) {
    return a.m_ == b.m_ && a.p_ == b.p_ && a.prefix_ == b.prefix_ &&
           a.upper_rules_ == b.upper_rules_ && a.lower_rules_ == b.lower_rules_;
  }

 private:
  std::int64_t m_ = 0;
  std::int64_t p_ = 1;
  std::vector<PEdge> prefix_;
  std::vector<Rule> upper_rules_{Rule::singleton()};
  std::vector<Rule> lower_rules_{Rule::singleton()};
  bool validated_ = false;
  std::int64_t periodic_from_ = 0;
  std::int64_t max_offset_ = 0;

  std::optional<PVertex> prefix_partner(PVertex v) const;
  bool in_prefix(PVertex v) const;

  friend ValidationReport validate(PeriodicDescriptor& d);
};

/// Result of validate(): rule symmetry, index bounds, prefix consistency
/// and involutivity on a window covering the boundary zone.
struct ValidationReport {
  bool ok = true;
  ErrorCode code = ErrorCode::AsymmetricRule;
  std::string detail;
};

/// validate() that throws on violation.
void validate_or_throw(PeriodicDescriptor& d);

ParamProfile params_periodic(PeriodicDescriptor const& d);

PeriodicDescriptor star_periodic(PeriodicDescriptor const& d);

/// Compare two partner functions on all vertices of index < n.
template <typename A, typename B>
bool window_equal(A const& a, B const& b, std::int64_t n) {
  for (std::int64_t i = 0; i < n; ++i) {
    for (int row = 0; row < 2; ++row) {
      auto x = a.partner(PVertex{row, i});
      auto y = b.partner(PVertex{row, i});
      if (x.has_value() != y.has_value()) return false;
      if (x && *x != *y) return false;
    }
  }
  return true;
}

// --- standard builders ---------------------------------------------------

PeriodicDescriptor periodic_identity();

/// upper i -> lower i+k (k >= 1); the first k lower vertices are singletons.
PeriodicDescriptor shift(std::int64_t k = 1);

/// Hooks {pi+a, pi+b} on the given rows for each listed pair (a < b < p),
/// transversal offset rules elsewhere per `fixed_rest`: residues not in a
/// pair are fixed transversals when true, singletons when false.
struct HookPattern {
  std::int64_t a, b;
  bool on_upper, on_lower;
};
PeriodicDescriptor block_hooks(std::int64_t p, std::vector<HookPattern> const& pattern,
                               bool fixed_rest);

/// The rank-one projection with singleton pair at index x: everything else
/// fixed.
PeriodicDescriptor eps_at(std::int64_t x);

}  // namespace pbw

#endif  // PBW_PERIODIC_HPP
