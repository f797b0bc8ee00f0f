#include "pbw/periodic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pbw {

PeriodicDescriptor::PeriodicDescriptor(std::int64_t m, std::int64_t p,
                                       std::vector<PEdge> prefix,
                                       std::vector<Rule> upper_rules,
                                       std::vector<Rule> lower_rules)
    : m_(m), p_(p), prefix_(std::move(prefix)),
      upper_rules_(std::move(upper_rules)),
      lower_rules_(std::move(lower_rules)) {
  // normalize prefix edge orientation and order
  for (auto& e : prefix_)
    if (e.b < e.a) std::swap(e.a, e.b);
  std::sort(prefix_.begin(), prefix_.end());
  max_offset_ = 0;
  for (auto const& rs : {upper_rules_, lower_rules_})
    for (auto const& r : rs)
      if (r.kind != RuleKind::Singleton)
        max_offset_ = std::max(max_offset_, std::abs(r.offset));
  std::int64_t max_prefix = -1;
  for (auto const& e : prefix_)
    max_prefix = std::max({max_prefix, e.a.index, e.b.index});
  periodic_from_ = std::max(m_, max_prefix + 1) + max_offset_;
}

std::int64_t PeriodicDescriptor::spill_margin() const {
  return 4 * p_ * (1 + max_offset_);
}

bool PeriodicDescriptor::in_prefix(PVertex v) const {
  for (auto const& e : prefix_)
    if (e.a == v || e.b == v) return true;
  return false;
}

std::optional<PVertex> PeriodicDescriptor::prefix_partner(PVertex v) const {
  for (auto const& e : prefix_) {
    if (e.a == v) return e.b;
    if (e.b == v) return e.a;
  }
  return std::nullopt;
}

std::optional<PVertex> PeriodicDescriptor::partner(PVertex v) const {
  if (v.index < 0) return std::nullopt;
  if (auto p = prefix_partner(v)) return p;
  if (v.index < m_) return std::nullopt;
  Rule r = rule(v.row, v.index % p_);
  switch (r.kind) {
    case RuleKind::Singleton:
      return std::nullopt;
    case RuleKind::Transversal: {
      std::int64_t j = v.index + r.offset;
      if (j < m_) return std::nullopt;  // boundary instance, prefix decides
      PVertex u{1 - v.row, j};
      if (in_prefix(u)) return std::nullopt;
      return u;
    }
    case RuleKind::Hook: {
      std::int64_t j = v.index + r.offset;
      if (j < m_) return std::nullopt;
      PVertex u{v.row, j};
      if (in_prefix(u)) return std::nullopt;
      return u;
    }
  }
  return std::nullopt;
}

ValidationReport validate(PeriodicDescriptor& d) {
  auto fail = [&](ErrorCode c, std::string const& detail) {
    ValidationReport r;
    r.ok = false;
    r.code = c;
    r.detail = detail;
    return r;
  };

  if (d.p_ < 1) return fail(ErrorCode::AsymmetricRule, "period must be >= 1");
  if (d.m_ < 0) return fail(ErrorCode::NegativeIndex, "prefix bound < 0");
  if (static_cast<std::int64_t>(d.upper_rules_.size()) != d.p_ ||
      static_cast<std::int64_t>(d.lower_rules_.size()) != d.p_)
    return fail(ErrorCode::AsymmetricRule, "rule table size != period");

  // symbolic rule consistency: each non-singleton rule must be answered by
  // the inverse rule at the target residue
  for (int row = 0; row < 2; ++row) {
    for (std::int64_t r = 0; r < d.p_; ++r) {
      Rule rl = d.rule(row, r);
      if (rl.kind == RuleKind::Singleton) continue;
      if (rl.kind == RuleKind::Hook && rl.offset == 0)
        return fail(ErrorCode::OverlappingEdges, "hook with zero offset");
      std::int64_t r2 = ((r + rl.offset) % d.p_ + d.p_) % d.p_;
      int row2 = rl.kind == RuleKind::Transversal ? 1 - row : row;
      Rule back = d.rule(row2, r2);
      if (back.kind != rl.kind || back.offset != -rl.offset) {
        std::ostringstream os;
        os << "rule at row " << row << " residue " << r
           << " is not mirrored at row " << row2 << " residue " << r2;
        return fail(ErrorCode::AsymmetricRule, os.str());
      }
    }
  }

  // prefix edges: non-negative indices, inside the spill window, no vertex
  // reused
  std::set<PVertex> used;
  std::int64_t limit = d.m_ + d.spill_margin();
  for (auto const& e : d.prefix_) {
    if (e.a.index < 0 || e.b.index < 0)
      return fail(ErrorCode::NegativeIndex, "prefix edge below 0");
    if (e.a.index >= limit || e.b.index >= limit)
      return fail(ErrorCode::OverlappingEdges,
                  "prefix edge beyond spill margin");
    if (e.a == e.b) return fail(ErrorCode::OverlappingEdges, "self-loop");
    if (!used.insert(e.a).second || !used.insert(e.b).second)
      return fail(ErrorCode::OverlappingEdges, "prefix vertex used twice");
  }

  // involutivity on a window covering the whole boundary zone
  std::int64_t window = d.periodic_from_ + 2 * d.p_ * (1 + d.max_offset_);
  for (std::int64_t i = 0; i < window; ++i) {
    for (int row = 0; row < 2; ++row) {
      PVertex v{row, i};
      auto p = d.partner(v);
      if (!p) continue;
      if (*p == v) return fail(ErrorCode::OverlappingEdges, "self-loop");
      auto q = d.partner(*p);
      if (!q || *q != v) {
        std::ostringstream os;
        os << "partner not symmetric at row " << row << " index " << i;
        return fail(ErrorCode::AsymmetricRule, os.str());
      }
    }
  }

  d.validated_ = true;
  return ValidationReport{};
}

void validate_or_throw(PeriodicDescriptor& d) {
  auto r = validate(d);
  if (!r.ok) throw PbwError(r.code, r.detail);
}

namespace {

// true when some index >= pf in residue class r (mod p) exists; always true
// on N, kept for clarity at call sites
struct ComponentCounts {
  Card t{0}, h{0}, hs{0}, s{0}, ss{0}, fix{0}, shift{0};
};

}  // namespace

ParamProfile params_periodic(PeriodicDescriptor const& d) {
  if (!d.validated())
    throw PbwError(ErrorCode::UnvalidatedDescriptor, "params_periodic");

  ComponentCounts c;
  std::int64_t pf = d.periodic_from();

  // contributions of the everywhere-rule region: each rule class carries
  // aleph_0 many instances
  bool all_fixed = true;
  for (std::int64_t r = 0; r < d.period(); ++r) {
    Rule u = d.rule(0, r);
    Rule l = d.rule(1, r);
    if (u.kind == RuleKind::Transversal) {
      c.t = kAleph0;
      if (u.offset == 0)
        c.fix = kAleph0;
      else
        c.shift = kAleph0;
    }
    if (u.kind != RuleKind::Transversal || u.offset != 0) all_fixed = false;
    if (u.kind == RuleKind::Hook) c.h = kAleph0;
    if (u.kind == RuleKind::Singleton) c.s = kAleph0;
    if (l.kind == RuleKind::Hook) c.hs = kAleph0;
    if (l.kind == RuleKind::Singleton) c.ss = kAleph0;
  }

  // exact counts over the boundary zone [0, pf); rule-region components
  // with an endpoint below pf are attributed here only if their minimum
  // endpoint lies below pf, so nothing is counted twice
  std::uint64_t t = 0, h = 0, hs = 0, s = 0, ss = 0, fix = 0, shift = 0;
  for (std::int64_t i = 0; i < pf; ++i) {
    auto up = d.partner(upper(i));
    if (!up) {
      ++s;
    } else if (up->row == 1) {
      ++t;
      if (up->index == i)
        ++fix;
      else
        ++shift;
    } else if (up->index > i) {
      ++h;
    }
    auto lp = d.partner(lower(i));
    if (!lp)
      ++ss;
    else if (lp->row == 1 && lp->index > i)
      ++hs;
  }
  // avoid double counting: components fully inside the rule region were not
  // touched above (indices < pf only), so plain saturating addition is exact
  ParamProfile p;
  p.t = c.t + Card(t);
  p.h = c.h + Card(h);
  p.hstar = c.hs + Card(hs);
  p.s = c.s + Card(s);
  p.sstar = c.ss + Card(ss);
  p.defect = 2 * p.h + p.s;
  p.codef = 2 * p.hstar + p.sstar;
  p.fix = c.fix + Card(fix);
  p.shift = c.shift + Card(shift);
  p.supp = all_fixed ? Card(static_cast<std::uint64_t>(pf) -
                            std::min<std::uint64_t>(fix, pf))
                     : kAleph0;
  return p;
}

PeriodicDescriptor star_periodic(PeriodicDescriptor const& d) {
  std::vector<PEdge> prefix;
  for (auto e : d.prefix_edges()) {
    e.a.row = 1 - e.a.row;
    e.b.row = 1 - e.b.row;
    prefix.push_back(e);
  }
  std::vector<Rule> up, lo;
  for (std::int64_t r = 0; r < d.period(); ++r) {
    up.push_back(d.rule(1, r));
    lo.push_back(d.rule(0, r));
  }
  PeriodicDescriptor s(d.prefix_bound(), d.period(), std::move(prefix),
                       std::move(up), std::move(lo));
  validate_or_throw(s);
  return s;
}

PeriodicDescriptor periodic_identity() {
  PeriodicDescriptor d(0, 1, {}, {Rule::transversal(0)}, {Rule::transversal(0)});
  validate_or_throw(d);
  return d;
}

PeriodicDescriptor shift(std::int64_t k) {
  PeriodicDescriptor d(0, 1, {}, {Rule::transversal(k)}, {Rule::transversal(-k)});
  validate_or_throw(d);
  return d;
}

PeriodicDescriptor block_hooks(std::int64_t p, std::vector<HookPattern> const& pattern,
                               bool fixed_rest) {
  std::vector<Rule> up(p, fixed_rest ? Rule::transversal(0) : Rule::singleton());
  std::vector<Rule> lo(p, fixed_rest ? Rule::transversal(0) : Rule::singleton());
  for (auto const& hp : pattern) {
    if (hp.on_upper) {
      up[hp.a] = Rule::hook(hp.b - hp.a);
      up[hp.b] = Rule::hook(hp.a - hp.b);
    }
    if (hp.on_lower) {
      lo[hp.a] = Rule::hook(hp.b - hp.a);
      lo[hp.b] = Rule::hook(hp.a - hp.b);
    }
  }
  // rows where a residue carries a hook on one side only must not keep the
  // fixed transversal on the other side pointing into the hook
  for (std::int64_t r = 0; r < p; ++r) {
    bool uh = up[r].kind == RuleKind::Hook;
    bool lh = lo[r].kind == RuleKind::Hook;
    if (uh != lh) {
      if (uh && lo[r].kind == RuleKind::Transversal) lo[r] = Rule::singleton();
      if (lh && up[r].kind == RuleKind::Transversal) up[r] = Rule::singleton();
    }
  }
  PeriodicDescriptor d(0, p, {}, std::move(up), std::move(lo));
  validate_or_throw(d);
  return d;
}

PeriodicDescriptor eps_at(std::int64_t x) {
  std::int64_t m = x + 1;
  std::vector<PEdge> prefix;
  for (std::int64_t i = 0; i < m; ++i)
    if (i != x) prefix.push_back({upper(i), lower(i)});
  PeriodicDescriptor d(m, 1, std::move(prefix), {Rule::transversal(0)},
                       {Rule::transversal(0)});
  validate_or_throw(d);
  return d;
}

}  // namespace pbw
