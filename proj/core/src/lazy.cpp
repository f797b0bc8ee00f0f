#include "pbw/lazy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace pbw {

LazyDiagram LazyDiagram::from_descriptor(PeriodicDescriptor const& d) {
  if (!d.validated())
    throw PbwError(ErrorCode::UnvalidatedDescriptor, "from_descriptor");
  auto holder = std::make_shared<PeriodicDescriptor const>(d);
  LazyDiagram ld([holder](PVertex v) { return holder->partner(v); },
                 "descriptor");
  ld.desc_ = holder;
  ld.profile_ = params_periodic(d);
  return ld;
}

LazyDiagram star_lazy(LazyDiagram const& a) {
  auto fn = a;
  LazyDiagram out(
      [fn](PVertex v) -> std::optional<PVertex> {
        auto p = fn.partner(PVertex{1 - v.row, v.index});
        if (!p) return std::nullopt;
        return PVertex{1 - p->row, p->index};
      },
      "star(" + a.provenance() + ")");
  if (a.has_profile()) {
    ParamProfile p = a.profile();
    std::swap(p.h, p.hstar);
    std::swap(p.s, p.sstar);
    std::swap(p.defect, p.codef);
    // fix/shift/supp are not determined by the mirror in general; keep the
    // transversal-level data only when the profile is shift-free
    out.with_profile(p);
  }
  return out;
}

namespace {

// Exact divergence detection is available when both factors are validated
// descriptors: once the walk stays beyond both boundary zones, its steps
// depend only on the index residue mod lcm(p_a, p_b), so a repeated
// (residue, side) state with positive drift and no dip into the boundary
// zone proves the path escapes to infinity.
struct WalkContext {
  std::shared_ptr<PeriodicDescriptor const> da, db;
  std::int64_t lcm = 0;
  std::int64_t boundary = 0;

  bool exact() const { return lcm > 0; }
};

WalkContext make_context(LazyDiagram const& a, LazyDiagram const& b) {
  WalkContext ctx;
  ctx.da = a.descriptor();
  ctx.db = b.descriptor();
  if (ctx.da && ctx.db) {
    ctx.lcm = std::lcm(ctx.da->period(), ctx.db->period());
    ctx.boundary =
        std::max(ctx.da->periodic_from(), ctx.db->periodic_from()) +
        std::max(ctx.da->max_offset(), ctx.db->max_offset());
  }
  return ctx;
}

}  // namespace

LazyDiagram compose_lazy(LazyDiagram const& a, LazyDiagram const& b,
                         WalkLimits limits) {
  auto ctx = std::make_shared<WalkContext>(make_context(a, b));
  LazyDiagram fa = a, fb = b;

  auto walk = [fa, fb, ctx, limits](PVertex start) -> std::optional<PVertex> {
    // first step out of the start vertex
    std::optional<PVertex> first =
        start.row == 0 ? fa.partner(start) : fb.partner(start);
    if (!first) return std::nullopt;
    if (start.row == 0 && first->row == 0) return first;  // upper hook of a
    if (start.row == 1 && first->row == 1) return first;  // lower hook of b
    // entered the middle row at index first->index
    std::int64_t z = first->index;
    // side: which factor answers the next query (0: b upper, 1: a lower)
    int side = start.row == 0 ? 0 : 1;
    std::map<std::pair<std::int64_t, int>, size_t> seen;
    std::vector<std::int64_t> trace;
    std::int64_t steps = 0;
    for (;;) {
      if (++steps > limits.max_steps || z > limits.max_index)
        return std::nullopt;  // capped: treated as a path to infinity
      if (ctx->exact() && z >= ctx->boundary) {
        auto key = std::make_pair(z % ctx->lcm, side);
        auto it = seen.find(key);
        if (it != seen.end()) {
          std::int64_t prev = trace[it->second];
          if (z > prev) {
            // the segment between the repeats must stay clear of the
            // boundary zone for the shift argument to apply
            bool clear = true;
            for (size_t k = it->second; k < trace.size(); ++k)
              if (trace[k] < ctx->boundary) clear = false;
            if (clear) return std::nullopt;  // proven divergent
          }
          it->second = trace.size();
        } else {
          seen.emplace(key, trace.size());
        }
      }
      trace.push_back(z);
      std::optional<PVertex> next;
      if (side == 0) {
        next = fb.partner(upper(z));
        if (!next) return std::nullopt;
        if (next->row == 1) return *next;  // reached an outer lower vertex
        z = next->index;
        side = 1;
      } else {
        next = fa.partner(lower(z));
        if (!next) return std::nullopt;
        if (next->row == 0) return *next;  // reached an outer upper vertex
        z = next->index;
        side = 0;
      }
    }
  };

  return LazyDiagram(
      [walk](PVertex v) -> std::optional<PVertex> {
        auto out = walk(v);
        if (!out) return std::nullopt;
        // outer lower vertices of the product keep row 1; outer upper row 0.
        return out;
      },
      "(" + a.provenance() + ")*(" + b.provenance() + ")");
}

LazyDiagram compose_lazy(LazyDiagram const& a, LazyDiagram const& b,
                         LazyDiagram const& c) {
  return compose_lazy(compose_lazy(a, b), c);
}

std::int64_t default_scan_bound(PeriodicDescriptor const& a,
                                PeriodicDescriptor const& b) {
  std::int64_t l = std::lcm(a.period(), b.period());
  return a.periodic_from() + b.periodic_from() + 8 * l +
         4 * (a.max_offset() + b.max_offset() + 1);
}

std::optional<PeriodicDescriptor> detect_periodicity(LazyDiagram const& ld,
                                                     std::int64_t scan_bound,
                                                     std::int64_t max_period) {
  if (scan_bound < 8) scan_bound = 8;
  // sample the oracle once
  std::vector<std::optional<PVertex>> up(scan_bound), lo(scan_bound);
  for (std::int64_t i = 0; i < scan_bound; ++i) {
    up[i] = ld.partner(upper(i));
    lo[i] = ld.partner(lower(i));
    if ((up[i] && up[i]->index < 0) || (lo[i] && lo[i]->index < 0))
      return std::nullopt;
  }
  auto sample = [&](int row, std::int64_t i) { return row == 0 ? up[i] : lo[i]; };

  for (std::int64_t p = 1; p <= std::min(max_period, scan_bound / 4); ++p) {
    std::int64_t m_max = scan_bound / 2;
    for (std::int64_t m = 0; m <= m_max; ++m) {
      // infer one rule per row/residue from the last full instance in the
      // sample, then check all instances
      std::vector<Rule> rules[2];
      rules[0].assign(p, Rule::singleton());
      rules[1].assign(p, Rule::singleton());
      bool ok = true;
      std::int64_t probe_top = scan_bound - 1;
      for (int row = 0; row < 2 && ok; ++row) {
        for (std::int64_t r = 0; r < p && ok; ++r) {
          // find the largest sampled instance of this class whose partner,
          // if any, is itself safely inside the sample
          std::optional<Rule> inferred;
          for (std::int64_t i = probe_top; i >= m; --i) {
            if (i % p != r) continue;
            if (i < scan_bound * 3 / 4) break;  // stay near the top
            auto pt = sample(row, i);
            if (!pt) {
              inferred = Rule::singleton();
            } else if (pt->row == row) {
              inferred = Rule::hook(pt->index - i);
            } else {
              inferred = Rule::transversal(pt->index - i);
            }
            break;
          }
          if (!inferred) {
            ok = false;
            break;
          }
          rules[row][r] = *inferred;
        }
      }
      if (!ok) continue;

      // deviations from the rules are tolerated only inside a bounded
      // boundary zone (they become prefix edges); beyond it a clean
      // confirmation zone of pure rule matches is required, so a candidate
      // can never just memorize the sampled window
      std::vector<PEdge> prefix;
      auto note_edge = [&](PVertex x, PVertex y) {
        if (y < x) std::swap(x, y);
        PEdge e{x, y};
        for (auto const& q : prefix)
          if (q == e) return;
        prefix.push_back(e);
      };
      std::int64_t max_off = 0;
      for (int row = 0; row < 2; ++row)
        for (std::int64_t r = 0; r < p; ++r)
          if (rules[row][r].kind != RuleKind::Singleton)
            max_off = std::max(max_off, std::abs(rules[row][r].offset));
      std::int64_t check_top = scan_bound - max_off - 1;
      std::int64_t tolerate = m + 2 * p * (1 + max_off);
      if (check_top - tolerate < 2 * p) continue;  // not enough confirmation
      for (int row = 0; row < 2 && ok; ++row) {
        for (std::int64_t i = 0; i < check_top && ok; ++i) {
          auto actual = sample(row, i);
          if (i < m) {
            if (actual) {
              if (actual->index >= scan_bound) {
                ok = false;
                break;
              }
              note_edge(PVertex{row, i}, *actual);
            }
            continue;
          }
          Rule rl = rules[row][i % p];
          std::optional<PVertex> expected;
          if (rl.kind == RuleKind::Transversal)
            expected = PVertex{1 - row, i + rl.offset};
          else if (rl.kind == RuleKind::Hook)
            expected = PVertex{row, i + rl.offset};
          if (expected && expected->index < m) expected = std::nullopt;
          bool matches = actual.has_value() == expected.has_value() &&
                         (!actual || *actual == *expected);
          if (matches) continue;
          if (i >= tolerate) {
            ok = false;  // deviation inside the confirmation zone
            break;
          }
          if (actual) {
            if (actual->index >= scan_bound) {
              ok = false;
              break;
            }
            note_edge(PVertex{row, i}, *actual);
          }
          // a singleton where the rule expects a partner is only legal when
          // the target is stolen by a prefix edge; validation and the final
          // window comparison decide
        }
      }
      if (!ok) continue;

      PeriodicDescriptor cand(m, p, prefix, rules[0], rules[1]);
      auto rep = validate(cand);
      if (!rep.ok) continue;
      bool agrees = true;
      for (std::int64_t i = 0; i < scan_bound && agrees; ++i) {
        for (int row = 0; row < 2; ++row) {
          auto x = cand.partner(PVertex{row, i});
          auto y = sample(row, i);
          if (x.has_value() != y.has_value() || (x && *x != *y)) {
            agrees = false;
            break;
          }
        }
      }
      if (agrees) return cand;
    }
  }
  return std::nullopt;
}

bool is_idempotent_window(LazyDiagram const& a, std::int64_t n,
                          WalkLimits limits) {
  auto sq = compose_lazy(a, a, limits);
  return window_equal(sq, a, n);
}

}  // namespace pbw
