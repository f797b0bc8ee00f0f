#include "pbw/cycle_trail.hpp"

#include <algorithm>

namespace pbw {

bool in_ix(Diagram const& a) {
  auto p = params(a);
  return p.h == Card(0) && p.hstar == Card(0);
}

CycleTrailDecomposition cycle_trail_decompose(Diagram const& a) {
  if (!in_ix(a)) throw PbwError(ErrorCode::NotInIX, "diagram has hooks");
  unsigned const n = a.size();
  CycleTrailDecomposition out;
  std::vector<bool> seen(n + 1, false);

  for (unsigned x = 1; x <= n; ++x) {
    if (seen[x]) continue;
    // walk back to the start of the orbit through x
    unsigned start = x;
    bool cycle = false;
    for (;;) {
      auto pre = a.preimage(start);
      if (!pre) break;
      if (*pre == x) {  // looped: x lies on a cycle
        cycle = true;
        start = x;
        break;
      }
      start = *pre;
    }
    std::vector<unsigned> orbit;
    unsigned cur = start;
    for (;;) {
      orbit.push_back(cur);
      seen[cur] = true;
      auto nxt = a.apply(cur);
      if (!nxt || (cycle && *nxt == start)) break;
      cur = *nxt;
    }
    if (cycle) {
      // rotate so the minimum element leads
      auto it = std::min_element(orbit.begin(), orbit.end());
      std::rotate(orbit.begin(), it, orbit.end());
      out.cycles.push_back(std::move(orbit));
    } else {
      out.trails.push_back(std::move(orbit));
    }
  }
  auto by_min = [](std::vector<unsigned> const& a, std::vector<unsigned> const& b) {
    return *std::min_element(a.begin(), a.end()) <
           *std::min_element(b.begin(), b.end());
  };
  std::sort(out.cycles.begin(), out.cycles.end(), by_min);
  std::sort(out.trails.begin(), out.trails.end(), by_min);
  return out;
}

Diagram reassemble(unsigned n, CycleTrailDecomposition const& d) {
  DiagramBuilder b(n);
  for (auto const& c : d.cycles)
    for (size_t i = 0; i < c.size(); ++i)
      b.transversal(c[i], c[(i + 1) % c.size()]);
  for (auto const& t : d.trails)
    for (size_t i = 0; i + 1 < t.size(); ++i) b.transversal(t[i], t[i + 1]);
  return b.build();
}

}  // namespace pbw
