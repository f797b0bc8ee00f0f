#ifndef PBW_TEST_UTIL_HPP
#define PBW_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "pbw/diagram.hpp"

namespace pbw::test {

// Independent composition oracle: build the three-row product graph
// explicitly and read components off with a DFS, no path-following.
inline Diagram compose_bruteforce(Diagram const& a, Diagram const& b) {
  unsigned const n = a.size();
  REQUIRE(b.size() == n);
  // vertices 0..n-1: X, n..2n-1: X'', 2n..3n-1: X'
  std::vector<std::vector<int>> adj(3 * n);
  auto add = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (unsigned x = 1; x <= n; ++x) {
    auto up = a.upper_partner(x);
    if (up && (up->first == 1 || up->second > x))
      add(static_cast<int>(x - 1), up->first == 0
                                       ? static_cast<int>(up->second - 1)
                                       : static_cast<int>(n + up->second - 1));
    auto lp = b.lower_partner(x);
    if (lp && (lp->first == 0 || lp->second > x))
      add(static_cast<int>(2 * n + x - 1),
          lp->first == 1 ? static_cast<int>(2 * n + lp->second - 1)
                         : static_cast<int>(n + lp->second - 1));
    auto bu = b.upper_partner(x);
    if (bu && bu->first == 0 && bu->second > x)
      add(static_cast<int>(n + x - 1), static_cast<int>(n + bu->second - 1));
    auto al = a.lower_partner(x);
    if (al && al->first == 1 && al->second > x)
      add(static_cast<int>(n + x - 1), static_cast<int>(n + al->second - 1));
  }
  // components
  std::vector<int> comp(3 * n, -1);
  int nc = 0;
  for (unsigned v = 0; v < 3 * n; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{static_cast<int>(v)};
    comp[v] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] == -1) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  // outer vertices in the same component become edges
  std::vector<std::vector<int>> outer(nc);
  for (unsigned x = 0; x < n; ++x) outer[comp[x]].push_back(static_cast<int>(x));
  for (unsigned x = 0; x < n; ++x)
    outer[comp[2 * n + x]].push_back(static_cast<int>(n + x));
  DiagramBuilder builder(n);
  for (auto const& o : outer) {
    REQUIRE(o.size() <= 2);
    if (o.size() != 2) continue;
    int u = o[0], v = o[1];
    bool ul = u >= static_cast<int>(n), vl = v >= static_cast<int>(n);
    unsigned x = ul ? u - n + 1 : u + 1;
    unsigned y = vl ? v - n + 1 : v + 1;
    if (!ul && !vl)
      builder.upper_hook(x, y);
    else if (ul && vl)
      builder.lower_hook(x, y);
    else if (!ul && vl)
      builder.transversal(x, y);
    else
      builder.transversal(y, x);
  }
  return builder.build();
}

// |PB_n| by the matching count formula: sum_k C(2n, 2k) (2k-1)!!.
inline std::uint64_t pb_size_formula(unsigned n) {
  auto binom = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    std::uint64_t dfact = 1;
    for (unsigned j = 3; j <= 2 * k; j += 2) dfact *= j;  // (2k-1)!!
    total += binom(2 * n, 2 * k) * dfact;
  }
  return total;
}

// Fig. 2 diagram (n = 12).
inline Diagram fig2_alpha() {
  return make_diagram(12, {{2, 2}, {12, 11}},
                      {{1, 3}, {5, 9}, {6, 8}, {10, 11}},
                      {{3, 6}, {4, 5}, {7, 10}, {8, 9}});
}

// Fig. 3 factors and product (n = 12); alpha is the Fig. 2 diagram.
inline Diagram fig3_beta() {
  return make_diagram(12, {{4, 7}, {5, 4}, {6, 5}},
                      {{2, 3}, {8, 9}, {10, 12}},
                      {{1, 3}, {8, 9}, {11, 12}});
}

inline Diagram fig3_product() {
  return make_diagram(12, {{2, 5}},
                      {{1, 3}, {5, 9}, {6, 8}, {10, 11}},
                      {{1, 3}, {4, 7}, {8, 9}, {11, 12}});
}

}  // namespace pbw::test

#endif
