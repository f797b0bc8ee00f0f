#ifndef PBW_DIAGRAM_HPP
#define PBW_DIAGRAM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbw/card.hpp"
#include "pbw/error.hpp"

namespace pbw {

/// A Brauer graph on the ground set {1,...,n}: two rows of n vertices
/// (upper x and lower x') and every vertex of degree at most one.
///
/// Diagrams are immutable value types once built; all operations are pure.
/// Internally vertex x on the upper row is encoded as x-1 and x' as n+x-1.
class Diagram {
 public:
  Diagram() : n_(0) {}

  /// The diagram with no edges (all vertices singletons).
  explicit Diagram(unsigned n) : n_(n), partner_(2 * n, -1) {}

  static Diagram identity(unsigned n);

  unsigned size() const { return n_; }

  // Raw partner access on internal codes (0..2n-1), -1 for none.
  int partner_raw(int v) const { return partner_[v]; }

  bool has_upper_edge(unsigned x, unsigned y) const;  // hook {x,y}
  bool has_lower_edge(unsigned x, unsigned y) const;  // hook {x',y'}
  bool has_transversal(unsigned x, unsigned y) const;  // {x,y'}

  /// x maps to xa when {x,(xa)'} is a transversal; none otherwise.
  std::optional<unsigned> apply(unsigned x) const;
  std::optional<unsigned> preimage(unsigned x) const;

  /// Partner of upper x inside the graph, as (row, index) with row 0 upper.
  std::optional<std::pair<int, unsigned>> upper_partner(unsigned x) const;
  std::optional<std::pair<int, unsigned>> lower_partner(unsigned x) const;

  friend bool operator==(Diagram const& a, Diagram const& b) {
    return a.n_ == b.n_ && a.partner_ == b.partner_;
  }
  friend bool operator!=(Diagram const& a, Diagram const& b) {
    return !(a == b);
  }
  friend bool operator<(Diagram const& a, Diagram const& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.partner_ < b.partner_;
  }

  std::string to_string() const;

 private:
  unsigned n_;
  std::vector<int> partner_;

  void link(int u, int v);

  friend Diagram make_diagram(unsigned n,
                              std::vector<std::pair<unsigned, unsigned>> const&,
                              std::vector<std::pair<unsigned, unsigned>> const&,
                              std::vector<std::pair<unsigned, unsigned>> const&);
  friend Diagram compose(Diagram const& a, Diagram const& b);
  friend Diagram star(Diagram const& a);
  friend Diagram restrict_to(Diagram const& a, std::vector<unsigned> const& w);
  friend class DiagramBuilder;
};

/// Mutable helper for assembling diagrams edge by edge.
class DiagramBuilder {
 public:
  explicit DiagramBuilder(unsigned n) : d_(n) {}

  void transversal(unsigned x, unsigned y);  // {x, y'}
  void upper_hook(unsigned x, unsigned y);   // {x, y}
  void lower_hook(unsigned x, unsigned y);   // {x', y'}

  Diagram build() { return d_; }

 private:
  Diagram d_;
  void add(int u, int v);
  int upper(unsigned x) const;
  int lower(unsigned x) const;
};

/// Tableau-style constructor: unlisted vertices become singletons.
/// Transversal pairs are (upper, lower).
Diagram make_diagram(unsigned n,
                     std::vector<std::pair<unsigned, unsigned>> const& transversals,
                     std::vector<std::pair<unsigned, unsigned>> const& upper_hooks,
                     std::vector<std::pair<unsigned, unsigned>> const& lower_hooks);

/// Product in the partial Brauer monoid: outer components of the product
/// graph.  Path-following per outer vertex; O(n) overall since every vertex
/// has degree at most one.
Diagram compose(Diagram const& a, Diagram const& b);

inline Diagram compose(Diagram const& a, Diagram const& b, Diagram const& c) {
  return compose(compose(a, b), c);
}

/// The * anti-involution: reflect in the horizontal axis.
Diagram star(Diagram const& a);

ParamProfile params(Diagram const& a);

struct VertexSets {
  std::vector<unsigned> dom, codom, defect, codef, fix, shift, supp;
};

VertexSets vertex_sets(Diagram const& a);

bool is_idempotent(Diagram const& a);
bool is_projection(Diagram const& a);
bool is_unit(Diagram const& a);

/// Induced subgraph on W (sorted, 1-based), relabelled to 1..|W|.
/// Throws CrossingEdge if an edge joins W to its complement.
Diagram restrict_to(Diagram const& a, std::vector<unsigned> const& w);

/// Inverse of restriction: transplant each part onto its carrier set.
/// Carriers must be disjoint subsets of 1..n; unlisted vertices singletons.
Diagram disjoint_union(
    unsigned n,
    std::vector<std::pair<Diagram, std::vector<unsigned>>> const& parts);

}  // namespace pbw

#endif  // PBW_DIAGRAM_HPP
