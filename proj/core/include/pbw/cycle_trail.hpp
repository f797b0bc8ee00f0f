#ifndef PBW_CYCLE_TRAIL_HPP
#define PBW_CYCLE_TRAIL_HPP

#include <vector>

#include "pbw/diagram.hpp"

namespace pbw {

/// Cycle-trail decomposition of a hook-free diagram (an element of I_n,
/// i.e. a partial injective map).  Canonical form: cycles rotated to start
/// at their minimum element, trails listed domain end first, parts sorted
/// by minimum support element.
struct CycleTrailDecomposition {
  std::vector<std::vector<unsigned>> cycles;  // (x1,...,xm): x1 -> x2 -> ... -> x1
  std::vector<std::vector<unsigned>> trails;  // [x1,...,xm]: x1 -> ... -> xm
};

bool in_ix(Diagram const& a);

/// Throws NotInIX when a has hooks.
CycleTrailDecomposition cycle_trail_decompose(Diagram const& a);

/// Rebuild the diagram from its decomposition (left inverse of decompose).
Diagram reassemble(unsigned n, CycleTrailDecomposition const& d);

}  // namespace pbw

#endif  // PBW_CYCLE_TRAIL_HPP
