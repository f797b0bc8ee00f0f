#ifndef PBW_CLOSURE_HPP
#define PBW_CLOSURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pbw/diagram.hpp"
#include "pbw/enumerate.hpp"

namespace pbw {

/// Submonoid enumerated by BFS over right multiplication.  Deterministic:
/// generators are sorted canonically up front, and the element order is the
/// BFS discovery order.
struct ClosureResult {
  unsigned n = 0;
  std::vector<Diagram> gens;
  std::vector<Diagram> elements;
  std::unordered_map<std::string, std::uint32_t> index;  // canonical encoding
  std::vector<std::vector<std::uint32_t>> words;  // generator indices, l-to-r
  std::vector<std::vector<std::uint32_t>> cayley;  // [elt][gen] -> elt

  bool contains(Diagram const& d) const {
    return index.count(canonical_encode(d)) > 0;
  }
  size_t size() const { return elements.size(); }

  Diagram eval_word(std::vector<std::uint32_t> const& w) const;
};

inline constexpr std::uint64_t kDefaultClosureCap = 1'000'000;

/// Exact closure of the generators (optionally seeded with the identity)
/// under the monoid product.  Throws CapExceeded past `cap` elements and
/// SizeMismatch on mixed ground-set sizes.  `threads` > 1 processes each
/// BFS level in parallel batches; results are identical to the sequential
/// order.
ClosureResult closure(std::vector<Diagram> gens, bool include_identity = true,
                      std::uint64_t cap = kDefaultClosureCap,
                      unsigned threads = 1);

std::vector<Diagram> idempotent_set(unsigned n);

bool is_generating(std::vector<Diagram> const& gens,
                   std::vector<Diagram> const& target,
                   bool include_identity = true);

/// Minimal set U with target = <base ∪ U>, of size <= k_max, or nothing.
/// Candidates are drawn one per S_n x S_n orbit, sound because the base set
/// is only ever used with unit-closed bases here.
std::optional<std::vector<Diagram>> relrank_search(
    std::vector<Diagram> const& target, std::vector<Diagram> const& base,
    unsigned k_max);

/// Minimal generating set of the target of size <= k_max (exhaustive).
std::optional<std::vector<Diagram>> rank_search(
    std::vector<Diagram> const& target, unsigned k_max);

// --- cache -----------------------------------------------------------------

std::uint64_t closure_cache_key(std::vector<Diagram> const& gens,
                                bool include_identity);

std::string closure_cache_dir();

void cache_store(ClosureResult const& r);
std::optional<ClosureResult> cache_load(std::uint64_t key);

}  // namespace pbw

#endif  // PBW_CLOSURE_HPP
