#ifndef PBW_ENUMERATE_HPP
#define PBW_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pbw/diagram.hpp"

namespace pbw {

// Full enumeration is guarded at this bound (|PB_6| = 140152 already).
inline constexpr unsigned kEnumerateMaxN = 6;

/// All of PB_n, ordered by number of edges then lexicographically on the
/// canonical encoding.  Throws SizeTooLarge above kEnumerateMaxN.
std::vector<Diagram> enumerate_all(unsigned n);

/// Streaming form, unsorted generation order.
void for_each_diagram(unsigned n, std::function<void(Diagram const&)> const& f);

Diagram random_diagram(unsigned n, std::mt19937_64& rng);
Diagram random_diagram(unsigned n, std::uint64_t seed);

/// Injective, equality-compatible byte encoding: u32le n, then the edge
/// list sorted as pairs of u32le internal codes (min first).
std::string canonical_encode(Diagram const& a);
Diagram canonical_decode(std::string const& bytes);

std::uint64_t fnv1a64(std::string const& bytes);
inline std::uint64_t diagram_hash(Diagram const& a) {
  return fnv1a64(canonical_encode(a));
}

}  // namespace pbw

#endif  // PBW_ENUMERATE_HPP
