#ifndef PBW_CLASSIFY_HPP
#define PBW_CLASSIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "pbw/card.hpp"
#include "pbw/diagram.hpp"
#include "pbw/periodic.hpp"

namespace pbw {

/// The submonoids of PB_X under study: the units S, the one-sided units
/// G_L and G_R, the idempotent-generated submonoid E, the monoids F, F_L,
/// F_R generated by the idempotents together with two- or one-sided units,
/// and PB itself.
enum class MonoidClass { S, GL, GR, E, F, FL, FR, PB };

inline constexpr std::array<MonoidClass, 8> kAllClasses = {
    MonoidClass::S,  MonoidClass::GL, MonoidClass::GR, MonoidClass::E,
    MonoidClass::F,  MonoidClass::FL, MonoidClass::FR, MonoidClass::PB};

std::string class_name(MonoidClass c);
MonoidClass class_from_name(std::string const& s);

/// Membership decided from the parameter profile alone.  `finite` selects
/// the finite-ground-set characterisation of E.
bool member(ParamProfile const& p, MonoidClass c, bool finite);

bool member(Diagram const& a, MonoidClass c);
bool member(PeriodicDescriptor const& d, MonoidClass c);

/// Edges of the submonoid inclusion lattice (A contained in B).
std::vector<std::pair<MonoidClass, MonoidClass>> lattice_edges();

/// True when the membership answers respect every inclusion edge.
bool lattice_consistent(ParamProfile const& p, bool finite);
bool lattice_consistent(Diagram const& a);
bool lattice_consistent(PeriodicDescriptor const& d);

}  // namespace pbw

#endif  // PBW_CLASSIFY_HPP
