#include "pbw/classify.hpp"

namespace pbw {

std::string class_name(MonoidClass c) {
  switch (c) {
    case MonoidClass::S: return "S";
    case MonoidClass::GL: return "GL";
    case MonoidClass::GR: return "GR";
    case MonoidClass::E: return "E";
    case MonoidClass::F: return "F";
    case MonoidClass::FL: return "FL";
    case MonoidClass::FR: return "FR";
    case MonoidClass::PB: return "PB";
  }
  return "?";
}

MonoidClass class_from_name(std::string const& s) {
  for (auto c : kAllClasses)
    if (class_name(c) == s) return c;
  throw PbwError(ErrorCode::ParseError, "unknown class " + s);
}

bool member(ParamProfile const& p, MonoidClass c, bool finite) {
  Card const zero(0);
  switch (c) {
    case MonoidClass::S:
      return p.defect == zero && p.codef == zero;
    case MonoidClass::GL:
      return p.codef == zero;
    case MonoidClass::GR:
      return p.defect == zero;
    case MonoidClass::F:
      return p.defect == p.codef;
    case MonoidClass::FL:
      return p.codef <= p.defect;
    case MonoidClass::FR:
      return p.defect <= p.codef;
    case MonoidClass::E: {
      bool low = p.defect <= Card(1) && p.shift == zero;
      if (finite) return low || p.defect >= Card(2);
      bool mid = p.defect >= Card(2) && p.supp < kAleph0;
      bool high = p.defect == p.codef && p.defect >= max(kAleph0, p.shift);
      return low || mid || high;
    }
    case MonoidClass::PB:
      return true;
  }
  return false;
}

bool member(Diagram const& a, MonoidClass c) {
  return member(params(a), c, /*finite=*/true);
}

bool member(PeriodicDescriptor const& d, MonoidClass c) {
  if (!d.validated())
    throw PbwError(ErrorCode::UnvalidatedDescriptor, "member");
  return member(params_periodic(d), c, /*finite=*/false);
}

std::vector<std::pair<MonoidClass, MonoidClass>> lattice_edges() {
  using M = MonoidClass;
  return {
      {M::S, M::GL},  {M::S, M::GR}, {M::S, M::F},   {M::E, M::F},
      {M::F, M::FL},  {M::F, M::FR}, {M::GL, M::FL}, {M::GR, M::FR},
      {M::FL, M::PB}, {M::FR, M::PB},
  };
}

bool lattice_consistent(ParamProfile const& p, bool finite) {
  for (auto [a, b] : lattice_edges())
    if (member(p, a, finite) && !member(p, b, finite)) return false;
  return true;
}

bool lattice_consistent(Diagram const& a) {
  return lattice_consistent(params(a), true);
}

bool lattice_consistent(PeriodicDescriptor const& d) {
  return lattice_consistent(params_periodic(d), false);
}

}  // namespace pbw
