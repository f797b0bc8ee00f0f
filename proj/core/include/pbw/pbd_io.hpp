#ifndef PBW_PBD_IO_HPP
#define PBW_PBD_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "pbw/diagram.hpp"
#include "pbw/periodic.hpp"

namespace pbw {

// Text format, one object per file:
//
//   finite:    pbd 1 finite n=<N>
//              T <a> <b>     transversal a -> b'     (1-based)
//              U <a> <b>     upper hook {a, b}
//              L <a> <b>     lower hook {a', b'}
//
//   periodic:  pbd 1 periodic m=<M> p=<P>
//              TU <a> <b>    prefix transversal (upper a, lower b), 0-based
//              TL <a> <b>    prefix transversal (lower a, upper b)
//              UU <a> <b>    prefix upper hook
//              LL <a> <b>    prefix lower hook
//              R <upper|lower> <r> <S|T d|H d>
//
// '#' starts a comment; serialization is canonical (edges sorted) so that
// parse/serialize round-trips bit-exact.

using PbdObject = std::variant<Diagram, PeriodicDescriptor>;

std::string serialize_pbd(Diagram const& d);
std::string serialize_pbd(PeriodicDescriptor const& d);
std::string serialize_pbd(PbdObject const& o);

PbdObject parse_pbd(std::string const& text);
PbdObject load_pbd(std::string const& path);
void save_pbd(std::string const& path, PbdObject const& o);

}  // namespace pbw

#endif  // PBW_PBD_IO_HPP
