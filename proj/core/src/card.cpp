#include "pbw/card.hpp"

#include <sstream>

namespace pbw {

std::string Card::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("aleph0");
}

std::string ParamProfile::to_string() const {
  std::ostringstream os;
  os << "t=" << t.to_string() << " h=" << h.to_string()
     << " h*=" << hstar.to_string() << " s=" << s.to_string()
     << " s*=" << sstar.to_string();
  return os.str();
}

}  // namespace pbw
