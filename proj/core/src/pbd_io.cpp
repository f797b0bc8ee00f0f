#include "pbw/pbd_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pbw {

std::string serialize_pbd(Diagram const& d) {
  unsigned const n = d.size();
  std::ostringstream os;
  os << "pbd 1 finite n=" << n << "\n";
  for (unsigned x = 1; x <= n; ++x) {
    auto m = d.apply(x);
    if (m) os << "T " << x << " " << *m << "\n";
  }
  for (unsigned x = 1; x <= n; ++x) {
    auto p = d.upper_partner(x);
    if (p && p->first == 0 && p->second > x)
      os << "U " << x << " " << p->second << "\n";
  }
  for (unsigned x = 1; x <= n; ++x) {
    auto p = d.lower_partner(x);
    if (p && p->first == 1 && p->second > x)
      os << "L " << x << " " << p->second << "\n";
  }
  return os.str();
}

std::string serialize_pbd(PeriodicDescriptor const& d) {
  std::ostringstream os;
  os << "pbd 1 periodic m=" << d.prefix_bound() << " p=" << d.period() << "\n";
  auto edges = d.prefix_edges();
  std::sort(edges.begin(), edges.end());
  for (auto const& e : edges) {
    if (e.a.row == 0 && e.b.row == 0)
      os << "UU " << e.a.index << " " << e.b.index << "\n";
    else if (e.a.row == 1 && e.b.row == 1)
      os << "LL " << e.a.index << " " << e.b.index << "\n";
    else if (e.a.row == 0)
      os << "TU " << e.a.index << " " << e.b.index << "\n";
    else
      os << "TU " << e.b.index << " " << e.a.index << "\n";
  }
  for (int row = 0; row < 2; ++row) {
    for (std::int64_t r = 0; r < d.period(); ++r) {
      Rule rl = d.rule(row, r);
      os << "R " << (row == 0 ? "upper" : "lower") << " " << r << " ";
      switch (rl.kind) {
        case RuleKind::Singleton: os << "S"; break;
        case RuleKind::Transversal: os << "T " << rl.offset; break;
        case RuleKind::Hook: os << "H " << rl.offset; break;
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string serialize_pbd(PbdObject const& o) {
  return std::visit([](auto const& x) { return serialize_pbd(x); }, o);
}

namespace {

std::vector<std::string> tokenize(std::string const& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (!t.empty() && t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

long long to_int(std::string const& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (std::exception const&) {
    throw PbwError(ErrorCode::ParseError, "bad integer '" + s + "'");
  }
}

}  // namespace

PbdObject parse_pbd(std::string const& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    header = tokenize(line);
    if (!header.empty()) break;
  }
  if (header.size() < 3 || header[0] != "pbd" || header[1] != "1")
    throw PbwError(ErrorCode::ParseError, "missing 'pbd 1' header");

  if (header[2] == "finite") {
    if (header.size() != 4 || header[3].rfind("n=", 0) != 0)
      throw PbwError(ErrorCode::ParseError, "finite header needs n=<N>");
    unsigned n = static_cast<unsigned>(to_int(header[3].substr(2)));
    DiagramBuilder b(n);
    while (std::getline(is, line)) {
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      if (toks.size() != 3)
        throw PbwError(ErrorCode::ParseError, "edge line needs 2 indices");
      unsigned x = static_cast<unsigned>(to_int(toks[1]));
      unsigned y = static_cast<unsigned>(to_int(toks[2]));
      if (toks[0] == "T")
        b.transversal(x, y);
      else if (toks[0] == "U")
        b.upper_hook(x, y);
      else if (toks[0] == "L")
        b.lower_hook(x, y);
      else
        throw PbwError(ErrorCode::ParseError, "unknown edge tag " + toks[0]);
    }
    return b.build();
  }

  if (header[2] == "periodic") {
    if (header.size() != 5 || header[3].rfind("m=", 0) != 0 ||
        header[4].rfind("p=", 0) != 0)
      throw PbwError(ErrorCode::ParseError, "periodic header needs m= p=");
    std::int64_t m = to_int(header[3].substr(2));
    std::int64_t p = to_int(header[4].substr(2));
    if (p < 1) throw PbwError(ErrorCode::ParseError, "period must be >= 1");
    std::vector<PEdge> prefix;
    std::vector<Rule> up(p, Rule::singleton()), lo(p, Rule::singleton());
    while (std::getline(is, line)) {
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      if (toks[0] == "R") {
        if (toks.size() < 4)
          throw PbwError(ErrorCode::ParseError, "rule line too short");
        int row;
        if (toks[1] == "upper")
          row = 0;
        else if (toks[1] == "lower")
          row = 1;
        else
          throw PbwError(ErrorCode::ParseError, "rule row " + toks[1]);
        std::int64_t r = to_int(toks[2]);
        if (r < 0 || r >= p)
          throw PbwError(ErrorCode::ParseError, "residue out of range");
        Rule rl;
        if (toks[3] == "S") {
          if (toks.size() != 4)
            throw PbwError(ErrorCode::ParseError, "S rule takes no offset");
          rl = Rule::singleton();
        } else if (toks[3] == "T" || toks[3] == "H") {
          if (toks.size() != 5)
            throw PbwError(ErrorCode::ParseError, "rule needs offset");
          std::int64_t d = to_int(toks[4]);
          rl = toks[3] == "T" ? Rule::transversal(d) : Rule::hook(d);
        } else {
          throw PbwError(ErrorCode::ParseError, "unknown rule " + toks[3]);
        }
        (row == 0 ? up : lo)[r] = rl;
      } else {
        if (toks.size() != 3)
          throw PbwError(ErrorCode::ParseError, "edge line needs 2 indices");
        std::int64_t a = to_int(toks[1]);
        std::int64_t b2 = to_int(toks[2]);
        if (a < 0 || b2 < 0)
          throw PbwError(ErrorCode::NegativeIndex, "prefix edge index < 0");
        if (toks[0] == "TU")
          prefix.push_back({upper(a), lower(b2)});
        else if (toks[0] == "TL")
          prefix.push_back({lower(a), upper(b2)});
        else if (toks[0] == "UU")
          prefix.push_back({upper(a), upper(b2)});
        else if (toks[0] == "LL")
          prefix.push_back({lower(a), lower(b2)});
        else
          throw PbwError(ErrorCode::ParseError, "unknown edge tag " + toks[0]);
      }
    }
    PeriodicDescriptor d(m, p, std::move(prefix), std::move(up), std::move(lo));
    validate_or_throw(d);
    return d;
  }

  throw PbwError(ErrorCode::ParseError, "unknown kind " + header[2]);
}

PbdObject load_pbd(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw PbwError(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pbd(ss.str());
}

void save_pbd(std::string const& path, PbdObject const& o) {
  std::ofstream out(path);
  if (!out) throw PbwError(ErrorCode::IoError, "cannot write " + path);
  out << serialize_pbd(o);
}

}  // namespace pbw
