#include "pbw/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace pbw {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::CrossingEdge: return "CrossingEdge";
    case ErrorCode::NotInIX: return "NotInIX";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::AsymmetricRule: return "AsymmetricRule";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::OverlappingEdges: return "OverlappingEdges";
    case ErrorCode::UnvalidatedDescriptor: return "UnvalidatedDescriptor";
    case ErrorCode::NotInF: return "NotInF";
    case ErrorCode::NotInFL: return "NotInFL";
    case ErrorCode::DetectionFailed: return "DetectionFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WrongAmbientSize: return "WrongAmbientSize";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotATrail: return "NotATrail";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::CorruptCache: return "CorruptCache";
    case ErrorCode::PairNotCovered: return "PairNotCovered";
    case ErrorCode::IndexUnsupported: return "IndexUnsupported";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Diagram Diagram::identity(unsigned n) {
  Diagram d(n);
  for (unsigned x = 0; x < n; ++x) d.link(x, n + x);
  return d;
}

void Diagram::link(int u, int v) {
  partner_[u] = v;
  partner_[v] = u;
}

bool Diagram::has_upper_edge(unsigned x, unsigned y) const {
  return x >= 1 && y >= 1 && x <= n_ && y <= n_ &&
         partner_[x - 1] == static_cast<int>(y - 1);
}

bool Diagram::has_lower_edge(unsigned x, unsigned y) const {
  return x >= 1 && y >= 1 && x <= n_ && y <= n_ &&
         partner_[n_ + x - 1] == static_cast<int>(n_ + y - 1);
}

bool Diagram::has_transversal(unsigned x, unsigned y) const {
  return x >= 1 && y >= 1 && x <= n_ && y <= n_ &&
         partner_[x - 1] == static_cast<int>(n_ + y - 1);
}

std::optional<unsigned> Diagram::apply(unsigned x) const {
  if (x < 1 || x > n_)
    throw PbwError(ErrorCode::IndexOutOfRange,
                   "apply: x=" + std::to_string(x));
  int p = partner_[x - 1];
  if (p < 0 || p < static_cast<int>(n_)) return std::nullopt;
  return static_cast<unsigned>(p - n_ + 1);
}

std::optional<unsigned> Diagram::preimage(unsigned x) const {
  if (x < 1 || x > n_)
    throw PbwError(ErrorCode::IndexOutOfRange,
                   "preimage: x=" + std::to_string(x));
  int p = partner_[n_ + x - 1];
  if (p < 0 || p >= static_cast<int>(n_)) return std::nullopt;
  return static_cast<unsigned>(p + 1);
}

std::optional<std::pair<int, unsigned>> Diagram::upper_partner(unsigned x) const {
  int p = partner_[x - 1];
  if (p < 0) return std::nullopt;
  if (p < static_cast<int>(n_)) return std::make_pair(0, unsigned(p + 1));
  return std::make_pair(1, unsigned(p - n_ + 1));
}

std::optional<std::pair<int, unsigned>> Diagram::lower_partner(unsigned x) const {
  int p = partner_[n_ + x - 1];
  if (p < 0) return std::nullopt;
  if (p < static_cast<int>(n_)) return std::make_pair(0, unsigned(p + 1));
  return std::make_pair(1, unsigned(p - n_ + 1));
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << "pbd(n=" << n_;
  for (unsigned x = 1; x <= n_; ++x) {
    auto m = apply(x);
    if (m) os << " T " << x << " " << *m;
  }
  for (unsigned x = 1; x <= n_; ++x) {
    int p = partner_[x - 1];
    if (p >= 0 && p < static_cast<int>(n_) && p > static_cast<int>(x - 1))
      os << " U " << x << " " << (p + 1);
  }
  for (unsigned x = 1; x <= n_; ++x) {
    int p = partner_[n_ + x - 1];
    if (p >= static_cast<int>(n_) && p > static_cast<int>(n_ + x - 1))
      os << " L " << x << " " << (p - n_ + 1);
  }
  os << ")";
  return os.str();
}

int DiagramBuilder::upper(unsigned x) const {
  if (x < 1 || x > d_.n_)
    throw PbwError(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(x));
  return static_cast<int>(x - 1);
}

int DiagramBuilder::lower(unsigned x) const {
  if (x < 1 || x > d_.n_)
    throw PbwError(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(x) + "'");
  return static_cast<int>(d_.n_ + x - 1);
}

void DiagramBuilder::add(int u, int v) {
  if (u == v)
    throw PbwError(ErrorCode::DuplicateVertex, "self-loop");
  if (d_.partner_[u] != -1 || d_.partner_[v] != -1)
    throw PbwError(ErrorCode::DuplicateVertex, "vertex used twice");
  d_.link(u, v);
}

void DiagramBuilder::transversal(unsigned x, unsigned y) { add(upper(x), lower(y)); }
void DiagramBuilder::upper_hook(unsigned x, unsigned y) { add(upper(x), upper(y)); }
void DiagramBuilder::lower_hook(unsigned x, unsigned y) { add(lower(x), lower(y)); }

Diagram make_diagram(unsigned n,
                     std::vector<std::pair<unsigned, unsigned>> const& transversals,
                     std::vector<std::pair<unsigned, unsigned>> const& upper_hooks,
                     std::vector<std::pair<unsigned, unsigned>> const& lower_hooks) {
  DiagramBuilder b(n);
  for (auto [x, y] : transversals) b.transversal(x, y);
  for (auto [x, y] : upper_hooks) b.upper_hook(x, y);
  for (auto [x, y] : lower_hooks) b.lower_hook(x, y);
  return b.build();
}

Diagram compose(Diagram const& a, Diagram const& b) {
  if (a.n_ != b.n_)
    throw PbwError(ErrorCode::SizeMismatch,
                   std::to_string(a.n_) + " vs " + std::to_string(b.n_));
  unsigned const n = a.n_;
  Diagram r(n);

  // Walk the product graph from a middle vertex z'' entered through the
  // given factor; returns the outer vertex reached (internal code of r) or
  // -1 when the path dies in the middle.  next = 0: query b's upper row,
  // next = 1: query a's lower row.
  auto walk = [&](unsigned z, int next) -> int {
    for (;;) {
      if (next == 0) {
        int p = b.partner_[z];
        if (p < 0) return -1;
        if (p >= static_cast<int>(n)) return p;  // lower vertex of b: outer
        z = static_cast<unsigned>(p);
        next = 1;
      } else {
        int p = a.partner_[n + z];
        if (p < 0) return -1;
        if (p < static_cast<int>(n)) return p;  // upper vertex of a: outer
        z = static_cast<unsigned>(p - n);
        next = 0;
      }
    }
  };

  for (unsigned x = 0; x < n; ++x) {
    if (r.partner_[x] != -1) continue;
    int p = a.partner_[x];
    if (p < 0) continue;
    if (p < static_cast<int>(n)) {           // upper hook of a survives
      r.link(x, p);
      continue;
    }
    int out = walk(static_cast<unsigned>(p - n), 0);
    if (out >= 0) r.link(x, out);
  }
  for (unsigned x = 0; x < n; ++x) {
    if (r.partner_[n + x] != -1) continue;
    int p = b.partner_[n + x];
    if (p < 0) continue;
    if (p >= static_cast<int>(n)) {          // lower hook of b survives
      r.link(n + x, p);
      continue;
    }
    int out = walk(static_cast<unsigned>(p), 1);
    if (out >= 0) r.link(n + x, out);
  }
  return r;
}

Diagram star(Diagram const& a) {
  unsigned const n = a.n_;
  Diagram r(n);
  auto flip = [n](int v) -> int {
    return v < static_cast<int>(n) ? v + static_cast<int>(n)
                                   : v - static_cast<int>(n);
  };
  for (unsigned v = 0; v < 2 * n; ++v) {
    int p = a.partner_[v];
    r.partner_[flip(static_cast<int>(v))] = p < 0 ? -1 : flip(p);
  }
  return r;
}

ParamProfile params(Diagram const& a) {
  unsigned const n = a.size();
  std::uint64_t t = 0, h = 0, hs = 0, s = 0, ss = 0, fix = 0, sh = 0;
  for (unsigned x = 1; x <= n; ++x) {
    auto up = a.upper_partner(x);
    if (!up) {
      ++s;
    } else if (up->first == 1) {
      ++t;
      if (up->second == x)
        ++fix;
      else
        ++sh;
    } else if (up->second > x) {
      ++h;
    }
    auto lp = a.lower_partner(x);
    if (!lp)
      ++ss;
    else if (lp->first == 1 && lp->second > x)
      ++hs;
  }
  ParamProfile p;
  p.t = Card(t);
  p.h = Card(h);
  p.hstar = Card(hs);
  p.s = Card(s);
  p.sstar = Card(ss);
  p.defect = Card(2 * h + s);
  p.codef = Card(2 * hs + ss);
  p.fix = Card(fix);
  p.shift = Card(sh);
  p.supp = Card(n - fix);
  return p;
}

VertexSets vertex_sets(Diagram const& a) {
  VertexSets vs;
  unsigned const n = a.size();
  for (unsigned x = 1; x <= n; ++x) {
    auto m = a.apply(x);
    if (m) {
      vs.dom.push_back(x);
      if (*m == x)
        vs.fix.push_back(x);
      else
        vs.shift.push_back(x);
    } else {
      vs.defect.push_back(x);
    }
    if (a.preimage(x))
      vs.codom.push_back(x);
    else
      vs.codef.push_back(x);
    if (!m || *m != x) vs.supp.push_back(x);
  }
  return vs;
}

bool is_idempotent(Diagram const& a) { return compose(a, a) == a; }

bool is_projection(Diagram const& a) {
  return star(a) == a && is_idempotent(a);
}

bool is_unit(Diagram const& a) {
  auto p = params(a);
  return p.defect == Card(0) && p.codef == Card(0);
}

Diagram restrict_to(Diagram const& a, std::vector<unsigned> const& w) {
  unsigned const n = a.size();
  std::vector<int> pos(n + 1, -1);
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1 || w[i] > n)
      throw PbwError(ErrorCode::IndexOutOfRange, "restrict");
    if (pos[w[i]] != -1) throw PbwError(ErrorCode::DuplicateVertex, "restrict");
    pos[w[i]] = static_cast<int>(i + 1);
  }
  unsigned const m = static_cast<unsigned>(w.size());
  auto trans = [&](int v) -> int {  // internal code of a -> internal code of r
    bool low = v >= static_cast<int>(n);
    unsigned x = low ? v - n + 1 : v + 1;
    int q = pos[x];
    if (q < 0) return -2;
    return low ? static_cast<int>(m) + q - 1 : q - 1;
  };
  Diagram r(m);
  for (unsigned v = 0; v < 2 * n; ++v) {
    int p = a.partner_raw(static_cast<int>(v));
    if (p < 0) continue;
    int tv = trans(static_cast<int>(v));
    int tp = trans(p);
    if ((tv == -2) != (tp == -2))
      throw PbwError(ErrorCode::CrossingEdge, "edge leaves W");
    if (tv != -2) r.partner_[tv] = tp;
  }
  return r;
}

Diagram disjoint_union(
    unsigned n,
    std::vector<std::pair<Diagram, std::vector<unsigned>>> const& parts) {
  Diagram r(n);
  std::vector<bool> used(n + 1, false);
  for (auto const& [part, carrier] : parts) {
    if (carrier.size() != part.size())
      throw PbwError(ErrorCode::SizeMismatch, "carrier size != part size");
    for (unsigned x : carrier) {
      if (x < 1 || x > n) throw PbwError(ErrorCode::IndexOutOfRange, "carrier");
      if (used[x]) throw PbwError(ErrorCode::DuplicateVertex, "carriers overlap");
      used[x] = true;
    }
  }
  DiagramBuilder b(n);
  for (auto const& [part, carrier] : parts) {
    unsigned m = part.size();
    for (unsigned x = 1; x <= m; ++x) {
      auto up = part.upper_partner(x);
      if (up && up->first == 1) b.transversal(carrier[x - 1], carrier[up->second - 1]);
      if (up && up->first == 0 && up->second > x)
        b.upper_hook(carrier[x - 1], carrier[up->second - 1]);
      auto lp = part.lower_partner(x);
      if (lp && lp->first == 1 && lp->second > x)
        b.lower_hook(carrier[x - 1], carrier[lp->second - 1]);
    }
  }
  return b.build();
}

}  // namespace pbw
