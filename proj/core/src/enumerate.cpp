#include "pbw/enumerate.hpp"

#include <algorithm>

namespace pbw {

namespace {

void gen(unsigned n, std::vector<int>& partner, unsigned v,
         std::function<void(std::vector<int> const&)> const& emit) {
  unsigned const total = 2 * n;
  while (v < total && partner[v] != -1) ++v;
  if (v == total) {
    emit(partner);
    return;
  }
  // v stays a singleton
  partner[v] = -2;
  gen(n, partner, v + 1, emit);
  partner[v] = -1;
  // or pairs with a later unmatched vertex
  for (unsigned u = v + 1; u < total; ++u) {
    if (partner[u] != -1) continue;
    partner[v] = static_cast<int>(u);
    partner[u] = static_cast<int>(v);
    gen(n, partner, v + 1, emit);
    partner[v] = -1;
    partner[u] = -1;
  }
}

Diagram from_partner(std::vector<int> const& partner, unsigned n) {
  DiagramBuilder b(n);
  for (unsigned v = 0; v < 2 * n; ++v) {
    int p = partner[v];
    if (p < 0 || p < static_cast<int>(v)) continue;
    unsigned const pu = static_cast<unsigned>(p);
    bool vlow = v >= n, plow = pu >= n;
    unsigned x = vlow ? v - n + 1 : v + 1;
    unsigned y = plow ? pu - n + 1 : pu + 1;
    if (!vlow && !plow)
      b.upper_hook(x, y);
    else if (vlow && plow)
      b.lower_hook(x, y);
    else
      b.transversal(x, y);
  }
  return b.build();
}

}  // namespace

void for_each_diagram(unsigned n, std::function<void(Diagram const&)> const& f) {
  std::vector<int> partner(2 * n, -1);
  gen(n, partner, 0,
      [&](std::vector<int> const& p) { f(from_partner(p, n)); });
}

std::vector<Diagram> enumerate_all(unsigned n) {
  if (n > kEnumerateMaxN)
    throw PbwError(ErrorCode::SizeTooLarge,
                   "enumerate_all limited to n <= " +
                       std::to_string(kEnumerateMaxN));
  std::vector<std::pair<std::pair<unsigned, std::string>, Diagram>> all;
  for_each_diagram(n, [&](Diagram const& d) {
    unsigned edges = 0;
    for (unsigned v = 0; v < 2 * n; ++v)
      if (d.partner_raw(static_cast<int>(v)) >= 0) ++edges;
    edges /= 2;
    all.emplace_back(std::make_pair(edges, canonical_encode(d)), d);
  });
  std::sort(all.begin(), all.end(),
            [](auto const& a, auto const& b) { return a.first < b.first; });
  std::vector<Diagram> out;
  out.reserve(all.size());
  for (auto& [k, d] : all) out.push_back(std::move(d));
  return out;
}

Diagram random_diagram(unsigned n, std::mt19937_64& rng) {
  std::vector<int> partner(2 * n, -1);
  std::vector<unsigned> free;
  for (unsigned v = 0; v < 2 * n; ++v) free.push_back(v);
  // scan vertices in order; each unmatched vertex either stays a singleton
  // or pairs with a uniformly chosen later unmatched vertex
  for (unsigned v = 0; v < 2 * n; ++v) {
    if (partner[v] != -1) continue;
    std::vector<unsigned> later;
    for (unsigned u = v + 1; u < 2 * n; ++u)
      if (partner[u] == -1) later.push_back(u);
    std::uniform_int_distribution<size_t> pick(0, later.size());
    size_t k = pick(rng);
    if (k == later.size()) {
      partner[v] = -2;
    } else {
      partner[v] = static_cast<int>(later[k]);
      partner[later[k]] = static_cast<int>(v);
    }
  }
  return from_partner(partner, n);
}

Diagram random_diagram(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_diagram(n, rng);
}

namespace {
void put_u32(std::string& s, std::uint32_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 24) & 0xff));
}
std::uint32_t get_u32(std::string const& s, size_t off) {
  return static_cast<std::uint8_t>(s[off]) |
         (static_cast<std::uint8_t>(s[off + 1]) << 8) |
         (static_cast<std::uint8_t>(s[off + 2]) << 16) |
         (static_cast<std::uint8_t>(s[off + 3]) << 24);
}
}  // namespace

std::string canonical_encode(Diagram const& a) {
  unsigned const n = a.size();
  std::string s;
  put_u32(s, n);
  for (unsigned v = 0; v < 2 * n; ++v) {
    int p = a.partner_raw(static_cast<int>(v));
    if (p > static_cast<int>(v)) {
      put_u32(s, v);
      put_u32(s, static_cast<std::uint32_t>(p));
    }
  }
  return s;
}

Diagram canonical_decode(std::string const& bytes) {
  if (bytes.size() < 4 || (bytes.size() - 4) % 8 != 0)
    throw PbwError(ErrorCode::ParseError, "bad encoding length");
  unsigned n = get_u32(bytes, 0);
  DiagramBuilder b(n);
  for (size_t off = 4; off + 8 <= bytes.size(); off += 8) {
    unsigned v = get_u32(bytes, off);
    unsigned p = get_u32(bytes, off + 4);
    bool vlow = v >= n, plow = p >= n;
    unsigned x = vlow ? v - n + 1 : v + 1;
    unsigned y = plow ? p - n + 1 : p + 1;
    if (!vlow && !plow)
      b.upper_hook(x, y);
    else if (vlow && plow)
      b.lower_hook(x, y);
    else if (!vlow && plow)
      b.transversal(x, y);
    else
      b.transversal(y, x);
  }
  return b.build();
}

std::uint64_t fnv1a64(std::string const& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace pbw
