#include "pbw/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include "pbw/classify.hpp"

namespace pbw {

Diagram ClosureResult::eval_word(std::vector<std::uint32_t> const& w) const {
  Diagram acc = Diagram::identity(n);
  for (auto g : w) acc = compose(acc, gens[g]);
  return acc;
}

ClosureResult closure(std::vector<Diagram> gens, bool include_identity,
                      std::uint64_t cap, unsigned threads) {
  ClosureResult r;
  if (!gens.empty()) {
    r.n = gens[0].size();
    for (auto const& g : gens)
      if (g.size() != r.n)
        throw PbwError(ErrorCode::SizeMismatch, "mixed ground-set sizes");
  }
  std::sort(gens.begin(), gens.end(), [](Diagram const& a, Diagram const& b) {
    return canonical_encode(a) < canonical_encode(b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  r.gens = gens;

  auto push = [&](Diagram const& d, std::vector<std::uint32_t> word) -> bool {
    auto enc = canonical_encode(d);
    auto [it, fresh] = r.index.emplace(enc, r.elements.size());
    if (!fresh) return false;
    r.elements.push_back(d);
    r.words.push_back(std::move(word));
    if (r.elements.size() > cap)
      throw PbwError(ErrorCode::CapExceeded,
                     "closure exceeded " + std::to_string(cap));
    return true;
  };

  std::vector<std::uint32_t> frontier;
  if (include_identity && r.n > 0) {
    push(Diagram::identity(r.n), {});
    frontier.push_back(0);
  }
  for (std::uint32_t g = 0; g < gens.size(); ++g) {
    if (push(gens[g], {g}))
      frontier.push_back(static_cast<std::uint32_t>(r.elements.size() - 1));
  }
  r.cayley.resize(r.elements.size());

  while (!frontier.empty()) {
    // products of the whole level, computed independently then merged in
    // deterministic order
    std::vector<std::vector<Diagram>> prods(frontier.size());
    auto work = [&](size_t lo, size_t hi) {
      for (size_t k = lo; k < hi; ++k) {
        auto const& e = r.elements[frontier[k]];
        prods[k].reserve(gens.size());
        for (auto const& g : gens) prods[k].push_back(compose(e, g));
      }
    };
    if (threads > 1 && frontier.size() > 1) {
      std::vector<std::thread> pool;
      size_t chunk = (frontier.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        size_t lo = t * chunk, hi = std::min(frontier.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    } else {
      work(0, frontier.size());
    }

    std::vector<std::uint32_t> next;
    for (size_t k = 0; k < frontier.size(); ++k) {
      std::uint32_t src = frontier[k];
      r.cayley[src].resize(gens.size());
      for (std::uint32_t g = 0; g < gens.size(); ++g) {
        Diagram const& d = prods[k][g];
        auto enc = canonical_encode(d);
        auto it = r.index.find(enc);
        std::uint32_t idx;
        if (it == r.index.end()) {
          auto word = r.words[src];
          word.push_back(g);
          push(d, std::move(word));
          idx = static_cast<std::uint32_t>(r.elements.size() - 1);
          next.push_back(idx);
          r.cayley.resize(r.elements.size());
        } else {
          idx = it->second;
        }
        r.cayley[src][g] = idx;
      }
    }
    frontier = std::move(next);
  }
  // complete cayley rows for elements discovered in the last level
  for (size_t i = 0; i < r.elements.size(); ++i) {
    if (r.cayley[i].size() == gens.size()) continue;
    r.cayley[i].resize(gens.size());
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
      auto enc = canonical_encode(compose(r.elements[i], gens[g]));
      r.cayley[i][g] = r.index.at(enc);
    }
  }
  return r;
}

std::vector<Diagram> idempotent_set(unsigned n) {
  std::vector<Diagram> out;
  for (auto const& d : enumerate_all(n))
    if (is_idempotent(d)) out.push_back(d);
  return out;
}

bool is_generating(std::vector<Diagram> const& gens,
                   std::vector<Diagram> const& target, bool include_identity) {
  ClosureResult c = closure(gens, include_identity);
  if (c.size() != target.size()) return false;
  for (auto const& t : target)
    if (!c.contains(t)) return false;
  return true;
}

namespace {

// one representative per (t, h, h*, s, s*) profile; by the orbit criterion
// these are exactly the S_n x S_n orbits
std::vector<Diagram> orbit_representatives(std::vector<Diagram> const& pool) {
  std::map<std::string, Diagram> reps;
  for (auto const& d : pool) {
    auto key = params(d).to_string();
    reps.emplace(key, d);
  }
  std::vector<Diagram> out;
  for (auto& [k, d] : reps) out.push_back(d);
  return out;
}

bool equals_target(ClosureResult const& c, std::vector<Diagram> const& target) {
  if (c.size() != target.size()) return false;
  for (auto const& t : target)
    if (!c.contains(t)) return false;
  return true;
}

template <typename F>
bool for_each_combination(size_t n, unsigned k, F&& f) {
  std::vector<size_t> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  for (;;) {
    if (f(idx)) return true;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<std::vector<Diagram>> relrank_search(
    std::vector<Diagram> const& target, std::vector<Diagram> const& base,
    unsigned k_max) {
  auto cands = orbit_representatives(target);
  // drop candidates already generated by the base alone
  ClosureResult base_closure = closure(base);
  std::vector<Diagram> cands2;
  for (auto const& c : cands)
    if (!base_closure.contains(c)) cands2.push_back(c);

  for (unsigned k = 1; k <= k_max; ++k) {
    std::optional<std::vector<Diagram>> found;
    for_each_combination(cands2.size(), k, [&](std::vector<size_t> const& idx) {
      std::vector<Diagram> gens = base;
      for (auto i : idx) gens.push_back(cands2[i]);
      try {
        if (equals_target(closure(gens), target)) {
          std::vector<Diagram> u;
          for (auto i : idx) u.push_back(cands2[i]);
          found = u;
          return true;
        }
      } catch (PbwError const&) {
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<std::vector<Diagram>> rank_search(
    std::vector<Diagram> const& target, unsigned k_max) {
  for (unsigned k = 1; k <= k_max; ++k) {
    std::optional<std::vector<Diagram>> found;
    for_each_combination(target.size(), k, [&](std::vector<size_t> const& idx) {
      std::vector<Diagram> gens;
      for (auto i : idx) gens.push_back(target[i]);
      // semigroup generation: no free identity seed
      if (is_generating(gens, target, /*include_identity=*/false)) {
        found = gens;
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

// --- cache -------------------------------------------------------------

std::uint64_t closure_cache_key(std::vector<Diagram> const& gens,
                                bool include_identity) {
  std::vector<std::string> encs;
  for (auto const& g : gens) encs.push_back(canonical_encode(g));
  std::sort(encs.begin(), encs.end());
  std::string all(include_identity ? "1" : "0");
  for (auto const& e : encs) {
    all += static_cast<char>(e.size() & 0xff);
    all += e;
  }
  return fnv1a64(all);
}

std::string closure_cache_dir() {
  if (char const* env = std::getenv("PBW_CACHE_DIR")) return env;
  return "cache";
}

namespace {

void put_u32f(std::ofstream& o, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff),
               static_cast<char>((v >> 24) & 0xff)};
  o.write(b, 4);
}

std::uint32_t get_u32f(std::ifstream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) throw PbwError(ErrorCode::CorruptCache, "truncated");
  return b[0] | (b[1] << 8) | (b[2] << 16) | (b[3] << 24);
}

void put_blob(std::ofstream& o, std::string const& s) {
  put_u32f(o, static_cast<std::uint32_t>(s.size()));
  o.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_blob(std::ifstream& in) {
  std::uint32_t len = get_u32f(in);
  std::string s(len, '\0');
  in.read(s.data(), len);
  if (!in) throw PbwError(ErrorCode::CorruptCache, "truncated blob");
  return s;
}

std::string cache_path(std::uint64_t key) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(key));
  return closure_cache_dir() + "/" + buf + ".pbc";
}

}  // namespace

void cache_store(ClosureResult const& r) {
  std::filesystem::create_directories(closure_cache_dir());
  auto key = closure_cache_key(r.gens, true);
  std::ofstream o(cache_path(key), std::ios::binary);
  if (!o) throw PbwError(ErrorCode::IoError, "cannot write cache");
  o.write("PBC1", 4);
  put_u32f(o, r.n);
  put_u32f(o, static_cast<std::uint32_t>(r.gens.size()));
  for (auto const& g : r.gens) put_blob(o, canonical_encode(g));
  put_u32f(o, static_cast<std::uint32_t>(r.elements.size()));
  for (auto const& e : r.elements) put_blob(o, canonical_encode(e));
  for (auto const& w : r.words) {
    put_u32f(o, static_cast<std::uint32_t>(w.size()));
    for (auto g : w) put_u32f(o, g);
  }
  for (auto const& row : r.cayley) {
    put_u32f(o, static_cast<std::uint32_t>(row.size()));
    for (auto x : row) put_u32f(o, x);
  }
}

std::optional<ClosureResult> cache_load(std::uint64_t key) {
  std::ifstream in(cache_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string(magic, 4) != "PBC1")
    throw PbwError(ErrorCode::CorruptCache, "bad magic");
  ClosureResult r;
  r.n = get_u32f(in);
  std::uint32_t ng = get_u32f(in);
  for (std::uint32_t i = 0; i < ng; ++i)
    r.gens.push_back(canonical_decode(get_blob(in)));
  std::uint32_t ne = get_u32f(in);
  for (std::uint32_t i = 0; i < ne; ++i) {
    r.elements.push_back(canonical_decode(get_blob(in)));
    r.index.emplace(canonical_encode(r.elements.back()), i);
  }
  for (std::uint32_t i = 0; i < ne; ++i) {
    std::uint32_t len = get_u32f(in);
    std::vector<std::uint32_t> w(len);
    for (auto& x : w) x = get_u32f(in);
    r.words.push_back(std::move(w));
  }
  for (std::uint32_t i = 0; i < ne; ++i) {
    std::uint32_t len = get_u32f(in);
    std::vector<std::uint32_t> row(len);
    for (auto& x : row) x = get_u32f(in);
    r.cayley.push_back(std::move(row));
  }
  if (r.index.size() != ne) throw PbwError(ErrorCode::CorruptCache, "dup");
  return r;
}

}  // namespace pbw
