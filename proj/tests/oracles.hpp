#pragma once
// Brute-force reference implementations used as test oracles. They work on
// raw bitmasks and never call into the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Vec = std::vector<std::uint64_t>;

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline int bits(Mask m) { return __builtin_popcount(m); }

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline bool in_ideal(const std::vector<Mask>& gens, Mask m) {
  for (Mask g : gens) {
    if (subset(g, m)) return true;
  }
  return false;
}

inline bool divides_some(const std::vector<Mask>& gens, Mask m) {
  for (Mask g : gens) {
    if (subset(m, g)) return true;
  }
  return false;
}

// Minimal elements under inclusion, deduplicated, ordered by (size, value).
inline std::vector<Mask> minimal(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Mask> out;
  for (Mask a : v) {
    bool keep = true;
    for (Mask b : v) {
      if (b != a && subset(b, a)) keep = false;
    }
    if (keep) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return bits(a) != bits(b) ? bits(a) < bits(b) : a < b;
  });
  return out;
}

// Maximal elements of a family.
inline std::vector<Mask> maximal(const std::vector<Mask>& v) {
  std::vector<Mask> out;
  for (Mask a : v) {
    bool keep = true;
    for (Mask b : v) {
      if (b != a && subset(a, b)) keep = false;
    }
    if (keep) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return bits(a) != bits(b) ? bits(a) < bits(b) : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Vec fvector_of_faces(int n, const std::vector<bool>& face) {
  Vec f(static_cast<std::size_t>(n) + 2, 0);
  for (Mask m = 0; m < face.size(); ++m) {
    if (face[m]) ++f[static_cast<std::size_t>(bits(m))];
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline std::vector<bool> facet_faces(int n, const std::vector<Mask>& gens) {
  std::vector<bool> face(std::size_t{1} << n, false);
  for (Mask m = 0; m < face.size(); ++m) face[m] = divides_some(gens, m);
  return face;
}

inline std::vector<bool> nonface_faces(int n, const std::vector<Mask>& gens) {
  std::vector<bool> face(std::size_t{1} << n, false);
  for (Mask m = 0; m < face.size(); ++m) face[m] = !in_ideal(gens, m);
  return face;
}

inline std::vector<Mask> faces_to_list(const std::vector<bool>& face) {
  std::vector<Mask> out;
  for (Mask m = 0; m < face.size(); ++m) {
    if (face[m]) out.push_back(m);
  }
  return out;
}

inline Vec facet_fvector(int n, const std::vector<Mask>& gens) { return fvector_of_faces(n, facet_faces(n, gens)); }
inline Vec nonface_fvector(int n, const std::vector<Mask>& gens) {
  return fvector_of_faces(n, nonface_faces(n, gens));
}

inline bool is_f_ideal(int n, const std::vector<Mask>& gens) {
  return facet_fvector(n, gens) == nonface_fvector(n, gens);
}

inline std::vector<Mask> dual(int n, const std::vector<Mask>& gens) {
  std::vector<Mask> c;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask g : gens) c.push_back(full & ~g);
  return minimal(c);
}

// Minimal transversals: inclusion-minimal T meeting every generator.
inline std::vector<Mask> minimal_transversals(int n, const std::vector<Mask>& gens) {
  std::vector<Mask> hits;
  for (Mask t = 0; t < (Mask{1} << n); ++t) {
    bool ok = true;
    for (Mask g : gens) {
      if ((g & t) == 0) ok = false;
    }
    if (ok) hits.push_back(t);
  }
  return minimal(hits);
}

// Every antichain of nonempty subsets of {1..n}, including the empty one.
// Feasible for n <= 4 (2^15 families).
inline std::vector<std::vector<Mask>> all_antichains(int n) {
  std::vector<Mask> elems;
  for (Mask m = 1; m < (Mask{1} << n); ++m) elems.push_back(m);
  std::vector<std::vector<Mask>> out;
  const std::uint64_t total = std::uint64_t{1} << elems.size();
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    std::vector<Mask> s;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (pick >> i & 1u) s.push_back(elems[i]);
    }
    bool antichain = true;
    for (std::size_t i = 0; i < s.size() && antichain; ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i != j && subset(s[i], s[j])) {
          antichain = false;
          break;
        }
      }
    }
    if (antichain) out.push_back(minimal(s));
  }
  return out;
}

inline std::vector<Mask> random_generators(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 2 * n);
  std::uniform_int_distribution<Mask> mask(1, (Mask{1} << n) - 1);
  std::vector<Mask> g;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) g.push_back(mask(rng));
  return minimal(g);
}

// All sequences a = sum C(a_i, i), i = j..k, a_j > ... > a_k >= k >= 1.
inline std::vector<std::vector<std::uint64_t>> all_macaulay(std::uint64_t a, int j) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> tops;
  auto rec = [&](auto&& self, std::uint64_t rest, int i, std::uint64_t bound) -> void {
    if (rest == 0) {
      if (!tops.empty()) out.push_back(tops);
      return;
    }
    if (i < 1) return;
    for (std::uint64_t t = static_cast<std::uint64_t>(i); t < bound; ++t) {
      const std::uint64_t c = choose(static_cast<int>(t), i);
      if (c > rest) break;
      tops.push_back(t);
      self(self, rest - c, i - 1, t);
      tops.pop_back();
    }
  };
  rec(rec, a, j, a + static_cast<std::uint64_t>(j) + 2);
  return out;
}

// f-vectors of all simplicial complexes whose vertex set is exactly
// {0..v-1}, found by choosing faces layer by layer.
inline std::set<Vec> realizable_fvectors(int v) {
  std::set<Vec> out;
  std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(v) + 1);
  for (Mask m = 0; m < (Mask{1} << v); ++m) by_size[static_cast<std::size_t>(bits(m))].push_back(m);
  std::vector<bool> chosen(std::size_t{1} << v, false);
  chosen[0] = true;
  Vec f{1};
  if (v >= 1) {
    for (Mask m : by_size[1]) chosen[m] = true;
    f.push_back(static_cast<std::uint64_t>(v));
  }
  auto rec = [&](auto&& self, int k) -> void {
    out.insert(f);
    if (k > v) return;
    std::vector<Mask> cand;
    for (Mask m : by_size[static_cast<std::size_t>(k)]) {
      bool ok = true;
      for (int b = 0; b < v; ++b) {
        if ((m >> b & 1u) && !chosen[m & ~(Mask{1} << b)]) ok = false;
      }
      if (ok) cand.push_back(m);
    }
    const std::uint64_t total = std::uint64_t{1} << cand.size();
    for (std::uint64_t pick = 1; pick < total; ++pick) {
      std::uint64_t count = 0;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (pick >> i & 1u) {
          chosen[cand[i]] = true;
          ++count;
        }
      }
      f.push_back(count);
      self(self, k + 1);
      f.pop_back();
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (pick >> i & 1u) chosen[cand[i]] = false;
      }
    }
  };
  if (v >= 1) rec(rec, 2);
  else out.insert(f);
  return out;
}

}  // namespace oracle
