#pragma once

// Independent brute-force references. Nothing here calls the enumeration or
// closure code under test.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ucc/bigraph.hpp"
#include "ucc/setfam.hpp"

namespace oracle {

using ucc::BipartiteGraph;
using ucc::Bitset;

/// Maximal stable sets of the subgraph induced by `domain`, as combined
/// vertex masks in canonical order. Scans all 2^|domain| subsets; |domain| ≤ 24.
/// An optional filter keeps only sets containing `include` and avoiding
/// `exclude`.
inline std::vector<Bitset> maximalStable(const BipartiteGraph& g, const Bitset& domain, const Bitset& include,
                                         const Bitset& exclude) {
  const auto verts = domain.indices();
  const std::size_t n = verts.size();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacency(verts[i]).test(verts[j])) adj[i] |= std::uint32_t{1} << j;
  std::uint32_t inc = 0;
  std::uint32_t exc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (include.test(verts[i])) inc |= std::uint32_t{1} << i;
    if (exclude.test(verts[i])) exc |= std::uint32_t{1} << i;
  }
  // an include vertex outside the domain can never be met
  if (!include.isSubsetOf(domain)) return {};

  const std::uint32_t full = n == 32 ? ~0U : (std::uint32_t{1} << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint32_t> nbrs(total, 0);
  std::vector<Bitset> out;
  for (std::uint64_t m = 1; m < total; ++m) {
    const std::uint32_t low = static_cast<std::uint32_t>(m & (~m + 1));
    nbrs[m] = nbrs[m ^ low] | adj[static_cast<std::size_t>(__builtin_ctz(low))];
  }
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto s = static_cast<std::uint32_t>(m);
    if ((nbrs[m] & s) != 0) continue;
    if ((nbrs[m] | s) != full) continue;
    if ((s & inc) != inc || (s & exc) != 0) continue;
    Bitset b(g.order());
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1U) b.set(verts[i]);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Bitset> maximalStable(const BipartiteGraph& g) {
  return maximalStable(g, g.allVertices(), g.emptyMask(), g.emptyMask());
}

inline std::size_t count(const BipartiteGraph& g, const Bitset& domain, const Bitset& include,
                         const Bitset& exclude) {
  return maximalStable(g, domain, include, exclude).size();
}

/// Number of maximal stable sets containing each combined vertex.
inline std::vector<std::size_t> perVertex(const BipartiteGraph& g, const std::vector<Bitset>& sets) {
  std::vector<std::size_t> c(g.order(), 0);
  for (const auto& s : sets)
    for (std::size_t v = 0; v < g.order(); ++v)
      if (s.test(v)) ++c[v];
  return c;
}

/// Union of every subfamily (the empty subfamily gives ∅). |f| ≤ 20.
inline std::vector<Bitset> closure(const ucc::SetFamily& f) {
  const std::size_t m = f.size();
  std::set<Bitset> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    Bitset u(f.universeSize());
    for (std::size_t i = 0; i < m; ++i)
      if ((pick >> i) & 1U) u |= f.sets()[i];
    out.insert(u);
  }
  return {out.begin(), out.end()};
}

/// Abundant elements of an explicit family of sets.
inline std::vector<std::size_t> abundant(const std::vector<Bitset>& sets, std::size_t universe) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < universe; ++e) {
    std::size_t freq = 0;
    for (const auto& s : sets) freq += s.test(e) ? 1 : 0;
    if (2 * freq >= sets.size()) out.push_back(e);
  }
  return out;
}

}  // namespace oracle
