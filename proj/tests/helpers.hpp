#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucc/bigraph.hpp"
#include "ucc/error.hpp"
#include "ucc/gen.hpp"
#include "ucc/setfam.hpp"

namespace testing {

using namespace ucc;

inline BipartiteGraph path(std::size_t n) {
  GenSpec s;
  s.kind = GenKind::Path;
  s.params = {{"n", static_cast<std::int64_t>(n)}};
  return *generate(s).front().graph();
}

inline BipartiteGraph star(std::size_t k) {
  GenSpec s;
  s.kind = GenKind::Star;
  s.params = {{"k", static_cast<std::int64_t>(k)}};
  return *generate(s).front().graph();
}

/// The 4-cycle x1 y1 x2 y2, i.e. K_{2,2}.
inline BipartiteGraph c4() { return BipartiteGraph::build(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

inline SetFamily fam(std::size_t n, const std::vector<std::vector<std::size_t>>& sets) {
  return SetFamily::fromLists(n, sets);
}

inline VertexRef X(std::size_t i) { return {Side::X, i}; }
inline VertexRef Y(std::size_t i) { return {Side::Y, i}; }

inline Bitset mask(const BipartiteGraph& g, const std::vector<VertexRef>& vs) {
  Bitset m = g.emptyMask();
  for (const auto& v : vs) m.set(g.id(v));
  return m;
}

/// Random graph with the given class sizes and edge probability in permille.
inline BipartiteGraph randomGraph(SplitMix64& rng, std::size_t nx, std::size_t ny, std::int64_t permille) {
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (rng.chance(permille)) edges.push_back({x, y});
  return BipartiteGraph::build(nx, ny, edges);
}

/// Kind of the ucc::Error thrown by f, if any.
template <class F>
std::optional<ErrorKind> thrownKind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testing
