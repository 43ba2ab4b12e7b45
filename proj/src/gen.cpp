#include "ucc/gen.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <set>

#include "json.hpp"

#include "ucc/error.hpp"
#include "ucc/io.hpp"

namespace ucc {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t SplitMix64::nth(std::uint64_t seed, std::uint64_t i) { return mix(seed + (i + 1) * kGamma); }

// ---------------------------------------------------------------------------

namespace {

struct KindInfo {
  GenKind kind;
  const char* name;
  std::vector<std::pair<std::string, std::int64_t>> params;
};

// nxmin/nymin = 0 means "same as nx/ny"; pmin = -1 means "same as p".
const std::vector<KindInfo>& kinds() {
  static const std::vector<KindInfo> table = {
      {GenKind::RandomBipartite, "randomBipartite",
       {{"nx", 4}, {"ny", 4}, {"nxmin", 0}, {"nymin", 0}, {"p", 500}, {"pmin", -1}, {"count", 1}}},
      {GenKind::Star, "star", {{"k", 3}}},
      {GenKind::Path, "path", {{"n", 5}}},
      {GenKind::EvenCycle, "evenCycle", {{"n", 6}}},
      {GenKind::PendantSaturated, "pendantSaturated", {{"nx", 3}, {"ny", 2}, {"p", 500}, {"pendants", 2}, {"count", 1}}},
      {GenKind::TwoLayeredGadget, "twoLayeredGadget",
       {{"common", 2}, {"ny", 3}, {"extrax", 2}, {"extray", 1}, {"p", 400}, {"count", 1}}},
      {GenKind::MergedGadgets, "mergedGadgets",
       {{"parts", 3}, {"ny", 2}, {"extrax", 1}, {"extray", 1}, {"p", 400}, {"split", 1}, {"count", 1}}},
      {GenKind::RandomFamily, "randomFamily", {{"universe", 5}, {"sets", 4}, {"p", 400}, {"nonempty", 1}, {"count", 1}}},
      {GenKind::ExhaustiveBipartite, "exhaustiveBipartite", {{"nx", 2}, {"ny", 2}, {"upto", 0}, {"dedup", 1}}},
      {GenKind::GadgetDecomposition, "gadgetDecomposition",
       {{"common", 2}, {"ny", 2}, {"extrax", 1}, {"extray", 1}, {"p", 400}, {"count", 1}}},
  };
  return table;
}

const KindInfo& info(GenKind k) {
  for (const auto& i : kinds())
    if (i.kind == k) return i;
  throw Error(ErrorKind::InvalidParams, "unregistered generator kind");
}

[[noreturn]] void invalid(const GenSpec& spec, const std::string& what) {
  throw Error(ErrorKind::InvalidParams, std::string(toString(spec.kind)) + ": " + what);
}

void requireRange(const GenSpec& spec, const char* name, std::int64_t lo, std::int64_t hi) {
  const auto v = spec.param(name);
  if (v < lo || v > hi)
    invalid(spec, std::string(name) + "=" + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
}

}  // namespace

std::string_view toString(GenKind k) { return info(k).name; }

GenKind parseGenKind(std::string_view name) {
  for (const auto& i : kinds())
    if (name == i.name) return i.kind;
  throw Error(ErrorKind::InvalidParams, "unknown generator kind \"" + std::string(name) + "\"");
}

std::vector<GenKind> allGenKinds() {
  std::vector<GenKind> out;
  for (const auto& i : kinds()) out.push_back(i.kind);
  return out;
}

const std::vector<std::pair<std::string, std::int64_t>>& genParams(GenKind k) { return info(k).params; }

std::int64_t GenSpec::param(const std::string& name) const {
  if (auto it = params.find(name); it != params.end()) return it->second;
  for (const auto& [key, value] : genParams(kind))
    if (key == name) return value;
  throw Error(ErrorKind::InvalidParams, std::string(ucc::toString(kind)) + " has no parameter \"" + name + "\"");
}

void GenSpec::validate() const {
  const auto& known = genParams(kind);
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::none_of(known.begin(), known.end(), [&](const auto& p) { return p.first == key; }))
      invalid(*this, "unknown parameter \"" + key + "\"");
  }
  constexpr std::int64_t kMany = 1 << 24;
  switch (kind) {
    case GenKind::RandomBipartite:
      requireRange(*this, "nx", 0, 128);
      requireRange(*this, "ny", 0, 128);
      requireRange(*this, "nxmin", 0, param("nx"));
      requireRange(*this, "nymin", 0, param("ny"));
      requireRange(*this, "p", 0, 1000);
      requireRange(*this, "pmin", -1, param("p"));
      requireRange(*this, "count", 0, kMany);
      break;
    case GenKind::Star:
      requireRange(*this, "k", 0, 255);
      break;
    case GenKind::Path:
      requireRange(*this, "n", 1, 256);
      break;
    case GenKind::EvenCycle:
      requireRange(*this, "n", 4, 256);
      if (param("n") % 2 != 0) invalid(*this, "n must be even");
      break;
    case GenKind::PendantSaturated:
      requireRange(*this, "nx", 1, 64);
      requireRange(*this, "ny", 0, 64);
      requireRange(*this, "p", 0, 1000);
      requireRange(*this, "pendants", 1, 2);
      requireRange(*this, "count", 0, kMany);
      break;
    case GenKind::TwoLayeredGadget:
    case GenKind::GadgetDecomposition:
      requireRange(*this, "common", 1, 16);
      requireRange(*this, "ny", 1, 32);
      requireRange(*this, "extrax", 0, 32);
      requireRange(*this, "extray", 0, 32);
      requireRange(*this, "p", 0, 1000);
      requireRange(*this, "count", 0, kMany);
      break;
    case GenKind::MergedGadgets:
      requireRange(*this, "parts", 1, 8);
      requireRange(*this, "ny", 1, 16);
      requireRange(*this, "extrax", 0, 16);
      requireRange(*this, "extray", 0, 16);
      requireRange(*this, "p", 0, 1000);
      requireRange(*this, "split", 0, param("parts"));
      requireRange(*this, "count", 0, kMany);
      break;
    case GenKind::RandomFamily:
      requireRange(*this, "universe", 0, 256);
      requireRange(*this, "sets", 0, 4096);
      requireRange(*this, "p", 0, 1000);
      requireRange(*this, "nonempty", 0, 1);
      requireRange(*this, "count", 0, kMany);
      if (param("nonempty") == 1 && param("universe") == 0 && param("sets") > 0)
        invalid(*this, "nonempty sets need a nonempty universe");
      break;
    case GenKind::ExhaustiveBipartite:
      requireRange(*this, "nx", 1, 24);
      requireRange(*this, "ny", 1, 24);
      requireRange(*this, "upto", 0, 1);
      requireRange(*this, "dedup", 0, 1);
      if (param("nx") * param("ny") > 24) invalid(*this, "nx*ny must be at most 24");
      break;
  }
}

std::string GenSpec::toString() const {
  std::string out = std::string(ucc::toString(kind)) + "(";
  for (const auto& [key, value] : genParams(kind)) out += key + "=" + std::to_string(param(key)) + ",";
  out += "seed=" + std::to_string(seed) + ")";
  return out;
}

GenSpec GenSpec::parse(std::string_view text) {
  GenSpec spec;
  const auto open = text.find('(');
  spec.kind = parseGenKind(text.substr(0, open));
  if (open == std::string_view::npos) return spec;
  if (text.back() != ')') throw Error(ErrorKind::InvalidParams, "generator spec must end with ')'");
  auto body = text.substr(open + 1, text.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::InvalidParams, "expected key=value, got \"" + std::string(item) + "\"");
    const auto key = std::string(item.substr(0, eq));
    const auto val = item.substr(eq + 1);
    if (key == "seed") {
      const auto r = std::from_chars(val.data(), val.data() + val.size(), spec.seed);
      if (r.ec != std::errc() || r.ptr != val.data() + val.size())
        throw Error(ErrorKind::InvalidParams, "bad seed \"" + std::string(val) + "\"");
      continue;
    }
    std::int64_t v = 0;
    const auto r = std::from_chars(val.data(), val.data() + val.size(), v);
    if (r.ec != std::errc() || r.ptr != val.data() + val.size())
      throw Error(ErrorKind::InvalidParams, "bad value for " + key + ": \"" + std::string(val) + "\"");
    spec.params[key] = v;
  }
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------

namespace {

BipartiteGraph starGraph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < k; ++y) edges.push_back({0, y});
  return BipartiteGraph::build(1, k, edges);
}

// vertex i goes to X:i/2 for even i and Y:i/2 for odd i
BipartiteGraph pathGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back(i % 2 == 0 ? Edge{i / 2, i / 2} : Edge{(i + 1) / 2, i / 2});
  return BipartiteGraph::build((n + 1) / 2, n / 2, edges);
}

BipartiteGraph cycleGraph(std::size_t n) {
  const std::size_t half = n / 2;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < half; ++i) {
    edges.push_back({i, i});
    edges.push_back({(i + 1) % half, i});
  }
  return BipartiteGraph::build(half, half, edges);
}

BipartiteGraph randomBipartite(const GenSpec& spec, SplitMix64& rng) {
  auto range = [&](const char* lo, const char* hi) {
    const auto top = spec.param(hi);
    const auto bottom = spec.param(lo) == 0 ? top : spec.param(lo);
    return static_cast<std::size_t>(rng.between(bottom, top));
  };
  const std::size_t nx = range("nxmin", "nx");
  const std::size_t ny = range("nymin", "ny");
  const auto p = spec.param("pmin") < 0 ? spec.param("p") : rng.between(spec.param("pmin"), spec.param("p"));
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (rng.chance(p)) edges.push_back({x, y});
  return BipartiteGraph::build(nx, ny, edges);
}

// core X × Y at density p; each core X gains 1..pendants fresh pendant Y
// vertices; core Y vertices left isolated get one core neighbor.
BipartiteGraph pendantSaturated(const GenSpec& spec, SplitMix64& rng) {
  const auto nx = static_cast<std::size_t>(spec.param("nx"));
  const auto ny = static_cast<std::size_t>(spec.param("ny"));
  const auto p = spec.param("p");
  std::vector<Edge> edges;
  std::vector<bool> covered(ny, false);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (rng.chance(p)) {
        edges.push_back({x, y});
        covered[y] = true;
      }
  for (std::size_t y = 0; y < ny; ++y)
    if (!covered[y]) edges.push_back({static_cast<std::size_t>(rng.below(nx)), y});
  std::size_t nextY = ny;
  for (std::size_t x = 0; x < nx; ++x) {
    const auto k = rng.between(1, spec.param("pendants"));
    for (std::int64_t i = 0; i < k; ++i) edges.push_back({x, nextY++});
  }
  return BipartiteGraph::build(nx, nextY, edges);
}

struct GadgetShape {
  std::size_t common;
  std::size_t ny;
  std::size_t extraX;
  std::size_t extraY;
  std::int64_t p;
};

GadgetShape drawShape(const GenSpec& spec, std::size_t common, SplitMix64& rng) {
  GadgetShape s{common, static_cast<std::size_t>(rng.between(1, spec.param("ny"))),
                static_cast<std::size_t>(rng.between(0, spec.param("extrax"))),
                static_cast<std::size_t>(rng.between(0, spec.param("extray"))), spec.param("p")};
  if (s.extraX == 0) s.extraY = 0;
  return s;
}

// X: common 0..m-1, witnesses m..m+ny-1, extras after. Y: neighbors of the
// common set 0..ny-1, extras after. Witnesses stay pendant and extra Y
// vertices only see extra X vertices, so X:0..m-1 are 2-layered through
// witnesses outside the common set.
BipartiteGraph twoLayeredGadget(const GadgetShape& s, SplitMix64& rng) {
  std::vector<Edge> edges;
  std::vector<bool> commonCovered(s.common, false);
  for (std::size_t y = 0; y < s.ny; ++y) {
    bool any = false;
    for (std::size_t m = 0; m < s.common; ++m)
      if (rng.chance(s.p)) {
        edges.push_back({m, y});
        commonCovered[m] = any = true;
      }
    if (!any) {
      const auto m = static_cast<std::size_t>(rng.below(s.common));
      edges.push_back({m, y});
      commonCovered[m] = true;
    }
  }
  for (std::size_t m = 0; m < s.common; ++m)
    if (!commonCovered[m]) edges.push_back({m, static_cast<std::size_t>(rng.below(s.ny))});
  for (std::size_t y = 0; y < s.ny; ++y) edges.push_back({s.common + y, y});

  const std::size_t firstExtraX = s.common + s.ny;
  const std::size_t nY = s.ny + s.extraY;
  std::vector<bool> extraYCovered(s.extraY, false);
  for (std::size_t i = 0; i < s.extraX; ++i) {
    const std::size_t x = firstExtraX + i;
    bool any = false;
    for (std::size_t y = 0; y < nY; ++y)
      if (rng.chance(s.p)) {
        edges.push_back({x, y});
        any = true;
        if (y >= s.ny) extraYCovered[y - s.ny] = true;
      }
    if (!any) edges.push_back({x, static_cast<std::size_t>(rng.below(s.ny))});
  }
  for (std::size_t j = 0; j < s.extraY; ++j)
    if (!extraYCovered[j]) edges.push_back({firstExtraX + static_cast<std::size_t>(rng.below(s.extraX)), s.ny + j});
  return BipartiteGraph::build(firstExtraX + s.extraX, nY, edges);
}

std::vector<VertexRef> commonRefs(std::size_t m) {
  std::vector<VertexRef> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back({Side::X, i});
  return out;
}

SetFamily randomFamily(const GenSpec& spec, SplitMix64& rng) {
  const auto n = static_cast<std::size_t>(spec.param("universe"));
  const auto count = static_cast<std::size_t>(spec.param("sets"));
  std::vector<MemberSet> sets;
  for (std::size_t i = 0; i < count; ++i) {
    MemberSet s(n);
    for (std::size_t e = 0; e < n; ++e)
      if (rng.chance(spec.param("p"))) s.set(e);
    if (spec.param("nonempty") == 1 && s.none()) s.set(static_cast<std::size_t>(rng.below(n)));
    sets.push_back(s);
  }
  return SetFamily(n, std::move(sets));
}

Generated randomInstance(const GenSpec& spec, std::size_t index) {
  SplitMix64 rng(SplitMix64::nth(spec.seed, index));
  switch (spec.kind) {
    case GenKind::RandomBipartite:
      return {randomBipartite(spec, rng), {}};
    case GenKind::PendantSaturated:
      return {pendantSaturated(spec, rng), {}};
    case GenKind::TwoLayeredGadget: {
      const auto m = static_cast<std::size_t>(spec.param("common"));
      return {twoLayeredGadget(drawShape(spec, m, rng), rng), commonRefs(m)};
    }
    case GenKind::GadgetDecomposition: {
      const auto m = static_cast<std::size_t>(spec.param("common"));
      const auto c = twoLayeredGadget(drawShape(spec, m, rng), rng);
      const auto h = twoLayeredGadget(drawShape(spec, m, rng), rng);
      return {glueAtCommon(c, h, m), commonRefs(m)};
    }
    case GenKind::MergedGadgets: {
      std::vector<MergePart> parts;
      for (std::int64_t i = 0; i < spec.param("parts"); ++i)
        parts.push_back({twoLayeredGadget(drawShape(spec, 1, rng), rng), {Side::X, 0}});
      const auto merged = mergeGraphs(parts);
      const auto d = mergeDecomposition(merged, static_cast<std::size_t>(spec.param("split")));
      return {EdgeSplit{merged.graph, d.edgesC, d.edgesH}, {merged.merged}};
    }
    case GenKind::RandomFamily:
      return {randomFamily(spec, rng), {}};
    default:
      break;
  }
  throw Error(ErrorKind::InvalidParams, "not a random kind");
}

bool isRandomKind(GenKind k) {
  return k == GenKind::RandomBipartite || k == GenKind::PendantSaturated || k == GenKind::TwoLayeredGadget ||
         k == GenKind::GadgetDecomposition || k == GenKind::MergedGadgets || k == GenKind::RandomFamily;
}

std::vector<Generated> exhaustiveInstances(const GenSpec& spec, std::optional<std::size_t> stopAt) {
  std::vector<Generated> out;
  std::size_t seen = 0;
  forEachExhaustive(static_cast<std::size_t>(spec.param("nx")), static_cast<std::size_t>(spec.param("ny")),
                    spec.param("upto") == 1, spec.param("dedup") == 1, [&](const BipartiteGraph& g) {
                      if (!stopAt || seen == *stopAt) out.push_back({g, {}});
                      ++seen;
                    });
  return out;
}

}  // namespace

std::vector<Generated> generate(const GenSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case GenKind::Star:
      return {{starGraph(static_cast<std::size_t>(spec.param("k"))), {{Side::X, 0}}}};
    case GenKind::Path:
      return {{pathGraph(static_cast<std::size_t>(spec.param("n"))), {}}};
    case GenKind::EvenCycle:
      return {{cycleGraph(static_cast<std::size_t>(spec.param("n"))), {}}};
    case GenKind::ExhaustiveBipartite:
      return exhaustiveInstances(spec, std::nullopt);
    default:
      break;
  }
  std::vector<Generated> out;
  const auto count = static_cast<std::size_t>(spec.param("count"));
  for (std::size_t i = 0; i < count; ++i) out.push_back(randomInstance(spec, i));
  return out;
}

std::size_t instanceCount(const GenSpec& spec) {
  spec.validate();
  if (isRandomKind(spec.kind)) return static_cast<std::size_t>(spec.param("count"));
  if (spec.kind == GenKind::ExhaustiveBipartite)
    return forEachExhaustive(static_cast<std::size_t>(spec.param("nx")), static_cast<std::size_t>(spec.param("ny")),
                             spec.param("upto") == 1, spec.param("dedup") == 1, [](const BipartiteGraph&) {});
  return 1;
}

Generated generateAt(const GenSpec& spec, std::size_t index) {
  spec.validate();
  auto outOfRange = [&] {
    return Error(ErrorKind::InvalidParams, "instance " + std::to_string(index) + " outside " + spec.toString());
  };
  if (isRandomKind(spec.kind)) {
    if (index >= static_cast<std::size_t>(spec.param("count"))) throw outOfRange();
    return randomInstance(spec, index);
  }
  auto all = spec.kind == GenKind::ExhaustiveBipartite ? exhaustiveInstances(spec, index) : generate(spec);
  if (spec.kind != GenKind::ExhaustiveBipartite) {
    if (index >= all.size()) throw outOfRange();
    return all[index];
  }
  if (all.empty()) throw outOfRange();
  return all.front();
}

// ---------------------------------------------------------------------------

std::vector<Bitset> adjacencySignature(const BipartiteGraph& g) {
  std::vector<std::size_t> order(g.nX());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.neighborsOfX(a).count() > g.neighborsOfX(b).count();
  });
  std::vector<std::size_t> label(g.nX());
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = i;
  std::vector<Bitset> sig;
  for (std::size_t y = 0; y < g.nY(); ++y) {
    Bitset m(g.nX());
    g.neighborsOfY(y).forEach([&](std::size_t x) { m.set(label[x]); });
    sig.push_back(m);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::size_t forEachExhaustive(std::size_t nX, std::size_t nY, bool upto, bool dedup,
                              const std::function<void(const BipartiteGraph&)>& visit) {
  if (nX == 0 || nY == 0 || nX * nY > 24)
    throw Error(ErrorKind::InvalidParams, "exhaustive stream needs 1 <= nx*ny <= 24");
  std::size_t visited = 0;
  for (std::size_t a = upto ? 1 : nX; a <= nX; ++a) {
    for (std::size_t b = upto ? 1 : nY; b <= nY; ++b) {
      std::set<std::vector<Bitset>> seen;
      const std::uint64_t total = std::uint64_t{1} << (a * b);
      std::vector<Edge> edges;
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t k = 0; k < a * b; ++k)
          if ((mask >> k) & 1U) edges.push_back({k / b, k % b});
        const auto g = BipartiteGraph::build(a, b, edges);
        if (dedup && !seen.insert(adjacencySignature(g)).second) continue;
        visit(g);
        ++visited;
      }
    }
  }
  return visited;
}

BipartiteGraph gadgetSideGraph(const GadgetSide& side) {
  const std::size_t k = side.neighbors.size();
  const std::size_t nX = side.common + k + (side.extra != 0 ? 1 : 0);
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < k; ++y) {
    for (std::size_t m = 0; m < side.common; ++m)
      if ((side.neighbors[y] >> m) & 1U) edges.push_back({m, y});
    edges.push_back({side.common + y, y});
    if ((side.extra >> y) & 1U) edges.push_back({side.common + k, y});
  }
  return BipartiteGraph::build(nX, k, edges);
}

EdgeSplit glueAtCommon(const BipartiteGraph& c, const BipartiteGraph& h, std::size_t common) {
  if (common > c.nX() || common > h.nX()) throw Error(ErrorKind::InvalidParams, "common set larger than a part");
  EdgeSplit out;
  const std::size_t nX = c.nX() + h.nX() - common;
  const std::size_t nY = c.nY() + h.nY();
  for (const auto& e : c.edges()) out.edgesC.push_back(e);
  for (const auto& e : h.edges())
    out.edgesH.push_back({e.x < common ? e.x : c.nX() + e.x - common, c.nY() + e.y});
  std::vector<Edge> all = out.edgesC;
  all.insert(all.end(), out.edgesH.begin(), out.edgesH.end());
  out.graph = BipartiteGraph::build(nX, nY, all);
  return out;
}

std::size_t forEachGadgetDecomposition(std::size_t maxCommon, std::size_t maxNeighbors,
                                       const std::function<void(const EdgeSplit&)>& visit) {
  if (maxCommon > 8 || maxNeighbors > 6)
    throw Error(ErrorKind::InvalidParams, "gadget stream bounded by 8 common vertices and 6 neighbors");
  std::size_t visited = 0;
  for (std::size_t m = 1; m <= maxCommon; ++m) {
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<BipartiteGraph> sides;
    std::vector<std::uint32_t> seq;
    // nondecreasing sequences of nonempty subsets covering the common set
    std::function<void(std::uint32_t, std::uint32_t)> extend = [&](std::uint32_t from, std::uint32_t covered) {
      if (!seq.empty() && covered == full) {
        const std::uint32_t extras = std::uint32_t{1} << seq.size();
        for (std::uint32_t t = 0; t < extras; ++t) sides.push_back(gadgetSideGraph({m, seq, t}));
      }
      if (seq.size() == maxNeighbors) return;
      for (std::uint32_t s = from; s <= full; ++s) {
        seq.push_back(s);
        extend(s, covered | s);
        seq.pop_back();
      }
    };
    extend(1, 0);
    for (const auto& c : sides)
      for (const auto& h : sides) {
        visit(glueAtCommon(c, h, m));
        ++visited;
      }
  }
  return visited;
}

// ---------------------------------------------------------------------------

std::vector<ManifestEntry> corpusExport(const std::vector<GenSpec>& specs, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + directory.string() + ": " + ec.message());

  std::vector<ManifestEntry> entries;
  nlohmann::json manifest = nlohmann::json::array();
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const auto items = generate(specs[s]);
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::string bytes;
      const char* ext = ".graph";
      if (const auto* g = items[i].graph()) {
        bytes = writeGraph(*g);
      } else if (const auto* f = items[i].family()) {
        bytes = writeFamily(*f);
        ext = ".json";
      } else {
        bytes = writeDecomposition(*items[i].split());
        ext = ".dcmp";
      }
      char name[96];
      std::snprintf(name, sizeof name, "%03zu-%s-%05zu%s", s, std::string(toString(specs[s].kind)).c_str(), i, ext);
      writeFile((directory / name).string(), bytes);
      ManifestEntry e{specs[s].toString(), i, name, checksum(bytes)};
      manifest.push_back({{"spec", e.spec}, {"index", e.index}, {"file", e.file}, {"checksum", e.checksum}});
      entries.push_back(std::move(e));
    }
  }
  writeFile((directory / "manifest.json").string(), manifest.dump(2) + "\n");
  return entries;
}

}  // namespace ucc
