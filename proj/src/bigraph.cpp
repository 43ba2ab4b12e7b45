#include "ucc/bigraph.hpp"

#include <algorithm>
#include <deque>

#include "ucc/error.hpp"

namespace ucc {

std::string_view toString(Side s) { return s == Side::X ? "X" : "Y"; }

std::string toString(const VertexRef& v) {
  return std::string(toString(v.side)) + ":" + std::to_string(v.index);
}

BipartiteGraph::BipartiteGraph(std::size_t nX, std::size_t nY) : nX_(nX), nY_(nY) {
  if (nX > Bitset::kMaxBits || nY > Bitset::kMaxBits || nX + nY > Bitset::kMaxBits)
    throw Error(ErrorKind::CapacityExceeded, "graph with " + std::to_string(nX + nY) +
                                                 " vertices exceeds " +
                                                 std::to_string(Bitset::kMaxBits));
  adjXY_.assign(nX, Bitset(nY));
  adjYX_.assign(nY, Bitset(nX));
  adj_.assign(nX + nY, Bitset(nX + nY));
}

BipartiteGraph BipartiteGraph::build(std::size_t nX, std::size_t nY, const std::vector<Edge>& edges) {
  BipartiteGraph g(nX, nY);
  for (const auto& e : edges) {
    if (e.x >= nX || e.y >= nY)
      throw Error(ErrorKind::IndexOutOfRange, "edge (" + std::to_string(e.x) + "," +
                                                  std::to_string(e.y) + ") outside " +
                                                  std::to_string(nX) + "x" + std::to_string(nY));
    g.adjXY_[e.x].set(e.y);
    g.adjYX_[e.y].set(e.x);
    g.adj_[e.x].set(nX + e.y);
    g.adj_[nX + e.y].set(e.x);
  }
  return g;
}

const Bitset& BipartiteGraph::neighbors(const VertexRef& v) const {
  return v.side == Side::X ? adjXY_[v.index] : adjYX_[v.index];
}

std::size_t BipartiteGraph::edgeCount() const {
  std::size_t n = 0;
  for (const auto& row : adjXY_) n += row.count();
  return n;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t x = 0; x < nX_; ++x) adjXY_[x].forEach([&](std::size_t y) { out.push_back({x, y}); });
  return out;
}

void BipartiteGraph::checkVertex(const VertexRef& v) const {
  if (v.index >= size(v.side))
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + ucc::toString(v) + " outside class of size " +
                                                std::to_string(size(v.side)));
}

Bitset BipartiteGraph::sideMask(Side s) const {
  Bitset m(order());
  const std::size_t begin = s == Side::X ? 0 : nX_;
  for (std::size_t i = 0; i < size(s); ++i) m.set(begin + i);
  return m;
}

Bitset BipartiteGraph::neighborhood(const Bitset& mask, const Bitset& domain) const {
  Bitset n(order());
  mask.forEach([&](std::size_t v) { n |= adj_[v]; });
  return n & domain;
}

BipartiteGraph BipartiteGraph::transposed() const {
  std::vector<Edge> flipped;
  for (const auto& e : edges()) flipped.push_back({e.y, e.x});
  return build(nY_, nX_, flipped);
}

StableSet splitMask(const BipartiteGraph& g, const Bitset& mask) {
  StableSet s{Bitset(g.nX()), Bitset(g.nY())};
  mask.forEach([&](std::size_t id) {
    if (id < g.nX())
      s.x.set(id);
    else
      s.y.set(id - g.nX());
  });
  return s;
}

Bitset joinMask(const BipartiteGraph& g, const StableSet& s) {
  Bitset m(g.order());
  s.x.forEach([&](std::size_t i) { m.set(i); });
  s.y.forEach([&](std::size_t i) { m.set(g.nX() + i); });
  return m;
}

bool isStable(const BipartiteGraph& g, const StableSet& s) {
  bool stable = true;
  s.x.forEach([&](std::size_t x) { stable = stable && !g.neighborsOfX(x).intersects(s.y); });
  return stable;
}

namespace {

// Pivoting Bron-Kerbosch on the complement graph: cliques of the complement
// are exactly the stable sets of g. `candidates` may still join the current
// set; `pending` are undominated vertices that must end up with a neighbor
// in the set.
class MssEnumerator {
 public:
  MssEnumerator(const BipartiteGraph& g, const Bitset& domain, const EnumerationLimits& limits,
                const std::function<void(const Bitset&)>* visit)
      : g_(g), domain_(domain), limits_(limits), visit_(visit) {}

  std::uint64_t run(const Bitset& include, const Bitset& exclude) {
    if (!include.isSubsetOf(domain_) || include.intersects(exclude)) return 0;
    const Bitset blocked = g_.neighborhood(include, domain_);
    if (blocked.intersects(include)) return 0;
    Bitset candidates = domain_ - include - blocked - exclude;
    Bitset pending = (exclude & domain_) - blocked;
    Bitset current = include;
    expand(current, candidates, pending);
    return found_;
  }

 private:
  void expand(Bitset& current, Bitset candidates, Bitset pending) {
    if (candidates.none()) {
      if (pending.none()) emit(current);
      return;
    }

    bool hopeless = false;
    pending.forEach([&](std::size_t v) { hopeless = hopeless || !g_.adjacency(v).intersects(candidates); });
    if (hopeless) return;

    // pivot minimizing the branching set candidates ∩ (N(u) ∪ {u})
    Bitset best;
    std::size_t bestSize = g_.order() + 1;
    auto consider = [&](std::size_t u) {
      Bitset branch = g_.adjacency(u) & candidates;
      if (candidates.test(u)) branch.set(u);
      const std::size_t size = branch.count();
      if (size < bestSize) {
        bestSize = size;
        best = branch;
      }
    };
    candidates.forEach(consider);
    pending.forEach(consider);

    best.forEach([&](std::size_t v) {
      Bitset keep = domain_ - g_.adjacency(v);
      keep.reset(v);
      current.set(v);
      expand(current, candidates & keep, pending & keep);
      current.reset(v);
      candidates.reset(v);
      pending.set(v);
    });
  }

  void emit(const Bitset& set) {
    if (++found_ > limits_.outputCap)
      throw Error(ErrorKind::CapacityExceeded,
                  "more than " + std::to_string(limits_.outputCap) + " maximal stable sets");
    if (visit_ != nullptr) (*visit_)(set);
  }

  const BipartiteGraph& g_;
  Bitset domain_;
  const EnumerationLimits& limits_;
  const std::function<void(const Bitset&)>* visit_;
  std::uint64_t found_ = 0;
};

std::uint64_t enumerateImpl(const BipartiteGraph& g, const Bitset& domain, const Bitset& include,
                            const Bitset& exclude, const EnumerationLimits& limits,
                            const std::function<void(const Bitset&)>* visit) {
  if (domain.width() != g.order() || include.width() != g.order() || exclude.width() != g.order())
    throw Error(ErrorKind::InvalidInstance, "vertex mask width differs from graph order");
  if (domain.count() > limits.vertexCap)
    throw Error(ErrorKind::CapacityExceeded, std::to_string(domain.count()) +
                                                 " vertices exceed the enumeration cap of " +
                                                 std::to_string(limits.vertexCap));
  return MssEnumerator(g, domain, limits, visit).run(include, exclude);
}

Bitset maskOf(const BipartiteGraph& g, const std::vector<VertexRef>& vs) {
  Bitset m = g.emptyMask();
  for (const auto& v : vs) {
    g.checkVertex(v);
    m.set(g.id(v));
  }
  return m;
}

}  // namespace

std::uint64_t forEachMaximalStable(const BipartiteGraph& g, const Bitset& domain,
                                   const Bitset& include, const Bitset& exclude,
                                   const EnumerationLimits& limits,
                                   const std::function<void(const Bitset&)>& visit) {
  return enumerateImpl(g, domain, include, exclude, limits, &visit);
}

MssCount countMaximalStable(const BipartiteGraph& g, const Bitset& domain, const Bitset& include,
                            const Bitset& exclude, const EnumerationLimits& limits) {
  return MssCount(enumerateImpl(g, domain, include, exclude, limits, nullptr));
}

std::vector<Bitset> collectMaximalStable(const BipartiteGraph& g, const Bitset& domain,
                                         const Bitset& include, const Bitset& exclude,
                                         const EnumerationLimits& limits) {
  std::vector<Bitset> out;
  const std::function<void(const Bitset&)> visit = [&](const Bitset& s) { out.push_back(s); };
  enumerateImpl(g, domain, include, exclude, limits, &visit);
  std::sort(out.begin(), out.end());
  return out;
}

StableSetCollection enumerateMss(const BipartiteGraph& g, const EnumerationLimits& limits) {
  StableSetCollection c;
  const std::function<void(const Bitset&)> visit = [&](const Bitset& s) {
    c.sets.push_back(splitMask(g, s));
  };
  enumerateImpl(g, g.allVertices(), g.emptyMask(), g.emptyMask(), limits, &visit);
  std::sort(c.sets.begin(), c.sets.end());
  return c;
}

MssCount wTotal(const BipartiteGraph& g, const EnumerationLimits& limits) {
  return countMaximalStable(g, g.allVertices(), g.emptyMask(), g.emptyMask(), limits);
}

MssCount wOf(const BipartiteGraph& g, const VertexRef& v, const EnumerationLimits& limits) {
  return countMaximalStable(g, g.allVertices(), maskOf(g, {v}), g.emptyMask(), limits);
}

MssCount wConstrained(const BipartiteGraph& g, const CountConstraint& c,
                      const EnumerationLimits& limits) {
  const Bitset include = maskOf(g, c.include);
  const Bitset exclude = maskOf(g, c.exclude);
  if (include.intersects(exclude))
    throw Error(ErrorKind::ConstraintConflict,
                "vertices " + (include & exclude).toString() + " both included and excluded");
  return countMaximalStable(g, g.allVertices(), include, exclude, limits);
}

MssProfile mssProfile(const BipartiteGraph& g, const Bitset& domain, const EnumerationLimits& limits) {
  std::vector<std::uint64_t> tally(g.order(), 0);
  const std::function<void(const Bitset&)> visit = [&](const Bitset& s) {
    s.forEach([&](std::size_t v) { ++tally[v]; });
  };
  const auto total = enumerateImpl(g, domain, g.emptyMask(), g.emptyMask(), limits, &visit);
  MssProfile p{MssCount(total), {}};
  p.perVertex.reserve(tally.size());
  for (auto t : tally) p.perVertex.emplace_back(t);
  return p;
}

MssProfile mssProfile(const BipartiteGraph& g, const EnumerationLimits& limits) {
  return mssProfile(g, g.allVertices(), limits);
}

bool isRare(const BipartiteGraph& g, const VertexRef& v, const EnumerationLimits& limits) {
  g.checkVertex(v);
  return rareCount(wOf(g, v, limits), wTotal(g, limits));
}

Bitset rareMask(const BipartiteGraph& g, const Bitset& domain, const EnumerationLimits& limits) {
  const auto p = mssProfile(g, domain, limits);
  Bitset rare = g.emptyMask();
  domain.forEach([&](std::size_t v) {
    if (rareCount(p.perVertex[v], p.total)) rare.set(v);
  });
  return rare;
}

RareVertices rareVerticesByClass(const BipartiteGraph& g, const EnumerationLimits& limits) {
  const auto s = splitMask(g, rareMask(g, g.allVertices(), limits));
  return RareVertices{s.x.indices(), s.y.indices()};
}

std::string_view toString(GraphVerdict v) {
  switch (v) {
    case GraphVerdict::Holds: return "Holds";
    case GraphVerdict::Fails: return "Fails";
    case GraphVerdict::NoEdges: return "NoEdges";
  }
  return "?";
}

GraphVerdict franklGraphVerdict(const BipartiteGraph& g, const EnumerationLimits& limits) {
  if (g.edgeCount() == 0) return GraphVerdict::NoEdges;
  const auto rare = rareVerticesByClass(g, limits);
  return !rare.x.empty() && !rare.y.empty() ? GraphVerdict::Holds : GraphVerdict::Fails;
}

std::size_t degree(const BipartiteGraph& g, const VertexRef& v) {
  g.checkVertex(v);
  return g.neighbors(v).count();
}

bool isPendant(const BipartiteGraph& g, const VertexRef& v) { return degree(g, v) == 1; }

std::vector<VertexRef> neighbors(const BipartiteGraph& g, const VertexRef& v) {
  g.checkVertex(v);
  std::vector<VertexRef> out;
  g.neighbors(v).forEach([&](std::size_t i) { out.push_back({opposite(v.side), i}); });
  return out;
}

std::size_t pendantCount(const BipartiteGraph& g) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < g.order(); ++v) n += g.adjacency(v).count() == 1 ? 1 : 0;
  return n;
}

BipartiteGraph inducedSubgraph(const BipartiteGraph& g, const Bitset& keep,
                               std::vector<std::size_t>* xToParent,
                               std::vector<std::size_t>* yToParent) {
  std::vector<std::size_t> xs;
  std::vector<std::size_t> ys;
  std::vector<std::size_t> localX(g.nX(), 0);
  std::vector<std::size_t> localY(g.nY(), 0);
  keep.forEach([&](std::size_t id) {
    if (id < g.nX()) {
      localX[id] = xs.size();
      xs.push_back(id);
    } else {
      localY[id - g.nX()] = ys.size();
      ys.push_back(id - g.nX());
    }
  });
  std::vector<Edge> edges;
  for (auto x : xs)
    g.neighborsOfX(x).forEach([&](std::size_t y) {
      if (keep.test(g.nX() + y)) edges.push_back({localX[x], localY[y]});
    });
  if (xToParent) *xToParent = xs;
  if (yToParent) *yToParent = ys;
  return BipartiteGraph::build(xs.size(), ys.size(), edges);
}

std::vector<Component> components(const BipartiteGraph& g) {
  std::vector<Component> out;
  Bitset unseen = g.allVertices();
  while (unseen.any()) {
    Bitset comp = g.emptyMask();
    std::deque<std::size_t> queue{unseen.first()};
    comp.set(queue.front());
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      (g.adjacency(v) - comp).forEach([&](std::size_t u) {
        comp.set(u);
        queue.push_back(u);
      });
    }
    unseen -= comp;
    Component c;
    c.graph = inducedSubgraph(g, comp, &c.xToParent, &c.yToParent);
    out.push_back(std::move(c));
  }
  return out;
}

MssCount wViaComponents(const BipartiteGraph& g, const EnumerationLimits& limits) {
  MssCount product = 1;
  for (const auto& c : components(g)) product *= wTotal(c.graph, limits);
  return product;
}

BipartiteGraph edgeSubgraph(const BipartiteGraph& g, const std::vector<Edge>& edges) {
  for (const auto& e : edges)
    if (e.x >= g.nX() || e.y >= g.nY() || !g.hasEdge(e.x, e.y))
      throw Error(ErrorKind::InvalidInstance, "edge (" + std::to_string(e.x) + "," +
                                                  std::to_string(e.y) + ") not in graph");
  return BipartiteGraph::build(g.nX(), g.nY(), edges);
}

BipartiteGraph disjointUnion(const BipartiteGraph& a, const BipartiteGraph& b) {
  auto edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({a.nX() + e.x, a.nY() + e.y});
  return BipartiteGraph::build(a.nX() + b.nX(), a.nY() + b.nY(), edges);
}

}  // namespace ucc
