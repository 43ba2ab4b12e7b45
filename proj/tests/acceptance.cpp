// Acceptance run: one line per criterion, nonzero exit if any fails. Every
// comparison is exact; the only tolerances are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracle.hpp"
#include "ucc/bridge.hpp"
#include "ucc/decomp.hpp"
#include "ucc/io.hpp"
#include "ucc/verify.hpp"

#ifndef UCC_CLI_PATH
#error "UCC_CLI_PATH must name the ucc binary"
#endif

using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Accumulates failures; the first few are kept for the report line.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ < 3) first += (first.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failures) + " failed: " + first};
  }
};

std::string str(const MssCount& c) { return c.str(); }

Bitset oracleRare(const BipartiteGraph& g) {
  const auto sets = oracle::maximalStable(g);
  const auto per = oracle::perVertex(g, sets);
  Bitset r = g.emptyMask();
  for (std::size_t v = 0; v < g.order(); ++v)
    if (2 * per[v] <= sets.size()) r.set(v);
  return r;
}

BipartiteGraph randomSized(SplitMix64& rng, std::size_t maxTotal) {
  const auto nx = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(maxTotal) - 1));
  const auto ny = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(maxTotal - nx)));
  return randomGraph(rng, nx, ny, rng.between(50, 950));
}

GenSpec genSpec(GenKind k, std::map<std::string, std::int64_t> params, std::uint64_t seed) {
  GenSpec s;
  s.kind = k;
  s.params = std::move(params);
  s.seed = seed;
  return s;
}

// ---------------------------------------------------------------------------

Outcome oracleEquivalence() {
  Tally t;
  std::size_t exhaustive = 0;
  forEachExhaustive(4, 4, true, false, [&](const BipartiteGraph& g) {
    ++exhaustive;
    const auto got = collectMaximalStable(g, g.allVertices(), g.emptyMask(), g.emptyMask());
    t.require(got == oracle::maximalStable(g), "exhaustive " + writeGraph(g));
  });
  SplitMix64 rng(0xA11CE);
  const std::size_t randomCount = 10000;
  for (std::size_t i = 0; i < randomCount; ++i) {
    const auto g = randomSized(rng, 20);
    const auto got = collectMaximalStable(g, g.allVertices(), g.emptyMask(), g.emptyMask());
    t.require(got == oracle::maximalStable(g), "random #" + std::to_string(i));
  }
  return t.outcome(std::to_string(exhaustive) + " exhaustive graphs up to 4x4 (65536 at 4x4) + " +
                   std::to_string(randomCount) + " random graphs with nX+nY<=20");
}

Outcome prop31Bridge() {
  Tally t;
  Prop31Options opts;
  opts.family.removeIsolated = true;
  std::size_t exhaustive = 0;
  auto check = [&](const BipartiteGraph& g, const std::string& id) {
    if (g.edgeCount() == 0) return false;
    const auto r = prop31Check(g, opts);
    t.require(r.violations.empty(), id + " rare/abundant mismatch");
    t.require(r.traceBijection, id + " trace bijection");
    return true;
  };
  forEachExhaustive(4, 4, true, false, [&](const BipartiteGraph& g) {
    if (check(g, "exhaustive")) ++exhaustive;
  });
  SplitMix64 rng(0xB41D6E);
  std::size_t random = 0;
  while (random < 1000) {
    const auto g = randomGraph(rng, static_cast<std::size_t>(rng.between(1, 8)),
                               static_cast<std::size_t>(rng.between(1, 12)), rng.between(100, 900));
    if (!check(g, "random #" + std::to_string(random))) continue;
    // independent: brute-force rareness against brute-force closure abundance
    std::vector<Bitset> nbh;
    for (std::size_t y = 0; y < g.nY(); ++y) nbh.push_back(g.neighborsOfY(y));
    const auto closure = oracle::closure(SetFamily(g.nX(), nbh));
    const auto abundant = oracle::abundant(closure, g.nX());
    const auto rare = oracleRare(g);
    for (std::size_t x = 0; x < g.nX(); ++x) {
      if (g.neighborsOfX(x).none()) continue;
      const bool isAb = std::find(abundant.begin(), abundant.end(), x) != abundant.end();
      t.require(rare.test(x) == isAb, "oracle random #" + std::to_string(random));
    }
    ++random;
  }
  return t.outcome(std::to_string(exhaustive) + " exhaustive graphs with an edge up to 4x4 + " +
                   std::to_string(random) + " random graphs with nY<=12, zero violations required");
}

Outcome componentMultiplicativity() {
  Tally t;
  SplitMix64 rng(0xC0C0);
  const std::size_t count = 10000;
  for (std::size_t i = 0; i < count; ++i) {
    BipartiteGraph g = randomGraph(rng, static_cast<std::size_t>(rng.between(1, 4)),
                                   static_cast<std::size_t>(rng.between(1, 4)), 600);
    const auto parts = rng.between(1, 2);
    for (std::int64_t p = 0; p < parts; ++p)
      g = disjointUnion(g, randomGraph(rng, static_cast<std::size_t>(rng.between(1, 4)),
                                       static_cast<std::size_t>(rng.between(1, 4)), 600));
    const auto comps = components(g);
    const std::string id = "graph #" + std::to_string(i);
    t.require(comps.size() >= 2, id + " connected");
    t.require(wViaComponents(g) == wTotal(g), id + " total");

    std::vector<MssCount> totals;
    for (const auto& c : comps) totals.push_back(wTotal(c.graph));
    const auto whole = mssProfile(g);
    const Bitset rareG = rareMask(g, g.allVertices());
    for (std::size_t k = 0; k < comps.size(); ++k) {
      MssCount others = 1;
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (j != k) others *= totals[j];
      const auto& c = comps[k];
      const auto prof = mssProfile(c.graph);
      const Bitset rareC = rareMask(c.graph, c.graph.allVertices());
      for (std::size_t x = 0; x < c.graph.nX(); ++x) {
        const auto parent = g.id({Side::X, c.xToParent[x]});
        t.require(whole.perVertex[parent] == prof.perVertex[c.graph.id({Side::X, x})] * others, id + " w(x)");
        if (rareC.test(c.graph.id({Side::X, x}))) t.require(rareG.test(parent), id + " rare lost");
      }
      for (std::size_t y = 0; y < c.graph.nY(); ++y) {
        const auto parent = g.id({Side::Y, c.yToParent[y]});
        t.require(whole.perVertex[parent] == prof.perVertex[c.graph.id({Side::Y, y})] * others, id + " w(y)");
        if (rareC.test(c.graph.id({Side::Y, y}))) t.require(rareG.test(parent), id + " rare lost");
      }
    }
  }
  return t.outcome(std::to_string(count) + " random disconnected graphs, totals and per-vertex products");
}

Outcome lemmas4and6() {
  Tally t;
  SplitMix64 rng(0xD4);
  std::size_t four = 0;
  std::size_t six = 0;
  std::size_t maxOrder = 0;
  for (std::int64_t m = 1; m <= 4; ++m) {
    const auto spec = genSpec(GenKind::TwoLayeredGadget,
                              {{"common", m}, {"ny", 4}, {"extrax", 2}, {"extray", 2}, {"count", 2500}},
                              0x6AD6E7 + static_cast<std::uint64_t>(m));
    for (const auto& gen : generate(spec)) {
      const auto& c = *gen.graph();
      maxOrder = std::max(maxOrder, c.order());
      const auto& n = gen.designated;
      const Bitset all = c.allVertices();
      const Bitset nMask = mask(c, n);

      // Lemma 4: Θ, Γ ⊆ Θᶜ, optional b outside Γ
      LemmaInstance a;
      Bitset theta = c.emptyMask();
      Bitset gamma = c.emptyMask();
      for (const auto& v : n) {
        const auto r = rng.below(3);
        if (r == 0) {
          a.theta.push_back(v);
          theta.set(c.id(v));
        } else if (r == 1) {
          a.gamma.push_back(v);
          gamma.set(c.id(v));
        }
      }
      if (rng.chance(600)) {
        std::size_t b = 0;
        do b = static_cast<std::size_t>(rng.below(c.order()));
        while (gamma.test(b));
        a.distinguished = c.ref(b);
      }
      const auto r4 = lemma4Check(c, n, a);
      const std::string id = spec.toString() + " lemma 4";
      t.require(r4.lhs == r4.rhs, id + " eq1 " + str(r4.lhs) + "!=" + str(r4.rhs));
      t.require(r4.lhsWithB == r4.rhsWithB, id + " eq2");
      const Bitset thetaC = nMask - theta;
      t.require(r4.lhs == oracle::count(c, all - gamma, theta, thetaC | c.neighborhood(gamma, all)),
                id + " lhs oracle");
      t.require(r4.rhs == oracle::count(c, all, theta | gamma, thetaC - gamma), id + " rhs oracle");
      ++four;

      // Lemma 6: Θ with a nonempty complement, then distinct Γ1, Γ2 ⊆ Θᶜ
      LemmaInstance b;
      std::vector<VertexRef> free;
      const auto skip = static_cast<std::size_t>(rng.below(n.size()));
      for (std::size_t i = 0; i < n.size(); ++i) {
        if (i != skip && rng.chance(400)) b.theta.push_back(n[i]);
        else free.push_back(n[i]);
      }
      const std::uint64_t subsets = std::uint64_t{1} << free.size();
      const auto g1 = rng.below(subsets);
      auto g2 = rng.below(subsets - 1);
      if (g2 >= g1) ++g2;
      for (std::size_t i = 0; i < free.size(); ++i) {
        if ((g1 >> i) & 1U) b.gamma.push_back(free[i]);
        if ((g2 >> i) & 1U) b.gamma2.push_back(free[i]);
      }
      if (rng.chance(600)) b.distinguished = c.ref(static_cast<std::size_t>(rng.below(c.order())));
      const auto r6 = lemma6Check(c, n, b);
      t.require(r6.passed(), spec.toString() + " lemma 6 shared " + std::to_string(r6.shared));
      ++six;
    }
  }
  return t.outcome(std::to_string(four) + " Lemma 4 and " + std::to_string(six) +
                   " Lemma 6 instances on 2-layered gadgets, |[n]|<=4, <=" + std::to_string(maxOrder) +
                   " vertices");
}

Outcome lemma7AndIdentities() {
  Tally t;
  // worked instance: P5 split at its center
  const auto p5 = validateDecomposition(path(5), {{0, 0}, {1, 0}}, {{1, 1}, {2, 1}});
  const auto w = theorem42Check(p5);
  t.require(w.wG == 4 && w.wC == 2 && w.wH == 2 && w.wG == w.wC * w.wH, "P5 w_G = 4 = 2*2");
  const auto l = lemma7Check(p5, VertexRef{Side::X, 0}, VertexRef{Side::X, 1});
  t.require(l.passed() && l.total.sum == 4 && l.perB[0].sum == 2 && l.perA[0].sum == 1, "P5 lemma 7");

  std::size_t decomps = 0;
  std::size_t sums = 0;
  std::size_t identities = 0;
  forEachGadgetDecomposition(3, 2, [&](const EdgeSplit& s) {
    const auto d = validateDecomposition(s);
    if (!theorem42Hypotheses(d).passed()) return;
    ++decomps;
    const std::string id = writeDecomposition(s);
    const auto r = lemma7Check(d);
    t.require(r.passed(), "lemma 7 " + id);
    sums += 1 + r.perA.size() + r.perB.size();
    t.require(r.total.direct == oracle::maximalStable(d.g).size(), "direct count " + id);
    const auto th = theorem42Check(d);
    for (const auto& i : th.identities) t.require(i.holds, i.identity + " " + id);
    identities += th.identities.size();
  });
  return t.outcome("P5 worked instance + " + std::to_string(decomps) + " gadget decompositions with |[n]|<=3: " +
                   std::to_string(sums) + " lemma sums, " + std::to_string(identities) + " proof identities");
}

Outcome theorem42Conclusion() {
  Tally t;
  std::size_t checked = 0;
  std::size_t oracleChecked = 0;
  auto check = [&](const Decomposition& d, const std::string& id, bool withOracle) {
    if (!theorem42Hypotheses(d).passed()) return;
    ++checked;
    const auto r = theorem42Check(d);
    t.require(r.lostRare.empty(), id + " lost rare");
    t.require(r.hCommonAsymmetry.empty(), id + " H-side common asymmetry");
    t.require(r.identitiesHold(), id + " identities");
    if (!withOracle) return;
    ++oracleChecked;
    // rare in standalone C or H implies rare in G, by brute force
    const Bitset rareG = oracleRare(d.g);
    for (const auto* part : {&d.c, &d.h}) {
      const bool isC = part == &d.c;
      const Bitset keep = isC ? d.vertexC : d.vertexH;
      std::vector<std::size_t> xs;
      std::vector<std::size_t> ys;
      const auto sub = inducedSubgraph(*part, keep, &xs, &ys);
      const Bitset rareP = oracleRare(sub);
      rareP.forEach([&](std::size_t v) {
        const auto ref = sub.ref(v);
        const std::size_t parent = ref.side == Side::X ? xs[ref.index] : ys[ref.index];
        t.require(rareG.test(d.g.id({ref.side, parent})), id + " oracle rare lost");
      });
    }
  };

  std::size_t stream = 0;
  forEachGadgetDecomposition(3, 2, [&](const EdgeSplit& s) {
    ++stream;
    check(validateDecomposition(s), "stream " + std::to_string(stream), true);
  });
  for (std::int64_t m = 1; m <= 4; ++m) {
    const auto spec = genSpec(GenKind::GadgetDecomposition, {{"common", m}, {"count", 500}}, 0x42 + m);
    std::size_t i = 0;
    for (const auto& g : generate(spec)) check(validateDecomposition(*g.split()), spec.toString() + "#" + std::to_string(i++), m <= 2);
  }
  for (std::int64_t parts : {2, 3, 4}) {
    for (std::int64_t split = 1; split < parts; ++split) {
      const auto spec =
          genSpec(GenKind::MergedGadgets, {{"parts", parts}, {"split", split}, {"count", 300}}, 0x411 + parts);
      std::size_t i = 0;
      for (const auto& g : generate(spec))
        check(validateDecomposition(*g.split()), spec.toString() + "#" + std::to_string(i++), parts <= 3);
    }
  }
  // every 2-coloring of the edges of small graphs that meets the hypotheses
  std::size_t colorings = 0;
  for (auto [nx, ny] : {std::pair{3, 3}, std::pair{4, 2}, std::pair{2, 4}}) {
    forEachExhaustive(static_cast<std::size_t>(nx), static_cast<std::size_t>(ny), true, true,
                      [&](const BipartiteGraph& g) {
                        const auto edges = g.edges();
                        for (std::uint32_t pick = 0; pick < (1U << edges.size()); ++pick) {
                          std::vector<Edge> c;
                          std::vector<Edge> h;
                          for (std::size_t e = 0; e < edges.size(); ++e) ((pick >> e) & 1U ? h : c).push_back(edges[e]);
                          ++colorings;
                          check(validateDecomposition(g, c, h), writeGraph(g), true);
                        }
                      });
  }
  // merges built directly, checked through the per-part statement
  SplitMix64 rng(0x4110);
  std::size_t merges = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<MergePart> parts;
    const auto k = rng.between(2, 4);
    for (std::int64_t p = 0; p < k; ++p) {
      const auto spec = genSpec(GenKind::TwoLayeredGadget, {{"common", 1}, {"ny", 2}, {"extrax", 1}, {"extray", 1}},
                                rng.next());
      auto g = *generate(spec).front().graph();
      if (rng.chance(300)) {
        parts.push_back({g.transposed(), {Side::Y, 0}});
      } else {
        parts.push_back({g, {Side::X, 0}});
      }
    }
    t.require(prop411Check(parts).passed(), "merge #" + std::to_string(i));
    const auto merged = mergeGraphs(parts);
    t.require(theorem42Hypotheses(mergeDecomposition(merged, 1)).passed(), "merge hypotheses #" + std::to_string(i));
    ++merges;
  }
  // set versions of the theorem and of the merge proposition
  std::size_t setChecks = 0;
  for (int i = 0; i < 500; ++i) {
    const auto shared = static_cast<std::size_t>(rng.between(0, 3));
    const auto k1 = static_cast<std::size_t>(rng.between(1, 3));
    const auto k2 = static_cast<std::size_t>(rng.between(1, 3));
    const std::size_t own1 = 3;
    const std::size_t own2 = 3;
    const std::size_t n = shared + own1 + own2 + k1 + k2;
    std::size_t fresh = shared + own1 + own2;
    auto draw = [&](std::size_t k, std::size_t ownStart, std::size_t own) {
      std::vector<MemberSet> sets;
      for (std::size_t j = 0; j < k; ++j) {
        MemberSet s(n);
        for (std::size_t e = 0; e < shared; ++e)
          if (rng.chance(400)) s.set(e);
        for (std::size_t e = ownStart; e < ownStart + own; ++e)
          if (rng.chance(400)) s.set(e);
        s.set(fresh++);  // private, so members never repeat and A-members hold a frequency-1 element
        sets.push_back(s);
      }
      return SetFamily(n, sets);
    };
    const auto f1 = draw(k1, shared, own1);
    const auto f2 = draw(k2, shared + own1, own2);
    t.require(setTheorem42Check(f1, f2).passed(), "set theorem #" + std::to_string(i));
    ++setChecks;

    // two families over disjoint blocks, glued at one element each
    std::vector<SetFamily> fams;
    std::vector<ElementId> chosen;
    const std::size_t block = 6;
    const std::size_t width = 2 * block;
    for (std::size_t b = 0; b < 2; ++b) {
      const std::size_t base = b * block;
      std::vector<MemberSet> sets;
      for (std::size_t j = 0; j < 3; ++j) {
        MemberSet s(width);
        for (std::size_t e = base; e < base + 3; ++e)
          if (rng.chance(450)) s.set(e);
        s.set(base + 3 + j);  // private element
        sets.push_back(s);
      }
      const SetFamily f(width, sets);
      fams.push_back(f);
      chosen.push_back(base + 3);  // member 0's private element
    }
    // the chosen element must have another frequency-1 element beside it
    bool ok = true;
    for (std::size_t b = 0; b < 2; ++b) {
      const Bitset once = frequencyOneElements(fams[b]);
      for (const auto& s : fams[b].sets())
        if (s.test(chosen[b])) ok = ok && (s - Bitset::fromIndices(width, {chosen[b]})).intersects(once);
    }
    if (!ok) continue;
    t.require(setProp411Check(fams, chosen).passed(), "set merge #" + std::to_string(i));
    ++setChecks;
  }
  return t.outcome(std::to_string(checked) + " hypothesis-passing decompositions (" + std::to_string(oracleChecked) +
                   " re-checked by brute force; gadget stream " + std::to_string(stream) + ", " +
                   std::to_string(colorings) + " edge 2-colorings, merges of 2-4 parts), " + std::to_string(merges) +
                   " direct merges, " + std::to_string(setChecks) + " set-version checks");
}

Outcome pendantRareness() {
  Tally t;
  SplitMix64 rng(0x48);
  // Prop 4.8: a Y-vertex v with a pendant neighbor and 2-layered gadget
  // vertices as its other neighbors
  std::size_t p48 = 0;
  while (p48 < 1000) {
    const auto m = rng.between(1, 3);
    const auto spec = genSpec(GenKind::TwoLayeredGadget, {{"common", m}, {"ny", 3}, {"extrax", 2}, {"extray", 1}},
                              rng.next());
    const auto base = *generate(spec).front().graph();
    std::vector<Edge> edges = base.edges();
    const std::size_t v = base.nY();
    const std::size_t pendant = base.nX();
    edges.push_back({pendant, v});
    for (std::int64_t i = 0; i < m; ++i)
      if (rng.chance(600)) edges.push_back({static_cast<std::size_t>(i), v});
    const auto pendants = rng.between(0, 1);
    for (std::int64_t i = 0; i < pendants; ++i) edges.push_back({pendant + 1 + static_cast<std::size_t>(i), v});
    const auto g = BipartiteGraph::build(base.nX() + 1 + static_cast<std::size_t>(pendants), base.nY() + 1, edges);
    const VertexRef vr{Side::Y, v};
    const auto r = prop48Check(g, vr);
    const std::string id = "prop 4.8 #" + std::to_string(p48);
    t.require(r.passed(), id);
    const Bitset rare = oracleRare(g);
    t.require(rare.test(g.id(vr)), id + " v oracle");
    for (const auto& u : neighbors(g, vr)) t.require(rare.test(g.id(u)), id + " N(v) oracle");
    ++p48;
  }
  // Cor 4.9: pendant-saturated graphs, every vertex rare
  std::size_t c49 = 0;
  for (std::int64_t nx = 1; nx <= 4; ++nx) {
    const auto spec = genSpec(GenKind::PendantSaturated, {{"nx", nx}, {"ny", 4}, {"pendants", 2}, {"count", 250}},
                              0x49 + static_cast<std::uint64_t>(nx));
    for (const auto& gen : generate(spec)) {
      const auto& g = *gen.graph();
      const std::string id = "cor 4.9 " + spec.toString() + "#" + std::to_string(c49);
      t.require(cor49Check(g).passed(), id);
      t.require(oracleRare(g) == g.allVertices(), id + " oracle all rare");
      ++c49;
    }
  }
  // set version of Prop 4.8: the anchor and each member meeting it get a
  // private element
  std::size_t s48 = 0;
  while (s48 < 1000) {
    const auto n = static_cast<std::size_t>(rng.between(1, 5));
    const auto k = static_cast<std::size_t>(rng.between(1, 6));
    const std::size_t width = n + k;
    std::vector<MemberSet> sets;
    for (std::size_t j = 0; j < k; ++j) {
      MemberSet s(width);
      for (std::size_t e = 0; e < n; ++e)
        if (rng.chance(400)) s.set(e);
      sets.push_back(s);
    }
    const auto anchor = static_cast<std::size_t>(rng.below(k));
    const MemberSet a = sets[anchor];
    for (std::size_t j = 0; j < k; ++j)
      if (j == anchor || sets[j].intersects(a) || rng.chance(300)) sets[j].set(n + j);
    if (sets[anchor].none()) continue;
    const SetFamily f(width, sets);
    if (f.size() != k) continue;
    const auto r = setProp48Check(f, anchor);
    const std::string id = "set prop 4.8 #" + std::to_string(s48);
    t.require(r.passed(), id);
    const auto ab = oracle::abundant(oracle::closure(f), width);
    for (auto e : f.sets()[anchor].indices())
      t.require(std::find(ab.begin(), ab.end(), e) != ab.end(), id + " oracle");
    ++s48;
  }
  // set version of Cor 4.9: every member has a private element
  std::size_t s49 = 0;
  while (s49 < 1000) {
    const auto n = static_cast<std::size_t>(rng.between(0, 5));
    const auto k = static_cast<std::size_t>(rng.between(1, 6));
    std::vector<MemberSet> sets;
    for (std::size_t j = 0; j < k; ++j) {
      MemberSet s(n + k);
      for (std::size_t e = 0; e < n; ++e)
        if (rng.chance(450)) s.set(e);
      for (auto p = rng.between(1, 2); p > 0; --p) s.set(n + j);
      sets.push_back(s);
    }
    const SetFamily f(n + k, sets);
    const auto r = setCor49Check(f);
    const std::string id = "set cor 4.9 #" + std::to_string(s49);
    t.require(r.passed() && r.verdict == UccVerdict::Holds, id);
    t.require(oracle::abundant(oracle::closure(f), n + k) == universe(f).indices(), id + " oracle");
    ++s49;
  }
  return t.outcome(std::to_string(p48) + " Prop 4.8 graphs, " + std::to_string(c49) +
                   " pendant-saturated graphs (all vertices rare), " + std::to_string(s48) + " + " +
                   std::to_string(s49) + " set-version families");
}

Outcome bulletSuites() {
  Tally t;
  const auto corpus = CorpusSpec::exhaustive(4, 4);
  std::string summary;
  for (const auto& name : suiteNames()) {
    const auto r = runSuite(name, corpus);
    t.require(r.passed(), name + " " + std::to_string(r.violations.size()) + " violations");
    t.require(r.instancesChecked > 0, name + " checked nothing");
    summary += (summary.empty() ? "" : ", ") + name + " " + std::to_string(r.instancesChecked) + "/" +
               std::to_string(r.corpusSize());
    if (!r.reduction.empty()) summary += " [" + r.reduction + "]";
  }
  return t.outcome("exhaustive up to 4x4, checked/corpus: " + summary);
}

Outcome hunter() {
  Tally t;
  HuntOptions o;
  o.maxX = 4;
  o.maxY = 4;
  const auto r = hunt(PendantClass::NoPendant, o);
  t.require(r.passed(), std::to_string(r.violations.size()) + " Frankl failures");
  t.require(r.instancesChecked > 0, "no class members");
  return t.outcome("noPendant up to 4x4: " + std::to_string(r.instancesChecked) + " members checked, " +
                   std::to_string(r.skipped) + " skipped, " + std::to_string(r.violations.size()) + " failures");
}

std::pair<int, std::string> run(const std::string& cmd) {
  std::string out;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return {-1, ""};
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cliDeterminism() {
  Tally t;
  const auto dir = std::filesystem::temp_directory_path() / "ucc-acceptance-cli";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto at = [&](const char* f) { return (dir / f).string(); };
  writeFile(at("f.json"), writeFamily(fam(3, {{0, 1}, {1, 2}, {0, 2}})));
  writeFile(at("p4.graph"), writeGraph(path(4)));
  writeFile(at("p5.graph"), writeGraph(path(5)));
  writeFile(at("p5.dcmp"), writeDecomposition({path(5), {{0, 0}, {1, 0}}, {{1, 1}, {2, 1}}}));

  const std::string ucc = UCC_CLI_PATH;
  const std::vector<std::string> commands = {
      ucc + " family check " + at("f.json"),
      ucc + " graph rare " + at("p4.graph"),
      ucc + " bridge prop31 " + at("p4.graph"),
      ucc + " decomp theorem " + at("p5.dcmp"),
      ucc + " lemma 7 " + at("p5.dcmp") + " --common-limit 8",
      ucc + " gen randomBipartite --count 5 --seed 7",
      ucc + " suite pendantNeighborRare --corpus 'exhaustiveBipartite(nx=3,ny=3,upto=1,dedup=1)' --threads 4",
      ucc + " hunt noPendant --max-x 3 --max-y 3 --threads 4",
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd);
    const auto b = run(cmd);
    const auto sub = cmd.substr(ucc.size() + 1, cmd.find(' ', ucc.size() + 1) - ucc.size() - 1);
    t.require(a.first == 0, sub + " exit " + std::to_string(a.first));
    t.require(!a.second.empty(), sub + " empty stdout");
    t.require(checksum(a.second) == checksum(b.second), sub + " stdout differs");
  }
  std::filesystem::remove_all(dir);
  return t.outcome(std::to_string(commands.size()) + " subcommands run twice, stdout FNV-1a hashes compared");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double budgetSeconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", 120, oracleEquivalence},
      {2, "rare iff abundant through the incidence family", 120, prop31Bridge},
      {3, "component multiplicativity", 60, componentMultiplicativity},
      {4, "Lemma 4 equalities and Lemma 6 disjointness", 300, lemmas4and6},
      {5, "Lemma 7 sums and proof identities", 300, lemma7AndIdentities},
      {6, "Theorem 4.2 conclusion on decompositions and merges", 300, theorem42Conclusion},
      {7, "Prop 4.8, Cor 4.9 and set versions", 120, pendantRareness},
      {8, "known-result suites", 300, bulletSuites},
      {9, "noPendant hunter", 300, hunter},
      {10, "CLI output determinism", 300, cliDeterminism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budgetSeconds) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    if (!o.pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1fs of %.0fs", secs, c.budgetSeconds);
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " ("
              << o.detail << "; " << timing << ")" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
