#include "ucc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "ucc/bridge.hpp"
#include "ucc/error.hpp"
#include "ucc/io.hpp"

namespace ucc {

CorpusSpec CorpusSpec::exhaustive(std::size_t nX, std::size_t nY) {
  GenSpec s;
  s.kind = GenKind::ExhaustiveBipartite;
  s.params = {{"nx", static_cast<std::int64_t>(nX)},
              {"ny", static_cast<std::int64_t>(nY)},
              {"upto", 1},
              {"dedup", 1}};
  return {{s}};
}

std::string CorpusSpec::toString() const {
  std::string out;
  for (const auto& s : sources) out += (out.empty() ? "" : ";") + s.toString();
  return out;
}

CorpusSpec CorpusSpec::parse(std::string_view text) {
  CorpusSpec out;
  while (!text.empty()) {
    const auto semi = text.find(';');
    out.sources.push_back(GenSpec::parse(text.substr(0, semi)));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
  }
  return out;
}

std::string InstanceId::toString() const { return spec.toString() + "#" + std::to_string(index); }

InstanceId InstanceId::parse(std::string_view text) {
  const auto hash = text.rfind('#');
  if (hash == std::string_view::npos) throw Error(ErrorKind::InvalidParams, "instance id needs '#<index>'");
  InstanceId id;
  id.spec = GenSpec::parse(text.substr(0, hash));
  const auto digits = std::string(text.substr(hash + 1));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::InvalidParams, "bad instance index \"" + digits + "\"");
  id.index = std::stoull(digits);
  return id;
}

std::vector<CorpusInstance> buildCorpus(const CorpusSpec& corpus) {
  std::vector<CorpusInstance> out;
  for (const auto& spec : corpus.sources) {
    auto items = generate(spec);
    for (std::size_t i = 0; i < items.size(); ++i) out.push_back({{spec, i}, std::move(items[i])});
  }
  return out;
}

Generated replay(const InstanceId& id) { return generateAt(id.spec, id.index); }

// ---------------------------------------------------------------------------

namespace {

using Findings = std::vector<std::pair<std::string, std::string>>;

/// Lazily computed MSS profile of one graph.
class GraphFacts {
 public:
  GraphFacts(const BipartiteGraph& g, const EnumerationLimits& limits) : g_(g), limits_(limits) {}

  const BipartiteGraph& g() const { return g_; }
  const MssProfile& profile() {
    if (!profile_) profile_ = mssProfile(g_, limits_);
    return *profile_;
  }
  bool rare(std::size_t id) { return rareCount(profile().perVertex[id], profile().total); }
  bool hasRareIn(Side s) {
    for (std::size_t i = 0; i < g_.size(s); ++i)
      if (rare(g_.id({s, i}))) return true;
    return false;
  }
  std::string counts(std::size_t id) {
    return toString(g_.ref(id)) + " in " + profile().perVertex[id].str() + " of " + profile().total.str();
  }
  std::size_t degree(std::size_t id) const { return g_.adjacency(id).count(); }

 private:
  const BipartiteGraph& g_;
  EnumerationLimits limits_;
  std::optional<MssProfile> profile_;
};

const char* sideName(Side s) { return s == Side::X ? "X" : "Y"; }

void requireRareIn(GraphFacts& f, Side s, const std::string& predicate, Findings& out) {
  if (!f.hasRareIn(s)) out.push_back({predicate, std::string("no rare vertex in ") + sideName(s)});
}

void requireHolds(GraphFacts& f, const std::string& predicate, Findings& out) {
  requireRareIn(f, Side::X, predicate, out);
  requireRareIn(f, Side::Y, predicate, out);
}

bool isTwinFree(const BipartiteGraph& g) {
  std::set<std::pair<int, Bitset>> seen;
  for (std::size_t id = 0; id < g.order(); ++id) {
    const auto& n = g.adjacency(id);
    // neighborhoods on opposite sides coincide only when both are empty
    const int side = n.none() ? 2 : static_cast<int>(g.ref(id).side);
    if (!seen.insert({side, n}).second) return false;
  }
  return true;
}

SuiteOutcome pendantNeighborRare(GraphFacts& f) {
  const auto& g = f.g();
  Findings out;
  bool any = false;
  for (std::size_t id = 0; id < g.order(); ++id) {
    if (f.degree(id) != 1) continue;
    any = true;
    const std::size_t u = g.adjacency(id).first();
    if (!f.rare(u))
      out.push_back({"neighbor of a pendant vertex is rare", "pendant " + toString(g.ref(id)) + ", " + f.counts(u)});
  }
  if (!any) return std::nullopt;
  return out;
}

SuiteOutcome degreeTwoRule(GraphFacts& f) {
  const auto& g = f.g();
  Findings out;
  bool any = false;
  for (Side s : {Side::X, Side::Y}) {
    bool here = false;
    for (std::size_t i = 0; i < g.size(s); ++i) here = here || f.degree(g.id({s, i})) == 2;
    if (!here) continue;
    any = true;
    requireRareIn(f, opposite(s), std::string("degree-2 vertex in ") + sideName(s) + " forces a rare vertex opposite",
                  out);
  }
  if (!any) return std::nullopt;
  return out;
}

constexpr std::size_t kSmallClassBound = 8;

SuiteOutcome smallClassRule(GraphFacts& f) {
  const auto& g = f.g();
  if (g.edgeCount() == 0) return std::nullopt;
  Findings out;
  bool any = false;
  for (Side s : {Side::X, Side::Y}) {
    if (g.size(s) > kSmallClassBound) continue;
    any = true;
    requireRareIn(f, s, std::string("class ") + sideName(s) + " of at most 8 vertices has a rare vertex", out);
  }
  if (!any) return std::nullopt;
  return out;
}

SuiteOutcome densityRule(GraphFacts& f) {
  const auto& g = f.g();
  if (g.edgeCount() == 0) return std::nullopt;
  for (Side s : {Side::X, Side::Y}) {
    // 3|other| >= 2 * 2^|s|
    const MssCount lhs = 3 * MssCount(g.size(opposite(s)));
    const MssCount rhs = MssCount(2) << g.size(s);
    if (lhs >= rhs) {
      Findings out;
      requireHolds(f, std::string("dense ") + sideName(opposite(s)) + " gives Frankl's verdict", out);
      return out;
    }
  }
  return std::nullopt;
}

SuiteOutcome twinFreeRule(GraphFacts& f) {
  const auto& g = f.g();
  if (g.edgeCount() == 0 || !isTwinFree(g)) return std::nullopt;
  Findings out;
  bool any = false;
  for (Side s : {Side::X, Side::Y}) {
    // 2^|other| <= 2|s|, exact
    if ((MssCount(1) << g.size(opposite(s))) > 2 * MssCount(g.size(s))) continue;
    any = true;
    requireRareIn(f, s, std::string("twin-free with small ") + sideName(opposite(s)) + " has a rare vertex in " +
                            sideName(s),
                  out);
  }
  if (!any) return std::nullopt;
  return out;
}

SuiteOutcome halfDegreeRule(GraphFacts& f) {
  const auto& g = f.g();
  if (g.edgeCount() == 0) return std::nullopt;
  Findings out;
  bool any = false;
  for (Side s : {Side::X, Side::Y}) {
    const Side o = opposite(s);
    bool ok = true;
    for (std::size_t i = 0; i < g.size(o) && ok; ++i) ok = 2 * f.degree(g.id({o, i})) >= g.size(s);
    if (!ok) continue;
    any = true;
    requireRareIn(f, s, std::string("degrees in ") + sideName(o) + " at least |" + sideName(s) + "|/2", out);
  }
  if (!any) return std::nullopt;
  return out;
}

std::size_t minDegree(const GraphFacts& f) {
  std::size_t d = SIZE_MAX;
  for (std::size_t id = 0; id < f.g().order(); ++id) d = std::min(d, f.degree(id));
  return d;
}

SuiteOutcome minDegreeRule(GraphFacts& f) {
  const auto& g = f.g();
  if (g.order() == 0) return std::nullopt;
  const std::size_t delta = minDegree(f);
  if (delta == 0 || g.nX() > 2 * delta || g.nY() > 2 * delta) return std::nullopt;
  Findings out;
  requireHolds(f, "classes at most twice the minimum degree", out);
  return out;
}

SuiteOutcome regularRule(GraphFacts& f) {
  const auto& g = f.g();
  if (g.order() == 0) return std::nullopt;
  const std::size_t r = f.degree(0);
  for (std::size_t id = 0; id < g.order(); ++id)
    if (f.degree(id) != r) return std::nullopt;
  if (r == 0 || g.nX() > 2 * r || g.nY() > 2 * r) return std::nullopt;
  Findings out;
  requireHolds(f, "regular with classes at most 2r", out);
  return out;
}

SuiteOutcome subcubicFamilyRule(const SetFamily& fam, const ClosureLimits& limits) {
  if (fam.empty() || universe(fam).none()) return std::nullopt;
  const auto p = familyPredicates(fam);
  if (p.maxMemberSize > 3 || p.maxFrequency > 3) return std::nullopt;
  const auto v = uccVerdict(fam, limits);
  if (v == UccVerdict::Holds) return Findings{};
  return Findings{{"closure of a subcubic family satisfies the conjecture", std::string(toString(v))}};
}

/// Shared tail of the family suites: the hypothesis has been met, so the
/// closure must satisfy the conjecture.
Findings requireUcc(const SetFamily& fam, const std::string& predicate, const ClosureLimits& limits) {
  const auto v = uccVerdict(fam, limits);
  if (v == UccVerdict::Holds) return {};
  return {{predicate, std::string(toString(v))}};
}

// The known-result suites read their hypotheses off the closure L = <f>,
// except where noted. The universe bound 12 and family bound 50 are the
// published ones; desk-scale corpora sit well inside both.

SuiteOutcome smallUniverseRule(const SetFamily& fam, const ClosureLimits& limits) {
  if (fam.empty() || universe(fam).count() == 0 || universe(fam).count() > 12) return std::nullopt;
  return requireUcc(fam, "universe of at most 12 elements", limits);
}

SuiteOutcome smallFamilyRule(const SetFamily& fam, const ClosureLimits& limits) {
  if (fam.empty() || universe(fam).none()) return std::nullopt;
  if (close(fam, limits).family.size() > 50) return std::nullopt;
  return requireUcc(fam, "closure of at most 50 sets", limits);
}

SuiteOutcome separatingRule(const SetFamily& fam, const ClosureLimits& limits) {
  if (fam.empty() || universe(fam).none()) return std::nullopt;
  const auto closed = close(fam, limits).family;
  if (closed.size() > 2 * universe(fam).count() || !familyPredicates(closed).isSeparating) return std::nullopt;
  return requireUcc(fam, "separating closure of at most 2|U| sets", limits);
}

SuiteOutcome denseFamilyRule(const SetFamily& fam, const ClosureLimits& limits) {
  const auto n = universe(fam).count();
  if (fam.empty() || n == 0 || n > 40) return std::nullopt;
  const auto closed = close(fam, limits).family;
  if (3 * static_cast<std::uint64_t>(closed.size()) < (std::uint64_t{2} << n)) return std::nullopt;
  return requireUcc(fam, "closure of at least (2/3)2^|U| sets", limits);
}

// Read off f itself: the closure always contains U(f).
SuiteOutcome singletonOrFullRule(const SetFamily& fam, const ClosureLimits& limits) {
  if (fam.empty() || universe(fam).none()) return std::nullopt;
  const auto p = familyPredicates(fam);
  if (!p.hasSingleton && !p.hasFullUniverseSet) return std::nullopt;
  auto out = requireUcc(fam, "singleton or full-universe member", limits);
  if (p.hasSingleton) {
    const auto closed = close(fam, limits).family;
    for (const auto& s : fam.sets())
      if (s.count() == 1 && !isAbundant(closed, s.first()))
        out.push_back({"a singleton member is abundant", "element " + std::to_string(s.first() + 1)});
  }
  return out;
}

// Nonempty members of the closure are unions of members of f, so the
// smallest nonempty member of f decides the hypothesis.
SuiteOutcome largeMembersRule(const SetFamily& fam, const ClosureLimits& limits) {
  const auto n = universe(fam).count();
  if (fam.empty() || n == 0) return std::nullopt;
  for (const auto& s : fam.sets())
    if (s.any() && 2 * s.count() < n) return std::nullopt;
  return requireUcc(fam, "every nonempty member has at least |U|/2 elements", limits);
}

using FamilyRule = SuiteOutcome (*)(const SetFamily&, const ClosureLimits&);

const std::map<std::string, FamilyRule>& familyRules() {
  static const std::map<std::string, FamilyRule> rules = {
      {"subcubicFamilyRule", subcubicFamilyRule},   {"smallUniverseRule", smallUniverseRule},
      {"smallFamilyRule", smallFamilyRule},         {"separatingRule", separatingRule},
      {"denseFamilyRule", denseFamilyRule},         {"singletonOrFullRule", singletonOrFullRule},
      {"largeMembersRule", largeMembersRule},
  };
  return rules;
}

using GraphRule = SuiteOutcome (*)(GraphFacts&);

const std::map<std::string, GraphRule>& graphRules() {
  static const std::map<std::string, GraphRule> rules = {
      {"pendantNeighborRare", pendantNeighborRare}, {"degreeTwoRule", degreeTwoRule},
      {"smallClassRule", smallClassRule},           {"densityRule", densityRule},
      {"twinFreeRule", twinFreeRule},               {"halfDegreeRule", halfDegreeRule},
      {"minDegreeRule", minDegreeRule},             {"regularRule", regularRule},
  };
  return rules;
}

std::string reductionFor(const std::string& name) {
  if (name == "smallClassRule") return "class bound 8 instead of 12";
  if (name == "twinFreeRule") return "none; 2^|Y| <= 2|X| compared exactly";
  if (familyRules().count(name) != 0) return "none; graphs enter as their X-side incidence families";
  return "none";
}

std::optional<BipartiteGraph> graphOf(const Generated& item) {
  if (const auto* g = item.graph()) return *g;
  if (const auto* s = item.split()) return s->graph;
  const auto& f = *item.family();
  if (f.empty() || std::any_of(f.sets().begin(), f.sets().end(), [](const MemberSet& m) { return m.none(); }))
    return std::nullopt;
  return incidenceGraph(f).graph;
}

std::size_t threadCount(std::size_t requested, std::size_t jobs) {
  std::size_t t = requested != 0 ? requested : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(t, jobs));
}

/// Runs `job(i)` for every i < n across a worker pool. The first exception
/// is rethrown after all workers stop.
void parallelFor(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& job) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex errorMutex;
  auto worker = [&] {
    for (std::size_t i; !failed && (i = next++) < n;) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(errorMutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const std::size_t t = threadCount(threads, n);
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

double millisecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<std::string> suiteNames() {
  std::vector<std::string> out;
  for (const auto& [name, rule] : graphRules()) out.push_back(name);
  for (const auto& [name, rule] : familyRules()) out.push_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

SuiteOutcome evaluateSuite(const std::string& name, const Generated& item, const SuiteOptions& options) {
  if (const auto fr = familyRules().find(name); fr != familyRules().end()) {
    if (const auto* f = item.family()) return fr->second(*f, options.closure);
    const auto g = graphOf(item);
    return fr->second(incidenceFamily(*g, Side::X, {true}).family, options.closure);
  }
  const auto it = graphRules().find(name);
  if (it == graphRules().end()) throw Error(ErrorKind::UnknownSuite, "no suite named \"" + name + "\"");
  const auto g = graphOf(item);
  if (!g) return std::nullopt;
  GraphFacts facts(*g, options.enumeration);
  return it->second(facts);
}

SuiteReport runSuite(const std::string& name, const CorpusSpec& corpus, const SuiteOptions& options) {
  const auto names = suiteNames();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error(ErrorKind::UnknownSuite, "no suite named \"" + name + "\"");
  const auto start = std::chrono::steady_clock::now();
  const auto instances = buildCorpus(corpus);

  std::vector<SuiteOutcome> outcomes(instances.size());
  parallelFor(instances.size(), options.threads,
              [&](std::size_t i) { outcomes[i] = evaluateSuite(name, instances[i].item, options); });

  SuiteReport report;
  report.suiteName = name;
  report.corpus = corpus.toString();
  report.reduction = reductionFor(name);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!outcomes[i]) {
      ++report.skipped;
      continue;
    }
    ++report.instancesChecked;
    for (auto& [predicate, detail] : *outcomes[i])
      report.violations.push_back({instances[i].id.toString(), predicate, detail});
  }
  report.elapsedMs = millisecondsSince(start);
  return report;
}

// ---------------------------------------------------------------------------

std::string_view toString(PendantClass c) {
  switch (c) {
    case PendantClass::NoPendant: return "noPendant";
    case PendantClass::ExactlyOnePendant: return "exactlyOnePendant";
    case PendantClass::AtLeastOnePendant: return "atLeastOnePendant";
  }
  return "?";
}

PendantClass parsePendantClass(std::string_view name) {
  for (auto c : {PendantClass::NoPendant, PendantClass::ExactlyOnePendant, PendantClass::AtLeastOnePendant})
    if (name == toString(c)) return c;
  throw Error(ErrorKind::InvalidParams, "unknown pendant class \"" + std::string(name) + "\"");
}

bool inPendantClass(const BipartiteGraph& g, PendantClass c) {
  const auto p = pendantCount(g);
  switch (c) {
    case PendantClass::NoPendant: return p == 0;
    case PendantClass::ExactlyOnePendant: return p == 1;
    case PendantClass::AtLeastOnePendant: return p >= 1;
  }
  return false;
}

SuiteReport hunt(PendantClass cls, const HuntOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.maxX == 0 || options.maxY == 0) throw Error(ErrorKind::InvalidParams, "hunt bounds must be positive");
  if (options.maxX + options.maxY > options.suite.enumeration.vertexCap)
    throw Error(ErrorKind::CapacityExceeded, "hunt bounds exceed the vertex cap");

  SuiteReport report;
  report.suiteName = "hunt:" + std::string(toString(cls));
  const std::size_t budget = options.budget.value_or(SIZE_MAX);
  std::vector<CorpusInstance> members;

  const bool exhaustive = options.maxX * options.maxY <= 24;
  GenSpec ex;
  if (exhaustive) {
    ex = CorpusSpec::exhaustive(options.maxX, options.maxY).sources.front();
    std::size_t index = 0;
    forEachExhaustive(options.maxX, options.maxY, true, true, [&](const BipartiteGraph& g) {
      const std::size_t i = index++;
      if (members.size() >= budget) return;
      if (!inPendantClass(g, cls) || g.edgeCount() == 0) {
        ++report.skipped;
        return;
      }
      members.push_back({{ex, i}, {g, {}}});
    });
  }
  report.corpus = exhaustive ? ex.toString() : std::string("random only (bounds exceed the exhaustive limit)");
  report.reduction = exhaustive ? "none" : "exhaustive phase skipped above 24 edge slots";

  if (options.budget && members.size() < budget) {
    const std::size_t want = budget - members.size();
    GenSpec rnd;
    rnd.kind = GenKind::RandomBipartite;
    rnd.seed = options.seed;
    rnd.params = {{"nx", static_cast<std::int64_t>(options.maxX)},
                  {"ny", static_cast<std::int64_t>(options.maxY)},
                  {"nxmin", 1},
                  {"nymin", 1},
                  {"p", 900},
                  {"pmin", 100},
                  {"count", static_cast<std::int64_t>(std::min<std::size_t>(want * 64, 1 << 24))}};
    const auto attempts = static_cast<std::size_t>(rnd.param("count"));
    std::size_t found = 0;
    for (std::size_t i = 0; i < attempts && found < want; ++i) {
      auto item = generateAt(rnd, i);
      const auto& g = *item.graph();
      if (!inPendantClass(g, cls) || g.edgeCount() == 0) {
        ++report.skipped;
        continue;
      }
      ++found;
      members.push_back({{rnd, i}, std::move(item)});
    }
    report.corpus += ";" + rnd.toString();
  }

  std::vector<GraphVerdict> verdicts(members.size());
  parallelFor(members.size(), options.suite.threads, [&](std::size_t i) {
    verdicts[i] = franklGraphVerdict(*members[i].item.graph(), options.suite.enumeration);
  });

  report.instancesChecked = members.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (verdicts[i] != GraphVerdict::Fails) continue;
    const auto& g = *members[i].item.graph();
    const auto id = members[i].id.toString();
    std::string detail = writeGraph(g);
    if (!options.witnessDir.empty()) {
      std::filesystem::create_directories(options.witnessDir);
      const auto path = (std::filesystem::path(options.witnessDir) /
                         ("witness-" + std::to_string(report.violations.size()) + ".graph"))
                            .string();
      writeFile(path, "c " + id + "\n" + detail);
      detail = path;
    }
    report.violations.push_back({id, "Frankl's graph verdict holds", detail});
  }
  report.elapsedMs = millisecondsSince(start);
  return report;
}

}  // namespace ucc
