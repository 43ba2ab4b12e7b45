// ucc: command-line front end for the union-closed verification library.

#include <unistd.h>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ucc/bigraph.hpp"
#include "ucc/bridge.hpp"
#include "ucc/decomp.hpp"
#include "ucc/error.hpp"
#include "ucc/gen.hpp"
#include "ucc/io.hpp"
#include "ucc/report_json.hpp"
#include "ucc/setfam.hpp"
#include "ucc/verify.hpp"

namespace {

using namespace ucc;

enum Exit { kPass = 0, kUsage = 1, kViolation = 2, kCapacity = 3, kIo = 4 };

int exitFor(ErrorKind k) {
  switch (k) {
    case ErrorKind::CapacityExceeded:
    case ErrorKind::CommonSetTooLarge:
      return kCapacity;
    case ErrorKind::IoError:
    case ErrorKind::ParseError:
      return kIo;
    default:
      return kUsage;
  }
}

struct Common {
  std::uint64_t seed = 0;
  std::size_t vertexCap = 64;
  std::size_t closureCap = std::size_t{1} << 24;
  std::size_t mssCap = std::size_t{1} << 24;
  std::size_t commonLimit = 8;
  std::size_t threads = 0;
  bool quiet = false;
  bool json = false;
  bool timing = false;

  EnumerationLimits enumeration() const { return {vertexCap, mssCap}; }
  ClosureLimits closure() const { return {closureCap}; }
  LemmaOptions lemma() const {
    LemmaOptions o;
    o.enumeration = enumeration();
    o.commonLimit = commonLimit;
    return o;
  }
  SuiteOptions suite() const { return {threads, enumeration(), closure()}; }
};

struct Outcome {
  Json result;
  int code = kPass;
  std::string summary;
};

/// "x2" / "y1", 1-based as in graph files.
VertexRef parseVertex(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'x' && text[0] != 'y' && text[0] != 'X' && text[0] != 'Y'))
    throw Error(ErrorKind::InvalidParams, "vertex must look like x1 or y2, got \"" + text + "\"");
  const auto digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) || digits.empty())
    throw Error(ErrorKind::InvalidParams, "bad vertex index in \"" + text + "\"");
  const auto i = std::stoull(digits);
  if (i == 0) throw Error(ErrorKind::InvalidParams, "vertex indices are 1-based");
  return {text[0] == 'x' || text[0] == 'X' ? Side::X : Side::Y, static_cast<std::size_t>(i - 1)};
}

std::vector<VertexRef> parseVertices(const std::vector<std::string>& items) {
  std::vector<VertexRef> out;
  for (const auto& s : items) out.push_back(parseVertex(s));
  return out;
}

ucc::LabeledFamily loadFamily(const std::string& path) { return parseFamily(readInput(path)); }
BipartiteGraph loadGraph(const std::string& path) { return parseGraph(readInput(path)); }
EdgeSplit loadSplit(const std::string& path) { return parseDecomposition(readInput(path)); }

std::string verdictLine(const char* what, bool ok) { return std::string(what) + (ok ? ": pass" : ": FAIL"); }

/// Shared flags on every leaf command.
void addCommon(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Seed (default: $UCC_SEED or 0)");
  app->add_option("--cap", c.vertexCap, "Vertex cap for enumeration (default 64)")->check(CLI::Range(1, 256));
  app->add_option("--closure-cap", c.closureCap, "Maximum closure size (default 2^24)");
  app->add_option("--mss-cap", c.mssCap, "Maximum number of enumerated maximal stable sets (default 2^24)");
  app->add_option("--common-limit", c.commonLimit, "Maximum |[n]| for lemma sums (default 8)");
  app->add_flag("--json", c.json, "JSON on stdout (the default)");
  app->add_flag("--quiet", c.quiet, "No stdout; exit code only");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Union-closed conjecture verification tools"};
  app.require_subcommand(1);
  Common common;
  if (const char* env = std::getenv("UCC_SEED")) {
    try {
      common.seed = std::stoull(env);
    } catch (...) {
      std::cerr << "ucc: ignoring malformed UCC_SEED\n";
    }
  }

  std::function<Outcome()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    addCommon(sub, common);
    return sub;
  };
  auto bind = [&](CLI::App* sub, std::function<Outcome()> fn) { sub->callback([&action, fn] { action = fn; }); };

  std::string path;
  std::vector<std::string> paths;

  // ---- family -----------------------------------------------------------
  auto* family = app.add_subcommand("family", "Set-family checks")->require_subcommand(1);
  auto* check = leaf(family, "check", "Closure verdict and abundant elements");
  check->add_option("path", path, "Family JSON, or - for stdin")->required();
  bind(check, [&] {
    const auto f = loadFamily(path);
    const auto closed = close(f.family, common.closure());
    const auto verdict = uccVerdict(f.family, common.closure());
    Outcome o;
    o.result = {{"verdict", std::string(toString(verdict))},
                {"closureSize", closed.family.size()},
                {"abundant", elements(abundantElements(closed.family), f.labels)},
                {"duplicatesCollapsed", f.family.duplicatesCollapsed()}};
    o.code = verdict == UccVerdict::Fails ? kViolation : kPass;
    o.summary = "verdict " + std::string(toString(verdict));
    return o;
  });

  auto* cl = leaf(family, "close", "Union-closed closure including the empty set");
  cl->add_option("path", path, "Family JSON, or - for stdin")->required();
  bind(cl, [&] {
    const auto f = loadFamily(path);
    const auto closed = close(f.family, common.closure());
    Outcome o;
    o.result = toJson(closed.family, f.labels);
    o.summary = std::to_string(closed.family.size()) + " sets";
    return o;
  });

  auto* pred = leaf(family, "predicates", "Structural predicates of the family");
  pred->add_option("path", path, "Family JSON, or - for stdin")->required();
  bind(pred, [&] {
    const auto f = loadFamily(path);
    Outcome o;
    o.result = toJson(familyPredicates(f.family));
    o.result["unionClosed"] = isUnionClosed(f.family);
    o.summary = "predicates computed";
    return o;
  });

  // ---- graph ------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "Bipartite graph checks")->require_subcommand(1);
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  auto* mss = leaf(graph, "mss", "List maximal stable sets");
  mss->add_option("path", path, "Graph file, or - for stdin")->required();
  bind(mss, [&] {
    const auto g = loadGraph(path);
    const auto c = enumerateMss(g, common.enumeration());
    Outcome o;
    o.result = toJson(c, g);
    o.summary = c.count().str() + " maximal stable sets";
    return o;
  });

  auto* rare = leaf(graph, "rare", "Rare vertices of each class");
  rare->add_option("path", path, "Graph file, or - for stdin")->required();
  bind(rare, [&] {
    const auto g = loadGraph(path);
    const auto p = mssProfile(g, common.enumeration());
    Outcome o;
    o.result = toJson(rareVerticesByClass(g, common.enumeration()));
    o.result["profile"] = toJson(p, g);
    o.summary = "w = " + p.total.str();
    return o;
  });

  auto* verdict = leaf(graph, "verdict", "Frankl's graph verdict: a rare vertex in each class");
  verdict->add_option("path", path, "Graph file, or - for stdin")->required();
  bind(verdict, [&] {
    const auto v = franklGraphVerdict(loadGraph(path), common.enumeration());
    Outcome o;
    o.result = {{"verdict", std::string(toString(v))}};
    o.code = v == GraphVerdict::Fails ? kViolation : kPass;
    o.summary = "verdict " + std::string(toString(v));
    return o;
  });

  auto* comps = leaf(graph, "components", "Connected components and the product count");
  comps->add_option("path", path, "Graph file, or - for stdin")->required();
  bind(comps, [&] {
    const auto g = loadGraph(path);
    const auto w = wTotal(g, common.enumeration());
    const auto viaComponents = wViaComponents(g, common.enumeration());
    Outcome o;
    o.result = {{"components", toJson(components(g))},
                {"w", toJson(w)},
                {"wViaComponents", toJson(viaComponents)},
                {"multiplicative", w == viaComponents}};
    o.code = w == viaComponents ? kPass : kViolation;
    o.summary = verdictLine("component product", w == viaComponents);
    return o;
  });

  auto* countCmd = leaf(graph, "count", "Count maximal stable sets containing --include and avoiding --exclude");
  countCmd->add_option("path", path, "Graph file, or - for stdin")->required();
  countCmd->add_option("--include", include, "Vertices such as x1,y2")->delimiter(',');
  countCmd->add_option("--exclude", exclude, "Vertices such as x1,y2")->delimiter(',');
  bind(countCmd, [&] {
    const auto g = loadGraph(path);
    const CountConstraint c{parseVertices(include), parseVertices(exclude)};
    const auto w = wConstrained(g, c, common.enumeration());
    Outcome o;
    o.result = {{"include", toJson(c.include)}, {"exclude", toJson(c.exclude)}, {"count", toJson(w)}};
    o.summary = "count " + w.str();
    return o;
  });

  // ---- bridge -----------------------------------------------------------
  auto* bridge = app.add_subcommand("bridge", "Set/graph correspondence")->require_subcommand(1);
  bool keepIsolated = false;
  bool removeIsolated = false;
  std::string sideName = "x";
  std::string outPath;
  auto* p31 = leaf(bridge, "prop31", "Rare in the graph iff abundant in the closure of the X-side family");
  p31->add_option("path", path, "Graph file, or - for stdin")->required();
  p31->add_flag("--keep-isolated", keepIsolated, "Reject isolated X-vertices instead of dropping them");
  bind(p31, [&] {
    Prop31Options opts;
    opts.family.removeIsolated = !keepIsolated;
    opts.enumeration = common.enumeration();
    opts.closure = common.closure();
    const auto r = prop31Check(loadGraph(path), opts);
    Outcome o;
    o.result = toJson(r);
    o.code = r.passed() ? kPass : kViolation;
    o.summary = verdictLine("rare iff abundant", r.passed());
    return o;
  });

  auto* inc = leaf(bridge, "incidence", "Incidence graph of a family");
  inc->add_option("path", path, "Family JSON, or - for stdin")->required();
  inc->add_option("-o,--output", outPath, "Also write the graph file here");
  bind(inc, [&] {
    const auto f = loadFamily(path);
    const auto map = incidenceGraph(f.family);
    const auto text = writeGraph(map.graph);
    if (!outPath.empty()) writeFile(outPath, text);
    Outcome o;
    o.result = {
        {"graph", graphSummary(map.graph)}, {"elementForX", elements(map.elementForX, f.labels)}, {"file", text}};
    o.summary = std::to_string(map.graph.edgeCount()) + " edges";
    return o;
  });

  auto* fam = leaf(bridge, "family", "Incidence family over one class of a graph");
  fam->add_option("path", path, "Graph file, or - for stdin")->required();
  fam->add_option("--side", sideName, "Ground class: x or y (default x)")->check(CLI::IsMember({"x", "y", "X", "Y"}));
  fam->add_flag("--remove-isolated", removeIsolated, "Drop isolated ground vertices");
  fam->add_option("-o,--output", outPath, "Also write the family JSON here");
  bind(fam, [&] {
    const Side side = sideName == "y" || sideName == "Y" ? Side::Y : Side::X;
    const auto r = incidenceFamily(loadGraph(path), side, {removeIsolated});
    const auto text = writeFamily(r.family);
    if (!outPath.empty()) writeFile(outPath, text);
    Json vertices = Json::array();
    for (auto v : r.vertexForElement) vertices.push_back(toJson(VertexRef{side, v}));
    Outcome o;
    o.result = {{"family", toJson(r.family)},
                {"vertexForElement", std::move(vertices)},
                {"twinsCollapsed", r.twinsCollapsed},
                {"removedIsolated", r.removedIsolated.size()}};
    o.summary = std::to_string(r.family.size()) + " member sets";
    return o;
  });

  auto* rt = leaf(bridge, "roundtrip", "Family -> incidence graph -> family");
  rt->add_option("path", path, "Family JSON, or - for stdin")->required();
  bind(rt, [&] {
    const auto f = loadFamily(path);
    const auto r = roundTrip(f.family);
    Outcome o;
    o.result = toJson(r);
    o.code = r.identical ? kPass : kViolation;
    o.summary = verdictLine("round trip", r.identical);
    return o;
  });

  // ---- decomp -----------------------------------------------------------
  auto* decomp = app.add_subcommand("decomp", "Decompositions, 2-layered vertices and merges")->require_subcommand(1);
  std::vector<std::string> at;
  std::string vertexText;
  std::size_t split = 1;
  std::size_t anchor = 0;
  auto* val = leaf(decomp, "validate", "Check a decomposition file and report [n]");
  val->add_option("path", path, "Decomposition file, or - for stdin")->required();
  bind(val, [&] {
    const auto d = validateDecomposition(loadSplit(path));
    Outcome o;
    o.result = toJson(d);
    o.result["hypotheses"] = toJson(theorem42Hypotheses(d));
    o.summary = std::to_string(d.commonVertices.size()) + " common vertices";
    return o;
  });

  auto* thm = leaf(decomp, "theorem", "Rare vertices of C and H stay rare in G");
  thm->add_option("path", path, "Decomposition file, or - for stdin")->required();
  bind(thm, [&] {
    const auto d = validateDecomposition(loadSplit(path));
    const auto r = theorem42Check(d, common.enumeration());
    Outcome o;
    o.result = toJson(r);
    o.code = r.passed() ? kPass : kViolation;
    o.summary = verdictLine("rareness preserved", r.passed());
    return o;
  });

  auto* two = leaf(decomp, "twolayered", "Is a vertex 2-layered");
  two->add_option("path", path, "Graph file, or - for stdin")->required();
  two->add_option("--vertex", vertexText, "Vertex such as x1")->required();
  bind(two, [&] {
    const auto g = loadGraph(path);
    const auto v = parseVertex(vertexText);
    const auto r = isTwoLayered(g, v);
    Outcome o;
    o.result = r ? toJson(*r) : Json{{"vertex", toJson(v)}, {"twoLayered", false}};
    o.summary = toString(v) + (r ? " is 2-layered" : " is not 2-layered");
    return o;
  });

  auto* p48 = leaf(decomp, "prop48", "A vertex with a pendant neighbor and 2-layered other neighbors");
  p48->add_option("path", path, "Graph file, or - for stdin")->required();
  p48->add_option("--vertex", vertexText, "Vertex such as x1")->required();
  bind(p48, [&] {
    const auto r = prop48Check(loadGraph(path), parseVertex(vertexText), common.enumeration());
    Outcome o;
    o.result = toJson(r);
    o.code = r.passed() ? kPass : kViolation;
    o.summary = verdictLine("vertex and neighbors rare", r.passed());
    return o;
  });

  auto* c49 = leaf(decomp, "cor49", "Pendant-saturated class: every vertex rare");
  c49->add_option("path", path, "Graph file, or - for stdin")->required();
  bind(c49, [&] {
    const auto r = cor49Check(loadGraph(path), common.enumeration());
    Outcome o;
    o.result = toJson(r);
    o.code = r.passed() ? kPass : kViolation;
    o.summary = verdictLine("all vertices rare", r.passed());
    return o;
  });

  auto* merge = leaf(decomp, "merge", "Merge graphs at 2-layered vertices");
  merge->add_option("paths", paths, "Graph files, one per part")->required();
  merge->add_option("--at", at, "Chosen vertex per part, such as x1")->required()->delimiter(',');
  merge->add_option("--split", split, "Parts [0, split) form C (default 1)");
  merge->add_option("-o,--output", outPath, "Also write the merged decomposition here");
  bind(merge, [&] {
    const auto vs = parseVertices(at);
    if (vs.size() != paths.size()) throw Error(ErrorKind::InvalidParams, "need one --at vertex per part");
    std::vector<MergePart> parts;
    for (std::size_t i = 0; i < paths.size(); ++i) parts.push_back({loadGraph(paths[i]), vs[i]});
    const auto m = mergeGraphs(parts);
    const auto d = mergeDecomposition(m, std::min(split, parts.size()));
    const auto text = writeDecomposition({m.graph, d.edgesC, d.edgesH});
    if (!outPath.empty()) writeFile(outPath, text);
    const auto r = prop411Check(parts, common.enumeration());
    Outcome o;
    o.result = toJson(m);
    o.result["rareness"] = toJson(r);
    o.result["file"] = text;
    o.code = r.passed() ? kPass : kViolation;
    o.summary = verdictLine("rareness preserved by the merge", r.passed());
    return o;
  });

  auto setOutcome = [&](const SetVersionReport& r, const Labels& labels) {
    Outcome o;
    o.result = toJson(r, labels);
    o.code = r.passed() ? kPass : kViolation;
    o.summary = verdictLine("set version", r.passed());
    return o;
  };

  auto* s42 = leaf(decomp, "set-theorem", "Set version of the decomposition theorem");
  s42->add_option("paths", paths, "Two family files")->required()->expected(2);
  bind(s42, [&] {
    const auto a = loadFamily(paths[0]);
    const auto b = loadFamily(paths[1]);
    return setOutcome(setTheorem42Check(a.family, b.family, common.closure()), a.labels);
  });

  auto* s48 = leaf(decomp, "set-prop48", "Set version of the pendant-neighbor proposition");
  s48->add_option("path", path, "Family JSON, or - for stdin")->required();
  s48->add_option("--anchor", anchor, "0-based index of the anchor member")->required();
  bind(s48, [&] {
    const auto f = loadFamily(path);
    return setOutcome(setProp48Check(f.family, anchor, common.closure()), f.labels);
  });

  auto* s49 = leaf(decomp, "set-cor49", "Every member holds a frequency-1 element");
  s49->add_option("path", path, "Family JSON, or - for stdin")->required();
  bind(s49, [&] {
    const auto f = loadFamily(path);
    return setOutcome(setCor49Check(f.family, common.closure()), f.labels);
  });

  auto* s411 = leaf(decomp, "set-merge", "Set version of the merge proposition");
  std::vector<std::size_t> chosen;
  s411->add_option("paths", paths, "Family files over one index space")->required();
  s411->add_option("--at", chosen, "Chosen element per family")->required()->delimiter(',');
  bind(s411, [&, chosenPtr = &chosen] {
    std::vector<SetFamily> fams;
    for (const auto& p : paths) fams.push_back(loadFamily(p).family);
    return setOutcome(setProp411Check(fams, *chosenPtr, common.closure()), {});
  });

  // ---- lemma ------------------------------------------------------------
  auto* lemma = app.add_subcommand("lemma", "Counting lemmas over a decomposition")->require_subcommand(1);
  std::vector<std::string> theta;
  std::vector<std::string> gamma;
  std::vector<std::string> gamma2;
  std::string bText;
  std::string aText;
  std::string partName = "c";
  auto partOf = [&](const Decomposition& d) {
    const bool h = partName == "h" || partName == "H";
    return std::tuple<const BipartiteGraph&, const Bitset&>(h ? d.h : d.c, h ? d.vertexH : d.vertexC);
  };
  auto instance = [&] {
    LemmaInstance inst{parseVertices(theta), parseVertices(gamma), parseVertices(gamma2), std::nullopt};
    if (!bText.empty()) inst.distinguished = parseVertex(bText);
    return inst;
  };
  auto addInstanceFlags = [&](CLI::App* sub, bool second) {
    sub->add_option("path", path, "Decomposition file, or - for stdin")->required();
    sub->add_option("--part", partName, "Part: c or h (default c)")->check(CLI::IsMember({"c", "h", "C", "H"}));
    sub->add_option("--theta", theta, "Theta within [n]")->delimiter(',');
    sub->add_option("--gamma", gamma, "Gamma within the complement of theta")->delimiter(',');
    if (second) sub->add_option("--gamma2", gamma2, "Second gamma")->delimiter(',');
    sub->add_option("--b", bText, "Distinguished vertex");
  };

  auto* l4 = leaf(lemma, "4", "Bijection counts; without --theta/--gamma every instance is swept");
  addInstanceFlags(l4, false);
  auto* l6 = leaf(lemma, "6", "Disjointness; without --theta/--gamma every instance is swept");
  addInstanceFlags(l6, true);
  auto runLemma = [&](bool four) {
    const auto d = validateDecomposition(loadSplit(path));
    const auto [part, domain] = partOf(d);
    Outcome o;
    const bool sweep = theta.empty() && gamma.empty() && gamma2.empty() && bText.empty();
    if (sweep) {
      const auto r = lemmaSweep(part, domain, d.commonVertices, common.lemma());
      o.result = toJson(r);
      o.code = r.passed() ? kPass : kViolation;
      o.summary = verdictLine("every lemma instance", r.passed());
    } else if (four) {
      const auto r = lemma4Check(part, domain, d.commonVertices, instance(), common.lemma());
      o.result = toJson(r);
      o.code = r.passed() ? kPass : kViolation;
      o.summary = verdictLine("counts agree", r.passed());
    } else {
      const auto r = lemma6Check(part, domain, d.commonVertices, instance(), common.lemma());
      o.result = toJson(r);
      o.code = r.passed() ? kPass : kViolation;
      o.summary = verdictLine("collections disjoint", r.passed());
    }
    return o;
  };
  bind(l4, [runLemma] { return runLemma(true); });
  bind(l6, [runLemma] { return runLemma(false); });

  auto* l7 = leaf(lemma, "7", "Triple sums against direct counts in G");
  l7->add_option("path", path, "Decomposition file, or - for stdin")->required();
  l7->add_option("--b", bText, "Vertex of V(C) outside [n]");
  l7->add_option("--a", aText, "Vertex of [n]");
  bind(l7, [&] {
    const auto d = validateDecomposition(loadSplit(path));
    std::optional<VertexRef> b;
    std::optional<VertexRef> a;
    if (!bText.empty()) b = parseVertex(bText);
    if (!aText.empty()) a = parseVertex(aText);
    const auto r = lemma7Check(d, b, a, common.lemma());
    Outcome o;
    o.result = toJson(r);
    o.code = r.passed() ? kPass : kViolation;
    o.summary = verdictLine("sums equal direct counts", r.passed());
    return o;
  });

  // ---- gen --------------------------------------------------------------
  std::string kindName;
  std::vector<std::string> params;
  std::optional<std::int64_t> count;
  std::string outDir;
  auto* gen = app.add_subcommand("gen", "Generate graphs, families and decompositions");
  addCommon(gen, common);
  gen->add_option("kind", kindName, "Generator kind (or 'list')")->required();
  gen->add_option("--param", params, "key=value, repeatable")->delimiter(',');
  gen->add_option("--count", count, "Number of instances for random kinds");
  gen->add_option("--out", outDir, "Export files and manifest.json into this directory");
  bind(gen, [&] {
    Outcome o;
    if (kindName == "list") {
      Json kinds = Json::object();
      for (auto k : allGenKinds()) {
        Json ps = Json::object();
        for (const auto& [key, value] : genParams(k)) ps[key] = value;
        kinds[std::string(toString(k))] = std::move(ps);
      }
      o.result = std::move(kinds);
      return o;
    }
    GenSpec spec;
    spec.kind = parseGenKind(kindName);
    spec.seed = common.seed;
    for (const auto& p : params) {
      const auto eq = p.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::InvalidParams, "--param needs key=value");
      try {
        spec.params[p.substr(0, eq)] = std::stoll(p.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidParams, "bad value in --param " + p);
      }
    }
    if (count) spec.params["count"] = *count;
    spec.validate();
    if (!outDir.empty()) {
      const auto entries = corpusExport({spec}, outDir);
      Json list = Json::array();
      for (const auto& e : entries)
        list.push_back({{"spec", e.spec}, {"index", e.index}, {"file", e.file}, {"checksum", e.checksum}});
      o.result = {{"directory", outDir}, {"manifest", std::move(list)}};
      o.summary = std::to_string(entries.size()) + " files written";
      return o;
    }
    Json items = Json::array();
    const auto generated = generate(spec);
    for (std::size_t i = 0; i < generated.size(); ++i) {
      const auto& g = generated[i];
      Json item{{"instanceId", InstanceId{spec, i}.toString()}};
      if (const auto* gr = g.graph()) {
        item["format"] = "graph";
        item["file"] = writeGraph(*gr);
      } else if (const auto* f = g.family()) {
        item["format"] = "family";
        item["file"] = writeFamily(*f);
      } else {
        item["format"] = "decomposition";
        item["file"] = writeDecomposition(*g.split());
      }
      item["designated"] = toJson(g.designated);
      items.push_back(std::move(item));
    }
    o.result = {{"spec", spec.toString()}, {"instances", std::move(items)}};
    o.summary = std::to_string(generated.size()) + " instances";
    return o;
  });

  // ---- suite ------------------------------------------------------------
  std::string suiteName;
  std::string corpusText;
  auto* suite = app.add_subcommand("suite", "Run a property suite over a corpus");
  addCommon(suite, common);
  suite->add_option("name", suiteName, "Suite name (or 'list')")->required();
  suite->add_option("--corpus", corpusText, "Generator specs joined by ';' (default: exhaustive up to 4x4)");
  suite->add_option("--threads", common.threads, "Worker threads (default: hardware concurrency)");
  suite->add_flag("--timing", common.timing, "Include elapsed time in the report");
  bind(suite, [&] {
    Outcome o;
    if (suiteName == "list") {
      o.result = suiteNames();
      return o;
    }
    const auto corpus = corpusText.empty() ? CorpusSpec::exhaustive(4, 4) : CorpusSpec::parse(corpusText);
    const auto r = runSuite(suiteName, corpus, common.suite());
    o.result = toJson(r, common.timing);
    o.code = r.passed() ? kPass : kViolation;
    o.summary = suiteName + ": " + std::to_string(r.instancesChecked) + " checked, " + std::to_string(r.skipped) +
                " skipped, " + std::to_string(r.violations.size()) + " violations";
    return o;
  });

  // ---- hunt -------------------------------------------------------------
  std::string className;
  HuntOptions hopts;
  std::optional<std::size_t> budget;
  auto* huntCmd = app.add_subcommand("hunt", "Search a pendant class for Frankl failures");
  addCommon(huntCmd, common);
  huntCmd->add_option("class", className, "noPendant, exactlyOnePendant or atLeastOnePendant")->required();
  huntCmd->add_option("--max-x", hopts.maxX, "Bound on |X| (default 4)");
  huntCmd->add_option("--max-y", hopts.maxY, "Bound on |Y| (default 4)");
  huntCmd->add_option("--budget", budget, "Maximum class members checked; enables the random phase");
  huntCmd->add_option("--witness-dir", hopts.witnessDir, "Write failing graphs here");
  huntCmd->add_option("--threads", common.threads, "Worker threads (default: hardware concurrency)");
  huntCmd->add_flag("--timing", common.timing, "Include elapsed time in the report");
  bind(huntCmd, [&] {
    hopts.budget = budget;
    hopts.seed = common.seed;
    hopts.suite = common.suite();
    const auto r = hunt(parsePendantClass(className), hopts);
    Outcome o;
    o.result = toJson(r, common.timing);
    o.code = r.passed() ? kPass : kViolation;
    o.summary = r.suiteName + ": " + std::to_string(r.instancesChecked) + " checked, " +
                std::to_string(r.violations.size()) + " failures";
    return o;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    const Outcome o = action();
    if (!common.quiet) std::cout << o.result.dump(2) << '\n';
    if (isatty(STDERR_FILENO) && !o.summary.empty()) std::cerr << o.summary << '\n';
    return o.code;
  } catch (const Error& e) {
    std::cerr << "ucc: " << e.what() << '\n';
    return exitFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ucc: " << e.what() << '\n';
    return kUsage;
  }
}
