#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ucc/bigraph.hpp"
#include "ucc/bridge.hpp"
#include "ucc/decomp.hpp"
#include "ucc/setfam.hpp"
#include "ucc/verify.hpp"

namespace ucc {

using Json = nlohmann::ordered_json;

/// Element names: labels when given, indices otherwise.
using Labels = std::vector<std::string>;

/// Counts that fit 64 bits become numbers, larger ones decimal strings.
Json toJson(const MssCount& c);
Json toJson(const VertexRef& v);
Json toJson(const std::vector<VertexRef>& vs);
Json toJson(const Edge& e);
Json vertexMask(const BipartiteGraph& g, const Bitset& mask);
Json elements(const std::vector<ElementId>& es, const Labels& labels = {});
Json elements(const Bitset& s, const Labels& labels = {});

Json toJson(const SetFamily& f, const Labels& labels = {});
Json toJson(const FamilyPredicates& p);

Json graphSummary(const BipartiteGraph& g);
Json toJson(const StableSetCollection& c, const BipartiteGraph& g);
Json toJson(const MssProfile& p, const BipartiteGraph& g);
Json toJson(const RareVertices& r);
Json toJson(const std::vector<Component>& cs);

Json toJson(const Prop31Report& r);
Json toJson(const RoundTripReport& r);

Json toJson(const TwoLayeredReport& r);
Json toJson(const Decomposition& d);
Json toJson(const Theorem42Hypotheses& h);
Json toJson(const IdentityCheck& c);
Json toJson(const Theorem42Report& r);
Json toJson(const Lemma4Report& r);
Json toJson(const Lemma6Report& r);
Json toJson(const LemmaSweepReport& r);
Json toJson(const SumCheck& s);
Json toJson(const Lemma7Report& r);
Json toJson(const MergeResult& m);
Json toJson(const Prop411Report& r);
Json toJson(const RarenessReport& r);
Json toJson(const Cor49Report& r);
Json toJson(const SetVersionReport& r, const Labels& labels = {});

/// Elapsed time is left out unless requested so reports stay reproducible.
Json toJson(const SuiteReport& r, bool timing = false);

}  // namespace ucc
