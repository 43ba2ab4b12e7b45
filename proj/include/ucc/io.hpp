#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucc/bigraph.hpp"
#include "ucc/decomp.hpp"
#include "ucc/setfam.hpp"

namespace ucc {

/// A family together with optional element labels (one per universe index).
struct LabeledFamily {
  SetFamily family;
  std::vector<std::string> labels;

  /// Label of element e, or its index when unlabeled.
  std::string name(ElementId e) const;
};

/// {"universe": n, "labels": [...]?, "sets": [[...], ...]}. Set entries are
/// 0-based indices, or label strings when labels are given. Throws ParseError
/// for malformed JSON and IndexOutOfRange for indices outside the universe.
LabeledFamily parseFamily(std::string_view text);
std::string writeFamily(const SetFamily& f, const std::vector<std::string>& labels = {});

/// Line format: `p bip <nX> <nY>`, `e <x> <y>` (1-based), `c` comments.
/// Strict: decomposition lines are rejected. Throws ParseError, IndexOutOfRange.
BipartiteGraph parseGraph(std::string_view text);
/// Edges sorted by (x, y).
std::string writeGraph(const BipartiteGraph& g);

/// Graph format plus `dc <x> <y>` and `dh <x> <y>` assignment lines. When
/// no `e` lines are present the graph's edges are the assigned ones.
EdgeSplit parseDecomposition(std::string_view text);
std::string writeDecomposition(const EdgeSplit& split);

/// Reads a file, or standard input for "-". Throws IoError.
std::string readInput(const std::string& path);
/// Throws IoError.
void writeFile(const std::string& path, std::string_view bytes);

/// FNV-1a 64-bit, rendered as 16 lowercase hex digits.
std::string checksum(std::string_view bytes);

}  // namespace ucc
