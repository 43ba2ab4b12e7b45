#include "ucc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "json.hpp"

#include "ucc/error.hpp"

namespace ucc {

using nlohmann::json;

std::string LabeledFamily::name(ElementId e) const {
  return e < labels.size() ? labels[e] : std::to_string(e);
}

LabeledFamily parseFamily(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("family JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("universe") || !doc.contains("sets"))
    throw Error(ErrorKind::ParseError, "family JSON needs \"universe\" and \"sets\"");
  if (!doc["universe"].is_number_unsigned())
    throw Error(ErrorKind::ParseError, "\"universe\" must be a non-negative integer");
  const auto n = doc["universe"].get<std::size_t>();
  if (n > Bitset::kMaxBits)
    throw Error(ErrorKind::CapacityExceeded, "universe of " + std::to_string(n) + " exceeds " +
                                                 std::to_string(Bitset::kMaxBits));

  LabeledFamily out;
  std::map<std::string, std::size_t> byLabel;
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != n)
      throw Error(ErrorKind::ParseError, "\"labels\" must list one string per element");
    for (const auto& l : labels) {
      if (!l.is_string()) throw Error(ErrorKind::ParseError, "labels must be strings");
      if (!byLabel.emplace(l.get<std::string>(), out.labels.size()).second)
        throw Error(ErrorKind::ParseError, "duplicate label \"" + l.get<std::string>() + "\"");
      out.labels.push_back(l.get<std::string>());
    }
  }

  if (!doc["sets"].is_array()) throw Error(ErrorKind::ParseError, "\"sets\" must be an array");
  std::vector<MemberSet> sets;
  for (const auto& s : doc["sets"]) {
    if (!s.is_array()) throw Error(ErrorKind::ParseError, "each set must be an array");
    MemberSet m(n);
    for (const auto& e : s) {
      std::size_t idx = 0;
      if (e.is_string()) {
        auto it = byLabel.find(e.get<std::string>());
        if (it == byLabel.end())
          throw Error(ErrorKind::IndexOutOfRange, "unknown label \"" + e.get<std::string>() + "\"");
        idx = it->second;
      } else if (e.is_number_integer()) {
        const auto v = e.get<std::int64_t>();
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw Error(ErrorKind::IndexOutOfRange,
                      "element " + std::to_string(v) + " outside universe of " + std::to_string(n));
        idx = static_cast<std::size_t>(v);
      } else {
        throw Error(ErrorKind::ParseError, "set entries must be integers or labels");
      }
      m.set(idx);
    }
    sets.push_back(m);
  }
  out.family = SetFamily(n, std::move(sets));
  return out;
}

std::string writeFamily(const SetFamily& f, const std::vector<std::string>& labels) {
  json doc;
  doc["universe"] = f.universeSize();
  if (!labels.empty()) doc["labels"] = labels;
  json sets = json::array();
  for (const auto& s : f.sets()) sets.push_back(s.indices());
  doc["sets"] = std::move(sets);
  return doc.dump() + "\n";
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t number(std::string_view tok, std::size_t lineNo) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(lineNo) + ": expected a number, got \"" + std::string(tok) + "\"");
  return v;
}

struct ParsedLines {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::vector<Edge> dc;
  std::vector<Edge> dh;
};

ParsedLines parseLines(std::string_view text, bool allowSplit) {
  ParsedLines out;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineNo;
    const auto t = tokens(line);
    if (t.empty() || t[0] == "c") continue;
    const auto where = "line " + std::to_string(lineNo) + ": ";
    if (t[0] == "p") {
      if (out.header) throw Error(ErrorKind::ParseError, where + "duplicate header");
      if (t.size() != 4 || t[1] != "bip") throw Error(ErrorKind::ParseError, where + "expected `p bip <nX> <nY>`");
      out.header = {number(t[2], lineNo), number(t[3], lineNo)};
      continue;
    }
    const bool split = t[0] == "dc" || t[0] == "dh";
    if (t[0] != "e" && !split) throw Error(ErrorKind::ParseError, where + "unknown line type \"" + std::string(t[0]) + "\"");
    if (split && !allowSplit) throw Error(ErrorKind::ParseError, where + "decomposition line in a graph file");
    if (!out.header) throw Error(ErrorKind::ParseError, where + "edge before the header");
    if (t.size() != 3) throw Error(ErrorKind::ParseError, where + "expected `" + std::string(t[0]) + " <x> <y>`");
    const auto x = number(t[1], lineNo);
    const auto y = number(t[2], lineNo);
    const auto [nX, nY] = *out.header;
    if (x < 1 || x > nX || y < 1 || y > nY)
      throw Error(ErrorKind::IndexOutOfRange, where + "edge (" + std::to_string(x) + "," + std::to_string(y) +
                                                  ") outside " + std::to_string(nX) + "x" + std::to_string(nY));
    const Edge e{x - 1, y - 1};
    (t[0] == "e" ? out.edges : t[0] == "dc" ? out.dc : out.dh).push_back(e);
  }
  if (!out.header) throw Error(ErrorKind::ParseError, "missing `p bip <nX> <nY>` header");
  return out;
}

void appendEdges(std::ostringstream& out, const char* tag, const std::vector<Edge>& edges) {
  for (const auto& e : edges) out << tag << ' ' << e.x + 1 << ' ' << e.y + 1 << '\n';
}

std::vector<Edge> sorted(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

BipartiteGraph parseGraph(std::string_view text) {
  const auto p = parseLines(text, false);
  return BipartiteGraph::build(p.header->first, p.header->second, p.edges);
}

std::string writeGraph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "p bip " << g.nX() << ' ' << g.nY() << '\n';
  appendEdges(out, "e", g.edges());
  return out.str();
}

EdgeSplit parseDecomposition(std::string_view text) {
  auto p = parseLines(text, true);
  std::vector<Edge> edges = p.edges;
  if (edges.empty()) {
    edges = p.dc;
    edges.insert(edges.end(), p.dh.begin(), p.dh.end());
  }
  return {BipartiteGraph::build(p.header->first, p.header->second, edges), std::move(p.dc), std::move(p.dh)};
}

std::string writeDecomposition(const EdgeSplit& split) {
  std::ostringstream out;
  out << writeGraph(split.graph);
  appendEdges(out, "dc", sorted(split.edgesC));
  appendEdges(out, "dh", sorted(split.edgesH));
  return out.str();
}

std::string readInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    if (std::cin.bad()) throw Error(ErrorKind::IoError, "failed reading standard input");
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void writeFile(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::IoError, "short write to " + path);
}

std::string checksum(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

}  // namespace ucc
