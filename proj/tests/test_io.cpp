#include "doctest.h"

#include <filesystem>

#include "helpers.hpp"
#include "ucc/io.hpp"

using namespace testing;

TEST_CASE("graph format") {
  const auto g = parseGraph("c a path\np bip 2 2\ne 1 1\ne 2 1  \ne 2 2\n");
  CHECK(g == path(4));
  CHECK(writeGraph(g) == "p bip 2 2\ne 1 1\ne 2 1\ne 2 2\n");
  CHECK(parseGraph(writeGraph(c4())) == c4());
  // edges come out sorted whatever the input order
  CHECK(writeGraph(parseGraph("p bip 2 2\ne 2 2\ne 1 1\ne 2 1\n")) == writeGraph(g));

  CHECK(thrownKind([] { parseGraph("e 1 1\n"); }) == ErrorKind::ParseError);
  CHECK(thrownKind([] { parseGraph("p bip 1 1\ne 1\n"); }) == ErrorKind::ParseError);
  CHECK(thrownKind([] { parseGraph("p bip 1 1\ne 0 1\n"); }) == ErrorKind::IndexOutOfRange);
  CHECK(thrownKind([] { parseGraph("p bip 1 1\ne 1 2\n"); }) == ErrorKind::IndexOutOfRange);
  CHECK(thrownKind([] { parseGraph("p bip 1 1\ndc 1 1\n"); }) == ErrorKind::ParseError);
  CHECK(thrownKind([] { parseGraph("p bip 1 1\np bip 1 1\n"); }) == ErrorKind::ParseError);
  CHECK(thrownKind([] { parseGraph("p bip x 1\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("decomposition format") {
  const auto text = "p bip 3 2\ne 1 1\ne 2 1\ne 2 2\ne 3 2\ndc 1 1\ndc 2 1\ndh 2 2\ndh 3 2\n";
  const auto s = parseDecomposition(text);
  CHECK(s.graph == path(5));
  CHECK(s.edgesC == std::vector<Edge>{{0, 0}, {1, 0}});
  CHECK(s.edgesH == std::vector<Edge>{{1, 1}, {2, 1}});
  CHECK(writeDecomposition(s) == text);
  CHECK(validateDecomposition(parseDecomposition(writeDecomposition(s))).commonVertices == std::vector<VertexRef>{X(1)});

  // assignment lines alone define the graph
  const auto bare = parseDecomposition("p bip 3 2\ndc 1 1\ndc 2 1\ndh 2 2\ndh 3 2\n");
  CHECK(bare.graph == path(5));

  // unassigned and doubly assigned edges surface at validation
  const auto under = parseDecomposition("p bip 3 2\ne 1 1\ne 2 1\ne 2 2\ne 3 2\ndc 1 1\ndh 2 2\ndh 3 2\n");
  CHECK(thrownKind([&] { validateDecomposition(under); }) == ErrorKind::Undercover);
  const auto over = parseDecomposition("p bip 3 2\ne 1 1\ne 2 1\ne 2 2\ne 3 2\ndc 1 1\ndc 2 1\ndh 2 1\ndh 2 2\ndh 3 2\n");
  CHECK(thrownKind([&] { validateDecomposition(over); }) == ErrorKind::Overlap);
  CHECK(thrownKind([] { parseDecomposition("p bip 1 1\ndx 1 1\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("family format") {
  const auto f = parseFamily(R"({"universe": 3, "sets": [[0, 1], [2], [0, 1]]})");
  CHECK(f.family.sameSetsAs(fam(3, {{0, 1}, {2}})));
  CHECK(f.family.duplicatesCollapsed() == 1);
  CHECK(f.name(2) == "2");
  CHECK(parseFamily(writeFamily(f.family)).family.sets() == f.family.sets());

  const auto l = parseFamily(R"({"universe": 2, "labels": ["a", "b"], "sets": [["a"], [0, "b"]]})");
  CHECK(l.family.sameSetsAs(fam(2, {{0}, {0, 1}})));
  CHECK(l.name(1) == "b");
  const auto back = parseFamily(writeFamily(l.family, l.labels));
  CHECK(back.labels == l.labels);
  CHECK(back.family.sets() == l.family.sets());

  CHECK(thrownKind([] { parseFamily("{"); }) == ErrorKind::ParseError);
  CHECK(thrownKind([] { parseFamily(R"({"sets": []})"); }) == ErrorKind::ParseError);
  CHECK(thrownKind([] { parseFamily(R"({"universe": 2, "sets": [[2]]})"); }) == ErrorKind::IndexOutOfRange);
  CHECK(thrownKind([] { parseFamily(R"({"universe": 2, "sets": [[-1]]})"); }) == ErrorKind::IndexOutOfRange);
  CHECK(thrownKind([] { parseFamily(R"({"universe": 2, "labels": ["a"], "sets": []})"); }) ==
        ErrorKind::ParseError);
  CHECK(thrownKind([] { parseFamily(R"({"universe": 2, "labels": ["a", "b"], "sets": [["c"]]})"); }) ==
        ErrorKind::IndexOutOfRange);
}

TEST_CASE("generated files parse back losslessly") {
  for (auto k : allGenKinds()) {
    GenSpec s;
    s.kind = k;
    s.seed = 3;
    for (const auto& g : generate(s)) {
      if (const auto* b = g.graph()) {
        CHECK(parseGraph(writeGraph(*b)) == *b);
      } else if (const auto* f = g.family()) {
        CHECK(parseFamily(writeFamily(*f)).family.sets() == f->sets());
      } else {
        const auto back = parseDecomposition(writeDecomposition(*g.split()));
        CHECK(back.graph == g.split()->graph);
        CHECK(writeDecomposition(back) == writeDecomposition(*g.split()));
      }
    }
  }
}

TEST_CASE("files and checksums") {
  CHECK(checksum("") == "cbf29ce484222325");
  CHECK(checksum("a") == "af63dc4c8601ec8c");
  const auto p = (std::filesystem::temp_directory_path() / "ucc-io-test.txt").string();
  writeFile(p, "hello\n");
  CHECK(readInput(p) == "hello\n");
  std::filesystem::remove(p);
  CHECK(thrownKind([] { readInput("/nonexistent/dir/file"); }) == ErrorKind::IoError);
  CHECK(thrownKind([] { writeFile("/nonexistent/dir/file", "x"); }) == ErrorKind::IoError);
}
