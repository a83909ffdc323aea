#include <random>
#include <sstream>

#include "doctest.h"
#include "mccp/instance_io.hpp"
#include "support/fixtures.hpp"

using namespace mccp;

namespace {
ParseErrorKind parse_failure(std::string_view text) {
  try {
    (void)parse_instance(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseErrorKind::kMalformedHeader;
}
}  // namespace

TEST_CASE("minimal well-formed file") {
  const ColoredGraph g = parse_instance("3 3 3\n0 1 0\n1 2 1\n0 2 2\n");
  CHECK(g == fixtures::triangle());
}

TEST_CASE("comments, blank lines and blank runs are accepted") {
  const ColoredGraph g = parse_instance("# a triangle\n\n3   3 3\n 0\t1 0\n# mid\n1 2 1\r\n\n0 2  2\n");
  CHECK(g == fixtures::triangle());
}

TEST_CASE("metadata comments are collected") {
  std::istringstream in("# density=0.5\n# note: free text\n# seed = 42\n2 1 1\n0 1 0\n");
  const ParsedInstance parsed = read_instance(in);
  CHECK(parsed.metadata.at("density") == "0.5");
  CHECK(parsed.metadata.at("seed") == "42");
  CHECK(parsed.metadata.size() == 2);
}

TEST_CASE("each kind of bad input is reported distinctly") {
  CHECK(parse_failure("2 1 1\n0 0 0\n") == ParseErrorKind::kSelfLoop);
  CHECK(parse_failure("") == ParseErrorKind::kMalformedHeader);
  CHECK(parse_failure("3 3\n") == ParseErrorKind::kMalformedHeader);
  CHECK(parse_failure("x 1 1\n0 1 0\n") == ParseErrorKind::kMalformedHeader);
  CHECK(parse_failure("0 0 1\n") == ParseErrorKind::kMalformedHeader);
  CHECK(parse_failure("2 1 1\n0 1\n") == ParseErrorKind::kMalformedEdge);
  CHECK(parse_failure("2 1 1\n0 -1 0\n") == ParseErrorKind::kMalformedEdge);
  CHECK(parse_failure("2 2 1\n0 1 0\n") == ParseErrorKind::kEdgeCountMismatch);
  CHECK(parse_failure("2 1 1\n0 1 0\n0 1 0\n") == ParseErrorKind::kEdgeCountMismatch);
  CHECK(parse_failure("2 1 1\n0 2 0\n") == ParseErrorKind::kNodeOutOfRange);
  CHECK(parse_failure("2 1 1\n0 1 1\n") == ParseErrorKind::kColorOutOfRange);
  CHECK(parse_failure("2 1 2\n0 1 0\n") == ParseErrorKind::kUnusedColor);
  CHECK(parse_failure("4 2 1\n0 1 0\n2 3 0\n") == ParseErrorKind::kDisconnected);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    (void)parse_instance("# header next\n3 2 1\n0 1 0\n1 1 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.kind() == ParseErrorKind::kSelfLoop);
  }
}

TEST_CASE("canonical writer") {
  const ColoredGraph tri(3, 3, {{2, 0, 2}, {1, 2, 1}, {1, 0, 0}});
  CHECK(write_instance(tri) == "3 3 3\n0 1 0\n0 2 2\n1 2 1\n");

  const ColoredGraph parallel(2, 2, {{1, 0, 1}, {0, 1, 0}});
  CHECK(write_instance(parallel) == "2 2 2\n0 1 0\n0 1 1\n");
  CHECK(write_instance(parallel, {{"density", "1"}}) == "# density=1\n2 2 2\n0 1 0\n0 1 1\n");
}

TEST_CASE("parse(write(g)) == g for random graphs") {
  std::mt19937_64 rng(4242);
  for (int rep = 0; rep < 100; ++rep) {
    const ColoredGraph g = fixtures::random_connected(2 + rng() % 30, 1 + rng() % 20, 0.3, rng);
    CHECK(parse_instance(write_instance(g)) == g);
  }
}
