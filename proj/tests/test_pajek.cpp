#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "scimap/error.hpp"
#include "scimap/graph.hpp"
#include "scimap/pajek.hpp"
#include "scimap/synthetic.hpp"

using namespace scimap;

TEST_CASE("citation network layout") {
  const auto m = fixture::citations({{0, 3}, {1, 2}});
  std::ostringstream out;
  pajek::write_citation_network(out, m);
  CHECK(out.str() == "*Vertices 2\n1 \"R0\"\n2 \"R1\"\n*Arcs\n1 2 3\n2 1 1\n2 2 2\n");
}

TEST_CASE("property: citation network round-trips") {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto m = synthetic::random_sparse(30, 0.15, s);
    std::stringstream text;
    pajek::write_citation_network(text, m);
    const auto net = pajek::read(text);
    REQUIRE(net.labels.size() == 30);
    CHECK(net.arcs.size() == m.nonzero());
    for (const auto& a : net.arcs)
      CHECK(static_cast<double>(m.count(a.from - 1, a.to - 1)) == a.weight);
  }
}

TEST_CASE("threshold graph export") {
  const auto corr = fixture::uniform_correlation(3, 0.5);
  const auto g = threshold_graph(corr, 0.4);
  std::stringstream text;
  pajek::write_threshold_graph(text, g, corr);
  const auto net = pajek::read(text);
  CHECK(net.labels == std::vector<std::string>{"J0", "J1", "J2"});
  REQUIRE(net.edges.size() == 3);
  CHECK(net.edges[0].from == 1);
  CHECK(net.edges[0].to == 2);
  CHECK(net.edges[0].weight == 0.5);
}

TEST_CASE("reader skips comments and rejects junk") {
  std::istringstream ok("% header\n*vertices 1\n1 \"A\"\n*arcs\n");
  CHECK(pajek::read(ok).labels == std::vector<std::string>{"A"});
  std::istringstream bad("*Vertices 1\n1 \"A\"\n*Arcs\n1 x 3\n");
  CHECK_THROWS_AS(pajek::read(bad), Error);
}
