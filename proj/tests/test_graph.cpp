#include <doctest.h>

#include <cmath>
#include <set>

#include "sectorlen/engine.hpp"
#include "sectorlen/errors.hpp"
#include "sectorlen/graph.hpp"

using namespace sectorlen;

namespace {

Graph fig3_graph() {
  // n=5, edges {2-5, 4-5, 3-4, 3-5} (1-based): isolated 1, leaf 2, twins {3,4}.
  return parse_edge_list("2 5\n4 5\n3 4\n3 5\n", 5, 2);
}

}  // namespace

TEST_CASE("graph6 parses the 3-vertex path") {
  // P3 with edges 1-2, 2-3: n='B'+? -> 'B' is n=3; bits x(0,1)=1, x(0,2)=0, x(1,2)=1
  // => 101000 -> 40 + 63 = 'g'.
  const Graph g = parse_graph6("Bg");
  CHECK(g.n() == 3);
  CHECK(g.d() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("graph6 parses the edgeless 3-vertex graph") {
  const Graph g = parse_graph6("B?");
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6("B"), parse_error);        // truncated body
  CHECK_THROWS_AS(parse_graph6("Bgg"), parse_error);      // trailing bytes
  CHECK_THROWS_AS(parse_graph6("B\x07"), parse_error);    // non-printable byte
  CHECK_THROWS_AS(parse_graph6(""), parse_error);
  CHECK_THROWS_AS(parse_graph6("~"), parse_error);        // truncated long header
}

TEST_CASE("graph6 long form round-trips against the short form") {
  // '~' then n encoded in 3 bytes; n=3 -> '?', '?', 'B'.
  const Graph g = parse_graph6("~??Bg");
  CHECK(g.n() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("edge list parsing") {
  const Graph p3 = parse_edge_list("1 2\n2 3", 3, 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK_FALSE(p3.has_edge(0, 2));

  const Graph weighted = parse_edge_list("1 2 2", 2, 6);
  CHECK(weighted.weight(0, 1) == 2);

  CHECK_THROWS_AS(parse_edge_list("1 1", 3, 2), parse_error);    // self-loop
  CHECK_THROWS_AS(parse_edge_list("1 4", 3, 2), parse_error);    // out of range
  CHECK_THROWS_AS(parse_edge_list("1 2 5", 3, 4), parse_error);  // weight >= d
  CHECK_THROWS_AS(parse_edge_list("1 2 0", 3, 4), parse_error);  // weight <= 0
  // duplicate edge: last weight wins
  CHECK(parse_edge_list("1 2 1\n1 2 3", 2, 5).weight(0, 1) == 3);
}

TEST_CASE("families") {
  const Graph star = make_family(Family::star, 4);
  CHECK(star.degree(0) == 3);
  CHECK(star.edge_count() == 3);
  CHECK_FALSE(star.has_edge(1, 2));

  const Graph pust = make_family(Family::pusteblume, 5);
  const std::set<std::pair<int, int>> want{{0, 1}, {0, 2}, {0, 3}, {1, 4}};
  std::set<std::pair<int, int>> got;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (pust.has_edge(i, j)) got.insert({i, j});
  CHECK(got == want);

  const Graph c4 = make_family(Family::cycle, 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.has_edge(0, 1));
  CHECK(c4.has_edge(3, 0));

  CHECK_THROWS_AS(make_family(Family::pusteblume, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_family(Family::cycle, 2), std::invalid_argument);

  const Graph grid = make_grid2d(2, 3);
  CHECK(grid.n() == 6);
  CHECK(grid.edge_count() == 7);
  const Graph cube = make_grid3d(2, 2, 2);
  CHECK(cube.n() == 8);
  CHECK(cube.edge_count() == 12);
}

TEST_CASE("properties of the Fig. 3 style graph") {
  const GraphProperties p = properties(fig3_graph());
  CHECK(p.isolated == 1);
  CHECK(p.leaves == 1);
  CHECK(p.twins == 1);
  CHECK(p.edge_count == 4);
}

TEST_CASE("properties of edgeless and star graphs") {
  const GraphProperties e4 = properties(make_family(Family::edgeless, 4));
  CHECK(e4.isolated == 4);
  CHECK(e4.leaves == 0);
  CHECK(e4.twins == 6);               // C(4,2) all-isolated pairs
  CHECK(e4.twins_by_shared[0] == 6);  // T_0 = C(I,2)

  const GraphProperties s5 = properties(make_family(Family::star, 5));
  CHECK(s5.isolated == 0);
  CHECK(s5.leaves == 4);
  CHECK(s5.twins == 6);               // leaf pairs share the center
  CHECK(s5.twins_by_shared[1] == 6);
  CHECK(s5.max_adjacent_degree_sum == 5);
}

TEST_CASE("T_0 counts isolated pairs plus isolated edges") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const Graph g = sample_erdos_renyi(7, 0.25, seed);
    const GraphProperties p = properties(g);
    long isolated_edges = 0;
    for (int i = 0; i < g.n(); ++i) {
      for (int j = i + 1; j < g.n(); ++j) {
        if (g.has_edge(i, j) && g.degree(i) == 1 && g.degree(j) == 1) {
          ++isolated_edges;
        }
      }
    }
    CHECK(p.twins_by_shared[0] ==
          p.isolated * (p.isolated - 1) / 2 + isolated_edges);
  }
}

TEST_CASE("isolated count equals number of zero rows") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = sample_erdos_renyi(8, 0.3, seed);
    long zero_rows = 0;
    for (int i = 0; i < g.n(); ++i) {
      if (g.degree(i) == 0) ++zero_rows;
    }
    CHECK(properties(g).isolated == zero_rows);
  }
}

TEST_CASE("kernel certificate for cycles and the edgeless graph") {
  const KernelCertificate c4 = kernel_certificate(make_family(Family::cycle, 4));
  CHECK(c4.kernel_dim == 2);
  REQUIRE(c4.all_odd_solution.has_value());
  // Check Gamma r = 1 by brute force definition.
  const Graph g4 = make_family(Family::cycle, 4);
  const auto& r = *c4.all_odd_solution;
  for (int i = 0; i < 4; ++i) {
    int s = 0;
    for (int j = 0; j < 4; ++j) s ^= g4.weight(i, j) & r[j];
    CHECK(s == 1);
  }

  const KernelCertificate c3 = kernel_certificate(make_family(Family::cycle, 3));
  CHECK_FALSE(c3.all_odd_solution.has_value());

  const KernelCertificate e3 = kernel_certificate(make_family(Family::edgeless, 3));
  CHECK(e3.kernel_dim == 3);
  CHECK_FALSE(e3.all_odd_solution.has_value());

  CHECK_THROWS_AS(kernel_certificate(make_family(Family::edgeless, 2, 3)),
                  std::invalid_argument);
}

TEST_CASE("kernel certificate agrees with brute force over all vectors") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Graph g = sample_erdos_renyi(6, 0.4, seed);
    const KernelCertificate cert = kernel_certificate(g);
    int kernel = 0;
    bool any_solution = false;
    for (std::uint64_t r = 0; r < 64; ++r) {
      bool in_kernel = true, solves = true;
      for (int i = 0; i < 6; ++i) {
        int s = 0;
        for (int j = 0; j < 6; ++j) s ^= g.weight(i, j) & static_cast<int>(r >> j);
        if (s & 1) in_kernel = false;
        if (!(s & 1)) solves = false;
      }
      if (in_kernel) ++kernel;
      if (solves) any_solution = true;
    }
    CHECK((1 << cert.kernel_dim) == kernel);
    CHECK(cert.all_odd_solution.has_value() == any_solution);
  }
}

TEST_CASE("local complementation") {
  const Graph p3 = make_family(Family::path, 3);
  const Graph k3 = local_complement(p3, 1);
  CHECK(k3.has_edge(0, 2));  // triangle closed
  CHECK(k3.has_edge(0, 1));
  CHECK(k3.has_edge(1, 2));

  const Graph back = local_complement(make_family(Family::complete, 3), 0);
  CHECK_FALSE(back.has_edge(1, 2));  // K3 at vertex 1 -> path 2-1-3
  CHECK(back.has_edge(0, 1));
  CHECK(back.has_edge(0, 2));

  const Graph e = make_family(Family::edgeless, 4);
  const Graph same = local_complement(e, 2);
  CHECK(same.edge_count() == 0);
}

TEST_CASE("SLD is invariant under local complementation") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = sample_erdos_renyi(7, 0.45, seed);
    const Sld base = brute_force_sld(g);
    for (int v = 0; v < g.n(); ++v) {
      const Sld lc = brute_force_sld(local_complement(g, v));
      CHECK(lc.A == base.A);
    }
  }
  for (std::uint64_t seed = 50; seed < 52; ++seed) {
    const Graph g = sample_erdos_renyi(10, 0.5, seed);
    const Sld base = brute_force_sld(g);
    for (int v = 0; v < g.n(); ++v) {
      CHECK(brute_force_sld(local_complement(g, v)).A == base.A);
    }
  }
}

TEST_CASE("Erdos-Renyi sampling is deterministic and hits the edge mean") {
  const Graph a = sample_erdos_renyi(10, 0.37, 12345);
  const Graph b = sample_erdos_renyi(10, 0.37, 12345);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) CHECK(a.weight(i, j) == b.weight(i, j));

  CHECK(sample_erdos_renyi(6, 0.0, 7).edge_count() == 0);
  CHECK(sample_erdos_renyi(6, 1.0, 7).edge_count() == 15);

  const int n = 10, pairs = 45;
  const double q = 0.3;
  const long trials = 10000;
  long edges = 0;
  for (long t = 0; t < trials; ++t) {
    edges += sample_erdos_renyi(n, q, static_cast<std::uint64_t>(t)).edge_count();
  }
  const double mean = static_cast<double>(edges) / trials;
  const double expect = q * pairs;
  const double se = std::sqrt(pairs * q * (1 - q) / trials);
  CHECK(std::abs(mean - expect) < 3 * se);
}

TEST_CASE("graph constructor rejects invalid matrices") {
  CHECK_THROWS_AS(Graph(2, 2, {0, 1, 0, 0}), std::invalid_argument);  // asymmetric
  CHECK_THROWS_AS(Graph(2, 2, {1, 0, 0, 0}), std::invalid_argument);  // diagonal
  CHECK_THROWS_AS(Graph(2, 2, {0, 3, 3, 0}), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(Graph(0, 2, {}), std::invalid_argument);
}
