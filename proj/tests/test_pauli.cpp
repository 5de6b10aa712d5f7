#include <doctest.h>

#include "oracles.hpp"
#include "sectorlen/engine.hpp"
#include "sectorlen/errors.hpp"
#include "sectorlen/pauli.hpp"

using namespace sectorlen;

TEST_CASE("symplectic weight") {
  CHECK(symplectic_weight({{0, 0, 0}, {0, 0, 0}}) == 0);
  CHECK(symplectic_weight({{0, 1, 0}, {1, 0, 1}}) == 3);  // Z X Z
  CHECK(symplectic_weight({{1, 0}, {0, 2}}) == 2);        // d=3 X, Z^2
}

TEST_CASE("graph stabilizer generators of P3") {
  const StabilizerGroup s = graph_stabilizer_generators(make_family(Family::path, 3));
  REQUIRE(s.generators.size() == 3);
  // S1 = X Z I, S2 = Z X Z, S3 = I Z X
  CHECK(s.generators[0].r == std::vector<int>{1, 0, 0});
  CHECK(s.generators[0].s == std::vector<int>{0, 1, 0});
  CHECK(s.generators[1].r == std::vector<int>{0, 1, 0});
  CHECK(s.generators[1].s == std::vector<int>{1, 0, 1});
  CHECK(s.generators[2].r == std::vector<int>{0, 0, 1});
  CHECK(s.generators[2].s == std::vector<int>{0, 1, 0});
}

TEST_CASE("graph generators for the edgeless pair and C4") {
  const StabilizerGroup e2 = graph_stabilizer_generators(make_family(Family::edgeless, 2));
  CHECK(e2.generators[0].r == std::vector<int>{1, 0});
  CHECK(e2.generators[0].s == std::vector<int>{0, 0});
  CHECK(e2.generators[1].r == std::vector<int>{0, 1});
  CHECK(e2.generators[1].s == std::vector<int>{0, 0});

  const StabilizerGroup c4 = graph_stabilizer_generators(make_family(Family::cycle, 4));
  CHECK(c4.generators[0].r == std::vector<int>{1, 0, 0, 0});
  CHECK(c4.generators[0].s == std::vector<int>{0, 1, 0, 1});  // X Z I Z
}

TEST_CASE("group constructor rejects anticommuting or dependent generators") {
  // X and Z on one qubit anticommute.
  CHECK_THROWS_AS(StabilizerGroup(1, 2, {{{1}, {0}}, {{0}, {1}}}),
                  std::invalid_argument);
  // XX and XX are dependent (g = n = 2).
  CHECK_THROWS_AS(StabilizerGroup(2, 2, {{{1, 1}, {0, 0}}, {{1, 1}, {0, 0}}}),
                  std::invalid_argument);
}

TEST_CASE("group weight distribution: GHZ(3) generators") {
  // XXX, ZZI, IZZ
  const StabilizerGroup s(3, 2,
                          {{{1, 1, 1}, {0, 0, 0}},
                           {{0, 0, 0}, {1, 1, 0}},
                           {{0, 0, 0}, {0, 1, 1}}});
  const Sld wd = group_weight_distribution(s);
  CHECK(wd.A == std::vector<Rat>{1, 0, 3, 4});
}

TEST_CASE("group weight distribution matches graph brute force (dual route)") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = sample_erdos_renyi(9, 0.4, seed);
    const Sld via_group = group_weight_distribution(graph_stabilizer_generators(g));
    const Sld via_graph = brute_force_sld(g);
    CHECK(via_group.A == via_graph.A);
  }
  // Larger instances up to the stated n = 14.
  for (int n : {12, 14}) {
    const Graph g = sample_erdos_renyi(n, 0.5, 777 + n);
    CHECK(group_weight_distribution(graph_stabilizer_generators(g)).A ==
          brute_force_sld(g).A);
  }
}

TEST_CASE("group weight distribution: single generator, sums, identity count") {
  const StabilizerGroup one(1, 2, {{{1}, {0}}});
  CHECK(group_weight_distribution(one).A == std::vector<Rat>{1, 1});

  for (std::uint64_t seed = 40; seed < 48; ++seed) {
    const Graph g = sample_erdos_renyi(8, 0.5, seed);
    const Sld wd = group_weight_distribution(graph_stabilizer_generators(g));
    CHECK(wd.total() == Rat(256));  // 2^g
    CHECK(wd.A[0] == 1);            // identity only
  }
}

TEST_CASE("parallel group enumeration equals the serial reference") {
  const Graph g = sample_erdos_renyi(11, 0.5, 99);
  const StabilizerGroup s = graph_stabilizer_generators(g);
  const auto serial = group_weight_distribution_serial(s);
  EnumerationOptions opts;
  for (int threads : {1, 3, 8}) {
    opts.threads = threads;
    const Sld wd = group_weight_distribution(s, opts);
    for (int k = 0; k <= s.n; ++k) CHECK(wd.A[k] == Rat(Int(serial[k])));
  }
}

TEST_CASE("qudit group enumeration: GHZ_3(3) stabilizer") {
  // Generators: X X X, Z Z^{-1} I, I Z Z^{-1} for d=3.
  const StabilizerGroup s(3, 3,
                          {{{1, 1, 1}, {0, 0, 0}},
                           {{0, 0, 0}, {1, 2, 0}},
                           {{0, 0, 0}, {0, 1, 2}}});
  const Sld wd = group_weight_distribution(s);
  CHECK(wd.A == std::vector<Rat>{1, 0, 6, 20});
  const auto serial = group_weight_distribution_serial(s);
  for (int k = 0; k <= 3; ++k) CHECK(wd.A[k] == Rat(Int(serial[k])));
}

TEST_CASE("generator text parsing") {
  const StabilizerGroup s = parse_generators("XXX\nZZI\nIZZ\n");
  CHECK(s.n == 3);
  CHECK(s.generators.size() == 3);
  CHECK(group_weight_distribution(s).A == std::vector<Rat>{1, 0, 3, 4});

  const StabilizerGroup q = parse_generators("X1 X1 X1\nZ1 Z2 I\nI Z1 Z2\n", 3);
  CHECK(q.d == 3);
  CHECK(group_weight_distribution(q).A == std::vector<Rat>{1, 0, 6, 20});

  CHECK_THROWS_AS(parse_generators("XX\nXXX\n"), parse_error);
  CHECK_THROWS_AS(parse_generators("XQ\n"), parse_error);
  CHECK_THROWS_AS(parse_generators(""), parse_error);
}

TEST_CASE("surface code distance 3 weight distribution") {
  const std::vector<Rat> expected{1, 0, 4, 12, 22, 52, 100, 148, 129, 44};
  for (LogicalState ls : {LogicalState::zero, LogicalState::one,
                          LogicalState::plus, LogicalState::minus}) {
    const StabilizerGroup s = rotated_surface_code_logical_generators(3, ls);
    CHECK(s.generators.size() == 9);
    CHECK(group_weight_distribution(s).A == expected);
  }
  CHECK_THROWS_AS(rotated_surface_code_logical_generators(4, LogicalState::zero),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotated_surface_code_logical_generators(1, LogicalState::zero),
                  std::invalid_argument);
}

TEST_CASE("generator cap is enforced") {
  const Graph g = sample_erdos_renyi(12, 0.5, 3);
  EnumerationOptions opts;
  opts.max_generators = 10;
  CHECK_THROWS_AS(group_weight_distribution(graph_stabilizer_generators(g), opts),
                  resource_error);
}
