#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sectorlen/closed_forms.hpp"
#include "sectorlen/engine.hpp"
#include "sectorlen/errors.hpp"
#include "sectorlen/graph.hpp"

using namespace sectorlen;

namespace {

Graph fig3_graph() { return parse_edge_list("2 5\n4 5\n3 4\n3 5\n", 5, 2); }

Graph random_qudit_graph(int n, int d, double density, std::uint64_t seed) {
  std::vector<int> w(static_cast<std::size_t>(n) * n, 0);
  std::uint64_t c = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform_deviate(seed, c++) < density) {
        const int wt = 1 + static_cast<int>(uniform_deviate(seed, c++) * (d - 1));
        w[static_cast<std::size_t>(i) * n + j] = wt;
        w[static_cast<std::size_t>(j) * n + i] = wt;
      } else {
        ++c;
      }
    }
  }
  return Graph(n, d, std::move(w));
}

Graph rc4_graph(int d) {
  return parse_edge_list("1 2\n2 3\n3 4\n1 4 " + std::to_string(d - 1), 4, d);
}

bool equal_hist(const Sld& sld, const std::vector<std::uint64_t>& hist) {
  for (int k = 0; k <= sld.n; ++k) {
    if (sld.A[k] != Rat(Int(hist[k]))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("brute force SLD of named graphs") {
  CHECK(brute_force_sld(make_family(Family::path, 3)).A ==
        std::vector<Rat>{1, 0, 3, 4});
  CHECK(brute_force_sld(make_family(Family::edgeless, 3)).A ==
        std::vector<Rat>{1, 3, 3, 1});
  CHECK(brute_force_sld(make_family(Family::cycle, 4)).A ==
        std::vector<Rat>{1, 0, 2, 8, 5});
  CHECK(brute_force_sld(make_family(Family::edgeless, 1)).A ==
        std::vector<Rat>{1, 1});
}

TEST_CASE("gray-code kernel equals the serial reference at any worker count") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Graph g = sample_erdos_renyi(11, 0.5, seed);
    const auto serial = brute_force_weights_serial(g);
    EnumerationOptions opts;
    for (int threads : {1, 2, 5, 16}) {
      opts.threads = threads;
      CHECK(equal_hist(brute_force_sld(g, opts), serial));
    }
  }
}

TEST_CASE("qubit cap raises a resource error") {
  EnumerationOptions opts;
  opts.max_qubits = 5;
  CHECK_THROWS_AS(brute_force_sld(make_family(Family::cycle, 6), opts),
                  resource_error);
}

TEST_CASE("qudit brute force: small exacts") {
  // Single d=3 edge (GHZ pair).
  CHECK(brute_force_sld_qudit(make_family(Family::star, 2, 3)).A ==
        std::vector<Rat>{1, 0, 8});
  // RC_3(4) weighted square.
  CHECK(brute_force_sld_qudit(rc4_graph(3)).A ==
        std::vector<Rat>{1, 0, 0, 32, 48});
  // Single vertex: (1, d-1).
  CHECK(brute_force_sld_qudit(make_family(Family::edgeless, 1, 3)).A ==
        std::vector<Rat>{1, 2});
  // d=2 input goes through the same answer as the qubit kernel.
  const Graph g = sample_erdos_renyi(7, 0.5, 11);
  CHECK(brute_force_sld_qudit(g).A == brute_force_sld(g).A);
}

TEST_CASE("qudit kernel equals the serial reference at any worker count") {
  for (int d : {3, 4, 5}) {
    const Graph g = random_qudit_graph(5, d, 0.6, 17 + d);
    const auto serial = brute_force_weights_serial(g);
    EnumerationOptions opts;
    for (int threads : {1, 3, 7}) {
      opts.threads = threads;
      CHECK(equal_hist(brute_force_sld_qudit(g, opts), serial));
    }
  }
}

TEST_CASE("qudit cap raises a resource error") {
  EnumerationOptions opts;
  opts.max_log2_states = 10;
  CHECK_THROWS_AS(brute_force_sld_qudit(random_qudit_graph(5, 5, 0.5, 1), opts),
                  resource_error);
}

TEST_CASE("low-weight sectors agree with full enumeration") {
  SUBCASE("star graph A2 = L + T") {
    const auto low = low_weight_sectors(make_family(Family::star, 5), 2);
    CHECK(low[0] == 1);
    CHECK(low[1] == 0);
    CHECK(low[2] == 10);  // 4 leaves + 6 twin pairs = C(5,2)
  }
  SUBCASE("Fig. 3 graph") {
    const auto low = low_weight_sectors(fig3_graph(), 2);
    CHECK(low[1] == 1);
    CHECK(low[2] == 2);
  }
  SUBCASE("k_max = 0") {
    CHECK(low_weight_sectors(fig3_graph(), 0) == std::vector<Int>{1});
  }
  SUBCASE("entry-wise against brute force, qubits and qudits") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const Graph g = sample_erdos_renyi(7, 0.4, seed);
      const Sld full = brute_force_sld(g);
      const auto low = low_weight_sectors(g, 4);
      for (int k = 0; k <= 4; ++k) CHECK(Rat(low[k]) == full.A[k]);
    }
    for (int d : {3, 4}) {
      const Graph g = random_qudit_graph(5, d, 0.5, 77 + d);
      const Sld full = brute_force_sld_qudit(g);
      const auto low = low_weight_sectors(g, 3);
      for (int k = 0; k <= 3; ++k) CHECK(Rat(low[k]) == full.A[k]);
    }
  }
}

TEST_CASE("A1 for prime d equals (d-1) I") {
  for (int d : {2, 3, 5}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Graph g = random_qudit_graph(5, d, 0.4, seed);
      const auto low = low_weight_sectors(g, 1);
      CHECK(low[1] == Int((d - 1) * properties(g).isolated));
      CHECK(a1_exact_qudit(g) == low[1]);
    }
  }
}

TEST_CASE("A1 gcd closed form matches d^n enumeration for composite d") {
  CHECK(a1_exact_qudit(parse_edge_list("1 2 2", 2, 6)) == 2);  // d=6 zero divisor
  CHECK(a1_exact_qudit(make_family(Family::edgeless, 3, 4)) == 9);
  for (int d : {4, 6, 8, 9}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const int n = 3 + static_cast<int>(seed % 4);  // 3..6
      const Graph g = random_qudit_graph(n, d, 0.5, seed * 13 + d);
      const Sld full = brute_force_sld_qudit(g);
      CHECK(Rat(a1_exact_qudit(g)) == full.A[1]);
    }
  }
}

TEST_CASE("A2 bounds for prime d bracket the exact value") {
  SUBCASE("RC_3(4): AME square") {
    const auto [lo, hi] = a2_bounds_prime(rc4_graph(3));
    const Sld full = brute_force_sld_qudit(rc4_graph(3));
    CHECK(lo == 0);
    CHECK(hi == 4);  // T_2 = 2 pairs, each at most d-1 = 2
    CHECK(full.A[2] == 0);
  }
  SUBCASE("edgeless n=3, d=3: exact") {
    const Graph g = make_family(Family::edgeless, 3, 3);
    const auto [lo, hi] = a2_bounds_prime(g);
    CHECK(lo == 12);  // T_0 = 3, (d-1)^2 = 4
    CHECK(hi == 12);
    CHECK(brute_force_sld_qudit(g).A[2] == 12);
  }
  SUBCASE("random sweep d in {2,3,5}") {
    for (int d : {2, 3, 5}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_qudit_graph(5, d, 0.5, seed * 7 + d);
        const auto [lo, hi] = a2_bounds_prime(g);
        const Rat a2 = brute_force_sld_qudit(g).A[2];
        CHECK(Rat(lo) <= a2);
        CHECK(a2 <= Rat(hi));
        // At d=2 every twin pair contributes, so the upper bound is exact
        // and equals L + T.
        if (d == 2) CHECK(Rat(hi) == a2);
      }
    }
  }
  CHECK_THROWS_AS(a2_bounds_prime(make_family(Family::edgeless, 2, 4)),
                  std::invalid_argument);
}

TEST_CASE("statevector oracle on simple states") {
  // |+> single qubit
  const std::vector<oracle::cd> plus{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  CHECK(statevector_sld(plus, 2).A == std::vector<Rat>{1, 1});

  // GHZ(3) amplitudes
  std::vector<oracle::cd> ghz(8, 0.0);
  ghz[0] = ghz[7] = 1.0 / std::sqrt(2.0);
  CHECK(statevector_sld(ghz, 2).A == std::vector<Rat>{1, 0, 3, 4});

  // W(4)
  CHECK(statevector_sld(oracle::w_state_amplitudes(4), 2).A ==
        std::vector<Rat>{1, 1, 3, 7, 4});

  std::vector<oracle::cd> unnorm{0.5, 0.5};
  CHECK_THROWS_AS(statevector_sld(unnorm, 2), std::invalid_argument);
}

TEST_CASE("statevector oracle equals brute force on random graph states") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = sample_erdos_renyi(6, 0.5, seed + 500);
    const Sld sv = statevector_sld(oracle::graph_state_amplitudes(g), 2);
    CHECK(sv.A == brute_force_sld(g).A);
  }
  for (int d : {3, 5}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Graph g = random_qudit_graph(4, d, 0.6, seed + 900);
      const Sld sv = statevector_sld(oracle::graph_state_amplitudes(g), d);
      CHECK(sv.A == brute_force_sld_qudit(g).A);
    }
  }
}

TEST_CASE("moments from graph: Fig. 3 and bounds") {
  const Moments m = moments_from_graph(fig3_graph());
  CHECK(m.mean == Rat(7, 2));
  CHECK(m.variance == Rat(5, 4));

  // Connected graph without isolated vertices: mean 3n/4.
  const Moments c8 = moments_from_graph(make_family(Family::cycle, 8));
  CHECK(c8.mean == Rat(6));

  const Moments e4 = moments_from_graph(make_family(Family::edgeless, 4));
  CHECK(e4.mean == Rat(2));  // n/2, fully separable minimum
}

TEST_CASE("moments from graph equal moments from SLD") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = sample_erdos_renyi(8, 0.4, seed);
    const Moments a = moments_from_graph(g);
    const Moments b = moments_from_sld(brute_force_sld(g));
    CHECK(a.mean == b.mean);
    CHECK(a.second_moment == b.second_moment);
    CHECK(a.variance == b.variance);
  }
  for (int d : {3, 5}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Graph g = random_qudit_graph(5, d, 0.5, seed + 31);
      const Moments a = moments_from_graph(g);
      const Moments b = moments_from_sld(brute_force_sld_qudit(g));
      CHECK(a.mean == b.mean);
      CHECK(a.variance == b.variance);
    }
  }
}

TEST_CASE("moment bounds for pure states hold on random graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 9;
    const Graph g = sample_erdos_renyi(n, 0.5, seed + 1000);
    const Moments m = moments_from_graph(g);
    CHECK(m.mean >= frac(n, 2));
    CHECK(m.mean <= frac(3 * n, 4));
    CHECK(m.second_moment >= frac(3 * n * n + 5 * n, 16));
    CHECK(m.second_moment <= frac(10 * n * n + 2 * n, 16));
    CHECK(m.variance <= frac((n + 1) * (n + 1), 16));
  }
}

TEST_CASE("moments_from_sld rejects non-normalized input") {
  Sld bad(2, 2, {1, 0, 0}, SldSource::file);
  CHECK_THROWS_AS(moments_from_sld(bad), std::invalid_argument);
  // mean of GHZ(3): 9/4
  CHECK(moments_from_sld(Sld(3, 2, {1, 0, 3, 4}, SldSource::file)).mean == Rat(9, 4));
  // edgeless n=2: mean 1
  CHECK(moments_from_sld(Sld(2, 2, {1, 2, 1}, SldSource::file)).mean == Rat(1));
}

TEST_CASE("MacWilliams residuals vanish exactly for pure states") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = sample_erdos_renyi(9, 0.45, seed);
    for (const Rat& r : macwilliams_residuals(brute_force_sld(g))) CHECK(r == 0);
  }
  const Graph q = random_qudit_graph(4, 3, 0.6, 5);
  for (const Rat& r : macwilliams_residuals(brute_force_sld_qudit(q))) CHECK(r == 0);

  // Maximally mixed pseudo-SLD fails at m=1.
  const Sld mixed(3, 2, {1, 0, 0, 0}, SldSource::file);
  CHECK(macwilliams_residuals(mixed)[1] != 0);
}

TEST_CASE("coarse bound holds for enumerated SLDs and rejects fabrications") {
  CHECK(coarse_bound_check(sld_ghz(6)));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(coarse_bound_check(brute_force_sld(sample_erdos_renyi(8, 0.5, seed))));
  }
  CHECK(coarse_bound_check(brute_force_sld_qudit(random_qudit_graph(4, 3, 0.5, 2))));
  // A_1 = n + 1 exceeds C(n,1).
  Sld fake(4, 2, {1, 5, 0, 0, 0}, SldSource::file);
  CHECK_FALSE(coarse_bound_check(fake));
}

TEST_CASE("Cor. 1: full-body sector at least 2^kernel_dim when certified") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = sample_erdos_renyi(8, 0.45, seed + 2000);
    const KernelCertificate cert = kernel_certificate(g);
    if (!cert.all_odd_solution) continue;
    const Sld sld = brute_force_sld(g);
    CHECK(sld.A[g.n()] >= Rat(pow_int(2, cert.kernel_dim)));
  }
}

TEST_CASE("A_n >= (d-1)^n for qudit graph states") {
  for (int d : {2, 3, 4, 5}) {
    const Graph g = random_qudit_graph(4, d, 0.6, 321 + d);
    const Sld sld = brute_force_sld_qudit(g);
    CHECK(sld.A[4] >= Rat(pow_int(Int(d - 1), 4)));
  }
}
