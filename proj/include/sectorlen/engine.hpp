#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "sectorlen/config.hpp"
#include "sectorlen/graph.hpp"
#include "sectorlen/sld.hpp"

namespace sectorlen {

/// Exact SLD of a d=2 graph state: A_k = #{r in F_2^n : swt(r, Gamma r) = k}.
/// Iterates color assignments in Gray-code order, updating s = Gamma r by one
/// row XOR per step. Parallel blocks re-seed the running pair at their start
/// index; the result is independent of the worker count.
/// Dispatches to the qudit kernel when g.d() != 2.
Sld brute_force_sld(const Graph& g, const EnumerationOptions& opts = {});

/// Exact SLD of a qudit graph state over all d^n color assignments,
/// enumerated with an odometer that applies one weight-row addition per
/// digit increment.
Sld brute_force_sld_qudit(const Graph& g, const EnumerationOptions& opts = {});

/// Reference implementation: recomputes s = Gamma r from scratch for every
/// assignment. Used to cross-check the incremental kernels.
std::vector<std::uint64_t> brute_force_weights_serial(const Graph& g);

/// Exact partial SLD A_0..A_kmax from the assignments with at most k_max
/// non-white vertices. Runtime O((d n)^k_max).
std::vector<Int> low_weight_sectors(const Graph& g, int k_max);

/// A_1 for arbitrary d: each weight-column contributes the nontrivial
/// annihilator count gcd(d, gcd of column entries) - 1.
Int a1_exact_qudit(const Graph& g);

/// Lower and upper bounds on A_2 for prime d, from leaves and the
/// twin-pair profile T_m.
std::pair<Int, Int> a2_bounds_prime(const Graph& g);

/// SLD of an arbitrary pure state given its amplitudes (length d^n,
/// normalized within 1e-10; d^n <= 4096). Entries within 1e-6 of an
/// integer are snapped.
Sld statevector_sld(const std::vector<std::complex<double>>& amplitudes, int d);

/// Computational-basis amplitudes of the graph state of g.
std::vector<std::complex<double>> graph_state_amplitudes(const Graph& g);

/// Amplitudes of the n-qubit W state.
std::vector<std::complex<double>> w_state_amplitudes(int n);

/// Mean/variance of the normalized SLD from graph quantities alone
/// (d=2: isolated/leaf/twin counts; d>2: exact A_1, A_2 sectors).
Moments moments_from_graph(const Graph& g);

/// Exact moments of a_k = A_k / d^n; requires pure-state normalization.
Moments moments_from_sld(const Sld& sld);

/// Residuals (LHS minus RHS) of the n+1 MacWilliams identities; all zero
/// exactly when the identities hold.
std::vector<Rat> macwilliams_residuals(const Sld& sld);

/// Checks A_k <= sum_{1<=b<=k} C(n,b)(d-1)^b for k >= 1 (and A_0 <= 1).
bool coarse_bound_check(const Sld& sld);

}  // namespace sectorlen
