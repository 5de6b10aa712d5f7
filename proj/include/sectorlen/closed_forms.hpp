#pragma once

#include <vector>

#include "sectorlen/exact.hpp"
#include "sectorlen/sld.hpp"

namespace sectorlen {

struct BinomialDistribution {
  int n = 0;
  Rat p;
  std::vector<Rat> values;  // b_k = C(n,k) p^k (1-p)^{n-k}
};

/// A_k = C(n,k) (d-1)^k.
Sld sld_fully_separable(int n, int d = 2);

/// A_k = C(n,k) [k even] + 2^{n-1} [k = n].
Sld sld_ghz(int n);

/// A_k = C(n,k) ((d-1)^k + (-1)^k (d-1)) / d + [k = n] (d-1) d^{n-1}.
Sld sld_ghz_qudit(int n, int d);

/// Pusteblume graph state, n >= 5.
Sld sld_pusteblume(int n);

/// Ring cluster (cycle graph) state, n >= 3, arbitrary precision. The
/// full-body entry is cross-checked internally against the simplified
/// closed form of ring_cluster_full_body_sl.
Sld sld_ring_cluster(int n);

/// A_n of the ring cluster state: 1 + sum_k C(n-2k-1, k-1) n/k.
Int ring_cluster_full_body_sl(int n);

/// W state, exact rational entries: A_k = C(n,k)(1 + (4k/n^2)(2k-n-1)).
Sld sld_w_state(int n);

/// Four-qudit AME ring cluster state, odd d: (1,0,0,4(d^2-1),d^4-4(d^2-1)-1).
Sld sld_rc4_qudit(int d);

BinomialDistribution binomial_distribution(int n, const Rat& p);

/// b_k(p) as doubles (handy for the statistics paths).
std::vector<double> binomial_pmf(int n, double p);

}  // namespace sectorlen
