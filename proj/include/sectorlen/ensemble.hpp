#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sectorlen/closed_forms.hpp"
#include "sectorlen/config.hpp"
#include "sectorlen/sld.hpp"

namespace sectorlen {

/// Expected k-body sector of an Erdos-Renyi graph state:
/// <A_k> = C(n,k) 2^{-n} sum_b C(k,b) 2^b (1+(1-2q)^b)^{n-k} (1-(1-2q)^b)^{k-b}.
std::vector<double> expected_sld_er(int n, double q);

/// n(1-q)^{n-1}; equals expected_sld_er(n,q)[1].
double expected_isolated(int n, double q);

/// 3n/4 - n(1-q)^{n-1}/4.
double expected_mean_er(int n, double q);

/// Total variation distance of two probability vectors of equal length;
/// both must sum to 1 within 1e-9.
double tvd(std::span<const double> a, std::span<const double> b);

/// Exact-rational total variation distance (no normalization check).
Rat tvd_exact(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// TVD between the normalized W-state SLD and binomial(n, 1/2):
/// even n: C(n,n/2)/2^n; odd n: (n^2-1) C(n,(n-1)/2) / (2^n n^2).
Rat tvd_w_binomial_closed(int n);

/// Binomial with the same mean as the normalized SLD: p = <k>_a / n.
BinomialDistribution mean_matched_binomial(const Sld& sld);

struct EnsembleOptions {
  bool fixed_p = false;  // compare against b(3/4) instead of the mean match
  EnumerationOptions enumeration;
};

struct EnsembleReport {
  int n = 0;
  double q = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
  bool fixed_p = false;
  std::vector<double> mean_sld;      // per-k sample means of A_k
  std::vector<double> sld_std;       // per-k sample standard deviation of A_k
  std::vector<double> expected_sld;  // closed-form prediction
  double mean_tvd = 0.0;
  double tvd_std = 0.0;   // unbiased sample standard deviation
  double tvd_p16 = 0.0;   // empirical 16th percentile
  double tvd_p84 = 0.0;   // empirical 84th percentile
  std::vector<double> tvds;  // per-sample values, in sample order
};

/// Samples Erdos-Renyi graph states, computes each exact SLD by brute force,
/// and records the TVD to the mean-matched binomial. Per-sample RNG streams
/// derive from (seed, index), so the result is independent of scheduling.
EnsembleReport monte_carlo_sld(int n, double q, long samples, std::uint64_t seed,
                               const EnsembleOptions& opts = {});

}  // namespace sectorlen
