#pragma once

#include <optional>
#include <string>

#include "sectorlen/graph.hpp"
#include "sectorlen/sld.hpp"

namespace sectorlen {

enum class NoiseKind { global, local };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::local;
  Rat p;  // strength in [0,1]

  NoiseSpec() = default;
  NoiseSpec(NoiseKind kind, Rat p);
};

/// Sector transform of depolarizing noise. Local: A_k -> (1-p)^{2k} A_k.
/// Global: A_0 stays 1 (the identity component is preserved by the channel),
/// A_k -> (1-p)^2 A_k for k >= 1. Exact for rational p.
Sld apply_noise(const Sld& sld, const NoiseSpec& noise);

/// Probability that the channel applies one specific Pauli operator of the
/// given symplectic weight.
Rat pauli_error_probability(const NoiseSpec& noise, int d, int n, int weight);

enum class Verdict { entangled, inconclusive };

struct CriterionResult {
  Verdict verdict = Verdict::inconclusive;
  Rat value;  // k-SL: margin A_k - bound; purity: the criterion LHS
};

/// k-body sector criterion: entangled iff A_k > C(n,k)(d-1)^k.
CriterionResult ksl_criterion(const Sld& sld, int k);

/// Purity criterion on sectors: entangled iff
/// sum_k ((d-1)n - dk) A_k < 0.
CriterionResult purity_criterion(const Sld& sld);

/// Size-m marginal version: entangled iff
/// sum_k (C(n,m) - d^m C(n-k,m)) A_k > 0. Reduces to purity_criterion
/// (with flipped sign convention) at m=1.
CriterionResult purity_criterion_general(const Sld& sld, int m);

struct ThresholdReport {
  std::string criterion;
  std::optional<double> p_lower_bound;  // absent when the criterion is silent
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  long evaluations = 0;
  bool exact_verified = false;
};

struct ThresholdOptions {
  int grid = 2048;       // uniform grid over [0,1]
  double tol = 1e-12;    // final bisection bracket width
  bool exact_verify = true;  // re-check the bracket signs in exact arithmetic
};

/// Largest root of f(p) = sum_k ((d-1)n - dk)(1-p)^{2k} a_k where the sign
/// changes from minus to plus; every p below it keeps the noisy state
/// entangled. Absent when f(0) >= 0.
ThresholdReport threshold_purity(const Sld& sld, const ThresholdOptions& opts = {});

/// p = 1 - ((d-1)^n / A_n)^{1/(2n)} when A_n > (d-1)^n, absent otherwise.
ThresholdReport threshold_nsl(const Sld& sld);

/// Global-white-noise PPT bound for stabilizer states: 1 - 1/(d^{n-1}+1).
double threshold_ppt_global_stabilizer(int n, int d);

/// Local-white-noise PPT bound for GHZ states, even n: the dedicated qubit
/// form at d=2, the general-d form otherwise.
double threshold_ppt_ghz_local(int n, int d);

/// The general-d form evaluated for any d >= 2 (agrees with the qubit form
/// at d=2 to within floating error).
double threshold_ppt_ghz_local_general(int n, int d);

/// Distillation bound 1 - 2^{-2/(2 + max over edges of deg(i)+deg(j))};
/// requires d=2 and at least one edge.
double threshold_distillation(const Graph& g);

}  // namespace sectorlen
