#include "sectorlen/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace sectorlen {

NoiseSpec::NoiseSpec(NoiseKind kind_, Rat p_) : kind(kind_), p(std::move(p_)) {
  if (p < 0 || p > 1) throw std::invalid_argument("NoiseSpec: p must be in [0,1]");
}

Sld apply_noise(const Sld& sld, const NoiseSpec& noise) {
  sld.validate();
  const Rat q = 1 - noise.p;
  std::vector<Rat> A(sld.n + 1);
  A[0] = sld.A[0];
  if (noise.kind == NoiseKind::global) {
    const Rat q2 = q * q;
    for (int k = 1; k <= sld.n; ++k) A[k] = q2 * sld.A[k];
  } else {
    Rat factor = 1;
    const Rat q2 = q * q;
    for (int k = 1; k <= sld.n; ++k) {
      factor *= q2;  // (1-p)^{2k}
      A[k] = factor * sld.A[k];
    }
  }
  Sld out(sld.n, sld.d, std::move(A), sld.source);
  out.meta = sld.meta;
  out.meta["noise_kind"] = noise.kind == NoiseKind::global ? "global" : "local";
  out.meta["noise_p"] = rat_to_string(noise.p);
  return out;
}

Rat pauli_error_probability(const NoiseSpec& noise, int d, int n, int weight) {
  if (weight < 0 || weight > n) {
    throw std::invalid_argument("pauli_error_probability: weight out of range");
  }
  const Rat d2(Int(d) * d);
  if (noise.kind == NoiseKind::global) {
    const Rat unit = noise.p / Rat(pow_int(Int(d), 2 * static_cast<unsigned long>(n)));
    return weight == 0 ? 1 - noise.p + unit : unit;
  }
  Rat flip = noise.p / d2;                 // per-site non-identity coefficient
  Rat keep = 1 - noise.p + noise.p / d2;   // per-site identity coefficient
  Rat out = 1;
  for (int i = 0; i < weight; ++i) out *= flip;
  for (int i = 0; i < n - weight; ++i) out *= keep;
  return out;
}

CriterionResult ksl_criterion(const Sld& sld, int k) {
  if (k < 1 || k > sld.n) throw std::invalid_argument("ksl_criterion: k out of range");
  const Rat bound(binomial(sld.n, k) *
                  pow_int(Int(sld.d - 1), static_cast<unsigned long>(k)));
  CriterionResult out;
  out.value = sld.A[k] - bound;
  out.verdict = out.value > 0 ? Verdict::entangled : Verdict::inconclusive;
  return out;
}

CriterionResult purity_criterion(const Sld& sld) {
  CriterionResult out;
  out.value = 0;
  for (int k = 0; k <= sld.n; ++k) {
    out.value += Rat(Int(sld.d - 1) * sld.n - Int(sld.d) * k) * sld.A[k];
  }
  out.verdict = out.value < 0 ? Verdict::entangled : Verdict::inconclusive;
  return out;
}

CriterionResult purity_criterion_general(const Sld& sld, int m) {
  if (m < 1 || m > sld.n - 1) {
    throw std::invalid_argument("purity_criterion_general: m must be in 1..n-1");
  }
  const Rat cm(binomial(sld.n, m));
  const Rat dm(pow_int(Int(sld.d), static_cast<unsigned long>(m)));
  CriterionResult out;
  out.value = 0;
  for (int k = 0; k <= sld.n; ++k) {
    out.value += (cm - dm * Rat(binomial(sld.n - k, m))) * sld.A[k];
  }
  out.verdict = out.value > 0 ? Verdict::entangled : Verdict::inconclusive;
  return out;
}

// ---------------------------------------------------------------------------
// thresholds

namespace {

/// f(p) with normalized sectors in doubles; coefficients ((d-1)n - dk) a_k.
struct PurityPolynomial {
  std::vector<double> coef;
  mutable long evaluations = 0;

  explicit PurityPolynomial(const Sld& sld) {
    const std::vector<double> a = sld.normalized();
    coef.resize(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      coef[k] = ((sld.d - 1) * static_cast<double>(sld.n) -
                 static_cast<double>(sld.d) * k) * a[k];
    }
  }

  double operator()(double p) const {
    ++evaluations;
    const double q2 = (1.0 - p) * (1.0 - p);
    double acc = 0.0, pw = 1.0;
    for (std::size_t k = 0; k < coef.size(); ++k) {
      acc += coef[k] * pw;
      pw *= q2;
    }
    return acc;
  }
};

/// Exact sign of f at a rational point.
int purity_sign_exact(const Sld& sld, const Rat& p) {
  const Rat q2 = (1 - p) * (1 - p);
  Rat acc = 0, pw = 1;
  for (int k = 0; k <= sld.n; ++k) {
    acc += Rat(Int(sld.d - 1) * sld.n - Int(sld.d) * k) * sld.A[k] * pw;
    pw *= q2;
  }
  return sgn(acc);
}

}  // namespace

ThresholdReport threshold_purity(const Sld& sld, const ThresholdOptions& opts) {
  ThresholdReport report;
  report.criterion = "purity";
  const PurityPolynomial f(sld);
  if (f(0.0) >= 0.0) {
    report.evaluations = f.evaluations;
    return report;  // criterion silent at p=0
  }

  const int N = opts.grid;
  // Rightmost grid cell whose endpoints change sign from minus to plus;
  // f(1) = (d-1) n a_0 > 0 guarantees one exists.
  double lo = 0.0, hi = 1.0;
  bool found = false;
  double right = f(1.0);
  for (int i = N; i >= 1; --i) {
    const double left = f(static_cast<double>(i - 1) / N);
    if (left < 0.0 && right >= 0.0) {
      lo = static_cast<double>(i - 1) / N;
      hi = static_cast<double>(i) / N;
      found = true;
      break;
    }
    right = left;
  }
  if (!found) {
    report.evaluations = f.evaluations;
    return report;
  }
  while (hi - lo > opts.tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  report.p_lower_bound = 0.5 * (lo + hi);
  report.bracket_lo = lo;
  report.bracket_hi = hi;
  report.evaluations = f.evaluations;
  if (opts.exact_verify) {
    // Grid points and bisection midpoints are dyadic, so lo and hi convert
    // exactly; confirm the bracketing sign pattern without floating error.
    report.exact_verified = purity_sign_exact(sld, rat_from_double(lo)) < 0 &&
                            purity_sign_exact(sld, rat_from_double(hi)) >= 0;
  }
  return report;
}

ThresholdReport threshold_nsl(const Sld& sld) {
  ThresholdReport report;
  report.criterion = "nsl";
  const Int bound = pow_int(Int(sld.d - 1), static_cast<unsigned long>(sld.n));
  const Rat an = sld.A[sld.n];
  report.evaluations = 1;
  if (an <= Rat(bound)) return report;
  // p = 1 - ((d-1)^n / A_n)^{1/(2n)}, via logs to survive huge A_n.
  const double log2_ratio =
      log2_int(bound) + log2_int(an.get_den()) - log2_int(an.get_num());
  const double p = 1.0 - std::exp2(log2_ratio / (2.0 * sld.n));
  report.p_lower_bound = p;
  report.bracket_lo = p;
  report.bracket_hi = p;
  return report;
}

double threshold_ppt_global_stabilizer(int n, int d) {
  if (n < 2) throw std::invalid_argument("threshold_ppt_global_stabilizer: n must be >= 2");
  return 1.0 - 1.0 / (std::pow(static_cast<double>(d), n - 1) + 1.0);
}

double threshold_ppt_ghz_local(int n, int d) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument(
        "threshold_ppt_ghz_local: only even n is covered by the closed form");
  }
  if (d == 2) {
    return 1.0 - 1.0 / std::sqrt(std::pow(2.0, 2.0 - 2.0 / n) + 1.0);
  }
  return threshold_ppt_ghz_local_general(n, d);
}

double threshold_ppt_ghz_local_general(int n, int d) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument(
        "threshold_ppt_ghz_local_general: only even n is covered");
  }
  const double root4 = std::pow(4.0, 1.0 / n);
  const double root2 = std::pow(2.0, 1.0 / n);
  const double root2d = std::pow(2.0 * d, 1.0 / n);
  return 2.0 * d / (root4 + root2 * std::sqrt(4.0 + root2d) + 2.0 * d);
}

double threshold_distillation(const Graph& g) {
  if (g.d() != 2) throw std::invalid_argument("threshold_distillation: requires d=2");
  const GraphProperties props = properties(g);
  if (props.edge_count == 0) {
    throw std::invalid_argument("threshold_distillation: graph has no edges");
  }
  return 1.0 - std::exp2(-2.0 / (2.0 + static_cast<double>(props.max_adjacent_degree_sum)));
}

}  // namespace sectorlen
