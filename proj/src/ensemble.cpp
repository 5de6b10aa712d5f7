#include "sectorlen/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sectorlen/engine.hpp"
#include "sectorlen/errors.hpp"
#include "sectorlen/graph.hpp"
#include "sectorlen/parallel.hpp"

namespace sectorlen {

std::vector<double> expected_sld_er(int n, double q) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("expected_sld_er: q must be in [0,1]");
  std::vector<double> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    double sum = 0.0;
    for (int b = 0; b <= k; ++b) {
      const double x = std::pow(1.0 - 2.0 * q, b);  // b=0 gives 1, also at q=1/2
      const double even = 1.0 + x;
      const double odd = 1.0 - x;
      double term = to_double(Rat(binomial(k, b))) * std::pow(2.0, b);
      term *= (n - k == 0) ? 1.0 : std::pow(even, n - k);
      term *= (k - b == 0) ? 1.0 : std::pow(odd, k - b);
      sum += term;
    }
    out[k] = to_double(Rat(binomial(n, k))) * std::pow(2.0, -n) * sum;
  }
  return out;
}

double expected_isolated(int n, double q) {
  return n * std::pow(1.0 - q, n - 1);
}

double expected_mean_er(int n, double q) {
  return 0.75 * n - 0.25 * n * std::pow(1.0 - q, n - 1);
}

double tvd(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("tvd: length mismatch");
  double sa = 0.0, sb = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    acc += std::abs(a[i] - b[i]);
  }
  if (std::abs(sa - 1.0) > 1e-9 || std::abs(sb - 1.0) > 1e-9) {
    throw std::invalid_argument("tvd: inputs must sum to 1");
  }
  return 0.5 * acc;
}

Rat tvd_exact(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tvd_exact: length mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += abs(a[i] - b[i]);
  return acc / 2;
}

Rat tvd_w_binomial_closed(int n) {
  if (n < 2) throw std::invalid_argument("tvd_w_binomial_closed: n must be >= 2");
  const Int two_n = pow_int(2, static_cast<unsigned long>(n));
  Rat out;
  if (n % 2 == 0) {
    out = Rat(binomial(n, n / 2), two_n);
  } else {
    out = Rat(Int(Int(n) * n - 1) * binomial(n, (n - 1) / 2), two_n * n * n);
  }
  out.canonicalize();
  return out;
}

BinomialDistribution mean_matched_binomial(const Sld& sld) {
  if (!sld.is_pure_normalized()) {
    throw std::invalid_argument("mean_matched_binomial: SLD is not pure-normalized");
  }
  const Rat norm(pow_int(sld.d, static_cast<unsigned long>(sld.n)));
  Rat mean = 0;
  for (int k = 0; k <= sld.n; ++k) mean += k * (sld.A[k] / norm);
  const Rat p = mean / sld.n;
  if (p < 0 || p > 1) {
    throw std::invalid_argument("mean_matched_binomial: mean/n outside [0,1]");
  }
  return binomial_distribution(sld.n, p);
}

EnsembleReport monte_carlo_sld(int n, double q, long samples, std::uint64_t seed,
                               const EnsembleOptions& opts) {
  if (samples < 1) throw std::invalid_argument("monte_carlo_sld: samples must be >= 1");
  if (n > opts.enumeration.max_qubits) {
    throw resource_error("monte_carlo_sld: n exceeds the brute-force cap");
  }
  EnsembleReport report;
  report.n = n;
  report.q = q;
  report.samples = samples;
  report.seed = seed;
  report.fixed_p = opts.fixed_p;
  report.tvds.resize(samples);
  report.mean_sld.assign(n + 1, 0.0);
  report.sld_std.assign(n + 1, 0.0);
  report.expected_sld = expected_sld_er(n, q);

  std::vector<double> sums(n + 1, 0.0), squares(n + 1, 0.0);
  EnumerationOptions single = opts.enumeration;
  single.threads = 1;  // parallelism lives across samples here

#pragma omp parallel num_threads(worker_count(opts.enumeration.threads))
  {
    std::vector<double> local(n + 1, 0.0), local_sq(n + 1, 0.0);
#pragma omp for schedule(static)
    for (long idx = 0; idx < samples; ++idx) {
      const Graph g = sample_erdos_renyi(n, q, derive_seed(seed, idx));
      const Sld sld = brute_force_sld(g, single);
      const std::vector<double> a = sld.normalized();
      const double scale = std::pow(2.0, n);
      for (int k = 0; k <= n; ++k) {
        const double ak = a[k] * scale;
        local[k] += ak;
        local_sq[k] += ak * ak;
      }
      double p;
      if (opts.fixed_p) {
        p = 0.75;
      } else {
        double mean = 0.0;
        for (int k = 0; k <= n; ++k) mean += k * a[k];
        p = mean / n;
      }
      report.tvds[idx] = tvd(a, binomial_pmf(n, p));
    }
#pragma omp critical
    for (int k = 0; k <= n; ++k) {
      sums[k] += local[k];
      squares[k] += local_sq[k];
    }
  }

  for (int k = 0; k <= n; ++k) {
    report.mean_sld[k] = sums[k] / samples;
    const double var =
        samples > 1
            ? std::max(0.0, (squares[k] - sums[k] * sums[k] / samples) / (samples - 1))
            : 0.0;
    report.sld_std[k] = std::sqrt(var);
  }
  double mean = 0.0;
  for (double t : report.tvds) mean += t;
  mean /= samples;
  report.mean_tvd = mean;
  double ss = 0.0;
  for (double t : report.tvds) ss += (t - mean) * (t - mean);
  report.tvd_std = samples > 1 ? std::sqrt(ss / (samples - 1)) : 0.0;

  std::vector<double> sorted = report.tvds;
  std::sort(sorted.begin(), sorted.end());
  auto percentile = [&](double frac) {
    const double pos = frac * (sorted.size() - 1);
    const std::size_t i = static_cast<std::size_t>(pos);
    const double w = pos - i;
    return i + 1 < sorted.size() ? (1 - w) * sorted[i] + w * sorted[i + 1] : sorted[i];
  };
  report.tvd_p16 = percentile(0.16);
  report.tvd_p84 = percentile(0.84);
  return report;
}

}  // namespace sectorlen
