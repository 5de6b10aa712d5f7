#include "sectorlen/engine.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "sectorlen/errors.hpp"
#include "sectorlen/parallel.hpp"

namespace sectorlen {

// ---------------------------------------------------------------------------
// qubit kernel

namespace {

void qubit_block(const std::uint64_t* rows, int n, std::uint64_t t0,
                 std::uint64_t t1, std::uint64_t* hist) {
  std::uint64_t r = t0 ^ (t0 >> 1);  // Gray code of the block start
  std::uint64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if ((r >> i) & 1) s ^= rows[i];
  }
  ++hist[std::popcount(r | s)];
  for (std::uint64_t t = t0 + 1; t < t1; ++t) {
    const int j = std::countr_zero(t);
    r ^= std::uint64_t{1} << j;
    s ^= rows[j];
    ++hist[std::popcount(r | s)];
  }
}

Sld hist_to_sld(int n, int d, const std::vector<std::vector<std::uint64_t>>& hists,
                SldSource source) {
  std::vector<Rat> A(n + 1, 0);
  for (const auto& h : hists) {
    for (int k = 0; k <= n; ++k) A[k] += Rat(Int(h[k]));
  }
  return Sld(n, d, std::move(A), source);
}

}  // namespace

Sld brute_force_sld(const Graph& g, const EnumerationOptions& opts) {
  if (g.d() != 2) return brute_force_sld_qudit(g, opts);
  const int n = g.n();
  if (n > opts.max_qubits || n > 62) {
    throw resource_error("brute_force_sld: n=" + std::to_string(n) +
                         " exceeds cap of " + std::to_string(opts.max_qubits));
  }
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = g.row_mask(i);

  const std::uint64_t total = std::uint64_t{1} << n;
  const int workers = worker_count(opts.threads);
  std::vector<std::vector<std::uint64_t>> hists(
      workers, std::vector<std::uint64_t>(n + 1, 0));
#pragma omp parallel num_threads(workers)
  {
    const int w = omp_get_thread_num();
    auto [t0, t1] = block_range(total, workers, w);
    if (t0 < t1) qubit_block(rows.data(), n, t0, t1, hists[w].data());
  }
  Sld out = hist_to_sld(n, 2, hists, SldSource::brute_force);
  return out;
}

// ---------------------------------------------------------------------------
// qudit kernel

namespace {

/// Odometer over (Z/dZ)^n color assignments. A digit increment at vertex j
/// adds column j of the weight matrix into the running s = Gamma r; the
/// symplectic weight is maintained across the touched sites.
class ColorWalker {
 public:
  explicit ColorWalker(const Graph& g) : g_(&g), n_(g.n()), d_(g.d()) {
    neighbors_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < n_; ++i) {
        if (g.weight(i, j) != 0) neighbors_[j].push_back(i);
      }
    }
  }

  void seed(std::uint64_t t) {
    r_.assign(n_, 0);
    s_.assign(n_, 0);
    for (int j = 0; j < n_; ++j) {
      r_[j] = static_cast<int>(t % d_);
      t /= d_;
    }
    for (int i = 0; i < n_; ++i) {
      long acc = 0;
      for (int j = 0; j < n_; ++j) acc += static_cast<long>(g_->weight(i, j)) * r_[j];
      s_[i] = static_cast<int>(acc % d_);
    }
    weight_ = 0;
    for (int i = 0; i < n_; ++i) {
      if (r_[i] != 0 || s_[i] != 0) ++weight_;
    }
  }

  int weight() const { return weight_; }

  void advance() {
    for (int j = 0; j < n_; ++j) {
      increment_vertex(j);
      if (r_[j] != 0) return;
    }
  }

 private:
  void increment_vertex(int j) {
    const bool was_j = (r_[j] != 0 || s_[j] != 0);
    r_[j] = (r_[j] + 1) % d_;
    const bool now_j = (r_[j] != 0 || s_[j] != 0);
    weight_ += static_cast<int>(now_j) - static_cast<int>(was_j);
    for (int i : neighbors_[j]) {
      const bool was = (r_[i] != 0 || s_[i] != 0);
      s_[i] = (s_[i] + g_->weight(i, j)) % d_;
      const bool now = (r_[i] != 0 || s_[i] != 0);
      weight_ += static_cast<int>(now) - static_cast<int>(was);
    }
  }

  const Graph* g_;
  int n_;
  int d_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> r_, s_;
  int weight_ = 0;
};

}  // namespace

Sld brute_force_sld_qudit(const Graph& g, const EnumerationOptions& opts) {
  const int n = g.n();
  const int d = g.d();
  const double log2_states = n * std::log2(static_cast<double>(d));
  if (log2_states > opts.max_log2_states) {
    throw resource_error("brute_force_sld_qudit: d^n exceeds the configured cap");
  }
  std::uint64_t total = 1;
  for (int j = 0; j < n; ++j) total *= static_cast<std::uint64_t>(d);

  const int workers = worker_count(opts.threads);
  std::vector<std::vector<std::uint64_t>> hists(
      workers, std::vector<std::uint64_t>(n + 1, 0));
#pragma omp parallel num_threads(workers)
  {
    const int w = omp_get_thread_num();
    auto [t0, t1] = block_range(total, workers, w);
    if (t0 < t1) {
      ColorWalker walker(g);
      walker.seed(t0);
      for (std::uint64_t t = t0; t < t1; ++t) {
        ++hists[w][walker.weight()];
        walker.advance();
      }
    }
  }
  return hist_to_sld(n, d, hists, SldSource::brute_force);
}

std::vector<std::uint64_t> brute_force_weights_serial(const Graph& g) {
  const int n = g.n();
  const int d = g.d();
  std::uint64_t total = 1;
  for (int j = 0; j < n; ++j) total *= static_cast<std::uint64_t>(d);
  std::vector<std::uint64_t> hist(n + 1, 0);
  std::vector<int> r(n);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t x = t;
    for (int j = 0; j < n; ++j) {
      r[j] = static_cast<int>(x % d);
      x /= d;
    }
    int wt = 0;
    for (int i = 0; i < n; ++i) {
      long s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<long>(g.weight(i, j)) * r[j];
      if (r[i] != 0 || s % d != 0) ++wt;
    }
    ++hist[wt];
  }
  return hist;
}

// ---------------------------------------------------------------------------
// low-weight sectors

namespace {

void low_weight_recurse(const Graph& g, int k_max, int first, int picked,
                        std::vector<int>& support, std::vector<int>& colors,
                        std::vector<Int>& A) {
  const int n = g.n();
  const int d = g.d();
  if (picked > 0) {
    // weight = #black + #white vertices with nonzero induced s
    int wt = picked;
    for (int i = 0; i < n && wt <= k_max; ++i) {
      bool black = false;
      long s = 0;
      for (int b = 0; b < picked; ++b) {
        if (support[b] == i) black = true;
        s += static_cast<long>(g.weight(i, support[b])) * colors[b];
      }
      if (!black && s % d != 0) ++wt;
    }
    if (wt <= k_max) A[wt] += 1;
  } else {
    A[0] += 1;
  }
  if (picked == k_max) return;
  for (int v = first; v < n; ++v) {
    support[picked] = v;
    for (int c = 1; c < d; ++c) {
      colors[picked] = c;
      low_weight_recurse(g, k_max, v + 1, picked + 1, support, colors, A);
    }
  }
}

}  // namespace

std::vector<Int> low_weight_sectors(const Graph& g, int k_max) {
  if (k_max < 0 || k_max > g.n()) {
    throw std::invalid_argument("low_weight_sectors: k_max out of range");
  }
  std::vector<Int> A(k_max + 1, 0);
  std::vector<int> support(std::max(1, k_max)), colors(std::max(1, k_max));
  low_weight_recurse(g, k_max, 0, 0, support, colors, A);
  return A;
}

// ---------------------------------------------------------------------------
// algebraic sector formulas

Int a1_exact_qudit(const Graph& g) {
  const int n = g.n();
  const int d = g.d();
  Int total = 0;
  for (int i = 0; i < n; ++i) {
    long col_gcd = 0;
    for (int j = 0; j < n; ++j) col_gcd = std::gcd(col_gcd, static_cast<long>(g.weight(j, i)));
    // |Ann(column)| = gcd(d, gcd of entries); a zero column annihilates everything.
    const long ann = (col_gcd == 0) ? d : std::gcd(static_cast<long>(d), col_gcd);
    total += ann - 1;
  }
  return total;
}

std::pair<Int, Int> a2_bounds_prime(const Graph& g) {
  const int d = g.d();
  if (!is_prime(d)) {
    throw std::invalid_argument("a2_bounds_prime: d must be prime");
  }
  const GraphProperties props = properties(g);
  const Int dm1 = d - 1;
  Int t0 = props.twins_by_shared.empty() ? 0 : props.twins_by_shared[0];
  Int t1 = props.twins_by_shared.size() > 1 ? props.twins_by_shared[1] : 0;
  Int t_rest = 0;
  for (std::size_t m = 1; m < props.twins_by_shared.size(); ++m) {
    t_rest += props.twins_by_shared[m];
  }
  Int lower = t0 * dm1 * dm1 + (Int(props.leaves) + t1) * dm1;
  Int upper = t0 * dm1 * dm1 + (Int(props.leaves) + t_rest) * dm1;
  return {lower, upper};
}

// ---------------------------------------------------------------------------
// statevector oracle

namespace {

constexpr std::size_t kMaxStatevector = 4096;

int infer_sites(std::size_t len, int d) {
  std::size_t v = 1;
  int n = 0;
  while (v < len) {
    v *= static_cast<std::size_t>(d);
    ++n;
  }
  if (v != len || n < 1) {
    throw std::invalid_argument("statevector_sld: length is not d^n");
  }
  return n;
}

}  // namespace

Sld statevector_sld(const std::vector<std::complex<double>>& amplitudes, int d) {
  const std::size_t N = amplitudes.size();
  if (N > kMaxStatevector) {
    throw resource_error("statevector_sld: d^n exceeds 4096");
  }
  const int n = infer_sites(N, d);
  double norm = 0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("statevector_sld: state is not normalized");
  }

  // Site-digit decomposition tables.
  std::vector<std::uint32_t> nonzero_sites(N, 0);  // bitmask of nonzero digits
  for (std::size_t x = 0; x < N; ++x) {
    std::size_t v = x;
    for (int i = 0; i < n; ++i) {
      if (v % d != 0) nonzero_sites[x] |= std::uint32_t{1} << i;
      v /= d;
    }
  }
  std::vector<double> hist(n + 1, 0.0);
  std::vector<std::complex<double>> omega_pow(d);
  for (int e = 0; e < d; ++e) {
    omega_pow[e] = std::exp(
        std::complex<double>(0.0, 2.0 * std::numbers::pi * e / d));
  }

  std::vector<std::complex<double>> h(N), tmp(N);
  std::vector<std::size_t> shifted(N);
  for (std::size_t r = 0; r < N; ++r) {
    // shifted[j] = index of j + r (site-wise addition mod d)
    for (std::size_t j = 0; j < N; ++j) {
      std::size_t jj = j, rr = r, out = 0, place = 1;
      for (int i = 0; i < n; ++i) {
        out += place * ((jj % d + rr % d) % d);
        place *= d;
        jj /= d;
        rr /= d;
      }
      shifted[j] = out;
    }
    // h(j) = conj(psi_{j+r}) psi_j ; then g(s) = sum_j omega^{j.s} h(j)
    // via one radix-d butterfly per site.
    for (std::size_t j = 0; j < N; ++j) {
      h[j] = std::conj(amplitudes[shifted[j]]) * amplitudes[j];
    }
    std::size_t stride = 1;
    for (int site = 0; site < n; ++site) {
      for (std::size_t base = 0; base < N; ++base) {
        const std::size_t digit = (base / stride) % d;
        if (digit != 0) continue;
        // gather the d entries along this axis starting at `base`
        for (int sdig = 0; sdig < d; ++sdig) {
          std::complex<double> acc = 0;
          for (int jdig = 0; jdig < d; ++jdig) {
            acc += omega_pow[(sdig * jdig) % d] * h[base + jdig * stride];
          }
          tmp[base + sdig * stride] = acc;
        }
      }
      std::swap(h, tmp);
      stride *= static_cast<std::size_t>(d);
    }
    for (std::size_t s = 0; s < N; ++s) {
      const int wt = std::popcount(nonzero_sites[r] | nonzero_sites[s]);
      hist[wt] += std::norm(h[s]);
    }
  }

  std::vector<Rat> A(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double rounded = std::round(hist[k]);
    if (std::abs(hist[k] - rounded) <= 1e-6) {
      A[k] = Rat(Int(static_cast<long>(rounded)));
    } else {
      A[k] = rat_from_double(hist[k]);
    }
  }
  return Sld(n, d, std::move(A), SldSource::statevector);
}

std::vector<std::complex<double>> graph_state_amplitudes(const Graph& g) {
  const int n = g.n();
  const int d = g.d();
  std::size_t N = 1;
  for (int i = 0; i < n; ++i) N *= static_cast<std::size_t>(d);
  std::vector<std::complex<double>> psi(N);
  const double norm = 1.0 / std::sqrt(static_cast<double>(N));
  std::vector<int> digits(n);
  for (std::size_t x = 0; x < N; ++x) {
    std::size_t v = x;
    for (int i = 0; i < n; ++i) {
      digits[i] = static_cast<int>(v % d);
      v /= d;
    }
    long phase = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        phase += static_cast<long>(digits[i]) * g.weight(i, j) * digits[j];
      }
    }
    psi[x] = norm * std::exp(std::complex<double>(
                        0.0, 2.0 * std::numbers::pi * (phase % d) / d));
  }
  return psi;
}

std::vector<std::complex<double>> w_state_amplitudes(int n) {
  if (n < 2) throw std::invalid_argument("w_state_amplitudes: n must be >= 2");
  std::vector<std::complex<double>> psi(std::size_t{1} << n, 0.0);
  for (int i = 0; i < n; ++i) {
    psi[std::size_t{1} << i] = 1.0 / std::sqrt(static_cast<double>(n));
  }
  return psi;
}

// ---------------------------------------------------------------------------
// moments and identities

Moments moments_from_graph(const Graph& g) {
  const int n = g.n();
  const int d = g.d();
  Moments out;
  if (d == 2) {
    const GraphProperties p = properties(g);
    const Rat I(p.isolated), LT(p.leaves + p.twins);
    out.mean = Rat(3 * n - p.isolated) / 4;
    out.variance = (Rat(3 * n) - (I - 2) * I + 2 * LT) / 16;
    out.second_moment = out.variance + out.mean * out.mean;
    return out;
  }
  const std::vector<Int> low = low_weight_sectors(g, 2);
  const Rat A1(low[1]), A2(low[2]);
  const Rat d2(Int(d) * d), d4(Int(d) * d * d * d);
  out.mean = ((d2 - 1) * n - A1) / d2;
  out.second_moment = (d4 * n * n - d2 * (2 * n - 1) * n + Rat(Int(n) * (n - 1)) +
                       (Rat(2 * (n - 1)) - d2 * (2 * n - 1)) * A1 + 2 * A2) /
                      d4;
  out.variance = out.second_moment - out.mean * out.mean;
  return out;
}

Moments moments_from_sld(const Sld& sld) {
  if (!sld.is_pure_normalized()) {
    throw std::invalid_argument(
        "moments_from_sld: entries do not sum to d^n (moments are only "
        "defined for pure-state SLDs)");
  }
  const Rat norm(pow_int(sld.d, static_cast<unsigned long>(sld.n)));
  Moments out;
  out.mean = 0;
  out.second_moment = 0;
  for (int k = 0; k <= sld.n; ++k) {
    const Rat a = sld.A[k] / norm;
    out.mean += k * a;
    out.second_moment += Rat(Int(k) * k) * a;
  }
  out.variance = out.second_moment - out.mean * out.mean;
  return out;
}

std::vector<Rat> macwilliams_residuals(const Sld& sld) {
  const int n = sld.n;
  const Int d(sld.d);
  const Rat norm(pow_int(sld.d, static_cast<unsigned long>(n)));
  std::vector<Rat> res(n + 1);
  for (int m = 0; m <= n; ++m) {
    Rat lhs = 0;
    for (int k = 0; k <= m; ++k) lhs += Rat(binomial(n - k, m - k)) * sld.A[k];
    Rat rhs = 0;
    for (int k = 0; k <= n; ++k) rhs += Rat(binomial(n - k, m)) * sld.A[k];
    rhs *= Rat(pow_int(d, static_cast<unsigned long>(2 * m))) / norm;
    res[m] = lhs - rhs;
  }
  return res;
}

bool coarse_bound_check(const Sld& sld) {
  const int n = sld.n;
  const Int dm1(sld.d - 1);
  if (sld.A[0] > 1) return false;
  Rat bound = 0;
  for (int k = 1; k <= n; ++k) {
    bound += Rat(binomial(n, k) * pow_int(dm1, static_cast<unsigned long>(k)));
    if (sld.A[k] > bound) return false;
  }
  return true;
}

}  // namespace sectorlen
