#include "sectorlen/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "sectorlen/errors.hpp"

namespace sectorlen {

Sld sld_fully_separable(int n, int d) {
  if (n < 1) throw std::invalid_argument("sld_fully_separable: n must be >= 1");
  const Int dm1(d - 1);
  std::vector<Rat> A(n + 1);
  for (int k = 0; k <= n; ++k) {
    A[k] = Rat(binomial(n, k) * pow_int(dm1, static_cast<unsigned long>(k)));
  }
  return Sld(n, d, std::move(A), SldSource::closed_form);
}

Sld sld_ghz(int n) {
  if (n < 2) throw std::invalid_argument("sld_ghz: n must be >= 2");
  std::vector<Rat> A(n + 1, 0);
  for (int k = 0; k <= n; k += 2) A[k] = Rat(binomial(n, k));
  A[n] += Rat(pow_int(2, static_cast<unsigned long>(n - 1)));
  return Sld(n, 2, std::move(A), SldSource::closed_form);
}

Sld sld_ghz_qudit(int n, int d) {
  if (n < 2) throw std::invalid_argument("sld_ghz_qudit: n must be >= 2");
  if (d < 2) throw std::invalid_argument("sld_ghz_qudit: d must be >= 2");
  const Int dm1(d - 1);
  std::vector<Rat> A(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Int sign = (k % 2 == 0) ? dm1 : -dm1;
    Rat v = Rat(binomial(n, k) * (pow_int(dm1, static_cast<unsigned long>(k)) + sign), Int(d));
    v.canonicalize();
    A[k] = v;
  }
  A[n] += Rat(dm1 * pow_int(d, static_cast<unsigned long>(n - 1)));
  return Sld(n, d, std::move(A), SldSource::closed_form);
}

Sld sld_pusteblume(int n) {
  if (n < 5) throw std::invalid_argument("sld_pusteblume: n must be >= 5");
  const Int scale = pow_int(2, static_cast<unsigned long>(n - 4));
  std::vector<Rat> A(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    Int v = 0;
    if (k % 2 == 0) {
      v = binomial(n - 3, k - 3) + 3 * binomial(n - 2, k - 2) + binomial(n - 3, k);
    }
    if (k == n - 2) v += 3 * scale;
    if (k == n) v += 5 * scale;
    A[k] = Rat(v);
  }
  return Sld(n, 2, std::move(A), SldSource::closed_form);
}

// ---------------------------------------------------------------------------
// ring cluster

namespace {

/// Dense Pascal triangle rows 0..n; entry [a][b] = C(a,b).
std::vector<std::vector<Int>> pascal_rows(int n) {
  std::vector<std::vector<Int>> t(n + 1);
  for (int a = 0; a <= n; ++a) {
    t[a].resize(a + 1);
    t[a][0] = 1;
    t[a][a] = 1;
    for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

}  // namespace

Int ring_cluster_full_body_sl(int n) {
  if (n < 3) throw std::invalid_argument("ring_cluster_full_body_sl: n must be >= 3");
  Rat total = 1;
  for (int k = 1; k <= n / 3; ++k) {
    total += frac(binomial(n - 2 * k - 1, k - 1) * n, Int(k));
  }
  if (total.get_den() != 1) {
    throw std::logic_error("ring_cluster_full_body_sl: non-integer result");
  }
  return total.get_num();
}

Sld sld_ring_cluster(int n) {
  if (n < 3) throw std::invalid_argument("sld_ring_cluster: n must be >= 3");
  const auto tri = pascal_rows(n);
  auto C = [&](long a, long b) -> const Int& {
    static const Int zero = 0;
    if (a < 0 || b < 0 || b > a) return zero;
    return tri[a][b];
  };

  std::vector<Rat> A(n + 1);
  A[0] = 1;
  bool integral = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : integral)
  for (int k = 1; k <= n; ++k) {
    Rat acc = Rat(Int(n) * C(k, n - k), Int(k));
    acc.canonicalize();
    for (int m = 1; m <= (k - 1) / 2; ++m) {
      const Int& c1 = C(k - 2 * m - 1, m - 1);
      if (c1 == 0) continue;
      Int inner = 0;
      for (int l = 0; l <= n - k; ++l) {
        const Int& left = C(k - 3 * m, n - k - l);
        if (left == 0) continue;
        inner += left * C(l + m - 1, l);
      }
      if (inner == 0) continue;
      Rat term = Rat(Int(n) * c1 * inner, Int(m));
      term.canonicalize();
      acc += term;
    }
    integral = integral && (acc.get_den() == 1);
    A[k] = acc;
  }
  if (!integral) {
    throw std::logic_error("sld_ring_cluster: non-integer sector encountered");
  }
  if (A[n] != Rat(ring_cluster_full_body_sl(n))) {
    throw std::logic_error("sld_ring_cluster: full-body entry disagrees with "
                           "the simplified closed form");
  }
  return Sld(n, 2, std::move(A), SldSource::closed_form);
}

// ---------------------------------------------------------------------------

Sld sld_w_state(int n) {
  if (n < 2) throw std::invalid_argument("sld_w_state: n must be >= 2");
  const Int n2 = Int(n) * n;
  std::vector<Rat> A(n + 1);
  for (int k = 0; k <= n; ++k) {
    Rat corr = Rat(Int(4) * k * (2 * k - n - 1), n2);
    corr.canonicalize();
    A[k] = Rat(binomial(n, k)) * (1 + corr);
  }
  return Sld(n, 2, std::move(A), SldSource::closed_form);
}

Sld sld_rc4_qudit(int d) {
  if (d < 3 || d % 2 == 0) {
    throw std::invalid_argument(
        "sld_rc4_qudit: the AME form holds for odd d >= 3 only");
  }
  const Int d2 = Int(d) * d;
  std::vector<Rat> A(5);
  A[0] = 1;
  A[1] = 0;
  A[2] = 0;
  A[3] = Rat(4 * (d2 - 1));
  A[4] = Rat(d2 * d2 - 4 * (d2 - 1) - 1);
  return Sld(4, d, std::move(A), SldSource::closed_form);
}

BinomialDistribution binomial_distribution(int n, const Rat& p) {
  if (n < 0 || p < 0 || p > 1) {
    throw std::invalid_argument("binomial_distribution: need n >= 0, p in [0,1]");
  }
  BinomialDistribution out;
  out.n = n;
  out.p = p;
  out.values.resize(n + 1);
  const Rat q = 1 - p;
  // p^k (1-p)^{n-k} built incrementally to stay exact.
  std::vector<Rat> pk(n + 1), qk(n + 1);
  pk[0] = 1;
  qk[0] = 1;
  for (int k = 1; k <= n; ++k) {
    pk[k] = pk[k - 1] * p;
    qk[k] = qk[k - 1] * q;
  }
  for (int k = 0; k <= n; ++k) {
    out.values[k] = Rat(binomial(n, k)) * pk[k] * qk[n - k];
  }
  return out;
}

std::vector<double> binomial_pmf(int n, double p) {
  std::vector<double> b(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double lp = (k == 0) ? 0.0 : k * std::log(p);
    const double lq = (k == n) ? 0.0 : (n - k) * std::log1p(-p);
    b[k] = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0) + lp + lq);
  }
  if (p == 0.0) {
    std::fill(b.begin(), b.end(), 0.0);
    b[0] = 1.0;
  } else if (p == 1.0) {
    std::fill(b.begin(), b.end(), 0.0);
    b[n] = 1.0;
  }
  return b;
}

}  // namespace sectorlen
