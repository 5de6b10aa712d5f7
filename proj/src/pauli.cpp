#include "sectorlen/pauli.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sectorlen/errors.hpp"
#include "sectorlen/parallel.hpp"

namespace sectorlen {

int symplectic_weight(const SymplecticPauli& p) {
  if (p.r.size() != p.s.size()) {
    throw std::invalid_argument("symplectic_weight: r and s lengths differ");
  }
  int w = 0;
  for (std::size_t i = 0; i < p.r.size(); ++i) {
    if (p.r[i] != 0 || p.s[i] != 0) ++w;
  }
  return w;
}

StabilizerGroup::StabilizerGroup(int n_, int d_, std::vector<SymplecticPauli> gens)
    : n(n_), d(d_), generators(std::move(gens)) {
  if (n < 1) throw std::invalid_argument("StabilizerGroup: n must be >= 1");
  if (d < 2) throw std::invalid_argument("StabilizerGroup: d must be >= 2");
  if (generators.size() > static_cast<std::size_t>(n)) {
    throw std::invalid_argument("StabilizerGroup: more than n generators");
  }
  for (const auto& g : generators) {
    if (g.r.size() != static_cast<std::size_t>(n) ||
        g.s.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("StabilizerGroup: generator length mismatch");
    }
    for (int i = 0; i < n; ++i) {
      if (g.r[i] < 0 || g.r[i] >= d || g.s[i] < 0 || g.s[i] >= d) {
        throw std::invalid_argument("StabilizerGroup: exponent out of range");
      }
    }
  }
  // Pairwise commutation: r.s' - s.r' = 0 mod d.
  for (std::size_t a = 0; a < generators.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      long form = 0;
      for (int i = 0; i < n; ++i) {
        form += static_cast<long>(generators[a].r[i]) * generators[b].s[i] -
                static_cast<long>(generators[a].s[i]) * generators[b].r[i];
      }
      if ((form % d + d) % d != 0) {
        throw std::invalid_argument("StabilizerGroup: generators " +
                                    std::to_string(a) + " and " + std::to_string(b) +
                                    " do not commute");
      }
    }
  }
  // Independence over GF(2) for full generating sets of qubit groups.
  if (d == 2 && generators.size() == static_cast<std::size_t>(n)) {
    std::vector<std::vector<std::uint8_t>> m;
    for (const auto& g : generators) {
      std::vector<std::uint8_t> row(2 * n);
      for (int i = 0; i < n; ++i) {
        row[i] = static_cast<std::uint8_t>(g.r[i]);
        row[n + i] = static_cast<std::uint8_t>(g.s[i]);
      }
      m.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < 2 * n && rank < n; ++col) {
      int pivot = -1;
      for (int r = rank; r < n; ++r) {
        if (m[r][col]) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(m[rank], m[pivot]);
      for (int r = 0; r < n; ++r) {
        if (r != rank && m[r][col]) {
          for (int c = col; c < 2 * n; ++c) m[r][c] ^= m[rank][c];
        }
      }
      ++rank;
    }
    if (rank < n) {
      throw std::invalid_argument("StabilizerGroup: generators not independent");
    }
  }
}

StabilizerGroup graph_stabilizer_generators(const Graph& g) {
  const int n = g.n();
  std::vector<SymplecticPauli> gens(n);
  for (int i = 0; i < n; ++i) {
    gens[i].r.assign(n, 0);
    gens[i].s.assign(n, 0);
    gens[i].r[i] = 1;
    for (int j = 0; j < n; ++j) gens[i].s[j] = g.weight(j, i);
  }
  return StabilizerGroup(n, g.d(), std::move(gens));
}

// ---------------------------------------------------------------------------
// rotated surface code

StabilizerGroup rotated_surface_code_logical_generators(int distance,
                                                        LogicalState logical) {
  if (distance < 3 || distance % 2 == 0) {
    throw std::invalid_argument(
        "rotated surface code: distance must be odd and >= 3");
  }
  const int D = distance;
  const int n = D * D;
  auto qubit = [D](int r, int c) { return r * D + c; };

  std::vector<SymplecticPauli> gens;
  auto add_face = [&](const std::vector<int>& qs, bool x_type) {
    SymplecticPauli p;
    p.r.assign(n, 0);
    p.s.assign(n, 0);
    for (int q : qs) (x_type ? p.r : p.s)[q] = 1;
    gens.push_back(std::move(p));
  };

  for (int i = -1; i < D; ++i) {
    for (int j = -1; j < D; ++j) {
      std::vector<int> qs;
      for (int a : {i, i + 1}) {
        for (int b : {j, j + 1}) {
          if (a >= 0 && a < D && b >= 0 && b < D) qs.push_back(qubit(a, b));
        }
      }
      if (qs.size() < 2) continue;  // corners outside the lattice
      const bool x_type = ((i + j) % 2 + 2) % 2 == 1;
      if (qs.size() == 2) {
        const bool top_bottom = (i == -1 || i == D - 1);
        if (top_bottom != x_type) continue;  // keep X on top/bottom, Z on sides
      }
      add_face(qs, x_type);
    }
  }
  if (static_cast<int>(gens.size()) != n - 1) {
    throw std::logic_error("rotated surface code: plaquette count mismatch");
  }

  // Transversal logical operator pinning the requested basis state.
  SymplecticPauli logical_op;
  logical_op.r.assign(n, 0);
  logical_op.s.assign(n, 0);
  const bool x_logical =
      (logical == LogicalState::plus || logical == LogicalState::minus);
  for (int k = 0; k < D; ++k) {
    if (x_logical) {
      logical_op.r[qubit(k, 0)] = 1;  // X_L: column 0
    } else {
      logical_op.s[qubit(0, k)] = 1;  // Z_L: row 0
    }
  }
  gens.push_back(std::move(logical_op));
  return StabilizerGroup(n, 2, std::move(gens));
}

// ---------------------------------------------------------------------------
// generator text format

StabilizerGroup parse_generators(const std::string& text, int d) {
  std::istringstream in(text);
  std::string line;
  std::vector<SymplecticPauli> gens;
  int n = -1;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments and whitespace-only lines
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    SymplecticPauli p;
    if (d == 2 && line.find('^') == std::string::npos &&
        line.find_first_of("0123456789") == std::string::npos) {
      for (char c : line) {
        switch (c) {
          case ' ': case '\t': case '\r': continue;
          case 'I': p.r.push_back(0); p.s.push_back(0); break;
          case 'X': p.r.push_back(1); p.s.push_back(0); break;
          case 'Z': p.r.push_back(0); p.s.push_back(1); break;
          case 'Y': p.r.push_back(1); p.s.push_back(1); break;
          default:
            throw parse_error("generators: unexpected symbol '" +
                              std::string(1, c) + "' on line " + std::to_string(lineno));
        }
      }
    } else {
      // Tuples like "X1Z2 I X2" (one token per site); '^' is optional.
      std::string cleaned;
      for (char c : line) {
        if (c != '^') cleaned.push_back(c);
      }
      std::istringstream ls(cleaned);
      std::string tok;
      while (ls >> tok) {
        int r = 0, s = 0;
        std::size_t i = 0;
        if (tok == "I") {
          p.r.push_back(0); p.s.push_back(0);
          continue;
        }
        auto read_exp = [&](char sym, int& out) {
          if (i < tok.size() && tok[i] == sym) {
            ++i;
            std::size_t start = i;
            while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
            out = (i == start) ? 1 : std::stoi(tok.substr(start, i - start));
          }
        };
        read_exp('X', r);
        read_exp('Z', s);
        if (i != tok.size()) {
          throw parse_error("generators: cannot parse token '" + tok + "' on line " +
                            std::to_string(lineno));
        }
        p.r.push_back(((r % d) + d) % d);
        p.s.push_back(((s % d) + d) % d);
      }
    }
    if (n < 0) {
      n = static_cast<int>(p.r.size());
    } else if (static_cast<int>(p.r.size()) != n) {
      throw parse_error("generators: inconsistent operator length on line " +
                        std::to_string(lineno));
    }
    gens.push_back(std::move(p));
  }
  if (gens.empty()) throw parse_error("generators: no operators found");
  return StabilizerGroup(n, d, std::move(gens));
}

// ---------------------------------------------------------------------------
// group enumeration

namespace {

/// Gray-code walk over all 2^g subset products. One step flips a single
/// generator: two XOR rows plus one popcount per element.
void qubit_group_block(const std::vector<std::vector<std::uint64_t>>& rmask,
                       const std::vector<std::vector<std::uint64_t>>& smask,
                       int nw, std::uint64_t t0, std::uint64_t t1,
                       std::uint64_t* hist) {
  std::vector<std::uint64_t> R(nw, 0), S(nw, 0);
  const std::uint64_t gray0 = t0 ^ (t0 >> 1);
  for (std::size_t j = 0; j < rmask.size(); ++j) {
    if ((gray0 >> j) & 1) {
      for (int w = 0; w < nw; ++w) {
        R[w] ^= rmask[j][w];
        S[w] ^= smask[j][w];
      }
    }
  }
  auto weight = [&]() {
    int wt = 0;
    for (int w = 0; w < nw; ++w) wt += std::popcount(R[w] | S[w]);
    return wt;
  };
  ++hist[weight()];
  for (std::uint64_t t = t0 + 1; t < t1; ++t) {
    const int j = std::countr_zero(t);
    for (int w = 0; w < nw; ++w) {
      R[w] ^= rmask[j][w];
      S[w] ^= smask[j][w];
    }
    ++hist[weight()];
  }
}

/// Odometer walk over all d^g exponent tuples for prime d. Each single-digit
/// increment adds one generator row into the running (r, s) pair; the
/// symplectic weight is maintained across the touched sites only.
class QuditGroupWalker {
 public:
  QuditGroupWalker(const StabilizerGroup& g)
      : n_(g.n), d_(g.d), gens_(&g.generators) {
    support_.resize(g.generators.size());
    for (std::size_t j = 0; j < g.generators.size(); ++j) {
      for (int i = 0; i < n_; ++i) {
        if (g.generators[j].r[i] != 0 || g.generators[j].s[i] != 0) {
          support_[j].push_back(i);
        }
      }
    }
  }

  /// Positions the walker on the element with odometer index t
  /// (digit j of t in base d = exponent of generator j).
  void seed(std::uint64_t t) {
    digits_.assign(gens_->size(), 0);
    r_.assign(n_, 0);
    s_.assign(n_, 0);
    for (std::size_t j = 0; j < gens_->size(); ++j) {
      digits_[j] = static_cast<int>(t % d_);
      t /= d_;
      for (int i = 0; i < n_; ++i) {
        r_[i] = (r_[i] + digits_[j] * (*gens_)[j].r[i]) % d_;
        s_[i] = (s_[i] + digits_[j] * (*gens_)[j].s[i]) % d_;
      }
    }
    weight_ = 0;
    for (int i = 0; i < n_; ++i) {
      if (r_[i] != 0 || s_[i] != 0) ++weight_;
    }
  }

  int weight() const { return weight_; }

  void advance() {
    for (std::size_t j = 0; j < digits_.size(); ++j) {
      add_generator(j);
      digits_[j] = (digits_[j] + 1) % d_;
      if (digits_[j] != 0) return;  // no carry
    }
  }

 private:
  void add_generator(std::size_t j) {
    const SymplecticPauli& gen = (*gens_)[j];
    for (int i : support_[j]) {
      const bool was = (r_[i] != 0 || s_[i] != 0);
      r_[i] = (r_[i] + gen.r[i]) % d_;
      s_[i] = (s_[i] + gen.s[i]) % d_;
      const bool now = (r_[i] != 0 || s_[i] != 0);
      weight_ += static_cast<int>(now) - static_cast<int>(was);
    }
  }

  int n_;
  int d_;
  const std::vector<SymplecticPauli>* gens_;
  std::vector<std::vector<int>> support_;
  std::vector<int> digits_;
  std::vector<int> r_, s_;
  int weight_ = 0;
};

}  // namespace

Sld group_weight_distribution(const StabilizerGroup& group,
                              const EnumerationOptions& opts) {
  const int g = static_cast<int>(group.generators.size());
  const int n = group.n;
  const int d = group.d;
  if (g > opts.max_generators || g > 62) {
    throw resource_error("group enumeration: " + std::to_string(g) +
                         " generators exceeds cap of " +
                         std::to_string(opts.max_generators));
  }
  if (d != 2 && !is_prime(d)) {
    throw std::invalid_argument("group enumeration: d must be prime for d > 2");
  }
  if (d != 2 && g * std::log2(static_cast<double>(d)) > opts.max_log2_states) {
    throw resource_error("group enumeration: d^g exceeds the configured cap");
  }

  std::uint64_t total = 1;
  for (int j = 0; j < g; ++j) total *= static_cast<std::uint64_t>(d);

  const int workers = worker_count(opts.threads);
  std::vector<std::vector<std::uint64_t>> hists(
      workers, std::vector<std::uint64_t>(n + 1, 0));

  if (d == 2) {
    const int nw = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rmask(g), smask(g);
    for (int j = 0; j < g; ++j) {
      rmask[j].assign(nw, 0);
      smask[j].assign(nw, 0);
      for (int i = 0; i < n; ++i) {
        if (group.generators[j].r[i]) rmask[j][i / 64] |= std::uint64_t{1} << (i % 64);
        if (group.generators[j].s[i]) smask[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
#pragma omp parallel num_threads(workers)
    {
      const int w = omp_get_thread_num();
      auto [t0, t1] = block_range(total, workers, w);
      if (t0 < t1) qubit_group_block(rmask, smask, nw, t0, t1, hists[w].data());
    }
  } else {
#pragma omp parallel num_threads(workers)
    {
      const int w = omp_get_thread_num();
      auto [t0, t1] = block_range(total, workers, w);
      if (t0 < t1) {
        QuditGroupWalker walker(group);
        walker.seed(t0);
        for (std::uint64_t t = t0; t < t1; ++t) {
          ++hists[w][walker.weight()];
          walker.advance();
        }
      }
    }
  }

  std::vector<Rat> A(n + 1, 0);
  for (const auto& h : hists) {
    for (int k = 0; k <= n; ++k) A[k] += Rat(Int(h[k]));
  }
  Sld out(n, d, std::move(A), SldSource::group);
  return out;
}

std::vector<std::uint64_t> group_weight_distribution_serial(
    const StabilizerGroup& group) {
  const int g = static_cast<int>(group.generators.size());
  const int n = group.n;
  const int d = group.d;
  std::uint64_t total = 1;
  for (int j = 0; j < g; ++j) total *= static_cast<std::uint64_t>(d);
  std::vector<std::uint64_t> hist(n + 1, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<int> r(n, 0), s(n, 0);
    std::uint64_t x = t;
    for (int j = 0; j < g; ++j) {
      const int e = static_cast<int>(x % d);
      x /= d;
      for (int i = 0; i < n; ++i) {
        r[i] = (r[i] + e * group.generators[j].r[i]) % d;
        s[i] = (s[i] + e * group.generators[j].s[i]) % d;
      }
    }
    int wt = 0;
    for (int i = 0; i < n; ++i) {
      if (r[i] != 0 || s[i] != 0) ++wt;
    }
    ++hist[wt];
  }
  return hist;
}

}  // namespace sectorlen
