#include "sectorlen/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sectorlen/errors.hpp"

namespace sectorlen {

Graph::Graph(int n, int d, std::vector<int> weights)
    : n_(n), d_(d), w_(std::move(weights)) {
  if (n < 1) throw std::invalid_argument("Graph: n must be >= 1");
  if (d < 2) throw std::invalid_argument("Graph: d must be >= 2");
  if (w_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("Graph: weight matrix must be n*n");
  }
  for (int i = 0; i < n; ++i) {
    if (weight(i, i) != 0) throw std::invalid_argument("Graph: nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      int w = weight(i, j);
      if (w < 0 || w >= d) throw std::invalid_argument("Graph: weight out of range");
      if (w != weight(j, i)) throw std::invalid_argument("Graph: matrix not symmetric");
    }
  }
  if (d == 2 && n <= 64) {
    rows_.resize(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (weight(i, j)) rows_[i] |= std::uint64_t{1} << j;
      }
    }
  }
}

int Graph::degree(int i) const {
  int deg = 0;
  for (int j = 0; j < n_; ++j) {
    if (weight(i, j) != 0) ++deg;
  }
  return deg;
}

long Graph::edge_count() const {
  long e = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (weight(i, j) != 0) ++e;
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

std::uint64_t read_g6_int(const std::string& s, std::size_t& pos, int chars) {
  std::uint64_t v = 0;
  for (int c = 0; c < chars; ++c, ++pos) {
    if (pos >= s.size()) throw parse_error("graph6: truncated header", pos);
    unsigned char b = static_cast<unsigned char>(s[pos]);
    if (b < kG6Lo || b > kG6Hi) throw parse_error("graph6: invalid header byte", pos);
    v = (v << 6) | (b - kG6Lo);
  }
  return v;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string text = raw;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  if (text.empty()) throw parse_error("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char b = static_cast<unsigned char>(text[i]);
    if (b < kG6Lo || b > kG6Hi) throw parse_error("graph6: byte outside '?'..'~'", i);
  }

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) == kG6Hi) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kG6Hi) {
      pos = 2;
      n = read_g6_int(text, pos, 6);
    } else {
      pos = 1;
      n = read_g6_int(text, pos, 3);
    }
  } else {
    n = read_g6_int(text, pos, 1);
  }
  if (n < 1) throw parse_error("graph6: n must be >= 1", 0);
  if (n > 4096) throw parse_error("graph6: n too large for dense storage", 0);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body) {
    throw parse_error("graph6: body length mismatch (expected " +
                          std::to_string(body) + " bytes, got " +
                          std::to_string(text.size() - pos) + ")",
                      pos);
  }

  const int nn = static_cast<int>(n);
  std::vector<int> w(static_cast<std::size_t>(nn) * nn, 0);
  std::uint64_t bit = 0;
  for (int j = 1; j < nn; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      unsigned char b = static_cast<unsigned char>(text[pos + bit / 6]) - kG6Lo;
      if ((b >> (5 - bit % 6)) & 1) {
        w[static_cast<std::size_t>(i) * nn + j] = 1;
        w[static_cast<std::size_t>(j) * nn + i] = 1;
      }
    }
  }
  return Graph(nn, 2, std::move(w));
}

// ---------------------------------------------------------------------------
// edge lists and families

Graph parse_edge_list(const std::string& text, int n, int d) {
  if (n < 1) throw std::invalid_argument("parse_edge_list: n must be >= 1");
  if (d < 2) throw std::invalid_argument("parse_edge_list: d must be >= 2");
  std::vector<int> w(static_cast<std::size_t>(n) * n, 0);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long i = 0, j = 0, wt = 1;
    if (!(ls >> i)) continue;  // blank line
    if (!(ls >> j)) throw parse_error("edge list: missing second vertex on line " +
                                      std::to_string(lineno));
    if (!(ls >> wt)) wt = 1;
    std::string rest;
    if (ls >> rest) throw parse_error("edge list: trailing tokens on line " +
                                      std::to_string(lineno));
    if (i < 1 || i > n || j < 1 || j > n) {
      throw parse_error("edge list: vertex out of range on line " + std::to_string(lineno));
    }
    if (i == j) throw parse_error("edge list: self-loop on line " + std::to_string(lineno));
    if (wt <= 0 || wt >= d) {
      throw parse_error("edge list: weight out of range on line " + std::to_string(lineno));
    }
    w[static_cast<std::size_t>(i - 1) * n + (j - 1)] = static_cast<int>(wt);
    w[static_cast<std::size_t>(j - 1) * n + (i - 1)] = static_cast<int>(wt);
  }
  return Graph(n, d, std::move(w));
}

namespace {

Graph from_edges(int n, int d, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> w(static_cast<std::size_t>(n) * n, 0);
  for (auto [i, j] : edges) {
    w[static_cast<std::size_t>(i) * n + j] = 1;
    w[static_cast<std::size_t>(j) * n + i] = 1;
  }
  return Graph(n, d, std::move(w));
}

}  // namespace

Graph make_family(Family family, int n, int d) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::edgeless:
      break;
    case Family::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Family::star:
      if (n < 2) throw std::invalid_argument("star requires n >= 2");
      for (int j = 1; j < n; ++j) edges.emplace_back(0, j);
      break;
    case Family::path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::cycle:
      if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case Family::pusteblume:
      // Vertex 1 adjacent to 2,3,4; vertex 2 adjacent to 1,5,...,n (1-based).
      if (n < 5) throw std::invalid_argument("pusteblume requires n >= 5");
      edges = {{0, 1}, {0, 2}, {0, 3}};
      for (int j = 4; j < n; ++j) edges.emplace_back(1, j);
      break;
  }
  return from_edges(n, d, edges);
}

Graph make_grid2d(int l, int m, int d) {
  if (l < 1 || m < 1) throw std::invalid_argument("grid2d requires l,m >= 1");
  const int n = l * m;
  std::vector<std::pair<int, int>> edges;
  auto id = [m](int r, int c) { return r * m + c; };
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < m; ++c) {
      if (c + 1 < m) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < l) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return from_edges(n, d, edges);
}

Graph make_grid3d(int l, int m, int k, int d) {
  if (l < 1 || m < 1 || k < 1) throw std::invalid_argument("grid3d requires l,m,k >= 1");
  const int n = l * m * k;
  std::vector<std::pair<int, int>> edges;
  auto id = [m, k](int x, int y, int z) { return (x * m + y) * k + z; };
  for (int x = 0; x < l; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < k; ++z) {
        if (z + 1 < k) edges.emplace_back(id(x, y, z), id(x, y, z + 1));
        if (y + 1 < m) edges.emplace_back(id(x, y, z), id(x, y + 1, z));
        if (x + 1 < l) edges.emplace_back(id(x, y, z), id(x + 1, y, z));
      }
  return from_edges(n, d, edges);
}

// ---------------------------------------------------------------------------
// graph-theoretic quantities

GraphProperties properties(const Graph& g) {
  const int n = g.n();
  GraphProperties out;
  out.edge_count = g.edge_count();
  out.twins_by_shared.assign(std::max(1, n - 1), 0);

  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) {
    deg[i] = g.degree(i);
    if (deg[i] == 0) ++out.isolated;
    if (deg[i] == 1) ++out.leaves;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) {
        out.max_adjacent_degree_sum =
            std::max<long>(out.max_adjacent_degree_sum, deg[i] + deg[j]);
      }
    }
  }

  // Twin pairs: identical neighborhoods outside the pair. For d>2 only the
  // support pattern (edge vs no edge) is compared; exact weight matching is
  // the job of the A2 bound checker.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int shared = 0;
      bool twin = true;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const bool ei = g.has_edge(i, k);
        const bool ej = g.has_edge(j, k);
        if (ei != ej) {
          twin = false;
          break;
        }
        if (ei) ++shared;
      }
      if (twin) {
        ++out.twins;
        ++out.twins_by_shared[shared];
      }
    }
  }
  return out;
}

KernelCertificate kernel_certificate(const Graph& g) {
  if (g.d() != 2) {
    throw std::invalid_argument("kernel_certificate: only defined for d=2");
  }
  const int n = g.n();
  // Augmented rows [Gamma | 1] over GF(2), eliminated in place.
  struct Row {
    std::vector<std::uint8_t> a;
    std::uint8_t rhs;
  };
  std::vector<Row> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i].a.resize(n);
    for (int j = 0; j < n; ++j) rows[i].a[j] = static_cast<std::uint8_t>(g.weight(i, j));
    rows[i].rhs = 1;
  }

  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (rows[r].a[col]) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != rank && rows[r].a[col]) {
        for (int c = 0; c < n; ++c) rows[r].a[c] ^= rows[rank].a[c];
        rows[r].rhs ^= rows[rank].rhs;
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }

  KernelCertificate cert;
  cert.kernel_dim = n - rank;
  for (int r = rank; r < n; ++r) {
    if (rows[r].rhs) return cert;  // inconsistent: no all-odd assignment
  }
  std::vector<std::uint8_t> sol(n, 0);
  for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = rows[r].rhs;
  cert.all_odd_solution = std::move(sol);
  return cert;
}

Graph local_complement(const Graph& g, int v) {
  if (g.d() != 2) throw std::invalid_argument("local_complement: only defined for d=2");
  if (v < 0 || v >= g.n()) throw std::invalid_argument("local_complement: vertex out of range");
  const int n = g.n();
  std::vector<int> w(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(i) * n + j] = g.weight(i, j);
  for (int i = 0; i < n; ++i) {
    if (i == v || !g.has_edge(v, i)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == v || !g.has_edge(v, j)) continue;
      w[static_cast<std::size_t>(i) * n + j] ^= 1;
      w[static_cast<std::size_t>(j) * n + i] ^= 1;
    }
  }
  return Graph(n, 2, std::move(w));
}

// ---------------------------------------------------------------------------
// counter-based RNG

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

double uniform_deviate(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t z = splitmix64(seed + counter * 0x9E3779B97F4A7C15ull);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x517CC1B727220A95ull));
}

Graph sample_erdos_renyi(int n, double q, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_erdos_renyi: n must be >= 1");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("sample_erdos_renyi: q must be in [0,1]");
  std::vector<int> w(static_cast<std::size_t>(n) * n, 0);
  std::uint64_t counter = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++counter) {
      if (uniform_deviate(seed, counter) < q) {
        w[static_cast<std::size_t>(i) * n + j] = 1;
        w[static_cast<std::size_t>(j) * n + i] = 1;
      }
    }
  }
  return Graph(n, 2, std::move(w));
}

}  // namespace sectorlen
