#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sectorlen {

/// Edge-weighted graph over Z/dZ. For d=2 this is a plain adjacency matrix.
/// Vertices are 0-based in code; all I/O formats are 1-based.
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  /// `weights` is a flat n*n matrix; must be symmetric with zero diagonal
  /// and entries in {0,...,d-1}.
  Graph(int n, int d, std::vector<int> weights);

  int n() const { return n_; }
  int d() const { return d_; }
  int weight(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }
  bool has_edge(int i, int j) const { return weight(i, j) != 0; }

  /// Adjacency bitmask of vertex i (available iff d=2 and n<=64).
  std::uint64_t row_mask(int i) const { return rows_[i]; }
  bool has_row_masks() const { return !rows_.empty(); }

  int degree(int i) const;  // number of incident edges (nonzero weights)
  long edge_count() const;

 private:
  int n_;
  int d_;
  std::vector<int> w_;
  std::vector<std::uint64_t> rows_;
};

struct GraphProperties {
  long isolated = 0;  // vertices with no incident edge
  long leaves = 0;    // vertices with exactly one incident edge
  long twins = 0;     // pairs with identical neighborhoods outside the pair
  /// twins_by_shared[m] = twin pairs with exactly m common neighbors.
  /// For d>2 the classification uses the support pattern of neighborhoods.
  std::vector<long> twins_by_shared;
  long max_adjacent_degree_sum = 0;  // max over edges of deg(i)+deg(j); 0 if edgeless
  long edge_count = 0;
};

struct KernelCertificate {
  int kernel_dim = 0;
  /// A vector r with Gamma r = (1,...,1) over GF(2), if one exists.
  std::optional<std::vector<std::uint8_t>> all_odd_solution;
};

enum class Family { edgeless, complete, star, path, cycle, pusteblume };

/// Standard graph6 format (short and extended headers). d is fixed to 2.
Graph parse_graph6(const std::string& text);

/// Lines "i j [w]" with 1-based vertices and optional weight in 1..d-1
/// (default 1). Duplicate edges keep the last weight.
Graph parse_edge_list(const std::string& text, int n, int d);

Graph make_family(Family family, int n, int d = 2);
Graph make_grid2d(int l, int m, int d = 2);
Graph make_grid3d(int l, int m, int k, int d = 2);

GraphProperties properties(const Graph& g);

/// GF(2) kernel dimension of the adjacency matrix and, when consistent,
/// a solution of Gamma r = 1 (the all-ones vector). Requires d=2.
KernelCertificate kernel_certificate(const Graph& g);

/// Complements the subgraph induced by the neighborhood of v (0-based).
/// Requires d=2.
Graph local_complement(const Graph& g, int v);

/// Deterministic Erdos-Renyi sample: pairs (i,j), i<j, visited in
/// lexicographic order; one counter-based 64-bit deviate per pair,
/// edge present iff deviate < q.
Graph sample_erdos_renyi(int n, double q, std::uint64_t seed);

/// Counter-based generator used by the samplers: uniform deviate in [0,1)
/// for a given (seed, counter) pair.
double uniform_deviate(std::uint64_t seed, std::uint64_t counter);

/// Derives an independent stream seed for a (seed, index) pair.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sectorlen
