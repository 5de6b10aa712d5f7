#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sectorlen/config.hpp"
#include "sectorlen/graph.hpp"
#include "sectorlen/sld.hpp"

namespace sectorlen {

/// Phase-free symplectic representation of X^r Z^s on n qudits.
struct SymplecticPauli {
  std::vector<int> r;  // X exponents, entries in 0..d-1
  std::vector<int> s;  // Z exponents
};

/// Number of sites with (r_i, s_i) != (0, 0).
int symplectic_weight(const SymplecticPauli& p);

/// Commuting generator list for an n-qudit stabilizer group. Construction
/// checks that the symplectic form r.s' - s.r' vanishes mod d for every
/// generator pair, and that the generators are independent over GF(2)
/// when d=2 and g=n.
struct StabilizerGroup {
  int n = 0;
  int d = 2;
  std::vector<SymplecticPauli> generators;

  StabilizerGroup(int n, int d, std::vector<SymplecticPauli> generators);
};

/// Generator i of a graph state: r = e_i, s = i-th column of the weight matrix.
StabilizerGroup graph_stabilizer_generators(const Graph& g);

enum class LogicalState { zero, one, plus, minus };

/// Full n-generator stabilizer group of a logical basis state of the
/// distance-D rotated surface code (n = D^2): the D^2-1 plaquette
/// stabilizers plus the transversal logical operator fixing the state.
///
/// Lattice convention: qubit (row, col) -> row*D + col; faces f(i,j) for
/// i,j in {-1,...,D-1} cover the in-range qubits among (i,j), (i,j+1),
/// (i+1,j), (i+1,j+1); a face is X-type iff i+j is odd; two-qubit boundary
/// faces survive on the top/bottom edges when X-type and on the left/right
/// edges when Z-type; Z_L acts on row 0 and X_L on column 0.
StabilizerGroup rotated_surface_code_logical_generators(int distance,
                                                        LogicalState logical);

/// One operator per line: symbols I,X,Y,Z for d=2, or whitespace-separated
/// X^aZ^b site tuples for general d (e.g. "X1Z2 I X0Z1").
StabilizerGroup parse_generators(const std::string& text, int d = 2);

/// Histogram of symplectic weights over all d^g group elements, as an SLD.
/// Requires d prime. Enumeration partitions the index space into blocks;
/// the result is independent of the worker count.
Sld group_weight_distribution(const StabilizerGroup& group,
                              const EnumerationOptions& opts = {});

/// Straightforward per-element reference implementation (kept for tests).
std::vector<std::uint64_t> group_weight_distribution_serial(
    const StabilizerGroup& group);

}  // namespace sectorlen
