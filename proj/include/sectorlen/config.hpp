#pragma once

namespace sectorlen {

/// Size caps and worker count for the enumeration kernels.
/// threads = 0 picks the default worker count (see parallel.hpp).
struct EnumerationOptions {
  int max_qubits = 40;              // cap for the d=2 graph kernel
  double max_log2_states = 27.0;    // cap on log2(d^n) for qudit kernels
  int max_generators = 30;          // cap for stabilizer group enumeration
  int threads = 0;
};

}  // namespace sectorlen
