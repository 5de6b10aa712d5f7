// Timing comparison between the serial reference implementations and the
// OpenMP Gray-code/odometer kernels. Usage: bench_kernels [n] [threads]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "sectorlen/engine.hpp"
#include "sectorlen/graph.hpp"
#include "sectorlen/parallel.hpp"
#include "sectorlen/pauli.hpp"

using namespace sectorlen;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(const char* name, double serial, double parallel, int threads) {
  std::cout << name << ": serial " << serial << " s, " << threads
            << "-thread kernel " << parallel << " s, speedup "
            << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 22;
  const int threads = argc > 2 ? std::atoi(argv[2]) : worker_count();
  std::cout << "graph enumeration at n=" << n << ", 2^n = " << (1ull << n)
            << " assignments\n";

  const Graph g = sample_erdos_renyi(n, 0.5, 42);
  EnumerationOptions opts;
  opts.threads = threads;

  auto t0 = clock_type::now();
  const auto serial_hist = brute_force_weights_serial(g);
  const double t_serial = seconds_since(t0);

  t0 = clock_type::now();
  const Sld fast = brute_force_sld(g, opts);
  const double t_fast = seconds_since(t0);

  for (int k = 0; k <= n; ++k) {
    if (fast.A[k] != Rat(Int(serial_hist[k]))) {
      std::cerr << "MISMATCH at k=" << k << "\n";
      return 1;
    }
  }
  report("graph kernel", t_serial, t_fast, threads);

  // Stabilizer-group enumeration on the same graph.
  const StabilizerGroup group = graph_stabilizer_generators(g);
  EnumerationOptions gopts = opts;
  gopts.max_generators = n;
  t0 = clock_type::now();
  const auto group_serial = group_weight_distribution_serial(group);
  const double tg_serial = seconds_since(t0);
  t0 = clock_type::now();
  const Sld group_fast = group_weight_distribution(group, gopts);
  const double tg_fast = seconds_since(t0);
  for (int k = 0; k <= n; ++k) {
    if (group_fast.A[k] != Rat(Int(group_serial[k]))) {
      std::cerr << "GROUP MISMATCH at k=" << k << "\n";
      return 1;
    }
  }
  report("group kernel", tg_serial, tg_fast, threads);

  // Qudit odometer, d=3.
  const int qn = std::min(n / 2 + 2, 15);
  std::vector<int> w(static_cast<std::size_t>(qn) * qn, 0);
  for (int i = 0; i + 1 < qn; ++i) {
    w[static_cast<std::size_t>(i) * qn + i + 1] = 1 + (i % 2);
    w[static_cast<std::size_t>(i + 1) * qn + i] = 1 + (i % 2);
  }
  const Graph q(qn, 3, std::move(w));
  t0 = clock_type::now();
  const auto q_serial = brute_force_weights_serial(q);
  const double tq_serial = seconds_since(t0);
  t0 = clock_type::now();
  const Sld q_fast = brute_force_sld_qudit(q, opts);
  const double tq_fast = seconds_since(t0);
  for (int k = 0; k <= qn; ++k) {
    if (q_fast.A[k] != Rat(Int(q_serial[k]))) {
      std::cerr << "QUDIT MISMATCH at k=" << k << "\n";
      return 1;
    }
  }
  std::cout << "qudit enumeration at n=" << qn << ", 3^n assignments\n";
  report("qudit kernel", tq_serial, tq_fast, threads);
  return 0;
}
