#pragma once

#include <map>
#include <string>
#include <vector>

#include "sectorlen/exact.hpp"

namespace sectorlen {

enum class SldSource { brute_force, closed_form, statevector, group, file };

std::string to_string(SldSource s);
SldSource sld_source_from_string(const std::string& s);

/// Exact sector-length vector A_0..A_n with (n, d) metadata.
/// Entries are integers for stabilizer states and rationals in general.
struct Sld {
  int n = 0;
  int d = 2;
  std::vector<Rat> A;
  SldSource source = SldSource::file;
  std::map<std::string, std::string> meta;

  Sld() = default;
  Sld(int n, int d, std::vector<Rat> A, SldSource source);

  Rat total() const;
  /// True iff the entries sum to d^n (pure-state normalization).
  bool is_pure_normalized() const;
  /// Normalized distribution a_k = A_k / d^n as doubles.
  std::vector<double> normalized() const;

  /// Shape checks every SLD must satisfy: length n+1, A_0 = 1, entries >= 0.
  void validate() const;
};

struct Moments {
  Rat mean;
  Rat second_moment;
  Rat variance;
};

}  // namespace sectorlen
