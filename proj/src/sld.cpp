#include "sectorlen/sld.hpp"

#include <stdexcept>

namespace sectorlen {

std::string to_string(SldSource s) {
  switch (s) {
    case SldSource::brute_force: return "brute_force";
    case SldSource::closed_form: return "closed_form";
    case SldSource::statevector: return "statevector";
    case SldSource::group: return "group";
    case SldSource::file: return "file";
  }
  return "unknown";
}

SldSource sld_source_from_string(const std::string& s) {
  if (s == "brute_force") return SldSource::brute_force;
  if (s == "closed_form") return SldSource::closed_form;
  if (s == "statevector") return SldSource::statevector;
  if (s == "group") return SldSource::group;
  if (s == "file") return SldSource::file;
  throw std::invalid_argument("unknown SLD source '" + s + "'");
}

Sld::Sld(int n_, int d_, std::vector<Rat> A_, SldSource source_)
    : n(n_), d(d_), A(std::move(A_)), source(source_) {
  validate();
}

Rat Sld::total() const {
  Rat t = 0;
  for (const Rat& x : A) t += x;
  return t;
}

bool Sld::is_pure_normalized() const {
  return total() == Rat(pow_int(d, static_cast<unsigned long>(n)));
}

std::vector<double> Sld::normalized() const {
  const Rat norm(pow_int(d, static_cast<unsigned long>(n)));
  std::vector<double> a(A.size());
  for (std::size_t k = 0; k < A.size(); ++k) a[k] = to_double(A[k] / norm);
  return a;
}

void Sld::validate() const {
  if (n < 1) throw std::invalid_argument("Sld: n must be >= 1");
  if (d < 2) throw std::invalid_argument("Sld: d must be >= 2");
  if (A.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("Sld: expected n+1 entries");
  }
  if (A[0] != 1) throw std::invalid_argument("Sld: A_0 must equal 1");
  const Int paulis_per_site = Int(d) * d - 1;
  for (int k = 0; k <= n; ++k) {
    if (A[k] < 0) throw std::invalid_argument("Sld: entries must be nonnegative");
    // No sector can exceed the number of weight-k Pauli operators.
    if (A[k] > Rat(binomial(n, k) * pow_int(paulis_per_site, k))) {
      throw std::invalid_argument("Sld: entry " + std::to_string(k) +
                                  " exceeds the weight-k Pauli count");
    }
  }
}

}  // namespace sectorlen
