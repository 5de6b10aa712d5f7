#include "sectorlen/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace sectorlen {

Int binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

Rat frac(const Int& num, const Int& den) {
  Rat out(num, den);
  out.canonicalize();
  return out;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

double log2_int(const Int& x) {
  if (x <= 0) throw std::domain_error("log2_int: argument must be positive");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

double to_double(const Rat& x) { return x.get_d(); }

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    return rat_from_double(std::stod(s));
  }
  Rat out;
  if (out.set_str(s, 10) != 0) {
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  }
  out.canonicalize();
  return out;
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("rat_from_double: non-finite value");
  }
  Rat out;
  mpq_set_d(out.get_mpq_t(), x);
  return out;
}

bool is_prime(int d) {
  if (d < 2) return false;
  for (int f = 2; static_cast<long>(f) * f <= d; ++f) {
    if (d % f == 0) return false;
  }
  return true;
}

}  // namespace sectorlen
