#ifndef NILCOH_NUMERIC_HPP
#define NILCOH_NUMERIC_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcoh {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

// the two-argument mpq_class constructor does not canonicalize
inline Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline long long to_ll(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds machine range: " + z.get_str());
  return z.get_si();
}

inline long long to_ll(const Rat& q) {
  if (q.get_den() != 1) throw std::domain_error("expected integer, got " + to_string(q));
  return to_ll(q.get_num());
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// number of degree-k monomials in n variables, C(n+k-1, k)
inline Int multichoose(long n, long k) {
  if (k == 0) return 1;
  if (n <= 0) return 0;
  return binomial(n + k - 1, k);
}

}  // namespace nilcoh

#endif
