#ifndef GVD_NUMERIC_HPP
#define GVD_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace gvd {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) { return Rat(num, den); }

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Binomial coefficient C(n, k) for integer n (possibly negative via the
// falling-factorial convention), k >= 0.
inline Int binomial(long n, long k) {
  if (k < 0) return 0;
  Int num = 1;
  Int den = 1;
  for (long i = 0; i < k; ++i) {
    num *= Int(n - i);
    den *= Int(i + 1);
  }
  Int q = num / den;
  return q;
}

}  // namespace gvd

#endif
