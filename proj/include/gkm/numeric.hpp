#pragma once

#include <gmpxx.h>

#include <string>

namespace gkm {

// All arithmetic in the toolkit is exact.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

// "3/2", "-1", "0"; never decimal.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

}  // namespace gkm
