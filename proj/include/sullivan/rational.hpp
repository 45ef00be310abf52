#pragma once

#include <gmpxx.h>

#include <string>

namespace sullivan {

using Integer = mpz_class;
using Rational = mpq_class;

// Reduced "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& q) {
    Rational r(q);
    r.canonicalize();
    return r.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace sullivan
