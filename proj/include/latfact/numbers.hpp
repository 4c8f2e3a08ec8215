#ifndef LATFACT_NUMBERS_HPP
#define LATFACT_NUMBERS_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace latfact {

// All counting and polynomial arithmetic is exact; GMP supplies the
// arbitrary-precision integers and rationals.
using Integer  = mpz_class;
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_integral(const Rational& q) {
    return q.get_den() == 1;
}

} // namespace latfact

#endif
