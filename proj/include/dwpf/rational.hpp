#pragma once

// Exact rational scalars. GMP's mpq_class already guarantees the invariants
// we need (lowest terms, positive denominator) as long as values are
// canonicalized on construction; every helper here preserves them.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dwpf {

using Rational = mpq_class;

// Builds p/q in canonical form. q must be nonzero.
inline Rational make_rational(long p, long q = 1) {
    if (q == 0) throw std::domain_error("rational: zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q", with optional leading '-'.
inline Rational rational_from_string(std::string_view text) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    if (sgn(Rational(r.get_den())) == 0)
        throw std::domain_error("rational: zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

// Integer power with negative exponents allowed for nonzero base.
inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (sgn(base) == 0) throw std::domain_error("rational: 0 to a negative power");
        return rational_pow(Rational(1) / base, -e);
    }
    Rational acc(1), sq = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= sq;
        if (k > 1) sq *= sq;
    }
    return acc;
}

}  // namespace dwpf
