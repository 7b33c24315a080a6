#pragma once
#include <gmpxx.h>
#include <string>

#include "orbicheck/errors.hpp"

namespace orbicheck {

// Exact arbitrary-precision scalars. mpq_class values stay canonical
// (lowest terms, positive denominator) under arithmetic; anything built
// from raw strings or integer pairs is canonicalized on entry.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional leading minus.
Rational rational_from_string(const std::string& s);

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Good to ~1e-16 relative error; fine for the numeric tolerances used here.
long double to_longdouble(const Rational& q);

long double to_longdouble(const Integer& z);

} // namespace orbicheck
