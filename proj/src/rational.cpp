#include "orbicheck/rational.hpp"

#include <cctype>

namespace orbicheck {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  (c == '-' && i == 0);
        if (!ok) throw DomainError("bad rational literal '" + s + "'");
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw DomainError("rational with zero denominator");
    q.canonicalize();
    return q;
}

long double to_longdouble(const Integer& z) {
    // 53-bit mantissa from mpz_get_d; relative error ~1e-16, which is well
    // inside every tolerance used by the numeric layers.
    return static_cast<long double>(mpz_get_d(z.get_mpz_t()));
}

long double to_longdouble(const Rational& q) {
    long double num = to_longdouble(Integer(q.get_num()));
    long double den = to_longdouble(Integer(q.get_den()));
    return num / den;
}

} // namespace orbicheck
