#pragma once
#include <cstdint>
#include <vector>

#include "orbicheck/errors.hpp"

namespace orbicheck {

using VarIdx = uint32_t;

// Exponent vector, stored densely and zero-extended on demand so monomials
// from a ring and any of its extensions mix freely. Exponents stay below
// 2^31; additions are checked.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int32_t> exps);

    static Monomial var(VarIdx i, int32_t k = 1);

    int32_t exp(VarIdx i) const { return i < e_.size() ? e_[i] : 0; }
    size_t width() const { return e_.size(); } // beyond this all exponents are 0
    int64_t total_degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const; // this | o
    Monomial divided_into(const Monomial& o) const; // o / this, pre: divides(o)
    bool coprime(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const;
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<int32_t> e_;
    void trim(); // drop trailing zeros so equality is representation-free
};

// Canonical (graded reverse lexicographic) comparison used for the normal
// form of polynomials: returns +1 if a > b, -1 if a < b, 0 if equal.
int grevlex_cmp(const Monomial& a, const Monomial& b);

struct MonomialHash {
    size_t operator()(const Monomial& m) const;
};

} // namespace orbicheck
