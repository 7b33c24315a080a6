#pragma once
#include <complex>
#include <map>
#include <vector>

#include "orbicheck/monomial.hpp"
#include "orbicheck/rational.hpp"
#include "orbicheck/ring.hpp"

namespace orbicheck {

struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term& o) const {
        return mono == o.mono && coeff == o.coeff;
    }
};

// Sparse multivariate polynomial over the rationals. Terms are kept sorted
// strictly descending in the canonical grevlex order with no zero
// coefficients, so operator== is plain structural equality.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return {}; }
    static Polynomial constant(Rational c);
    static Polynomial variable(VarIdx i, int32_t k = 1);
    static Polynomial monomial(Monomial m, Rational c = Rational(1));
    static Polynomial from_terms(std::vector<Term> terms); // merges + normalizes

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const; // canonical grevlex

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial pow(uint32_t k) const;

    Polynomial scaled(const Rational& c) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rational coefficient_of(const Monomial& m) const;
    int32_t degree_in(VarIdx v) const; // -1 for the zero polynomial
    bool contains_var(VarIdx v) const;
    std::vector<VarIdx> support_vars() const;

    Polynomial derivative(VarIdx v) const;
    Polynomial substituted(VarIdx v, const Polynomial& by) const;

    // Largest positive rational c with p/c integral and primitive; the sign
    // of the canonical leading coefficient is carried separately.
    Rational content() const; // pre: nonzero
    Polynomial primitive_part() const;

    std::complex<long double>
    eval(const std::vector<std::complex<long double>>& point) const;

private:
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

// Weighted (quasi-homogeneous) degree bookkeeping.
Rational weighted_degree(const Monomial& m, const Ring& ring);
Rational weighted_degree(const Polynomial& p, const Ring& ring); // max over terms; pre: nonzero
bool is_quasi_homogeneous(const Polynomial& p, const Ring& ring, const Rational& d);

// sum_i (w_i/2) x_i d/dx_i p; fixes quasi-homogeneous degree-2 polynomials.
Polynomial euler_apply(const Polynomial& p, const Ring& ring);

// All monomials of exact weighted degree d in the positive-weight variables,
// with per-variable minimum exponents. Parameters stay at exponent 0.
// Returned in descending canonical order.
std::vector<Monomial>
monomials_of_degree(const Ring& ring, const Rational& d,
                    const std::map<VarIdx, int32_t>& min_exponents = {});

} // namespace orbicheck
