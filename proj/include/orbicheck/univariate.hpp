#pragma once
#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "orbicheck/rational.hpp"

namespace orbicheck {

// Dense univariate polynomial over the rationals, coefficients ascending.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> ascending);
    UnivariatePoly(std::initializer_list<long> ascending);

    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational lc() const;

    UnivariatePoly operator+(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    bool operator==(const UnivariatePoly& o) const { return c_ == o.c_; }

    UnivariatePoly scaled(const Rational& s) const;
    UnivariatePoly monic() const;
    UnivariatePoly derivative() const;

    // quotient and remainder; divisor must be nonzero
    std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const;

    Rational eval(const Rational& x) const;
    std::complex<long double> eval(const std::complex<long double>& x) const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rational> c_;
    void trim();
};

UnivariatePoly uni_gcd(UnivariatePoly a, UnivariatePoly b); // monic

// input = unit * prod factors[i]^mult[i]; factors are primitive over the
// integers with positive leading coefficient, pairwise distinct,
// irreducible over the rationals, sorted by degree then coefficients.
struct FactorizationResult {
    Rational unit = Rational(1);
    std::vector<std::pair<UnivariatePoly, int>> factors;
};

// Complete factorization over the rationals: squarefree split, modular
// factorization at a good prime, Hensel lifting, subset recombination.
FactorizationResult factor_univariate(const UnivariatePoly& f);

struct NumericRoot {
    std::complex<long double> value;
    long double residual;   // |f_monic(value)|
    long double separation; // distance to the nearest other root
};

// All complex roots of a squarefree polynomial by simultaneous Newton
// iteration, each with its residual and separation certificate.
std::vector<NumericRoot> roots_numeric(const UnivariatePoly& f,
                                       long double eps = 1e-12L);

} // namespace orbicheck
