#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "orbicheck/parse.hpp"
#include "orbicheck/polynomial.hpp"

using namespace orbicheck;

namespace {

Ring q10_ring() {
    return weighted_ring({"x", "y", "z"},
                         {make_rational(6, 12), make_rational(8, 12), make_rational(9, 12)});
}

// six-variable ring used by the first equivalence: x,y,z on one side and
// u,v,w on the other, all normalized to weighted degree 2 for the potentials
Ring pair_ring_v1() {
    return weighted_ring({"x", "y", "z", "u", "v", "w"},
                         {make_rational(6, 12), make_rational(8, 12), make_rational(9, 12),
                          make_rational(3, 12), make_rational(8, 12), make_rational(12, 12)});
}

Polynomial rand_poly(std::mt19937_64& rng, int nvars, int max_terms) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> ex(0, 3);
    std::uniform_int_distribution<long> co(-6, 6);
    std::vector<Term> terms;
    int n = nt(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int32_t> e(nvars);
        for (auto& v : e) v = ex(rng);
        terms.push_back({Monomial(e), Rational(co(rng))});
    }
    return Polynomial::from_terms(terms);
}

} // namespace

TEST_CASE("parse and print round-trip") {
    Ring r = q10_ring();
    CHECK(print_poly(parse_poly("x^4+y^3+x*z^2", r), r) == "x^4+y^3+x*z^2");
    // canonical form reorders terms
    CHECK(print_poly(parse_poly("y^3 + x*z^2 + x^4", r), r) == "x^4+y^3+x*z^2");
    CHECK(print_poly(parse_poly("(x+y)^2-x^2-2*x*y", r), r) == "y^2");
    CHECK(print_poly(parse_poly("1/2*x - x", r), r) == "-1/2*x");
    CHECK(print_poly(parse_poly("x-x", r), r) == "0");
    CHECK(print_poly(parse_poly("-x+3", r), r) == "-x+3");
    CHECK(print_poly(parse_poly("0", r), r) == "0");
    CHECK(print_poly(parse_poly("2^3", r), r) == "8");

    // reprint of a reprint is stable
    std::string once = print_poly(parse_poly("(x+y+z)^3", r), r);
    CHECK(print_poly(parse_poly(once, r), r) == once);
}

TEST_CASE("parse rejects what the grammar excludes") {
    Ring r = q10_ring();
    CHECK_THROWS_AS(parse_poly("x y", r), ParseError);       // implicit product
    CHECK_THROWS_AS(parse_poly("w+1", r), UnknownVariableError);
    CHECK_THROWS_AS(parse_poly("x^", r), ParseError);
    CHECK_THROWS_AS(parse_poly("x^(2)", r), ParseError);
    CHECK_THROWS_AS(parse_poly("(x+y", r), ParseError);
    CHECK_THROWS_AS(parse_poly("x/y", r), ParseError);       // '/' only in literals
    CHECK_THROWS_AS(parse_poly("", r), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", r), ParseError);
}

TEST_CASE("unknown variable error carries its position") {
    Ring r = q10_ring();
    try {
        parse_poly("x + qq^2", r);
        FAIL("expected a parse error");
    } catch (const UnknownVariableError& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 200; ++iter) {
        Polynomial p = rand_poly(rng, 3, 5);
        Polynomial q = rand_poly(rng, 3, 5);
        Polynomial s = rand_poly(rng, 3, 5);
        CHECK((p + q) + s == p + (q + s));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * s == p * (q * s));
        CHECK(p * (q + s) == p * q + p * s);
        CHECK(p + Polynomial::zero() == p);
        CHECK(p * Polynomial::constant(Rational(1)) == p);
        CHECK(p - p == Polynomial::zero());
        CHECK(p.pow(3) == p * p * p);
    }
}

TEST_CASE("weighted degree") {
    Ring r = q10_ring();
    Polynomial w = parse_poly("x^4+y^3+x*z^2", r);
    for (const auto& t : w.terms())
        CHECK(weighted_degree(t.mono, r) == Rational(2));
    CHECK(weighted_degree(w, r) == Rational(2));
    CHECK(weighted_degree(parse_poly("x*y", r), r) == make_rational(14, 12));
    CHECK(weighted_degree(Monomial(), r) == Rational(0));
    CHECK_THROWS_AS(weighted_degree(Polynomial::zero(), r), DomainError);
}

TEST_CASE("quasi-homogeneity") {
    Ring r = q10_ring();
    CHECK(is_quasi_homogeneous(parse_poly("x^4+y^3+x*z^2", r), r, Rational(2)));
    CHECK_FALSE(is_quasi_homogeneous(parse_poly("x^4+y^3+z", r), r, Rational(2)));
    CHECK(is_quasi_homogeneous(Polynomial::zero(), r, Rational(2)));
    CHECK(is_quasi_homogeneous(Polynomial::zero(), r, make_rational(7, 5)));
}

TEST_CASE("euler operator") {
    Ring r = q10_ring();
    Polynomial w = parse_poly("x^4+y^3+x*z^2", r);
    CHECK(euler_apply(w, r) == w); // degree-2 quasi-homogeneous is fixed
    // each monomial is scaled by half its weighted degree
    Polynomial p = parse_poly("x*y", r);
    CHECK(euler_apply(p, r) == p.scaled(make_rational(7, 12)));
    Polynomial mixed = parse_poly("x^4+x*y", r);
    CHECK(euler_apply(mixed, r) != mixed);
    CHECK(euler_apply(Polynomial::zero(), r) == Polynomial::zero());
}

TEST_CASE("monomial search at fixed weighted degree") {
    // K14 in its one-sided shape: weights 1/4, 2/3, 1; degree-2 monomials
    Ring r = weighted_ring({"x", "y", "z"},
                           {make_rational(1, 4), make_rational(2, 3), Rational(1)});
    auto found = monomials_of_degree(r, Rational(2));
    REQUIRE(found.size() == 4);
    std::set<std::string> names;
    for (const auto& m : found) names.insert(print_poly(Polynomial::monomial(m), r));
    CHECK(names == std::set<std::string>{"x^8", "x^4*z", "y^3", "z^2"});
}

TEST_CASE("monomial search with minimum exponents") {
    Ring r = pair_ring_v1();
    VarIdx u = r.index_of("u");
    auto deg9 = monomials_of_degree(r, make_rational(9, 12), {{u, 1}});
    std::set<std::string> s9;
    for (const auto& m : deg9) s9.insert(print_poly(Polynomial::monomial(m), r));
    CHECK(s9 == std::set<std::string>{"u^3", "x*u"});

    auto deg12 = monomials_of_degree(r, make_rational(12, 12), {{u, 1}});
    std::set<std::string> s12;
    for (const auto& m : deg12) s12.insert(print_poly(Polynomial::monomial(m), r));
    CHECK(s12 == std::set<std::string>{"u^4", "x*u^2", "z*u"});

    // degree 0 admits only the empty monomial; unreachable degrees give nothing
    CHECK(monomials_of_degree(r, Rational(0)).size() == 1);
    CHECK(monomials_of_degree(r, make_rational(1, 7)).empty());
    CHECK(monomials_of_degree(r, Rational(-1)).empty());
}

TEST_CASE("derivative and substitution") {
    Ring r = q10_ring();
    Polynomial w = parse_poly("x^4+y^3+x*z^2", r);
    VarIdx x = r.index_of("x"), z = r.index_of("z");
    CHECK(print_poly(w.derivative(x), r) == "4*x^3+z^2");
    CHECK(print_poly(w.derivative(z), r) == "2*x*z");
    // substitute z := 0 and x := y
    CHECK(print_poly(w.substituted(z, Polynomial::zero()), r) == "x^4+y^3");
    CHECK(print_poly(w.substituted(x, parse_poly("y", r)), r) == "y^4+y^3+y*z^2");
    // chain rule spot check: d/dx f(x^2) = 2x f'(x^2) with f = x^3+x
    Polynomial f = parse_poly("x^3+x", r);
    Polynomial g = f.substituted(x, parse_poly("x^2", r));
    CHECK(g.derivative(x) ==
          parse_poly("2*x", r) * f.derivative(x).substituted(x, parse_poly("x^2", r)));
}

TEST_CASE("content and primitive part") {
    Ring r = q10_ring();
    Polynomial p = parse_poly("4/3*x^2-2*y", r);
    CHECK(p.content() == make_rational(2, 3));
    CHECK(p.primitive_part() == parse_poly("2*x^2-3*y", r));
    Polynomial q = parse_poly("-6*x-9", r);
    CHECK(q.content() == Rational(3));
    CHECK(q.primitive_part() == parse_poly("-2*x-3", r));
}

TEST_CASE("rational literals") {
    CHECK(rational_from_string("3/12") == make_rational(1, 4));
    CHECK(rational_from_string("-8") == Rational(-8));
    CHECK(to_string(make_rational(26, 24)) == "13/12");
    CHECK_THROWS_AS(rational_from_string("1/0"), DomainError);
    CHECK_THROWS_AS(rational_from_string("a"), DomainError);
}

TEST_CASE("numeric evaluation") {
    Ring r = q10_ring();
    Polynomial w = parse_poly("x^4+y^3+x*z^2", r);
    std::vector<std::complex<long double>> pt{{2, 0}, {1, 0}, {3, 0}};
    CHECK(std::abs(w.eval(pt) - std::complex<long double>(35, 0)) < 1e-15L);
    std::vector<std::complex<long double>> ipt{{0, 1}, {0, 0}, {0, 0}};
    CHECK(std::abs(parse_poly("x^2+1", r).eval(ipt)) < 1e-15L);
}
