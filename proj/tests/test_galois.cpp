#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <string>
#include <vector>

#include "orbicheck/errors.hpp"
#include "orbicheck/galois.hpp"
#include "orbicheck/mf.hpp"
#include "orbicheck/parse.hpp"
#include "orbicheck/univariate.hpp"

using namespace orbicheck;

namespace {

using CLD = std::complex<long double>;

UnivariatePoly reassemble(const FactorizationResult& r) {
    UnivariatePoly prod({1});
    for (const auto& [g, m] : r.factors)
        for (int t = 0; t < m; ++t) prod = prod * g;
    return prod.scaled(r.unit);
}

UnivariatePoly f16() {
    std::vector<Rational> c(17, Rational(0));
    c[0] = 4096;
    c[8] = 2176;
    c[16] = 1;
    return UnivariatePoly(std::move(c));
}

bool contains_note(const std::vector<std::string>& notes, const std::string& needle) {
    for (const auto& n : notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

std::vector<size_t> compose(const std::vector<size_t>& f, const std::vector<size_t>& g) {
    std::vector<size_t> r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

bool is_id(const std::vector<size_t>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

} // namespace

TEST_CASE("univariate arithmetic round trips") {
    UnivariatePoly f({-1, 0, 1}); // x^2 - 1
    UnivariatePoly g({1, 1});     // x + 1
    auto qr = f.divmod(g);
    CHECK(qr.first == UnivariatePoly({-1, 1}));
    CHECK(qr.second.is_zero());
    CHECK(f.derivative() == UnivariatePoly({0, 2}));
    CHECK(f.eval(Rational(3)) == Rational(8));
    CHECK((f + g) * g == f * g + g * g);
    CHECK(uni_gcd(f, g) == g);
    CHECK(uni_gcd(f, UnivariatePoly({1, 0, 1})).degree() == 0);
    CHECK(f.str() == "x^2 - 1");
    CHECK_THROWS_AS(f.divmod(UnivariatePoly()), DomainError);
}

TEST_CASE("the even octic splits into the two known quartics") {
    UnivariatePoly f({16, 0, 0, 0, -24, 0, 0, 0, 1});
    auto r = factor_univariate(f);
    CHECK(r.unit == Rational(1));
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].first == UnivariatePoly({-4, 0, -4, 0, 1}));
    CHECK(r.factors[1].first == UnivariatePoly({-4, 0, 4, 0, 1}));
    CHECK(r.factors[0].second == 1);
    CHECK(r.factors[1].second == 1);
    // oracle: multiply the two quartics back together by hand
    CHECK(UnivariatePoly({-4, 0, -4, 0, 1}) * UnivariatePoly({-4, 0, 4, 0, 1}) == f);
    CHECK(reassemble(r) == f);
}

TEST_CASE("the odd octic is irreducible") {
    UnivariatePoly f({16, 0, 0, 0, 24, 0, 0, 0, 1});
    auto r = factor_univariate(f);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].first == f);
    CHECK(r.factors[0].second == 1);
}

TEST_CASE("the degree sixteen polynomial splits into four coprime quartics") {
    auto r = factor_univariate(f16());
    REQUIRE(r.factors.size() == 4);
    int degsum = 0;
    for (const auto& [g, m] : r.factors) {
        CHECK(g.degree() == 4);
        CHECK(m == 1);
        degsum += g.degree() * m;
    }
    CHECK(degsum == 16);
    CHECK(reassemble(r) == f16());
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            CHECK(uni_gcd(r.factors[i].first, r.factors[j].first).degree() == 0);

    // oracle: 1 + sqrt2 + i generates the quartic ((x-1)^2)^2 - 2(x-1)^2 + 9,
    // computed here by expanding the shift by hand
    UnivariatePoly shift({-1, 1}); // x - 1
    UnivariatePoly sq = shift * shift;
    UnivariatePoly oracle = sq * sq - sq.scaled(Rational(2)) + UnivariatePoly({9});
    bool present = false;
    for (const auto& [g, m] : r.factors) present = present || g == oracle;
    CHECK(present);
}

TEST_CASE("units and multiplicities survive factorization") {
    UnivariatePoly a({-1, 1}), b({1, 0, 1});
    UnivariatePoly f = ((a * a) * (b * b * b)).scaled(Rational(-3, 2));
    auto r = factor_univariate(f);
    CHECK(r.unit == Rational(-3, 2));
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].first == a);
    CHECK(r.factors[0].second == 2);
    CHECK(r.factors[1].first == b);
    CHECK(r.factors[1].second == 3);
    CHECK(reassemble(r) == f);

    auto r2 = factor_univariate(UnivariatePoly({-6, 0, 6}));
    CHECK(r2.unit == Rational(6));
    REQUIRE(r2.factors.size() == 2);
    CHECK(r2.factors[0].first == UnivariatePoly({-1, 1}));
    CHECK(r2.factors[1].first == UnivariatePoly({1, 1}));

    auto r3 = factor_univariate(UnivariatePoly({-1, 0, 1}));
    REQUIRE(r3.factors.size() == 2);
    CHECK(r3.unit == Rational(1));
}

TEST_CASE("a rational product with mixed content reconstructs exactly") {
    UnivariatePoly p1({1, 1, 1});       // x^2 + x + 1
    UnivariatePoly p2({-2, 0, 0, 1});   // x^3 - 2
    UnivariatePoly p3({3, 2});          // 2x + 3
    UnivariatePoly f = (p1 * (p2 * p2) * p3).scaled(Rational(5, 7));
    auto r = factor_univariate(f);
    REQUIRE(r.factors.size() == 3);
    CHECK(reassemble(r) == f);
    bool saw1 = false, saw2 = false, saw3 = false;
    for (const auto& [g, m] : r.factors) {
        if (g == p1) saw1 = m == 1;
        if (g == p2) saw2 = m == 2;
        if (g == p3) saw3 = m == 1;
    }
    CHECK(saw1);
    CHECK(saw2);
    CHECK(saw3);
}

TEST_CASE("cyclotomic and quadratic edge inputs") {
    auto r = factor_univariate(UnivariatePoly({1, 0, 0, 0, 1})); // x^4 + 1
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].first.degree() == 4);
    auto r2 = factor_univariate(UnivariatePoly({-1, -1, 1})); // x^2 - x - 1
    REQUIRE(r2.factors.size() == 1);
    auto r3 = factor_univariate(UnivariatePoly({7}));
    CHECK(r3.unit == Rational(7));
    CHECK(r3.factors.empty());
}

TEST_CASE("factorization guards its domain") {
    CHECK_THROWS_AS(factor_univariate(UnivariatePoly()), DomainError);
    std::vector<Rational> big(66, Rational(0));
    big[0] = 1;
    big[65] = 1;
    CHECK_THROWS_AS(factor_univariate(UnivariatePoly(std::move(big))), UnsupportedError);
}

TEST_CASE("numeric roots of small polynomials match hand values") {
    auto r = roots_numeric(UnivariatePoly({1, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0].value - CLD(0, -1)) < 1e-15L);
    CHECK(std::abs(r[1].value - CLD(0, 1)) < 1e-15L);
    CHECK(r[0].separation > 1.9L);

    auto r2 = roots_numeric(UnivariatePoly({2, -3, 1}));
    REQUIRE(r2.size() == 2);
    CHECK(std::abs(r2[0].value - CLD(1, 0)) < 1e-15L);
    CHECK(std::abs(r2[1].value - CLD(2, 0)) < 1e-15L);
}

TEST_CASE("quartic roots match the radical oracle") {
    auto r = roots_numeric(UnivariatePoly({-4, 0, -4, 0, 1}));
    REQUIRE(r.size() == 4);
    // oracle: x^2 = 2 +- 2 sqrt2, so x = +-sqrt(2 + 2 sqrt2), +-i sqrt(2 sqrt2 - 2)
    long double s2 = std::sqrt(2.0L);
    long double outer = std::sqrt(2 + 2 * s2);
    long double inner = std::sqrt(2 * s2 - 2);
    CHECK(std::abs(r[0].value - CLD(-outer, 0)) < 1e-15L);
    CHECK(std::abs(r[1].value - CLD(0, -inner)) < 1e-15L);
    CHECK(std::abs(r[2].value - CLD(0, inner)) < 1e-15L);
    CHECK(std::abs(r[3].value - CLD(outer, 0)) < 1e-15L);
    for (const auto& root : r) {
        CHECK(root.residual < 1e-12L);
        CHECK(root.separation > 0.9L);
    }
}

TEST_CASE("root counts equal degrees across a small sweep") {
    for (const auto& f : {UnivariatePoly({16, 0, 0, 0, 24, 0, 0, 0, 1}),
                          UnivariatePoly({1, 0, 0, 0, 6, 0, 0, 0, 1}), f16(),
                          UnivariatePoly({-3, 1, 4, 1})}) {
        auto r = roots_numeric(f);
        CHECK(r.size() == (size_t)f.degree());
        for (const auto& root : r) CHECK(root.residual < 1e-12L);
    }
}

TEST_CASE("root finding rejects bad inputs") {
    UnivariatePoly lin({-1, 1});
    CHECK_THROWS_AS(roots_numeric(lin * lin), DomainError);
    CHECK_THROWS_AS(roots_numeric(UnivariatePoly({5})), DomainError);
}

TEST_CASE("the second family solves into exactly 32 verified points") {
    SolutionSet s = solve_v2();
    REQUIRE(s.solutions.size() == 32);
    REQUIRE(s.names.size() == 5);
    CHECK(s.names[0] == "a");
    CHECK(s.names[s.designated] == "c");
    // the relation list holds the four defining equations plus the adjoined
    // inverse relation
    MatrixFactorization M = build_v2();
    CHECK(M.R.relations.size() == 5);
    for (const auto& sol : s.solutions) {
        REQUIRE(sol.value.size() == 5);
        CHECK(sol.residual < 1e-10L);
        CHECK(std::abs(sol.value[0] * sol.value[0] - CLD(1, 0)) < 1e-17L);
        bool plus = std::abs(sol.value[0] - CLD(1, 0)) < 1e-9L;
        CHECK(sol.exact_label == (plus ? "a=1" : "a=-1"));
    }
}

TEST_CASE("b times d lands on the known quadratic and b over c on its square") {
    SolutionSet s = solve_v2();
    for (const auto& sol : s.solutions) {
        CLD b = sol.value[1], c = sol.value[2], d = sol.value[3], binv = sol.value[4];
        CLD t = b * d;
        CHECK(std::abs(t * t - CLD(2, 0) * t + CLD(2, 0)) < 1e-15L);
        CLD ratio = b / c;
        CHECK(std::abs(ratio * ratio - (CLD(1, 0) - t)) < 1e-15L);
        CHECK(std::abs(b * binv - CLD(1, 0)) < 1e-15L);
    }
}

TEST_CASE("every solution reinstantiates the factorization numerically") {
    SolutionSet s = solve_v2();
    MatrixFactorization M = build_v2();
    for (size_t i = 0; i < s.solutions.size(); i += 3)
        CHECK(square_residual(M, s.names, s.solutions[i].value) < 1e-12L);
}

TEST_CASE("solution coordinates carry exact minimal polynomials") {
    SolutionSet s = solve_v2();
    UnivariatePoly f = f16();
    for (const auto& sol : s.solutions) {
        REQUIRE(sol.coord_tags.size() == 5);
        for (size_t k = 0; k < 5; ++k) {
            REQUIRE(sol.coord_tags[k] >= 0);
            const UnivariatePoly& tag = s.tag_polys[sol.coord_tags[k]];
            CHECK(std::abs(tag.eval(sol.value[k])) < 1e-12L);
        }
        // b and c both satisfy the degree sixteen polynomial, so their tags
        // divide it exactly
        for (size_t k : {(size_t)1, (size_t)2}) {
            const UnivariatePoly& tag = s.tag_polys[sol.coord_tags[k]];
            CHECK(tag.degree() == 4);
            CHECK(f.divmod(tag).second.is_zero());
        }
        // a is rational of either sign
        const UnivariatePoly& atag = s.tag_polys[sol.coord_tags[0]];
        CHECK(atag.degree() == 1);
    }
    // spot check: each tag is irreducible according to the factoring routine
    for (const auto& tag : s.tag_polys) {
        auto r = factor_univariate(tag);
        CHECK(r.factors.size() == 1);
        CHECK(r.factors[0].second == 1);
    }
}

TEST_CASE("the 32 solutions fall into eight orbits of four") {
    SolutionSet s = solve_v2();
    auto fact = factor_univariate(f16());
    size_t orbits = orbit_partition(s, fact);
    CHECK(orbits == 8);
    std::vector<int> sizes(orbits, 0);
    for (const auto& sol : s.solutions) {
        REQUIRE(sol.orbit >= 0);
        REQUIRE((size_t)sol.orbit < orbits);
        ++sizes[sol.orbit];
    }
    for (int v : sizes) CHECK(v == 4);
    // two solutions share an orbit exactly when they share the designated
    // tag and the exact label
    for (const auto& x : s.solutions)
        for (const auto& y : s.solutions) {
            bool same_key = x.coord_tags[s.designated] == y.coord_tags[s.designated] &&
                            x.exact_label == y.exact_label;
            CHECK(same_key == (x.orbit == y.orbit));
        }
}

TEST_CASE("orbits are unions of substitution group orbits") {
    SolutionSet s = solve_v2();
    auto fact = factor_univariate(f16());
    orbit_partition(s, fact);
    RootPermutationGroup G = group_certificate(2);
    REQUIRE(G.order == 4);
    for (const auto& el : G.elements)
        for (size_t i = 0; i < s.solutions.size(); ++i)
            CHECK(s.solutions[el.perm[i]].orbit == s.solutions[i].orbit);
}

TEST_CASE("group certificate of the second family is a Klein four profile") {
    RootPermutationGroup G = group_certificate(2);
    CHECK(G.order == 4);
    CHECK(G.abelian);
    CHECK(G.domain.size() == 32);
    CHECK(G.elements.size() == 4);
    CHECK(G.center_size == 4);
    REQUIRE(G.order_histogram.count(1) == 1);
    CHECK(G.order_histogram.at(1) == 1);
    CHECK(G.order_histogram.at(2) == 3);
    // closure, verified independently
    for (const auto& x : G.elements)
        for (const auto& y : G.elements) {
            auto xy = compose(x.perm, y.perm);
            bool found = false;
            for (const auto& e : G.elements) found = found || e.perm == xy;
            CHECK(found);
        }
    CHECK(G.generators.size() == 4);
    CHECK(G.generator_maps.size() == 4);
    CHECK(contains_note(G.notes, "Klein"));
}

TEST_CASE("substitution invariance holds on the second family") {
    SolutionSet s = solve_v2();
    MatrixFactorization M = build_v2();
    RootPermutationGroup G = group_certificate(2);
    for (const auto& el : G.elements)
        for (size_t i = 0; i < s.solutions.size(); i += 5)
            CHECK(galois_invariance_check(M, el, s, i));
    // identity on a corrupted point fails
    SolutionSet broken = s;
    broken.solutions[0].value[2] += CLD(0.25L, 0);
    CHECK_FALSE(galois_invariance_check(M, G.elements[0], broken, 0));
    CHECK(square_residual(M, broken.names, broken.solutions[0].value) > 1e-3L);
    GroupElement wrong{"w", {0, 1, 2}};
    CHECK_THROWS_AS(galois_invariance_check(M, wrong, s, 0), DomainError);
}

TEST_CASE("the first family samples sixty exactly verified points") {
    SolutionSet s = solve_v1_samples(20);
    CHECK(s.names == std::vector<std::string>{"a", "b", "c"});
    CHECK(s.designated == 0);
    REQUIRE(s.solutions.size() == 60);
    MatrixFactorization M = build_v1();
    CHECK(M.R.relations.size() == 2);
    for (const auto& sol : s.solutions) {
        CHECK(sol.residual < 1e-10L);
        CHECK(std::abs(sol.value[0] + CLD(2, 0) * sol.value[1]) > 1e-8L);
    }
    CHECK(contains_note(s.notes, "family 1: 20 samples"));
    CHECK(contains_note(s.notes, "family 2A: 20 samples"));
    CHECK(contains_note(s.notes, "family 2B: 20 samples"));
}

TEST_CASE("sampled coordinates sit on their family polynomials") {
    SolutionSet s = solve_v1_samples(20);
    UnivariatePoly f1({16, 0, 0, 0, 24, 0, 0, 0, 1});
    UnivariatePoly f2a({-4, 0, -4, 0, 1});
    UnivariatePoly f2b({-4, 0, 4, 0, 1});
    size_t n1 = 0, n2a = 0, n2b = 0;
    for (const auto& sol : s.solutions) {
        const UnivariatePoly& atag = s.tag_polys[sol.coord_tags[0]];
        CHECK(std::abs(atag.eval(sol.value[0])) < 1e-11L);
        if (atag == f1) ++n1;
        if (atag == f2a) ++n2a;
        if (atag == f2b) ++n2b;
        // b is an exact rational, c satisfies its exact minimal polynomial
        const UnivariatePoly& btag = s.tag_polys[sol.coord_tags[1]];
        CHECK(btag.degree() == 1);
        CHECK(std::abs(btag.eval(sol.value[1])) < 1e-17L);
        const UnivariatePoly& ctag = s.tag_polys[sol.coord_tags[2]];
        CHECK(std::abs(ctag.eval(sol.value[2])) < 1e-8L);
        CHECK(atag.degree() % ctag.degree() == 0);
    }
    CHECK(n1 == 20);
    CHECK(n2a == 20);
    CHECK(n2b == 20);
}

TEST_CASE("the three families are three orbits") {
    SolutionSet s = solve_v1_samples(20);
    UnivariatePoly oct1({16, 0, 0, 0, 24, 0, 0, 0, 1});
    UnivariatePoly oct2({16, 0, 0, 0, -24, 0, 0, 0, 1});
    auto fact = factor_univariate(oct1 * oct2);
    REQUIRE(fact.factors.size() == 3);
    size_t orbits = orbit_partition(s, fact);
    CHECK(orbits == 3);
    std::vector<int> sizes(orbits, 0);
    for (const auto& sol : s.solutions) ++sizes[sol.orbit];
    for (int v : sizes) CHECK(v == 20);
}

TEST_CASE("quantum dimensions evaluate nonzero along the sampled families") {
    SolutionSet s = solve_v1_samples(20);
    MatrixFactorization M = build_v1();
    const Ring& ring = M.R.ring;
    auto P = [&](const std::string& src) { return parse_poly(src, ring); };
    // the library's computed values modulo the relations, plus the closed
    // rank-4 reference forms carried by the certify report
    Polynomial q_left = P("a");
    Polynomial q_right = P(
        "87*a^3*b^4+314*a^2*b^5+438*a*b^6+192*b^7-174*a^3*b^3*c-785*a^2*b^4*c"
        "-1314*a*b^5*c-672*b^6*c+235/2*a^3*b^2*c^2+724*a^2*b^3*c^2+1476*a*b^4*c^2"
        "+892*b^5*c^2-61/2*a^3*b*c^3-301*a^2*b^2*c^3-762*a*b^3*c^3-550*b^4*c^3"
        "+5/2*a^3*c^4+55*a^2*b*c^4+176*a*b^2*c^4+152*b^3*c^4-7/2*a^2*c^5"
        "-14*a*b*c^5-14*b^2*c^5");
    Polynomial ref_left = P("1/2*a^2*(a+2*b-c)");
    Polynomial ref_right = P("-2*(a-c)");
    size_t ia = ring.index_of("a"), ib = ring.index_of("b"), ic = ring.index_of("c");
    for (const auto& sol : s.solutions) {
        std::vector<CLD> point(ring.size(), CLD(0, 0));
        point[ia] = sol.value[0];
        point[ib] = sol.value[1];
        point[ic] = sol.value[2];
        CHECK(std::abs(q_left.eval(point)) > 1e-9L);
        CHECK(std::abs(q_right.eval(point)) > 1e-9L);
        CHECK(std::abs(ref_left.eval(point)) > 1e-9L);
        CHECK(std::abs(ref_right.eval(point)) > 1e-9L);
    }
}

TEST_CASE("a sweep value on the pivot is skipped and reported") {
    // 2b cancels the real root 2.19736822693562... of the first quartic family
    std::vector<Rational> extra = {Rational(-10986841134678L, 10000000000000L)};
    SolutionSet s = solve_v1_samples(5, extra);
    CHECK(s.solutions.size() == 15);
    CHECK(contains_note(s.notes, "skipped b=-10986841134678/10000000000000"));
    CHECK(contains_note(s.notes, "pivot a+2b vanishes"));
    for (const auto& sol : s.solutions) CHECK(sol.residual < 1e-10L);
    CHECK_THROWS_AS(solve_v1_samples(0), DomainError);
}

TEST_CASE("orbit partition handles singletons, misses, and ambiguity") {
    SolutionSet tiny;
    tiny.names = {"t"};
    tiny.designated = 0;
    NumericSolution one;
    one.value = {CLD(5, 0)};
    one.coord_tags = {-1};
    tiny.solutions.push_back(one);
    auto lin = factor_univariate(UnivariatePoly({-25, 0, 1})); // (x-5)(x+5)
    CHECK(orbit_partition(tiny, lin) == 1);
    CHECK(tiny.solutions[0].orbit == 0);

    auto miss = factor_univariate(UnivariatePoly({1, 0, 1}));
    CHECK_THROWS_AS(orbit_partition(tiny, miss), DomainError);
    // an enormous margin makes both linear factors match
    CHECK_THROWS_AS(orbit_partition(tiny, lin, 1e12L), AmbiguousMatchError);
}

TEST_CASE("permutation closure on a trivial generator set") {
    std::vector<std::string> dom = {"p", "q", "r"};
    std::vector<size_t> id = {0, 1, 2};
    RootPermutationGroup G = close_permutation_group(dom, {{"id", id}}, {"identity"});
    CHECK(G.order == 1);
    CHECK(G.abelian);
    CHECK(G.center_size == 1);
    CHECK(G.order_histogram.at(1) == 1);
    CHECK_THROWS_AS(close_permutation_group(dom, {{"bad", {0, 0, 1}}}, {"collapse"}),
                    DomainError);
    CHECK_THROWS_AS(close_permutation_group(dom, {{"short", {1, 0}}}, {"short"}), DomainError);
}

TEST_CASE("group certificate of the first family has the order sixteen profile") {
    RootPermutationGroup G = group_certificate(1);
    CHECK(G.order == 16);
    CHECK_FALSE(G.abelian);
    CHECK(G.domain.size() == 16);
    CHECK(G.elements.size() == 16);
    CHECK(G.center_size == 4);
    CHECK(G.order_histogram.at(1) == 1);
    CHECK(G.order_histogram.at(2) == 11);
    CHECK(G.order_histogram.at(4) == 4);
    REQUIRE(G.generators.size() == 3);
    // generator relations as permutations
    const auto& rho = G.generators[0].perm;
    const auto& sig = G.generators[1].perm;
    const auto& tau = G.generators[2].perm;
    CHECK(is_id(compose(compose(rho, rho), compose(rho, rho))));
    CHECK_FALSE(is_id(compose(rho, rho)));
    CHECK(is_id(compose(sig, sig)));
    CHECK(is_id(compose(tau, tau)));
    CHECK(contains_note(G.notes, "dihedral"));
    CHECK(G.generator_maps.size() == 3);
}

TEST_CASE("the public octic is the pair octic rescaled by the square root of two") {
    // substituting sqrt2 * x into x^8 + 24x^4 + 16 gives
    // 16x^8 + 96x^4 + 16 = 16 * (x^8 + 6x^4 + 1), so the two octics name the
    // same sixteen pairs up to that scaling
    UnivariatePoly substituted({16, 0, 0, 0, 96, 0, 0, 0, 16});
    UnivariatePoly pair_octic({1, 0, 0, 0, 6, 0, 0, 0, 1});
    CHECK(substituted == pair_octic.scaled(Rational(16)));
    auto r = factor_univariate(pair_octic);
    CHECK(r.factors.size() == 1);
}

TEST_CASE("unknown certificate versions are rejected") {
    CHECK_THROWS_AS(group_certificate(3), UnsupportedError);
    CHECK_THROWS_AS(group_certificate(0), UnsupportedError);
}

TEST_CASE("square residual demands a complete parameter assignment") {
    MatrixFactorization M = build_v2();
    SolutionSet s = solve_v2();
    // dropping the adjoined inverse is fine, it derives from b
    std::vector<std::string> names = {"a", "b", "c", "d"};
    std::vector<CLD> values(s.solutions[0].value.begin(), s.solutions[0].value.end() - 1);
    CHECK(square_residual(M, names, values) < 1e-12L);
    CHECK_THROWS_AS(square_residual(M, {"a", "b"}, {CLD(1, 0), CLD(1, 0)}), DomainError);
    CHECK_THROWS_AS(square_residual(M, {"a"}, {CLD(1, 0), CLD(1, 0)}), DomainError);
}
