#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "orbicheck/errors.hpp"
#include "orbicheck/mf.hpp"
#include "orbicheck/parse.hpp"
#include "orbicheck/perturb.hpp"

using namespace orbicheck;

namespace {

std::vector<std::string> slot_monomials(const Ansatz& A, size_t row, size_t col) {
    for (const PerturbationSlot& s : A.slots)
        if (s.slot.in_d1 && s.slot.row == row && s.slot.col == col) {
            std::vector<std::string> out;
            for (const Monomial& m : s.monomials)
                out.push_back(
                    print_poly(Polynomial::monomial(m), A.extended.ring));
            std::sort(out.begin(), out.end());
            return out;
        }
    return {"missing slot"};
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const AnsatzUnknown& named(const Ansatz& A, const std::string& name) {
    for (const AnsatzUnknown& u : A.unknowns)
        if (u.name == name) return u;
    static AnsatzUnknown none;
    return none;
}

} // namespace

TEST_CASE("base factorizations square, grade, and know their versions") {
    for (int version : {1, 2}) {
        MatrixFactorization M = build_base(version);
        CHECK(M.rank == 4);
        CHECK(mf_check(M).pass);
        CHECK(grade_check(M).pass);
        Polynomial diff = M.target - M.source;
        CHECK(poly_det(M.d1) == diff * diff);
        CHECK(M.R.ring.size() == 6); // no parameters yet
    }
    CHECK_THROWS_AS(build_base(3), UnsupportedError);
    CHECK_THROWS_AS(build_base(0), UnsupportedError);
}

TEST_CASE("base potentials pair the target with the undeformed partner") {
    MatrixFactorization M = build_base(1);
    CHECK(M.target == parse_poly("x^4+y^3+x*z^2", M.R.ring));
    // The deformation variable is absent from the base potentials; turning
    // it on is exactly what the ansatz machinery is for.
    CHECK(M.source == parse_poly("v^3+w^2", M.R.ring));
    MatrixFactorization N = build_base(2);
    CHECK(N.target == parse_poly("x^4+y^3+x*z^2", N.R.ring));
    CHECK(N.source == parse_poly("u^3+v^8", N.R.ring));
}

TEST_CASE("candidate monomials obey degree, involvement, and support rules") {
    MatrixFactorization M = build_base(1);
    Ansatz A = enumerate_perturbations(M, M.R.ring, v1_constraint(M.R.ring));
    CHECK(A.tied);
    CHECK(A.slots.size() == 6);
    CHECK(A.unknowns.size() == 13);

    CHECK(slot_monomials(A, 0, 0) == sorted({"u^3", "x*u"}));
    CHECK(slot_monomials(A, 0, 2) == sorted({"u^4", "x*u^2", "z*u"}));
    CHECK(slot_monomials(A, 2, 0) == sorted({"u^4", "x*u^2", "z*u"}));
    // Degree 15/12 admits five directions. Four deform the closed family;
    // the fifth, x*u^3, is an extra direction the family never uses.
    CHECK(slot_monomials(A, 1, 1) ==
          sorted({"u^5", "x*u^3", "x^2*u", "z*u^2", "u*w"}));
    // No admissible monomial at these weights involves u at all.
    CHECK(slot_monomials(A, 0, 1).empty());
    CHECK(slot_monomials(A, 1, 0).empty());

    // Names are positional: block row, column, then the rank of the
    // monomial in the slot's descending order.
    CHECK(named(A, "p222").monomial == Monomial({1, 0, 0, 3, 0, 0}));
    CHECK(named(A, "p225").monomial == Monomial({0, 0, 0, 1, 0, 1}));
    CHECK(named(A, "p111").monomial == Monomial({0, 0, 0, 3, 0, 0}));
    CHECK(named(A, "p313").monomial == Monomial({0, 0, 1, 1, 0, 0}));
}

TEST_CASE("monomials already in the base entry are not candidates") {
    MatrixFactorization M = build_base(2);
    Ansatz A = enumerate_perturbations(M, M.R.ring, v2_constraint(M.R.ring));
    CHECK(A.unknowns.size() == 13);
    CHECK(slot_monomials(A, 0, 0) == sorted({"v^3", "x*v"}));
    // v^4 has the right degree and involves v, but the entries at (0,2) and
    // (2,0) already carry it, so it is excluded from both lists.
    CHECK(slot_monomials(A, 0, 2) == sorted({"x*v^2", "z*v", "w"}));
    CHECK(slot_monomials(A, 2, 0) == sorted({"x*v^2", "z*v", "w"}));
    CHECK(slot_monomials(A, 1, 1) ==
          sorted({"v^5", "x*v^3", "x^2*v", "z*v^2", "v*w"}));
}

TEST_CASE("tied ansatz blocks keep the determinant identity") {
    MatrixFactorization M = build_base(1);
    Ansatz A = enumerate_perturbations(M, M.R.ring, v1_constraint(M.R.ring));
    // The block pattern is determinant-exact for any six generator entries:
    // det d1 is the square of one fixed quadratic combination of them, with
    // all thirteen unknowns still free.
    Polynomial comb = A.d1[0][1] * A.d1[1][0] + A.d1[0][2] * A.d1[2][0] -
                      A.d1[0][0] * A.d1[1][1];
    CHECK(poly_det(A.d1) == comb * comb);
}

TEST_CASE("an empty involvement list perturbs nothing") {
    MatrixFactorization M = build_base(1);
    PerturbationConstraint none;
    Ansatz A = enumerate_perturbations(M, M.R.ring, none);
    CHECK(A.unknowns.empty());
    CHECK(A.d1 == M.d1);
    EquationSystem S =
        impose_square(A, A.base.target - A.base.source);
    CHECK(S.equations.empty());
}

TEST_CASE("square condition on a one by one ansatz by hand") {
    Ring g = weighted_ring({"x", "u"},
                           {make_rational(1, 2), make_rational(1, 2)});
    ParameterRing ext = parameter_ring(g, {"p"});
    Ansatz A;
    A.base.R.ring = g;
    A.base.rank = 1;
    A.extended = ext;
    AnsatzUnknown unk;
    unk.name = "p";
    unk.index = ext.ring.index_of("p");
    unk.slot = {true, 0, 0};
    unk.monomial = Monomial::var(ext.ring.index_of("u"));
    A.unknowns.push_back(unk);
    A.d1 = {{parse_poly("x+p*u", ext.ring)}};
    A.d0 = {{parse_poly("x-p*u", ext.ring)}};

    EquationSystem S = impose_square(A, parse_poly("x^2-u^2", ext.ring));
    REQUIRE(S.equations.size() == 1);
    CHECK(S.equations[0] == parse_poly("p^2-1", ext.ring));
    CHECK(S.provenance[0].monomial == Monomial::var(ext.ring.index_of("u"), 2));

    // No linear pivot exists in a quadratic, so reduction is a no-op.
    LinearReduction L = linear_reduce(S);
    CHECK(L.trace.empty());
    CHECK(L.reduced.equations == S.equations);
}

TEST_CASE("the version one system is small, clean, and attributed") {
    MatrixFactorization M = build_base(1);
    Ansatz A = enumerate_perturbations(M, M.R.ring, v1_constraint(M.R.ring));
    EquationSystem S = impose_square(
        A, parse_poly("x^4+y^3+x*z^2-v^3-w^2-u^4*w", A.extended.ring));
    CHECK(S.equations.size() == 11);
    CHECK(S.provenance.size() == S.equations.size());
    for (const Polynomial& eq : S.equations) {
        CHECK_FALSE(eq.is_zero());
        // coefficient equations live in the unknowns alone
        for (const Term& t : eq.terms())
            for (size_t v = 0; v < S.ring.size(); ++v)
                if (t.mono.exp(v) > 0) CHECK(S.ring.is_param(v));
        // monic normalization
        CHECK(eq.leading_term().coeff == Rational(1));
    }
    for (size_t i = 0; i < S.equations.size(); ++i)
        for (size_t j = i + 1; j < S.equations.size(); ++j)
            CHECK_FALSE(S.equations[i] == S.equations[j]);
}

TEST_CASE("linear reduction eliminates a chained pair exactly") {
    Ring g = weighted_ring({"x"}, {Rational(1)});
    ParameterRing ext = parameter_ring(g, {"p", "q"});
    EquationSystem S;
    S.ring = ext.ring;
    AnsatzUnknown p, q;
    p.name = "p";
    p.index = ext.ring.index_of("p");
    q.name = "q";
    q.index = ext.ring.index_of("q");
    S.unknowns = {p, q};
    S.equations = {parse_poly("p-q", ext.ring), parse_poly("q-1", ext.ring)};
    S.provenance.resize(2);

    LinearReduction L = linear_reduce(S);
    CHECK(L.reduced.equations.empty());
    REQUIRE(L.trace.size() == 2);
    CHECK(L.trace[0].unknown == "p");
    CHECK(L.trace[0].replacement == parse_poly("q", ext.ring));

    std::vector<SubstStep> solved = resolved_assignments(L.trace);
    for (const SubstStep& s : solved)
        CHECK(s.replacement == Polynomial::constant(Rational(1)));
}

TEST_CASE("the version one reduction trace certifies itself") {
    MatrixFactorization M = build_base(1);
    Ansatz A = enumerate_perturbations(M, M.R.ring, v1_constraint(M.R.ring));
    Polynomial target = parse_poly("x^4+y^3+x*z^2-v^3-w^2-u^4*w",
                                   A.extended.ring);
    EquationSystem S = impose_square(A, target);
    LinearReduction L = linear_reduce(S);
    CHECK(L.trace.size() == 9);
    CHECK(L.reduced.equations.size() == 2);

    // Every consumed pivot equation is solved exactly by its replacement.
    for (const SubstStep& s : L.trace)
        CHECK(s.pivot.substituted(s.index, s.replacement).is_zero());

    // The residual equations involve only the surviving unknowns.
    std::vector<VarIdx> dropped;
    for (const SubstStep& s : L.trace) dropped.push_back(s.index);
    for (const Polynomial& eq : L.reduced.equations)
        for (const Term& t : eq.terms())
            for (VarIdx v : dropped) CHECK(t.mono.exp(v) == 0);

    // Substituting the whole trace back turns every original equation into
    // a combination of the residual ones; the two ideals agree, so each
    // original equation reduces to zero against the residual basis plus
    // nothing only after the eliminations. Spot check the strongest form:
    // the resolved assignments kill every equation modulo the residuals.
    std::vector<SubstStep> solved = resolved_assignments(L.trace);
    GroebnerBasis residual = buchberger(L.reduced.equations);
    for (const Polynomial& eq : S.equations) {
        Polynomial sub = eq;
        for (const SubstStep& s : solved)
            sub = sub.substituted(s.index, s.replacement);
        CHECK(normal_form(sub, residual).is_zero());
    }
}

TEST_CASE("version one family comparison finds the extra direction") {
    PerturbationReport r = verify_against_family(1);
    CHECK(r.version == 1);
    CHECK(r.unknown_count == 13);
    CHECK(r.equation_count == 11);
    CHECK(r.reduced_equation_count == 2);
    CHECK(r.reduced_unknowns ==
          std::vector<std::string>{"p222", "p223", "p225", "p313"});
    // The closed family never switches on the x*u^3 deformation, and away
    // from that slice its relations genuinely fail.
    CHECK(r.zero_coefficient_unknowns == std::vector<std::string>{"p222"});
    CHECK(r.entries_satisfy_system);
    CHECK_FALSE(r.relations_hold_on_variety);
    CHECK(r.relations_hold_on_family_slice);
    CHECK(r.pass);
}

TEST_CASE("version two family comparison closes without a slice") {
    PerturbationReport r = verify_against_family(2);
    CHECK(r.version == 2);
    CHECK(r.unknown_count == 13);
    CHECK(r.equation_count == 13);
    CHECK(r.reduced_equation_count == 6);
    CHECK(r.reduced_unknowns ==
          std::vector<std::string>{"p132", "p222", "p223", "p225", "p311",
                                   "p312"});
    CHECK(r.zero_coefficient_unknowns == std::vector<std::string>{"p221"});
    CHECK(r.entries_satisfy_system);
    CHECK(r.relations_hold_on_variety);
    CHECK(r.relations_hold_on_family_slice);
    CHECK(r.pass);
}

TEST_CASE("a numeric point satisfies the second family exactly") {
    using C = std::complex<long double>;
    MatrixFactorization M = build_v2();
    const Ring& ring = M.R.ring;
    REQUIRE(ring.size() == 11);

    const long double r2 = std::sqrt((long double)2);
    C beta(r2 / 2, r2 / 2); // primitive eighth root of unity
    C c = std::sqrt(beta * C(4 + 2 * r2, 0));
    C b = beta * c;
    C d = (C(1, 0) - beta * beta) / b;
    std::vector<C> pt(ring.size());
    pt[ring.index_of("x")] = C(0.31L, 0);
    pt[ring.index_of("y")] = C(-0.77L, 0);
    pt[ring.index_of("z")] = C(1.13L, 0);
    pt[ring.index_of("u")] = C(0.41L, 0);
    pt[ring.index_of("v")] = C(0.97L, 0);
    pt[ring.index_of("w")] = C(-0.59L, 0);
    pt[ring.index_of("a")] = C(1, 0);
    pt[ring.index_of("b")] = b;
    pt[ring.index_of("c")] = c;
    pt[ring.index_of("d")] = d;
    pt[ring.index_of("binv")] = C(1, 0) / b;

    for (const Polynomial& rel : M.R.relations)
        CHECK(std::abs(rel.eval(pt)) < 1e-12L);

    // With the relations satisfied numerically, the blocks really multiply
    // to (target - source) times the identity.
    C P = (M.target - M.source).eval(pt);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            C s10(0), s01(0);
            for (size_t k = 0; k < 4; ++k) {
                s10 += M.d1[i][k].eval(pt) * M.d0[k][j].eval(pt);
                s01 += M.d0[i][k].eval(pt) * M.d1[k][j].eval(pt);
            }
            C want = i == j ? P : C(0);
            CHECK(std::abs(s10 - want) < 1e-10L);
            CHECK(std::abs(s01 - want) < 1e-10L);
        }
}
