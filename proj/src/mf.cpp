#include "orbicheck/mf.hpp"

#include <algorithm>
#include <deque>

#include "orbicheck/errors.hpp"
#include "orbicheck/parse.hpp"

namespace orbicheck {

namespace {

void require_square(const PolyMat& a, size_t rank, const char* what) {
    if (a.size() != rank)
        throw DomainError(std::string(what) + ": expected " +
                          std::to_string(rank) + " rows, got " +
                          std::to_string(a.size()));
    for (const auto& row : a)
        if (row.size() != rank)
            throw DomainError(std::string(what) + ": ragged or missized row");
}

PolyMat pmat_mul(const PolyMat& a, const PolyMat& b) {
    size_t n = a.size();
    size_t k = b.size();
    for (const auto& row : a)
        if (row.size() != k) throw DomainError("matrix product shape mismatch");
    size_t m = k ? b[0].size() : 0;
    for (const auto& row : b)
        if (row.size() != m) throw DomainError("matrix product shape mismatch");
    PolyMat c(n, std::vector<Polynomial>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                c[i][j] += a[i][t] * b[t][j];
            }
        }
    return c;
}

PolyMat submatrix(const PolyMat& a, size_t drop_row, size_t drop_col) {
    PolyMat s;
    s.reserve(a.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (i == drop_row) continue;
        std::vector<Polynomial> row;
        row.reserve(a.size() - 1);
        for (size_t j = 0; j < a.size(); ++j)
            if (j != drop_col) row.push_back(a[i][j]);
        s.push_back(std::move(row));
    }
    return s;
}

// Exponents at svars moved down to positions 0..k-1; any support elsewhere
// is rejected.
Polynomial map_down(const Polynomial& p, const std::vector<VarIdx>& svars) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<int32_t> e(svars.size(), 0);
        int64_t placed = 0;
        for (size_t k = 0; k < svars.size(); ++k) {
            e[k] = t.mono.exp(svars[k]);
            if (e[k]) ++placed;
        }
        int64_t support = 0;
        for (VarIdx v = 0; v < t.mono.width(); ++v)
            if (t.mono.exp(v)) ++support;
        if (support != placed)
            throw DomainError("polynomial uses variables outside the residue set");
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(std::move(out));
}

Monomial map_up(const Monomial& m, const std::vector<VarIdx>& svars) {
    VarIdx top = 0;
    for (VarIdx v : svars) top = std::max(top, v);
    std::vector<int32_t> e(top + 1, 0);
    for (size_t k = 0; k < svars.size(); ++k) e[svars[k]] = m.exp((VarIdx)k);
    return Monomial(std::move(e));
}

Polynomial map_up(const Polynomial& p, const std::vector<VarIdx>& svars) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) out.push_back({map_up(t.mono, svars), t.coeff});
    return Polynomial::from_terms(std::move(out));
}

PolyMat reduce_entries(PolyMat m, const GroebnerBasis& gb,
                       const GroebnerOptions& opts) {
    for (auto& row : m)
        for (auto& e : row) e = normal_form(e, gb, opts);
    return m;
}

void collect_failures(const PolyMat& m, const char* what,
                      std::vector<std::string>& failures) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            if (!m[i][j].is_zero())
                failures.push_back(std::string(what) + " residual at (" +
                                   std::to_string(i) + "," + std::to_string(j) +
                                   ")");
}

} // namespace

GroebnerBasis relation_basis(const ParameterRing& R,
                             const GroebnerOptions& opts) {
    GroebnerBasis gb = buchberger(R.relations, MonomialOrder::grevlex(), opts);
    if (gb.is_unit()) throw UnitIdealError("parameter relations are inconsistent");
    return gb;
}

void assemble_blocks(MatrixFactorization& M, const Polynomial& e15,
                     const Polynomial& e16, const Polynomial& e17,
                     const Polynomial& e25, const Polynomial& e26,
                     const Polynomial& e35) {
    const Polynomial o;
    M.rank = 4;
    M.d1 = {{e15, e16, e17, o},
            {e25, e26, o, e17},
            {e35, o, e26, -e16},
            {o, e35, -e25, e15}};
    // d0 is the adjugate-style complement oriented so that
    // d1*d0 = (target - source)*Id, matching the seed factorization.
    M.d0 = {{-e26, e16, e17, o},
            {e25, -e15, o, e17},
            {e35, o, -e15, -e16},
            {o, e35, -e25, -e26}};
}

std::string inverse_name(const std::string& parameter) {
    return parameter + "inv";
}

ParameterRing parameter_ring(const Ring& variables,
                             const std::vector<std::string>& parameters,
                             const std::vector<std::string>& inverted) {
    for (const auto& p : inverted)
        if (std::find(parameters.begin(), parameters.end(), p) ==
            parameters.end())
            throw DomainError("inverted name " + p + " is not a parameter");
    std::vector<std::string> names = parameters;
    for (const auto& p : inverted) names.push_back(inverse_name(p));
    ParameterRing R;
    R.ring = variables.with_parameters(names);
    R.parameters = parameters;
    R.inverted = inverted;
    const Polynomial one = Polynomial::constant(Rational(1));
    for (const auto& p : inverted) {
        Polynomial pp = Polynomial::variable(R.ring.index_of(p));
        Polynomial qq = Polynomial::variable(R.ring.index_of(inverse_name(p)));
        R.relations.push_back(pp * qq - one);
    }
    return R;
}

MFCheckReport mf_check(const MatrixFactorization& M,
                       const GroebnerOptions& opts) {
    require_square(M.d0, M.rank, "d0");
    require_square(M.d1, M.rank, "d1");
    Polynomial diff = M.target - M.source;
    auto residual = [&](const PolyMat& a, const PolyMat& b) {
        PolyMat r = pmat_mul(a, b);
        for (size_t i = 0; i < M.rank; ++i) r[i][i] -= diff;
        return r;
    };
    MFCheckReport rep;
    rep.residual10 = residual(M.d1, M.d0);
    rep.residual01 = residual(M.d0, M.d1);
    if (!M.R.relations.empty()) {
        GroebnerBasis gb = relation_basis(M.R, opts);
        rep.residual10 = reduce_entries(std::move(rep.residual10), gb, opts);
        rep.residual01 = reduce_entries(std::move(rep.residual01), gb, opts);
    }
    collect_failures(rep.residual10, "d1*d0", rep.failures);
    collect_failures(rep.residual01, "d0*d1", rep.failures);
    rep.pass = rep.failures.empty();
    return rep;
}

GradeTable grade_check(const MatrixFactorization& M) {
    require_square(M.d0, M.rank, "d0");
    require_square(M.d1, M.rank, "d1");
    const Ring& ring = M.R.ring;
    size_t r = M.rank;
    GradeTable t;
    t.d1.assign(r, std::vector<std::optional<Rational>>(r));
    t.d0.assign(r, std::vector<std::optional<Rational>>(r));
    t.homogeneous = true;
    auto degree_of = [&](const Polynomial& e, const char* blk, size_t i,
                         size_t j) -> std::optional<Rational> {
        if (e.is_zero()) return std::nullopt;
        Rational d = weighted_degree(e, ring);
        if (!is_quasi_homogeneous(e, ring, d)) {
            t.homogeneous = false;
            t.problems.push_back(std::string(blk) + " entry (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 ") is not quasi-homogeneous");
        }
        return d;
    };
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            t.d1[i][j] = degree_of(M.d1[i][j], "d1", i, j);
            t.d0[i][j] = degree_of(M.d0[i][j], "d0", i, j);
        }

    // Generator degrees: nodes 0..r-1 are even generators, r..2r-1 odd ones.
    // A nonzero entry of degree delta pins the difference of its two nodes.
    std::vector<std::vector<std::pair<size_t, Rational>>> adj(2 * r);
    auto link = [&](size_t from, size_t to, const Rational& diff) {
        adj[from].push_back({to, diff});
        adj[to].push_back({from, -diff});
    };
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            if (t.d1[i][j]) link(i, r + j, *t.d1[i][j] - 1); // m1[j] - m0[i]
            if (t.d0[i][j]) link(r + i, j, *t.d0[i][j] - 1); // m0[j] - m1[i]
        }
    t.consistent = true;
    std::vector<std::optional<Rational>> val(2 * r);
    for (size_t seed = 0; seed < 2 * r; ++seed) {
        if (val[seed]) continue;
        val[seed] = Rational(0);
        std::deque<size_t> queue{seed};
        while (!queue.empty()) {
            size_t at = queue.front();
            queue.pop_front();
            for (const auto& [next, diff] : adj[at]) {
                Rational want = *val[at] + diff;
                if (!val[next]) {
                    val[next] = want;
                    queue.push_back(next);
                } else if (*val[next] != want) {
                    t.consistent = false;
                    t.problems.push_back(
                        "no generator grading makes the differential "
                        "homogeneous of degree 1");
                    queue.clear();
                    break;
                }
            }
        }
        if (!t.consistent) break;
    }
    if (t.consistent) {
        t.m0_degrees.reserve(r);
        t.m1_degrees.reserve(r);
        for (size_t i = 0; i < r; ++i) t.m0_degrees.push_back(*val[i]);
        for (size_t i = 0; i < r; ++i) t.m1_degrees.push_back(*val[r + i]);
    }
    t.pass = t.homogeneous && t.consistent;
    return t;
}

std::optional<Polynomial> divide_exact(const Polynomial& a,
                                       const Polynomial& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    Polynomial q;
    Polynomial r = a;
    const Term lb = b.leading_term();
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        if (!lb.mono.divides(lr.mono)) return std::nullopt;
        Polynomial t =
            Polynomial::monomial(lb.mono.divided_into(lr.mono), lr.coeff / lb.coeff);
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial poly_det(const PolyMat& a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw NotSquareError("determinant of a non-square matrix");
    if (n == 0) return Polynomial::constant(Rational(1));
    if (n == 1) return a[0][0];
    Polynomial det;
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        Polynomial cof = a[0][j] * poly_det(submatrix(a, 0, j));
        det += (j % 2) ? -cof : cof;
    }
    return det;
}

PolyMat complete_from_half(const PolyMat& d1, const Polynomial& W) {
    size_t r = d1.size();
    if (r == 0) throw DomainError("empty matrix");
    require_square(d1, r, "d1");
    if (W.is_zero() || W.is_constant())
        throw DomainError("potential must be nonconstant");
    Polynomial det = poly_det(d1);
    if (det.is_zero()) throw DetMismatchError("det(d1) is zero");
    if (!divide_exact(W.pow((uint32_t)r), det))
        throw DetMismatchError("det(d1) does not divide W^rank");
    PolyMat d0(r, std::vector<Polynomial>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            Polynomial cof = W * poly_det(submatrix(d1, j, i));
            if ((i + j) % 2) cof = -cof;
            auto q = divide_exact(cof, det);
            if (!q)
                throw NonPolynomialCompletionError(
                    "completed entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ") is not a polynomial");
            d0[i][j] = std::move(*q);
        }
    PolyMat p10 = pmat_mul(d1, d0);
    PolyMat p01 = pmat_mul(d0, d1);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            const Polynomial want = i == j ? W : Polynomial::zero();
            if (p10[i][j] != want || p01[i][j] != want)
                throw DomainError("completion verification failed");
        }
    return d0;
}

Polynomial supertrace(const PolyMat& a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw NotSquareError("supertrace of a non-square matrix");
    if (n % 2) throw DomainError("supertrace needs an even dimension");
    Polynomial s;
    for (size_t i = 0; i < n / 2; ++i) s += a[i][i];
    for (size_t i = n / 2; i < n; ++i) s -= a[i][i];
    return s;
}

ResidueContext residue_context(const Polynomial& w, const Ring& ring,
                               const std::vector<VarIdx>& svars,
                               const GroebnerOptions& opts) {
    if (svars.empty()) throw DomainError("residue needs a nonempty variable set");
    for (size_t k = 0; k + 1 < svars.size(); ++k)
        if (svars[k] >= svars[k + 1])
            throw DomainError("residue variables must be strictly increasing");
    for (VarIdx v : svars)
        if (v >= ring.size()) throw DomainError("residue variable out of range");

    // The whole computation happens in the subring spanned by svars; its
    // grevlex order is the restriction of the host order, so the results map
    // back by plain exponent injection.
    std::vector<std::string> names;
    std::vector<Rational> ones;
    for (VarIdx v : svars) {
        names.push_back(ring.name(v));
        ones.push_back(Rational(1));
    }
    Ring sub = weighted_ring(std::move(names), std::move(ones));
    Polynomial ws = map_down(w, svars);
    std::vector<Polynomial> jac;
    for (VarIdx t = 0; t < sub.size(); ++t) jac.push_back(ws.derivative(t));
    GroebnerBasis gb = buchberger(std::move(jac), MonomialOrder::grevlex(), opts);
    if (gb.is_unit())
        throw DomainError("partial derivatives generate the unit ideal");
    std::vector<Monomial> basis = quotient_monomial_basis(gb, sub.size());

    std::optional<Monomial> socle;
    for (const auto& m : basis) {
        bool annihilates = true;
        for (VarIdx t = 0; t < sub.size() && annihilates; ++t) {
            Polynomial shifted = Polynomial::monomial(m * Monomial::var(t));
            annihilates = normal_form(shifted, gb, opts).is_zero();
        }
        if (!annihilates) continue;
        if (socle)
            throw DomainError("socle is not spanned by a single standard monomial");
        socle = m;
    }
    if (!socle) throw DomainError("no socle monomial found");

    PolyMat hess(sub.size(), std::vector<Polynomial>(sub.size()));
    for (VarIdx i = 0; i < sub.size(); ++i)
        for (VarIdx j = 0; j < sub.size(); ++j)
            hess[i][j] = ws.derivative(i).derivative(j);
    Rational rho = normal_form(poly_det(hess), gb, opts).coefficient_of(*socle);
    if (rho == 0) throw DomainError("hessian vanishes in the quotient");

    ResidueContext ctx;
    ctx.svars = svars;
    ctx.gb.order = gb.order;
    for (const auto& p : gb.polys) ctx.gb.polys.push_back(map_up(p, svars));
    for (const auto& m : basis) ctx.basis.push_back(map_up(m, svars));
    ctx.socle = map_up(*socle, svars);
    ctx.mu = basis.size();
    ctx.scale = make_rational(Integer((unsigned long)ctx.mu), Integer(1)) / rho;
    return ctx;
}

Polynomial residue(const Polynomial& g, const ResidueContext& ctx,
                   const GroebnerOptions& opts) {
    Polynomial nf = normal_form(g, ctx.gb, opts);
    std::vector<Term> out;
    for (const auto& t : nf.terms()) {
        bool at_socle = true;
        for (VarIdx v : ctx.svars)
            if (t.mono.exp(v) != ctx.socle.exp(v)) {
                at_socle = false;
                break;
            }
        if (!at_socle) continue;
        std::vector<int32_t> rest(t.mono.width(), 0);
        for (VarIdx v = 0; v < t.mono.width(); ++v) rest[v] = t.mono.exp(v);
        for (VarIdx v : ctx.svars)
            if (v < rest.size()) rest[v] = 0;
        out.push_back({Monomial(std::move(rest)), t.coeff});
    }
    return Polynomial::from_terms(std::move(out)).scaled(ctx.scale);
}

Polynomial residue(const Polynomial& g, const Polynomial& w, const Ring& ring,
                   const std::vector<VarIdx>& svars,
                   const GroebnerOptions& opts) {
    return residue(g, residue_context(w, ring, svars, opts), opts);
}

ParameterElement qdim(const MatrixFactorization& M, Side side,
                      const GroebnerOptions& opts) {
    require_square(M.d0, M.rank, "d0");
    require_square(M.d1, M.rank, "d1");
    size_t r = M.rank;
    PolyMat D(2 * r, std::vector<Polynomial>(2 * r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            D[i][r + j] = M.d1[i][j];
            D[r + i][j] = M.d0[i][j];
        }
    auto partial = [&](VarIdx v) {
        PolyMat m(2 * r, std::vector<Polynomial>(2 * r));
        for (size_t i = 0; i < 2 * r; ++i)
            for (size_t j = 0; j < 2 * r; ++j) m[i][j] = D[i][j].derivative(v);
        return m;
    };
    std::optional<PolyMat> prod;
    for (VarIdx v : M.source_vars)
        prod = prod ? pmat_mul(*prod, partial(v)) : partial(v);
    for (VarIdx v : M.target_vars)
        prod = prod ? pmat_mul(*prod, partial(v)) : partial(v);
    if (!prod) throw DomainError("quantum dimension needs at least one variable");
    Polynomial st = supertrace(*prod);

    const bool left = side == Side::left;
    const auto& svars = left ? M.target_vars : M.source_vars;
    const Polynomial& pot = left ? M.target : M.source;
    if (svars.empty())
        throw DomainError("quantum dimension needs a nonempty residue set");
    size_t order = left ? M.source_vars.size() : M.target_vars.size();
    Polynomial out = residue(st, residue_context(pot, M.R.ring, svars, opts), opts);
    size_t twist = (order + 1) * order / 2; // binom(order + 1, 2)
    int sign = (twist % 2) ? -kQdimSign : kQdimSign;
    out = out.scaled(Rational(sign));
    if (!M.R.relations.empty())
        out = normal_form(out, relation_basis(M.R, opts), opts);
    return out;
}

MatrixFactorization kst_seed(const std::string& name) {
    if (name != "Q10") throw UnsupportedError("unknown seed " + name);
    Ring ring = weighted_ring({"x", "y", "z"},
                              {make_rational(1, 2), make_rational(2, 3),
                               make_rational(3, 4)});
    auto P = [&](const char* s) { return parse_poly(s, ring); };
    MatrixFactorization M;
    M.R.ring = ring;
    M.rank = 4;
    M.d1 = {{P("z"), P("y^2"), P("x^3"), P("0")},
            {P("y"), P("-x*z"), P("0"), P("x^3")},
            {P("x"), P("0"), P("-x*z"), P("-y^2")},
            {P("0"), P("x"), P("-y"), P("z")}};
    M.d0 = {{P("x*z"), P("y^2"), P("x^3"), P("0")},
            {P("y"), P("-z"), P("0"), P("x^3")},
            {P("x"), P("0"), P("-z"), P("-y^2")},
            {P("0"), P("x"), P("-y"), P("x*z")}};
    M.target = P("x^4+y^3+x*z^2");
    M.target_vars = {0, 1, 2};
    return M;
}

MatrixFactorization build_v1() {
    Ring vars = weighted_ring({"x", "y", "z", "u", "v", "w"},
                              {make_rational(1, 2), make_rational(2, 3),
                               make_rational(3, 4), make_rational(1, 4),
                               make_rational(2, 3), Rational(1)});
    MatrixFactorization M;
    M.R = parameter_ring(vars, {"a", "b", "c"});
    const Ring& ring = M.R.ring;
    auto P = [&](const char* s) { return parse_poly(s, ring); };
    const Rational half = make_rational(1, 2);

    Polynomial k1 = P("1/2*a^3+a^2*b+a*b^2-1/2*a^2*c-a*b*c");
    Polynomial k2 =
        P("1+3/4*a^4+3*a^3*b+4*a^2*b^2+2*a*b^3-a^3*c-3*a^2*b*c-2*a*b^2*c");
    Polynomial e15 = k1 * P("u^3") + P("a*u*x+z");
    Polynomial e16 = P("v^2+v*y+y^2");
    Polynomial e17 = k2.scaled(half) * P("u^4") + P("w") -
                     P("a").scaled(half) * P("-a-2*b") * P("u^2*x") +
                     P("x^2+b*u*z");
    Polynomial e25 = P("y-v");
    Polynomial e26 = (P("-b") - P("b^2") * k1 + P("c-a").scaled(half) * k2) *
                         P("u^5") +
                     P("-a-2*b+c") * P("u*w") + P("c*u*x^2") +
                     P("b") * P("-a-b+c") * P("u^2*z") - P("x*z");
    Polynomial e35 = (P("-1") + P("-a-2*b+c") * k1 + k2.scaled(half)) *
                         P("u^4") -
                     P("w") + P("a").scaled(half) * P("-a-2*b+2*c") * P("u^2*x") +
                     P("x^2") + P("-a-b+c") * P("u*z");
    assemble_blocks(M, e15, e16, e17, e25, e26, e35);

    Polynomial f1 = P("4+3*a^4+8*a^3*b+8*a^2*b^2-4*a^3*c-8*a^2*b*c");
    Polynomial f2 = f1 - P("8");
    Polynomial g =
        P("a^4-8*a^2*b^2-16*a*b^3-8*b^4+8*a^2*b*c+24*a*b^2*c+16*b^3*c"
          "-2*a^2*c^2-8*a*b*c^2-8*b^2*c^2");
    M.R.relations.push_back((f2 * f1).scaled(make_rational(-1, 64)));
    M.R.relations.push_back((P("a^2") * g).scaled(make_rational(-1, 8)));

    M.target = P("x^4+y^3+x*z^2");
    M.source = P("u^4*w+v^3+w^2");
    M.target_vars = {0, 1, 2};
    M.source_vars = {3, 4, 5};
    return M;
}

MatrixFactorization build_v2() {
    Ring vars = weighted_ring({"x", "y", "z", "u", "v", "w"},
                              {make_rational(1, 2), make_rational(2, 3),
                               make_rational(3, 4), make_rational(2, 3),
                               make_rational(1, 4), Rational(1)});
    MatrixFactorization M;
    M.R = parameter_ring(vars, {"a", "b", "c", "d"}, {"b"});
    const Ring& ring = M.R.ring;
    auto P = [&](const char* s) { return parse_poly(s, ring); };

    Polynomial e15 = P("b*v^3+c*v*x+z");
    Polynomial e16 = P("u^2+u*y+y^2");
    Polynomial e17 =
        P("v^4+a*w") + P("1/2*c^2+c*d") * P("v^2*x") + P("x^2+d*v*z");
    Polynomial e25 = P("-u+y");
    Polynomial e26 =
        P("-2*a*binv") * P("v*w") +
        (P("b") + P("2*c*binv^2") - P("2*c*d*binv") + P("c^2*d+2*c*d^2") -
         P("c^2+2*c*d") * P("binv")) *
            P("v^3*x") +
        P("-2*binv+c+2*d") * P("v*x^2") - P("2*binv^2") * P("v^2*z") -
        P("x*z");
    Polynomial e35 = P("-v^4-a*w") +
                     (P("c") * P("-2*binv+c+2*d") + P("-1/2*c^2-c*d")) *
                         P("v^2*x") +
                     P("x^2") + P("-2*binv+d") * P("v*z");
    assemble_blocks(M, e15, e16, e17, e25, e26, e35);

    M.R.relations.push_back(P("a^2-1"));
    M.R.relations.push_back(
        P("b^2+4*c*binv-c^2-4*c*d+b*c^2*d+2*b*c*d^2"));
    M.R.relations.push_back(
        P("-2+2*b*c+2*c^2*binv^2-1/4*c^4+2*b*d-2*c^2*d*binv+c^2*d^2"));
    M.R.relations.push_back(P("-2*binv^2+2*d*binv-d^2"));

    M.target = P("x^4+y^3+x*z^2");
    M.source = P("u^3+v^8+w^2");
    M.target_vars = {0, 1, 2};
    M.source_vars = {3, 4, 5};
    M.notes.push_back(
        "d0 block derived from the six d1 generators by the sign pattern "
        "forced by d1*d0 = d0*d1 = (target - source)*Id");
    return M;
}

Certificate certificate(const MatrixFactorization& M,
                        const GroebnerOptions& opts) {
    Certificate c;
    c.mf = mf_check(M, opts);
    c.grades = grade_check(M);
    c.qdim_left = qdim(M, Side::left, opts);
    c.qdim_right = qdim(M, Side::right, opts);
    c.left_nonzero = certify_nonvanishing(c.qdim_left, M.R.relations, opts);
    c.right_nonzero = certify_nonvanishing(c.qdim_right, M.R.relations, opts);
    c.pass = c.mf.pass && c.grades.pass && c.left_nonzero && c.right_nonzero;
    return c;
}

nlohmann::ordered_json mf_to_json(const MatrixFactorization& M) {
    const Ring& ring = M.R.ring;
    std::vector<std::string> vars, params;
    for (VarIdx i = 0; i < ring.size(); ++i)
        (ring.is_param(i) ? params : vars).push_back(ring.name(i));
    nlohmann::ordered_json j;
    j["rank"] = M.rank;
    j["variables"] = vars;
    j["parameters"] = params;
    auto rels = nlohmann::ordered_json::array();
    for (const auto& rel : M.R.relations) rels.push_back(print_poly(rel, ring));
    j["relations"] = std::move(rels);
    auto block = [&](const PolyMat& m) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : m) {
            auto out = nlohmann::ordered_json::array();
            for (const auto& e : row) out.push_back(print_poly(e, ring));
            rows.push_back(std::move(out));
        }
        return rows;
    };
    j["d0"] = block(M.d0);
    j["d1"] = block(M.d1);
    return j;
}

MatrixFactorization mf_from_json(const nlohmann::json& j) {
    for (const char* key : {"rank", "variables", "parameters", "relations",
                            "d0", "d1"})
        if (!j.contains(key))
            throw DomainError(std::string("missing field ") + key);
    auto vars = j.at("variables").get<std::vector<std::string>>();
    auto params = j.at("parameters").get<std::vector<std::string>>();
    MatrixFactorization M;
    M.R.ring = weighted_ring(vars, std::vector<Rational>(vars.size(), Rational(1)))
                   .with_parameters(params);
    M.R.parameters = params;
    M.rank = j.at("rank").get<size_t>();
    for (const auto& rel : j.at("relations"))
        M.R.relations.push_back(parse_poly(rel.get<std::string>(), M.R.ring));
    auto block = [&](const nlohmann::json& rows) {
        if (rows.size() != M.rank) throw DomainError("block row count mismatch");
        PolyMat m;
        for (const auto& row : rows) {
            if (row.size() != M.rank)
                throw DomainError("block column count mismatch");
            std::vector<Polynomial> out;
            for (const auto& e : row)
                out.push_back(parse_poly(e.get<std::string>(), M.R.ring));
            m.push_back(std::move(out));
        }
        return m;
    };
    M.d0 = block(j.at("d0"));
    M.d1 = block(j.at("d1"));
    return M;
}

} // namespace orbicheck
