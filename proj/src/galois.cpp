#include "orbicheck/galois.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "orbicheck/errors.hpp"

namespace orbicheck {

namespace {

using CLD = std::complex<long double>;

// ----- exact arithmetic in Q[z]/(z^4 + 1), z a primitive eighth root -----

struct Q8 {
    std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};
};

Q8 q8_rat(const Rational& r) {
    Q8 q;
    q.c[0] = r;
    return q;
}

// z^k with z^4 = -1 folded in
Q8 q8_zeta(int k) {
    k = ((k % 8) + 8) % 8;
    Q8 q;
    if (k < 4)
        q.c[k] = 1;
    else
        q.c[k - 4] = -1;
    return q;
}

bool q8_is_zero(const Q8& a) {
    return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0 && a.c[3] == 0;
}

bool operator==(const Q8& a, const Q8& b) { return a.c == b.c; }

Q8 operator+(const Q8& a, const Q8& b) {
    Q8 r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Q8 operator-(const Q8& a, const Q8& b) {
    Q8 r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Q8 operator-(const Q8& a) {
    Q8 r;
    for (int i = 0; i < 4; ++i) r.c[i] = -a.c[i];
    return r;
}

Q8 operator*(const Q8& a, const Q8& b) {
    Q8 r;
    for (int i = 0; i < 4; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.c[j] == 0) continue;
            int k = i + j;
            if (k < 4)
                r.c[k] += a.c[i] * b.c[j];
            else
                r.c[k - 4] -= a.c[i] * b.c[j];
        }
    }
    return r;
}

Q8 q8_pow(Q8 a, int e) {
    Q8 r = q8_rat(Rational(1));
    while (e > 0) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

// coefficient substitution z -> z^k, a field automorphism for odd k
Q8 q8_sigma(const Q8& a, int k) {
    Q8 r;
    for (int i = 0; i < 4; ++i) {
        if (a.c[i] == 0) continue;
        Q8 m = q8_zeta(i * k);
        for (int j = 0; j < 4; ++j) r.c[j] += a.c[i] * m.c[j];
    }
    return r;
}

Q8 q8_inv(const Q8& a) {
    if (q8_is_zero(a)) throw DomainError("inverse of zero in the cyclotomic field");
    Q8 conj = q8_sigma(a, 3) * q8_sigma(a, 5) * q8_sigma(a, 7);
    Q8 norm = a * conj;
    if (!(norm.c[1] == 0 && norm.c[2] == 0 && norm.c[3] == 0))
        throw DomainError("field norm failed to land in the rationals");
    Rational inv = Rational(1) / norm.c[0];
    Q8 r;
    for (int i = 0; i < 4; ++i) r.c[i] = conj.c[i] * inv;
    return r;
}

CLD q8_num(const Q8& a) {
    static const long double s = 0.707106781186547524400844362104849L; // sqrt(2)/2
    static const CLD zp[4] = {CLD(1, 0), CLD(s, s), CLD(0, 1), CLD(-s, s)};
    CLD r(0, 0);
    for (int i = 0; i < 4; ++i) r += CLD((long double)a.c[i].get_d(), 0.0L) * zp[i];
    return r;
}

std::string q8_str(const Q8& a) {
    if (q8_is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (a.c[i] == 0) continue;
        Rational v = a.c[i];
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? "-" : "+");
            if (v < 0) v = -v;
        }
        first = false;
        if (v != 1 || i == 0) os << v.get_str();
        if (i > 0) {
            if (v != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ----- exact rational linear algebra for minimal polynomials -----

// smallest monic dependency among the power vectors; powers[k] is the
// coordinate vector of q^k, all the same dimension
UnivariatePoly minpoly_from_powers(const std::vector<std::vector<Rational>>& powers) {
    size_t dim = powers[0].size();
    for (size_t k = 1; k < powers.size(); ++k) {
        // solve sum_j x_j powers[j] = powers[k], j < k
        std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(k + 1, Rational(0)));
        for (size_t r = 0; r < dim; ++r) {
            for (size_t j = 0; j < k; ++j) m[r][j] = powers[j][r];
            m[r][k] = powers[k][r];
        }
        size_t row = 0;
        std::vector<size_t> pivot_col;
        for (size_t col = 0; col < k && row < dim; ++col) {
            size_t pr = row;
            while (pr < dim && m[pr][col] == 0) ++pr;
            if (pr == dim) continue;
            std::swap(m[row], m[pr]);
            Rational inv = Rational(1) / m[row][col];
            for (auto& v : m[row]) v *= inv;
            for (size_t r = 0; r < dim; ++r) {
                if (r == row || m[r][col] == 0) continue;
                Rational f = m[r][col];
                for (size_t cc = col; cc <= k; ++cc) m[r][cc] -= f * m[row][cc];
            }
            pivot_col.push_back(col);
            ++row;
        }
        bool consistent = true;
        for (size_t r = row; r < dim; ++r)
            if (m[r][k] != 0) { consistent = false; break; }
        if (!consistent) continue;
        std::vector<Rational> coeffs(k + 1, Rational(0));
        for (size_t i = 0; i < pivot_col.size(); ++i) coeffs[pivot_col[i]] = -m[i][k];
        coeffs[k] = 1;
        return UnivariatePoly(std::move(coeffs));
    }
    throw DomainError("no polynomial dependency among the power vectors");
}

UnivariatePoly q8_minpoly(const Q8& q) {
    std::vector<std::vector<Rational>> powers;
    Q8 p = q8_rat(Rational(1));
    for (int k = 0; k <= 4; ++k) {
        powers.push_back({p.c[0], p.c[1], p.c[2], p.c[3]});
        p = p * q;
    }
    return minpoly_from_powers(powers);
}

// ----- univariate arithmetic modulo an irreducible polynomial -----

UnivariatePoly uni_mulmod(const UnivariatePoly& a, const UnivariatePoly& b,
                          const UnivariatePoly& m) {
    return (a * b).divmod(m).second;
}

UnivariatePoly uni_powmod(UnivariatePoly a, int e, const UnivariatePoly& m) {
    UnivariatePoly r({1});
    a = a.divmod(m).second;
    while (e > 0) {
        if (e & 1) r = uni_mulmod(r, a, m);
        a = uni_mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

UnivariatePoly uni_modinv(const UnivariatePoly& a, const UnivariatePoly& m) {
    UnivariatePoly r0 = m, r1 = a.divmod(m).second;
    UnivariatePoly t0, t1({1});
    while (!r1.is_zero()) {
        auto qr = r0.divmod(r1);
        UnivariatePoly nt = t0 - qr.first * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.second);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.degree() != 0) throw DomainError("element not invertible modulo the minimal polynomial");
    return t0.scaled(Rational(1) / r0.coeff(0)).divmod(m).second;
}

// minimal polynomial of rep in Q[x]/(modulus)
UnivariatePoly algebraic_minpoly(const UnivariatePoly& rep, const UnivariatePoly& modulus) {
    int dim = modulus.degree();
    std::vector<std::vector<Rational>> powers;
    UnivariatePoly p({1});
    for (int k = 0; k <= dim; ++k) {
        std::vector<Rational> v(dim, Rational(0));
        for (int i = 0; i <= p.degree(); ++i) v[i] = p.coeff(i);
        powers.push_back(std::move(v));
        p = uni_mulmod(p, rep, modulus);
    }
    return minpoly_from_powers(powers);
}

// evaluate a multivariate polynomial with variable images in Q[x]/(modulus);
// a variable that appears but has no image is an error
UnivariatePoly eval_mod(const Polynomial& p,
                        const std::vector<const UnivariatePoly*>& images,
                        const UnivariatePoly& modulus) {
    UnivariatePoly acc;
    for (const auto& t : p.terms()) {
        UnivariatePoly term({1});
        term = term.scaled(t.coeff);
        for (size_t i = 0; i < images.size(); ++i) {
            int e = t.mono.exp((VarIdx)i);
            if (e == 0) continue;
            if (!images[i])
                throw DomainError("no exact image for a variable in the relation");
            term = uni_mulmod(term, uni_powmod(*images[i], e, modulus), modulus);
        }
        acc = (acc + term).divmod(modulus).second;
    }
    return acc;
}

// same evaluation with exact cyclotomic images
Q8 eval_q8(const Polynomial& p, const std::vector<std::optional<Q8>>& images) {
    Q8 acc;
    for (const auto& t : p.terms()) {
        Q8 term = q8_rat(t.coeff);
        for (size_t i = 0; i < images.size(); ++i) {
            int e = t.mono.exp((VarIdx)i);
            if (e == 0) continue;
            if (!images[i])
                throw DomainError("no exact image for a variable in the relation");
            term = term * q8_pow(*images[i], e);
        }
        acc = acc + term;
    }
    return acc;
}

// ----- the exact second-family solutions -----

struct V2Exact {
    Rational a;
    Q8 b, c, d, binv;
};

std::vector<V2Exact> build_v2_exact() {
    // the sixteen values of the designated coordinate: conjugates and
    // negatives of 1 + sqrt2 + i and 1 + (sqrt2 - 1)i, written on the basis
    // 1, z, z^2, z^3
    Q8 base0, base1;
    base0.c = {Rational(1), Rational(1), Rational(1), Rational(-1)};
    base1.c = {Rational(1), Rational(1), Rational(-1), Rational(1)};
    std::vector<Q8> cs;
    for (int k : {1, 3, 5, 7}) {
        for (const Q8* b : {&base0, &base1}) {
            Q8 w = q8_sigma(*b, k);
            cs.push_back(w);
            cs.push_back(-w);
        }
    }
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            if (cs[i] == cs[j]) throw Error("coincident designated roots");

    // every c must be a root of x^16 + 2176 x^8 + 4096
    for (const auto& c : cs) {
        Q8 val = q8_pow(c, 16) + q8_rat(Rational(2176)) * q8_pow(c, 8) + q8_rat(Rational(4096));
        if (!q8_is_zero(val)) throw Error("designated root fails its sixteenth-degree relation");
    }

    std::vector<V2Exact> out;
    for (long av : {1L, -1L}) {
        for (const auto& c : cs) {
            // unique primitive eighth root beta with c^4 - 8 beta c^2 + 8 beta^2 = 0
            std::optional<Q8> beta;
            for (int k : {1, 3, 5, 7}) {
                Q8 bk = q8_zeta(k);
                Q8 val = q8_pow(c, 4) - q8_rat(Rational(8)) * bk * q8_pow(c, 2) +
                         q8_rat(Rational(8)) * bk * bk;
                if (q8_is_zero(val)) {
                    if (beta) throw Error("two eighth roots satisfy the quartic relation");
                    beta = bk;
                }
            }
            if (!beta) throw Error("no eighth root satisfies the quartic relation");
            V2Exact e;
            e.a = Rational(av);
            e.c = c;
            e.b = *beta * c;
            Q8 t = q8_rat(Rational(1)) - *beta * *beta;
            e.binv = q8_inv(e.b);
            e.d = t * e.binv;
            // t = b*d satisfies t^2 - 2t + 2 = 0
            Q8 tt = e.b * e.d;
            if (!q8_is_zero(tt * tt - q8_rat(Rational(2)) * tt + q8_rat(Rational(2))))
                throw Error("product b*d fails its quadratic relation");
            out.push_back(std::move(e));
        }
    }
    return out;
}

const std::vector<V2Exact>& v2_exact() {
    static const std::vector<V2Exact> cache = [] {
        auto sols = build_v2_exact();
        // exact verification against the family's relation ideal
        MatrixFactorization M = build_v2();
        const Ring& ring = M.R.ring;
        size_t ia = ring.index_of("a"), ib = ring.index_of("b"), ic = ring.index_of("c");
        size_t id = ring.index_of("d"), ibinv = ring.index_of(inverse_name("b"));
        for (const auto& s : sols) {
            std::vector<std::optional<Q8>> images(ring.size());
            images[ia] = q8_rat(s.a);
            images[ib] = s.b;
            images[ic] = s.c;
            images[id] = s.d;
            images[ibinv] = s.binv;
            for (const auto& rel : M.R.relations)
                if (!q8_is_zero(eval_q8(rel, images)))
                    throw Error("an exact solution fails a relation of the second family");
        }
        return sols;
    }();
    return cache;
}

int tag_index(SolutionSet& set, const UnivariatePoly& poly) {
    for (size_t i = 0; i < set.tag_polys.size(); ++i)
        if (set.tag_polys[i] == poly) return (int)i;
    set.tag_polys.push_back(poly);
    return (int)set.tag_polys.size() - 1;
}

std::vector<CLD> full_point(const Ring& ring, const std::vector<std::pair<size_t, CLD>>& params) {
    std::vector<CLD> v(ring.size(), CLD(0, 0));
    for (const auto& [i, val] : params) v[i] = val;
    return v;
}

} // namespace

SolutionSet solve_v2() {
    SolutionSet set;
    set.names = {"a", "b", "c", "d", inverse_name("b")};
    set.designated = 2;

    MatrixFactorization M = build_v2();
    const Ring& ring = M.R.ring;
    std::vector<size_t> idx;
    for (const auto& n : set.names) idx.push_back(ring.index_of(n));

    for (const auto& e : v2_exact()) {
        NumericSolution s;
        CLD av((long double)e.a.get_d(), 0.0L);
        s.value = {av, q8_num(e.b), q8_num(e.c), q8_num(e.d), q8_num(e.binv)};
        std::vector<std::pair<size_t, CLD>> binding;
        for (size_t k = 0; k < idx.size(); ++k) binding.emplace_back(idx[k], s.value[k]);
        std::vector<CLD> point = full_point(ring, binding);
        long double worst = 0;
        for (const auto& rel : M.R.relations) worst = std::max(worst, std::abs(rel.eval(point)));
        s.residual = worst;
        s.coord_tags = {tag_index(set, q8_minpoly(q8_rat(e.a))), tag_index(set, q8_minpoly(e.b)),
                        tag_index(set, q8_minpoly(e.c)), tag_index(set, q8_minpoly(e.d)),
                        tag_index(set, q8_minpoly(e.binv))};
        s.exact_label = e.a == 1 ? "a=1" : "a=-1";
        set.solutions.push_back(std::move(s));
    }
    set.notes.push_back("32 solutions assembled from exact eighth-cyclotomic data; "
                        "every relation vanishes identically before numeric rendering");
    return set;
}

SolutionSet solve_v1_samples(size_t count_per_family, const std::vector<Rational>& extra_b) {
    if (count_per_family < 1) throw DomainError("sample count must be positive");

    SolutionSet set;
    set.names = {"a", "b", "c"};
    set.designated = 0;

    MatrixFactorization M = build_v1();
    const Ring& ring = M.R.ring;
    size_t ia = ring.index_of("a"), ib = ring.index_of("b"), ic = ring.index_of("c");

    struct Family {
        const char* label;
        UnivariatePoly minpoly;
        // c = num(a, b) / den(a, b), den linear in a
        std::function<UnivariatePoly(const Rational&)> num;
        std::function<UnivariatePoly(const Rational&)> den;
    };
    std::vector<Family> families;
    families.push_back({"family 1",
                        UnivariatePoly({16, 0, 0, 0, 24, 0, 0, 0, 1}),
                        [](const Rational& b) {
                            return UnivariatePoly({32 * b * b, 32 * b, Rational(-12), Rational(0),
                                                   Rational(0), Rational(0), Rational(-1)});
                        },
                        [](const Rational& b) { return UnivariatePoly({32 * b, Rational(16)}); }});
    families.push_back({"family 2A",
                        UnivariatePoly({-4, 0, -4, 0, 1}),
                        [](const Rational& b) {
                            return UnivariatePoly({4 * b * b + 2, 4 * b, Rational(1)});
                        },
                        [](const Rational& b) { return UnivariatePoly({4 * b, Rational(2)}); }});
    families.push_back({"family 2B",
                        UnivariatePoly({-4, 0, 4, 0, 1}),
                        [](const Rational& b) {
                            return UnivariatePoly({4 * b * b - 2, 4 * b, Rational(1)});
                        },
                        [](const Rational& b) { return UnivariatePoly({4 * b, Rational(2)}); }});

    for (const auto& fam : families) {
        auto roots = roots_numeric(fam.minpoly);
        int family_tag = tag_index(set, fam.minpoly);
        size_t taken = 0;
        size_t sweep = 0;
        while (taken < count_per_family) {
            Rational b = sweep < extra_b.size()
                             ? extra_b[sweep]
                             : Rational(2 * (long)(sweep - extra_b.size()) + 1, 7);
            ++sweep;

            // exact data for this sweep value, shared across the conjugate roots
            UnivariatePoly den = fam.den(b).divmod(fam.minpoly).second;
            UnivariatePoly c_rep = uni_mulmod(fam.num(b), uni_modinv(den, fam.minpoly), fam.minpoly);
            UnivariatePoly xbar({0, 1});
            UnivariatePoly bconst({b});
            std::vector<const UnivariatePoly*> images(ring.size(), nullptr);
            images[ia] = &xbar;
            images[ib] = &bconst;
            images[ic] = &c_rep;
            for (const auto& rel : M.R.relations)
                if (!eval_mod(rel, images, fam.minpoly).is_zero())
                    throw Error(std::string("a sample of ") + fam.label +
                                " fails a relation exactly");
            int b_tag = tag_index(set, UnivariatePoly({-b, Rational(1)}));
            int c_tag = tag_index(set, algebraic_minpoly(c_rep, fam.minpoly));

            for (const auto& root : roots) {
                if (taken >= count_per_family) break;
                CLD a_val = root.value;
                CLD pivot = a_val + CLD(2 * (long double)b.get_d(), 0.0L);
                if (std::abs(pivot) < 1e-8L) {
                    std::ostringstream os;
                    os << fam.label << ": skipped b=" << b.get_str()
                       << " where the pivot a+2b vanishes numerically";
                    set.notes.push_back(os.str());
                    continue;
                }
                NumericSolution s;
                CLD b_val((long double)b.get_d(), 0.0L);
                // divide numerically rather than evaluating c_rep, whose
                // coefficients blow up when another conjugate root sits near
                // the pivot
                CLD c_val = fam.num(b).eval(a_val) / fam.den(b).eval(a_val);
                s.value = {a_val, b_val, c_val};
                std::vector<CLD> point =
                    full_point(ring, {{ia, a_val}, {ib, b_val}, {ic, c_val}});
                long double worst = 0;
                for (const auto& rel : M.R.relations)
                    worst = std::max(worst, std::abs(rel.eval(point)));
                s.residual = worst;
                s.coord_tags = {family_tag, b_tag, c_tag};
                set.solutions.push_back(std::move(s));
                ++taken;
            }
        }
        std::ostringstream os;
        os << fam.label << ": " << taken << " samples over " << roots.size()
           << " conjugate roots";
        set.notes.push_back(os.str());
    }
    return set;
}

size_t orbit_partition(SolutionSet& set, const FactorizationResult& fact, long double margin) {
    if (set.designated >= set.names.size())
        throw DomainError("designated coordinate out of range");
    std::vector<UnivariatePoly> monics;
    for (const auto& [f, mult] : fact.factors) monics.push_back(f.monic());

    std::vector<std::pair<int, std::string>> seen;
    for (auto& sol : set.solutions) {
        CLD z = sol.value[set.designated];
        int match = -1;
        std::vector<long double> vals(monics.size());
        for (size_t k = 0; k < monics.size(); ++k) {
            vals[k] = std::abs(monics[k].eval(z));
            if (vals[k] < margin) {
                if (match >= 0) {
                    std::ostringstream os;
                    os << "designated coordinate within margin of two factors: |f_" << match
                       << "|=" << (double)vals[match] << ", |f_" << k << "|=" << (double)vals[k];
                    throw AmbiguousMatchError(os.str());
                }
                match = (int)k;
            }
        }
        if (match < 0) throw DomainError("designated coordinate matches no factor");
        if (!sol.coord_tags.empty()) {
            int tag = sol.coord_tags[set.designated];
            if (tag >= 0 && !(set.tag_polys[tag].monic() == monics[match]))
                throw DomainError("numeric factor match contradicts the exact tag");
        }
        std::pair<int, std::string> key{match, sol.exact_label};
        auto it = std::find(seen.begin(), seen.end(), key);
        if (it == seen.end()) {
            seen.push_back(key);
            sol.orbit = (int)seen.size() - 1;
        } else {
            sol.orbit = (int)(it - seen.begin());
        }
    }
    return seen.size();
}

namespace {

std::vector<size_t> perm_compose(const std::vector<size_t>& f, const std::vector<size_t>& g) {
    std::vector<size_t> r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

bool is_identity(const std::vector<size_t>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

size_t perm_order(const std::vector<size_t>& p) {
    std::vector<size_t> q = p;
    size_t k = 1;
    while (!is_identity(q)) {
        q = perm_compose(p, q);
        ++k;
        if (k > p.size() * p.size() + 1) throw Error("runaway permutation order");
    }
    return k;
}

} // namespace

RootPermutationGroup close_permutation_group(std::vector<std::string> domain,
                                             std::vector<GroupElement> generators,
                                             std::vector<std::string> maps) {
    size_t n = domain.size();
    for (const auto& g : generators) {
        if (g.perm.size() != n) throw DomainError("generator size does not match the domain");
        std::vector<char> hit(n, 0);
        for (size_t v : g.perm) {
            if (v >= n || hit[v]) throw DomainError("generator is not a bijection of the domain");
            hit[v] = 1;
        }
    }

    RootPermutationGroup G;
    G.domain = std::move(domain);
    G.generator_maps = std::move(maps);

    std::vector<size_t> id(n);
    for (size_t i = 0; i < n; ++i) id[i] = i;
    G.elements.push_back({"id", id});
    for (size_t head = 0; head < G.elements.size(); ++head) {
        GroupElement cur = G.elements[head];
        for (const auto& g : generators) {
            std::vector<size_t> q = perm_compose(g.perm, cur.perm);
            bool known = false;
            for (const auto& e : G.elements)
                if (e.perm == q) { known = true; break; }
            if (known) continue;
            std::string name = cur.name == "id" ? g.name : g.name + "*" + cur.name;
            G.elements.push_back({std::move(name), std::move(q)});
            if (G.elements.size() > 4096) throw Error("permutation closure exceeded its budget");
        }
    }
    G.generators = std::move(generators);
    G.order = G.elements.size();

    G.abelian = true;
    for (const auto& x : G.elements) {
        for (const auto& y : G.elements) {
            if (perm_compose(x.perm, y.perm) != perm_compose(y.perm, x.perm)) {
                G.abelian = false;
                break;
            }
        }
        if (!G.abelian) break;
    }
    for (const auto& e : G.elements) ++G.order_histogram[perm_order(e.perm)];
    for (const auto& x : G.elements) {
        bool central = true;
        for (const auto& y : G.elements)
            if (perm_compose(x.perm, y.perm) != perm_compose(y.perm, x.perm)) {
                central = false;
                break;
            }
        if (central) ++G.center_size;
    }
    return G;
}

namespace {

std::string fmt_cld(const CLD& z) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

std::vector<size_t> perm_from_map(const std::vector<std::pair<CLD, CLD>>& pts,
                                  const std::function<std::pair<CLD, CLD>(CLD, CLD)>& act,
                                  long double margin) {
    std::vector<size_t> perm(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        auto [im, in] = act(pts[i].first, pts[i].second);
        long double best = -1, second = -1;
        size_t bi = 0;
        for (size_t j = 0; j < pts.size(); ++j) {
            long double d = std::abs(im - pts[j].first) + std::abs(in - pts[j].second);
            if (best < 0 || d < best) {
                second = best;
                best = d;
                bi = j;
            } else if (second < 0 || d < second) {
                second = d;
            }
        }
        if (best > 1e-9L) throw DomainError("generator image left the conjugate set");
        if (second >= 0 && second < margin)
            throw AmbiguousMatchError("two conjugate points within margin");
        perm[i] = bi;
    }
    return perm;
}

RootPermutationGroup certificate_v1() {
    // minimal polynomial of the fourth roots of -3 +- 2*sqrt(2):
    // squaring m^4 + 3 = +-2*sqrt(2) gives m^8 + 6m^4 + 1 = 0
    UnivariatePoly quartic_shift({3, 0, 0, 0, 1});
    UnivariatePoly octic = quartic_shift * quartic_shift - UnivariatePoly({8});
    auto mroots = roots_numeric(octic);

    std::vector<std::pair<CLD, CLD>> pts;
    for (const auto& mr : mroots) {
        CLD m = mr.value;
        CLD s2 = (m * m * m * m + CLD(3, 0)) / CLD(2, 0); // +-sqrt(2)
        CLD n = std::sqrt(CLD(1, 0) + s2);
        pts.emplace_back(m, n);
        pts.emplace_back(m, -n);
    }

    std::vector<std::string> domain;
    for (const auto& [m, n] : pts) domain.push_back("m=" + fmt_cld(m) + ", n=" + fmt_cld(n));

    auto iv = [](CLD m) { return (m * m + CLD(1, 0) / (m * m)) / CLD(2, 0); };
    auto rho = [&](CLD m, CLD n) { return std::make_pair(iv(m) / m, iv(m) / n); };
    auto sig = [&](CLD m, CLD n) { return std::make_pair(CLD(1, 0) / m, iv(m) / n); };
    auto tau = [](CLD m, CLD n) { return std::make_pair(m, -n); };

    const long double margin = 1e-6L;
    std::vector<GroupElement> gens;
    gens.push_back({"rho", perm_from_map(pts, rho, margin)});
    gens.push_back({"sigma", perm_from_map(pts, sig, margin)});
    gens.push_back({"tau", perm_from_map(pts, tau, margin)});
    std::vector<std::string> maps = {
        "m -> i/m, n -> i/n with i = (m^2 + m^-2)/2",
        "m -> 1/m, n -> i/n with i = (m^2 + m^-2)/2",
        "m -> m, n -> -n",
    };

    // defining relations, checked as permutations
    auto pw = [&](const std::vector<size_t>& p, int k) {
        std::vector<size_t> r(p.size());
        for (size_t i = 0; i < p.size(); ++i) r[i] = i;
        for (int t = 0; t < k; ++t) r = perm_compose(p, r);
        return r;
    };
    if (!is_identity(pw(gens[0].perm, 4)) || is_identity(pw(gens[0].perm, 2)))
        throw Error("first generator does not have order four");
    if (!is_identity(pw(gens[1].perm, 2)) || !is_identity(pw(gens[2].perm, 2)))
        throw Error("an involution generator does not square to the identity");

    RootPermutationGroup G = close_permutation_group(std::move(domain), std::move(gens),
                                                     std::move(maps));
    G.notes.push_back("acts on the 16 pairs (m, n) with m^8 + 6m^4 + 1 = 0 and "
                      "n^2 = 1 + (m^4 + 3)/2");
    G.notes.push_back("order 16, non-abelian, consistent with the direct product of the "
                      "dihedral group of order 8 and a cyclic group of order 2; the "
                      "certificate is evidence, not an isomorphism proof");
    return G;
}

RootPermutationGroup certificate_v2() {
    const auto& ex = v2_exact();
    std::vector<std::string> domain;
    for (const auto& e : ex)
        domain.push_back("a=" + e.a.get_str() + ", c=" + q8_str(e.c));

    std::vector<GroupElement> gens;
    std::vector<std::string> maps;
    for (int k : {1, 3, 5, 7}) {
        std::vector<size_t> perm(ex.size());
        for (size_t i = 0; i < ex.size(); ++i) {
            V2Exact img;
            img.a = ex[i].a;
            img.b = q8_sigma(ex[i].b, k);
            img.c = q8_sigma(ex[i].c, k);
            img.d = q8_sigma(ex[i].d, k);
            img.binv = q8_sigma(ex[i].binv, k);
            bool found = false;
            for (size_t j = 0; j < ex.size(); ++j) {
                if (ex[j].a == img.a && ex[j].b == img.b && ex[j].c == img.c &&
                    ex[j].d == img.d && ex[j].binv == img.binv) {
                    perm[i] = j;
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("a substitution image is not among the 32 solutions");
        }
        gens.push_back({k == 1 ? "id" : "s" + std::to_string(k), std::move(perm)});
        maps.push_back("z -> z^" + std::to_string(k) + " on every coordinate, z a primitive "
                       "eighth root of unity");
    }

    RootPermutationGroup G = close_permutation_group(std::move(domain), std::move(gens),
                                                     std::move(maps));
    G.notes.push_back("acts on the 32 exact solutions of the second family by coefficient "
                      "substitution");
    G.notes.push_back("order 4, abelian, every element of order at most 2: consistent with "
                      "the Klein four-group; the certificate is evidence, not an "
                      "isomorphism proof");
    return G;
}

} // namespace

RootPermutationGroup group_certificate(int version) {
    if (version == 1) return certificate_v1();
    if (version == 2) return certificate_v2();
    throw UnsupportedError("only versions 1 and 2 carry group certificates");
}

long double square_residual(const MatrixFactorization& M,
                            const std::vector<std::string>& names,
                            const std::vector<std::complex<long double>>& values) {
    if (names.size() != values.size())
        throw DomainError("parameter names and values differ in length");
    const Ring& ring = M.R.ring;

    static const long double samples[3][6] = {
        {0.31L, -0.77L, 1.13L, 0.41L, 0.97L, -0.59L},
        {1.21L, 0.35L, -0.64L, 0.58L, -1.02L, 0.77L},
        {-0.45L, 0.88L, 0.21L, -1.30L, 0.40L, 1.10L},
    };

    std::vector<CLD> base(ring.size(), CLD(0, 0));
    std::vector<char> have(ring.size(), 0);
    for (size_t k = 0; k < names.size(); ++k) {
        size_t i = ring.index_of(names[k]);
        base[i] = values[k];
        have[i] = 1;
    }
    // adjoined inverses not supplied directly derive from their parameters
    for (const auto& q : M.R.inverted) {
        size_t ii = ring.index_of(inverse_name(q));
        size_t iq = ring.index_of(q);
        if (!have[ii]) {
            if (!have[iq]) throw DomainError("missing value for an inverted parameter");
            base[ii] = CLD(1, 0) / base[iq];
            have[ii] = 1;
        }
    }
    for (size_t i = 0; i < ring.size(); ++i)
        if (ring.is_param((VarIdx)i) && !have[i])
            throw DomainError("missing value for parameter " + ring.name((VarIdx)i));

    long double worst = 0;
    for (const auto& sample : samples) {
        std::vector<CLD> point = base;
        size_t g = 0;
        for (size_t i = 0; i < ring.size(); ++i)
            if (!ring.is_param((VarIdx)i)) point[i] = CLD(sample[g++ % 6], 0.0L);
        CLD P = (M.target - M.source).eval(point);

        size_t r = M.rank;
        std::vector<std::vector<CLD>> a(r, std::vector<CLD>(r)), b(r, std::vector<CLD>(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                a[i][j] = M.d1[i][j].eval(point);
                b[i][j] = M.d0[i][j].eval(point);
            }
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                CLD s10(0, 0), s01(0, 0);
                for (size_t k = 0; k < r; ++k) {
                    s10 += a[i][k] * b[k][j];
                    s01 += b[i][k] * a[k][j];
                }
                CLD expect = i == j ? P : CLD(0, 0);
                worst = std::max(worst, std::abs(s10 - expect));
                worst = std::max(worst, std::abs(s01 - expect));
            }
    }
    return worst;
}

bool galois_invariance_check(const MatrixFactorization& M, const GroupElement& sigma,
                             const SolutionSet& set, size_t index, long double tol) {
    if (sigma.perm.size() != set.solutions.size())
        throw DomainError("group element acts on a set of a different size");
    if (index >= set.solutions.size()) throw DomainError("solution index out of range");
    const NumericSolution& image = set.solutions[sigma.perm[index]];
    return square_residual(M, set.names, image.value) < tol;
}

} // namespace orbicheck
