#include "orbicheck/potential.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <json.hpp>

#include "orbicheck/catalog_data.hpp"
#include "orbicheck/errors.hpp"
#include "orbicheck/linalg.hpp"
#include "orbicheck/parse.hpp"

namespace orbicheck {

ValidationReport validate_potential(const Polynomial& p, const Ring& ring,
                                    const GroebnerOptions& opts) {
    ValidationReport r;
    r.homogeneous = !p.is_zero() && is_quasi_homogeneous(p, ring, Rational(2));
    r.milnor = p.is_zero() ? MilnorResult{false, 0} : milnor_number(p, ring, opts);
    r.pass = r.homogeneous && r.milnor.finite;
    return r;
}

Potential make_potential(Polynomial poly, Ring ring, std::string name) {
    ValidationReport rep = validate_potential(poly, ring);
    if (!rep.pass) {
        std::string label = name.empty() ? print_poly(poly, ring) : name;
        throw DomainError("not a potential: " + label +
                          (rep.homogeneous ? " (non-isolated critical point)"
                                           : " (not quasi-homogeneous of degree 2)"));
    }
    return Potential{std::move(poly), std::move(ring), std::move(name)};
}

Rational central_charge(const Ring& ring) {
    Rational c(0);
    for (VarIdx i = 0; i < ring.size(); ++i)
        if (!ring.is_param(i)) c += Rational(1) - ring.weight(i);
    return c;
}

Rational central_charge(const Potential& p) { return central_charge(p.ring); }

Ring infer_weights(const Polynomial& p, const Ring& names, const Rational& d) {
    if (p.is_zero()) throw DomainError("cannot infer weights for the zero polynomial");
    const size_t n = names.size();
    QMat a;
    QVec b;
    for (const Term& t : p.terms()) {
        if (t.mono.width() > n)
            throw DomainError("monomial uses a variable outside the ring");
        QVec row(n, Rational(0));
        for (VarIdx v = 0; v < n; ++v) row[v] = Rational(t.mono.exp(v));
        a.push_back(std::move(row));
        b.push_back(d);
    }
    auto sol = solve_unique(std::move(a), std::move(b));
    if (!sol)
        throw InconsistentError("no weight assignment makes every monomial of " +
                                print_poly(p, names) + " have degree " + to_string(d));
    return weighted_ring(names.names(), *sol);
}

ExponentMatrix exponent_matrix(const Polynomial& p, size_t nvars) {
    if (p.term_count() != nvars)
        throw NotSquareError("expected " + std::to_string(nvars) + " monomials, found " +
                             std::to_string(p.term_count()));
    ExponentMatrix e;
    for (const Term& t : p.terms()) {
        if (t.mono.width() > nvars)
            throw NotSquareError("monomial uses a variable outside the ring");
        std::vector<int64_t> row(nvars, 0);
        for (VarIdx v = 0; v < nvars; ++v) row[v] = t.mono.exp(v);
        e.push_back(std::move(row));
    }
    return e;
}

bool exponent_matrix_invertible(const ExponentMatrix& e) {
    QMat m;
    for (const auto& row : e) {
        QVec qrow;
        for (int64_t x : row) qrow.push_back(Rational(static_cast<long>(x)));
        m.push_back(std::move(qrow));
    }
    return !e.empty() && rank(std::move(m)) == e.size();
}

namespace {

// Pairs every variable with a term containing it, preferring high exponents
// (a root power or pointer belongs to its own variable). Row order of the
// exponent matrix is a convention; this one reverses arrows and makes the
// transposition an exact involution. Returns term indices per variable, or
// the identity pairing when no containment matching exists.
std::vector<size_t> ownership_pairing(const ExponentMatrix& e) {
    const size_t n = e.size();
    std::vector<size_t> term_of(n, 0);
    std::vector<char> used(n, 0);
    std::function<bool(size_t)> place = [&](size_t v) -> bool {
        if (v == n) return true;
        std::vector<size_t> cands;
        for (size_t t = 0; t < n; ++t)
            if (!used[t] && e[t][v] >= 1) cands.push_back(t);
        std::stable_sort(cands.begin(), cands.end(),
                         [&](size_t a, size_t b) { return e[a][v] > e[b][v]; });
        for (size_t t : cands) {
            used[t] = 1;
            term_of[v] = t;
            if (place(v + 1)) return true;
            used[t] = 0;
        }
        return false;
    };
    if (!place(0))
        for (size_t v = 0; v < n; ++v) term_of[v] = v;
    return term_of;
}

} // namespace

Polynomial bh_transpose(const Polynomial& p, size_t nvars) {
    ExponentMatrix e = exponent_matrix(p, nvars);
    std::vector<size_t> term_of = ownership_pairing(e);
    std::vector<Term> out;
    for (size_t i = 0; i < nvars; ++i) {
        std::vector<int32_t> exps(nvars);
        for (size_t j = 0; j < nvars; ++j)
            exps[j] = static_cast<int32_t>(e[term_of[j]][i]);
        out.push_back(Term{Monomial(std::move(exps)), p.terms()[term_of[i]].coeff});
    }
    return Polynomial::from_terms(std::move(out));
}

bool is_invertible(const Polynomial& p, const Ring& ring,
                   const GroebnerOptions& opts) {
    try {
        ExponentMatrix e = exponent_matrix(p, ring.size());
        if (!exponent_matrix_invertible(e)) return false;
        // a nonsingular square system has exactly one weight solution, so
        // only positivity can fail from here on
        Ring pw = infer_weights(p, ring, Rational(2));
        if (!validate_potential(p, pw, opts).pass) return false;
        Polynomial t = bh_transpose(p, ring.size());
        Ring tw = infer_weights(t, ring, Rational(2));
        return validate_potential(t, tw, opts).pass;
    } catch (const NotSquareError&) {
        return false;
    } catch (const DomainError&) {
        // non-positive inferred weights
        return false;
    }
}

const char* shape_name(ShapeTag t) {
    switch (t) {
        case ShapeTag::I: return "I";
        case ShapeTag::II: return "II";
        case ShapeTag::III: return "III";
        case ShapeTag::IV: return "IV";
        case ShapeTag::V: return "V";
        case ShapeTag::VI: return "VI";
        case ShapeTag::VII: return "VII";
    }
    return "?";
}

bool ShapeReport::conditions_ok() const {
    for (const auto& c : conditions)
        if (!c.satisfied) return false;
    return true;
}

namespace {

// One variable's reading of its assigned monomial: a root x_v^a (a >= 2) or
// a pointer x_v^a * x_t.
struct Reading {
    bool root = false;
    VarIdx target = 0;
    int64_t expo = 0;
};

std::optional<Reading> read_monomial(const Monomial& m, VarIdx v, size_t n) {
    std::vector<VarIdx> support;
    for (VarIdx i = 0; i < n; ++i)
        if (m.exp(i) > 0) support.push_back(i);
    if (m.width() > n) return std::nullopt;
    if (support.size() == 1 && support[0] == v && m.exp(v) >= 2)
        return Reading{true, v, m.exp(v)};
    if (support.size() == 2 && m.exp(v) >= 1) {
        VarIdx other = support[0] == v ? support[1] : support[0];
        if (m.exp(other) == 1) return Reading{false, other, m.exp(v)};
    }
    return std::nullopt;
}

ShapeReport shape_of(const std::vector<Reading>& f, size_t n) {
    ShapeReport rep{ShapeTag::I, {}};
    size_t roots = 0;
    for (const auto& r : f) roots += r.root ? 1 : 0;
    if (n == 1) {
        rep.tag = ShapeTag::I;
        return rep;
    }
    if (n == 2) {
        rep.tag = roots == 2 ? ShapeTag::I : roots == 1 ? ShapeTag::II : ShapeTag::III;
        return rep;
    }
    auto two_cycle = [&](VarIdx a, VarIdx b) {
        return !f[a].root && !f[b].root && f[a].target == b && f[b].target == a;
    };
    if (roots == 3) {
        rep.tag = ShapeTag::I;
    } else if (roots == 2) {
        rep.tag = ShapeTag::II;
    } else if (roots == 1) {
        VarIdx r = 0;
        for (VarIdx i = 0; i < 3; ++i)
            if (f[i].root) r = i;
        std::vector<VarIdx> rest;
        for (VarIdx i = 0; i < 3; ++i)
            if (i != r) rest.push_back(i);
        VarIdx u = rest[0], w = rest[1];
        if (two_cycle(u, w)) {
            rep.tag = ShapeTag::III;
        } else if (f[u].target == r && f[w].target == r) {
            rep.tag = ShapeTag::VI;
            int64_t a = f[r].expo, b = f[u].expo, c = f[w].expo;
            int64_t l = std::lcm(b, c);
            rep.conditions.push_back(
                {"a-1 divides lcm(b,c) with a=" + std::to_string(a) +
                     ", b=" + std::to_string(b) + ", c=" + std::to_string(c),
                 l % (a - 1) == 0});
        } else {
            rep.tag = ShapeTag::IV;
        }
    } else {
        VarIdx cyc_a = 3, cyc_b = 3, tail = 3;
        for (VarIdx i = 0; i < 3 && cyc_a == 3; ++i)
            for (VarIdx j = 0; j < 3; ++j)
                if (i != j && two_cycle(i, j)) {
                    cyc_a = i;
                    cyc_b = j;
                    break;
                }
        if (cyc_a == 3) {
            rep.tag = ShapeTag::V;
        } else {
            rep.tag = ShapeTag::VII;
            for (VarIdx i = 0; i < 3; ++i)
                if (i != cyc_a && i != cyc_b) tail = i;
            // x is the cycle member the tail points at, y its partner
            VarIdx x = f[tail].target;
            VarIdx y = x == cyc_a ? cyc_b : cyc_a;
            int64_t a = f[x].expo, b = f[y].expo, c = f[tail].expo;
            int64_t div = (a - 1) * std::gcd(b, c);
            bool ok = div == 0 ? (b - 1) * c == 0 : ((b - 1) * c) % div == 0;
            rep.conditions.push_back(
                {"(a-1)*gcd(b,c) divides (b-1)*c with a=" + std::to_string(a) +
                     ", b=" + std::to_string(b) + ", c=" + std::to_string(c),
                 ok});
        }
    }
    return rep;
}

} // namespace

ShapeReport classify_shape(const Polynomial& p, const Ring& ring) {
    const size_t n = ring.size();
    if (n > 3) throw UnsupportedArityError("shape classification handles at most 3 variables");
    if (n == 0 || p.is_zero())
        throw NotRepresentableError("no variables to classify");
    const auto& ts = p.terms();
    if (ts.size() != n)
        throw NotRepresentableError("need exactly one monomial per variable, found " +
                                    std::to_string(ts.size()) + " for " + std::to_string(n));
    std::vector<size_t> assign(n);
    std::iota(assign.begin(), assign.end(), size_t{0});
    std::vector<ShapeReport> found;
    std::set<ShapeTag> tags;
    do {
        std::vector<Reading> f(n);
        bool ok = true;
        for (VarIdx v = 0; v < n && ok; ++v) {
            auto r = read_monomial(ts[assign[v]].mono, v, n);
            if (!r)
                ok = false;
            else
                f[v] = *r;
        }
        if (!ok) continue;
        ShapeReport rep = shape_of(f, n);
        if (tags.insert(rep.tag).second) found.push_back(rep);
    } while (std::next_permutation(assign.begin(), assign.end()));
    if (found.empty())
        throw NotRepresentableError("no root/pointer reading covers every variable of " +
                                    print_poly(p, ring));
    if (found.size() > 1)
        throw AmbiguousMatchError("multiple shapes fit " + print_poly(p, ring));
    return found.front();
}

Polynomial permute_variables(const Polynomial& p, const std::vector<VarIdx>& perm) {
    std::vector<Term> out;
    for (const Term& t : p.terms()) {
        if (t.mono.width() > perm.size())
            throw DomainError("permutation does not cover every variable");
        Monomial m;
        for (VarIdx v = 0; v < perm.size(); ++v)
            if (t.mono.exp(v) > 0) m = m * Monomial::var(perm[v], t.mono.exp(v));
        out.push_back(Term{std::move(m), t.coeff});
    }
    return Polynomial::from_terms(std::move(out));
}

bool equal_up_to_variable_permutation(const Polynomial& p, const Polynomial& q,
                                      size_t nvars) {
    std::vector<VarIdx> perm(nvars);
    std::iota(perm.begin(), perm.end(), VarIdx{0});
    do {
        if (permute_variables(p, perm) == q) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

std::vector<CatalogEntry> load_catalog() {
    nlohmann::json doc = nlohmann::json::parse(detail::kCatalogJson);
    std::vector<CatalogEntry> out;
    for (const auto& je : doc.at("entries")) {
        CatalogEntry e;
        e.name = je.at("name").get<std::string>();
        const auto& ws = je.at("weight_system");
        e.weights.a = {ws.at("a1").get<int64_t>(), ws.at("a2").get<int64_t>(),
                       ws.at("a3").get<int64_t>()};
        e.weights.h = ws.at("h").get<int64_t>();
        if (!je.at("strange_dual").is_null())
            e.strange_dual = je.at("strange_dual").get<std::string>();
        Ring names = unweighted_ring({"x", "y", "z"});
        for (const auto& js : je.at("potentials")) {
            Polynomial p = parse_poly(js.get<std::string>(), names);
            Ring ring = infer_weights(p, names, Rational(2));
            e.potentials.push_back(make_potential(std::move(p), std::move(ring), e.name));
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = load_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e;
    throw DomainError("unknown catalog entry '" + name + "'");
}

} // namespace orbicheck
