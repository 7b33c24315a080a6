#include "orbicheck/perturb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "orbicheck/errors.hpp"
#include "orbicheck/parse.hpp"

namespace orbicheck {

namespace {

struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_cmp(a, b) > 0;
    }
};

// exponents restricted to the parameter or non-parameter variables
Monomial part_of(const Monomial& m, const Ring& ring, bool params) {
    std::vector<int32_t> e(ring.size(), 0);
    for (VarIdx i = 0; i < ring.size(); ++i)
        if (ring.is_param(i) == params) e[i] = m.exp(i);
    return Monomial(std::move(e));
}

// geometric monomial -> coefficient polynomial in the parameters alone
std::map<Monomial, Polynomial, GrevlexDesc> split_by_geometry(
    const Polynomial& p, const Ring& ring) {
    std::map<Monomial, Polynomial, GrevlexDesc> out;
    for (const Term& t : p.terms())
        out[part_of(t.mono, ring, false)] +=
            Polynomial::monomial(part_of(t.mono, ring, true), t.coeff);
    return out;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.leading_term().coeff);
}

Polynomial slot_delta(const Ansatz& A, const PerturbationSlot& s) {
    Polynomial sum;
    for (size_t i = 0; i < s.monomials.size(); ++i) {
        const AnsatzUnknown& u = A.unknowns[s.unknown[i]];
        Rational c = i < s.sign.size() ? s.sign[i] : Rational(1);
        sum += Polynomial::monomial(s.monomials[i] * Monomial::var(u.index), c);
    }
    return sum;
}

std::string unknown_name_at(const EquationSystem& system, VarIdx v) {
    for (const auto& u : system.unknowns)
        if (u.index == v) return u.name;
    return "#" + std::to_string(v);
}

} // namespace

bool operator==(const SlotRef& a, const SlotRef& b) {
    return a.in_d1 == b.in_d1 && a.row == b.row && a.col == b.col;
}

PerturbationConstraint v1_constraint(const Ring& ring) {
    return {{ring.index_of("u")}, true};
}

PerturbationConstraint v2_constraint(const Ring& ring) {
    return {{ring.index_of("v"), ring.index_of("w")}, true};
}

MatrixFactorization build_base(int version) {
    if (version != 1 && version != 2)
        throw UnsupportedError("unknown version " + std::to_string(version));
    Ring vars =
        version == 1
            ? weighted_ring({"x", "y", "z", "u", "v", "w"},
                            {make_rational(1, 2), make_rational(2, 3),
                             make_rational(3, 4), make_rational(1, 4),
                             make_rational(2, 3), Rational(1)})
            : weighted_ring({"x", "y", "z", "u", "v", "w"},
                            {make_rational(1, 2), make_rational(2, 3),
                             make_rational(3, 4), make_rational(2, 3),
                             make_rational(1, 4), Rational(1)});
    MatrixFactorization M;
    M.R = parameter_ring(vars, {});
    auto P = [&](const char* s) { return parse_poly(s, M.R.ring); };
    if (version == 1) {
        assemble_blocks(M, P("z"), P("v^2+v*y+y^2"), P("x^2+w"), P("y-v"),
                        P("-x*z"), P("x^2-w"));
        M.source = P("v^3+w^2");
        M.notes.push_back("version 1 base, the deformation direction is u");
    } else {
        assemble_blocks(M, P("z"), P("u^2+u*y+y^2"), P("v^4+x^2"), P("-u+y"),
                        P("-x*z"), P("-v^4+x^2"));
        M.source = P("u^3+v^8");
        M.notes.push_back("version 2 base, deformations may involve v and w");
    }
    M.target = P("x^4+y^3+x*z^2");
    M.target_vars = {0, 1, 2};
    M.source_vars = {3, 4, 5};
    return M;
}

Ansatz enumerate_perturbations(const MatrixFactorization& base,
                               const Ring& ring,
                               const PerturbationConstraint& constraint) {
    GradeTable grades = grade_check(base);
    if (!grades.pass)
        throw DomainError("base factorization has no consistent grading");
    Ansatz A;
    A.base = base;
    A.tied = constraint.tie_blocks;

    std::vector<SlotRef> positions;
    if (constraint.tie_blocks) {
        // the six generator slots; every other nonzero slot repeats one of
        // them up to sign under the block pattern
        positions = {{true, 0, 0}, {true, 0, 1}, {true, 0, 2},
                     {true, 1, 0}, {true, 1, 1}, {true, 2, 0}};
    } else {
        for (int blk = 0; blk < 2; ++blk)
            for (size_t i = 0; i < base.rank; ++i)
                for (size_t j = 0; j < base.rank; ++j)
                    positions.push_back({blk == 0, i, j});
    }

    std::vector<std::string> names;
    for (const SlotRef& at : positions) {
        const Polynomial& entry = (at.in_d1 ? base.d1 : base.d0)[at.row][at.col];
        if (entry.is_zero()) continue;
        const auto& table = at.in_d1 ? grades.d1 : grades.d0;
        PerturbationSlot slot;
        slot.slot = at;
        slot.degree = *table[at.row][at.col];
        for (const Monomial& m : monomials_of_degree(ring, slot.degree)) {
            bool involves = false;
            for (VarIdx v : constraint.involve)
                if (m.exp(v) > 0) involves = true;
            if (!involves) continue;
            bool in_base = false;
            for (const Term& t : entry.terms())
                if (t.mono == m) in_base = true;
            if (in_base) continue;
            std::string name = (at.in_d1 ? "p" : "q") +
                               std::to_string(at.row + 1) +
                               std::to_string(at.col + 1) +
                               std::to_string(slot.monomials.size() + 1);
            slot.monomials.push_back(m);
            slot.unknown.push_back(A.unknowns.size());
            slot.sign.push_back(Rational(1));
            A.unknowns.push_back({name, 0, at, m});
            names.push_back(name);
        }
        A.slots.push_back(std::move(slot));
    }

    A.extended = parameter_ring(ring, names);
    for (auto& u : A.unknowns) u.index = A.extended.ring.index_of(u.name);

    if (constraint.tie_blocks) {
        std::vector<Polynomial> gen;
        for (const PerturbationSlot& s : A.slots)
            gen.push_back(base.d1[s.slot.row][s.slot.col] + slot_delta(A, s));
        MatrixFactorization tmp;
        assemble_blocks(tmp, gen[0], gen[1], gen[2], gen[3], gen[4], gen[5]);
        A.d1 = tmp.d1;
        A.d0 = tmp.d0;
    } else {
        A.d1 = base.d1;
        A.d0 = base.d0;
        for (const PerturbationSlot& s : A.slots)
            (s.slot.in_d1 ? A.d1 : A.d0)[s.slot.row][s.slot.col] +=
                slot_delta(A, s);
    }
    return A;
}

EquationSystem impose_square(const Ansatz& ansatz, const Polynomial& target) {
    const Ring& ring = ansatz.extended.ring;
    const size_t r = ansatz.base.rank;
    EquationSystem S;
    S.ring = ring;
    S.unknowns = ansatz.unknowns;
    auto scan = [&](const PolyMat& a, const PolyMat& b, bool from_d1d0) {
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                Polynomial entry;
                for (size_t k = 0; k < r; ++k) entry += a[i][k] * b[k][j];
                if (i == j) entry -= target;
                for (auto& [geom, coeff] : split_by_geometry(entry, ring)) {
                    Polynomial eq = monic(coeff);
                    if (std::find(S.equations.begin(), S.equations.end(), eq) !=
                        S.equations.end())
                        continue;
                    S.equations.push_back(std::move(eq));
                    S.provenance.push_back({from_d1d0, i, j, geom});
                }
            }
    };
    scan(ansatz.d1, ansatz.d0, true);
    scan(ansatz.d0, ansatz.d1, false);
    return S;
}

LinearReduction linear_reduce(const EquationSystem& system) {
    LinearReduction out;
    out.reduced = system;
    auto& eqs = out.reduced.equations;
    auto& prov = out.reduced.provenance;

    std::vector<VarIdx> order;
    for (const auto& u : system.unknowns) order.push_back(u.index);
    std::sort(order.begin(), order.end());

    bool progress = true;
    while (progress) {
        progress = false;
        for (VarIdx v : order) {
            size_t pick = eqs.size();
            Polynomial repl;
            for (size_t e = 0; e < eqs.size(); ++e) {
                Polynomial c = eqs[e].derivative(v);
                // a usable pivot is linear in v with a constant coefficient
                if (c.term_count() != 1 || !c.terms()[0].mono.is_one())
                    continue;
                Rational cv = c.terms()[0].coeff;
                Polynomial rest = eqs[e] - Polynomial::variable(v) * c;
                repl = rest.scaled(Rational(-1) / cv);
                pick = e;
                break;
            }
            if (pick == eqs.size()) continue;
            out.trace.push_back(
                {v, unknown_name_at(system, v), repl, eqs[pick]});
            std::vector<Polynomial> next;
            std::vector<EquationOrigin> nprov;
            for (size_t e = 0; e < eqs.size(); ++e) {
                Polynomial q = monic(eqs[e].substituted(v, repl));
                if (q.is_zero()) continue;
                if (std::find(next.begin(), next.end(), q) != next.end())
                    continue;
                next.push_back(std::move(q));
                nprov.push_back(prov[e]);
            }
            eqs = std::move(next);
            prov = std::move(nprov);
            progress = true;
            break; // rescan from the lowest index
        }
    }
    return out;
}

std::vector<SubstStep> resolved_assignments(
    const std::vector<SubstStep>& trace) {
    std::vector<SubstStep> out = trace;
    for (size_t i = out.size(); i-- > 0;)
        for (size_t j = i + 1; j < out.size(); ++j)
            out[i].replacement =
                out[i].replacement.substituted(out[j].index, out[j].replacement);
    return out;
}

PerturbationReport verify_against_family(int version,
                                         const GroebnerOptions& opts) {
    PerturbationReport rep;
    rep.version = version;

    MatrixFactorization base = build_base(version);
    const Ring& ring = base.R.ring;
    Ansatz A = enumerate_perturbations(
        base, ring, version == 1 ? v1_constraint(ring) : v2_constraint(ring));
    MatrixFactorization fam = version == 1 ? build_v1() : build_v2();
    Polynomial target = base.target - parse_poly(
        version == 1 ? "u^4*w+v^3+w^2" : "u^3+v^8+w^2", ring);
    EquationSystem S = impose_square(A, target);
    rep.unknown_count = A.unknowns.size();
    rep.equation_count = S.equations.size();

    // coefficient expression of each unknown read off the family entries
    GroebnerBasis famgb = relation_basis(fam.R, opts);
    std::vector<Polynomial> expr(A.unknowns.size());
    bool complete = true;
    for (const PerturbationSlot& s : A.slots) {
        const Polynomial& fe =
            (s.slot.in_d1 ? fam.d1 : fam.d0)[s.slot.row][s.slot.col];
        const Polynomial& be =
            (s.slot.in_d1 ? base.d1 : base.d0)[s.slot.row][s.slot.col];
        for (auto& [geom, coeff] : split_by_geometry(fe, fam.R.ring)) {
            size_t at = s.monomials.size();
            for (size_t i = 0; i < s.monomials.size(); ++i)
                if (s.monomials[i] == geom) at = i;
            if (at < s.monomials.size()) {
                expr[s.unknown[at]] = coeff.scaled(Rational(1) / s.sign[at]);
                continue;
            }
            if (coeff == Polynomial::constant(be.coefficient_of(geom)))
                continue;
            complete = false;
            rep.notes.push_back("family entry at (" +
                                std::to_string(s.slot.row) + "," +
                                std::to_string(s.slot.col) +
                                ") carries a monomial outside the ansatz");
        }
    }

    // (i) the family coefficients satisfy every generated equation
    std::map<VarIdx, size_t> where;
    for (size_t k = 0; k < A.unknowns.size(); ++k)
        where[A.unknowns[k].index] = k;
    size_t bad = 0;
    for (const Polynomial& eq : S.equations) {
        Polynomial sub;
        for (const Term& t : eq.terms()) {
            Polynomial prod = Polynomial::constant(t.coeff);
            for (const auto& [idx, k] : where)
                if (int32_t e = t.mono.exp(idx); e > 0)
                    prod = prod * expr[k].pow(uint32_t(e));
            sub += prod;
        }
        if (!normal_form(sub, famgb, opts).is_zero()) ++bad;
    }
    if (bad)
        rep.notes.push_back(std::to_string(bad) +
                            " equations fail on the family coefficients");
    rep.entries_satisfy_system = complete && bad == 0;

    // (ii) the family relations vanish on the reduced system's variety
    LinearReduction lr = linear_reduce(S);
    rep.reduced_equation_count = lr.reduced.equations.size();
    for (const auto& u : A.unknowns) {
        bool eliminated = false;
        for (const auto& st : lr.trace)
            if (st.index == u.index) eliminated = true;
        if (!eliminated) rep.reduced_unknowns.push_back(u.name);
    }
    auto resolved = resolved_assignments(lr.trace);

    // family parameters keyed by the slot and monomial they multiply
    std::vector<std::pair<std::string, std::pair<SlotRef, const char*>>> dict;
    if (version == 1)
        dict = {{"a", {{true, 0, 0}, "u*x"}},
                {"b", {{true, 0, 2}, "u*z"}},
                {"c", {{true, 1, 1}, "u*x^2"}}};
    else
        dict = {{"a", {{true, 0, 2}, "w"}},
                {"b", {{true, 0, 0}, "v^3"}},
                {"c", {{true, 0, 0}, "v*x"}},
                {"d", {{true, 0, 2}, "v*z"}}};
    std::map<VarIdx, VarIdx> param_to_unknown;
    for (const auto& [pname, key] : dict) {
        Monomial want = parse_poly(key.second, ring).terms()[0].mono;
        for (const auto& u : A.unknowns)
            if (u.slot == key.first && u.monomial == want)
                param_to_unknown[fam.R.ring.index_of(pname)] = u.index;
    }

    // coefficients the family leaves at zero, pulled into the reduced system
    std::vector<Polynomial> slice_cut;
    for (size_t k = 0; k < A.unknowns.size(); ++k) {
        if (!expr[k].is_zero()) continue;
        rep.zero_coefficient_unknowns.push_back(A.unknowns[k].name);
        Polynomial cond = Polynomial::variable(A.unknowns[k].index);
        for (const auto& st : resolved)
            cond = cond.substituted(st.index, st.replacement);
        if (!cond.is_zero()) slice_cut.push_back(cond);
    }
    std::vector<Polynomial> sliced = lr.reduced.equations;
    sliced.insert(sliced.end(), slice_cut.begin(), slice_cut.end());

    bool relations_ok = true;
    bool slice_ok = true;
    Polynomial inv_rel;
    std::optional<GroebnerBasis> invgb;
    if (!fam.R.inverted.empty()) {
        Polynomial b = Polynomial::variable(fam.R.ring.index_of("b"));
        Polynomial binv =
            Polynomial::variable(fam.R.ring.index_of(inverse_name("b")));
        inv_rel = b * binv - Polynomial::constant(Rational(1));
        invgb = buchberger({inv_rel}, MonomialOrder::grevlex(), opts);
    }
    for (const Polynomial& rel : fam.R.relations) {
        Polynomial cleared = rel;
        if (invgb) {
            if (rel == inv_rel) continue;
            VarIdx bi = fam.R.ring.index_of(inverse_name("b"));
            int32_t k = 0;
            for (const Term& t : rel.terms()) k = std::max(k, t.mono.exp(bi));
            Polynomial b = Polynomial::variable(fam.R.ring.index_of("b"));
            cleared = normal_form(rel * b.pow(uint32_t(k)), *invgb, opts);
        }
        // move the relation into the unknowns of the generated system
        Polynomial mapped;
        bool mappable = true;
        for (const Term& t : cleared.terms()) {
            Monomial m;
            for (VarIdx i = 0; i < fam.R.ring.size(); ++i) {
                if (t.mono.exp(i) == 0) continue;
                auto hit = param_to_unknown.find(i);
                if (hit == param_to_unknown.end()) {
                    mappable = false;
                    break;
                }
                m = m * Monomial::var(hit->second, t.mono.exp(i));
            }
            if (!mappable) break;
            mapped += Polynomial::monomial(m, t.coeff);
        }
        if (!mappable) {
            relations_ok = false;
            rep.notes.push_back("a family relation uses a parameter with no "
                                "ansatz counterpart");
            continue;
        }
        for (const auto& st : resolved)
            mapped = mapped.substituted(st.index, st.replacement);
        if (!radical_member(mapped, lr.reduced.equations,
                            A.extended.ring.size(), opts)) {
            relations_ok = false;
            rep.notes.push_back("a family relation does not vanish on the "
                                "full reduced variety");
            if (!radical_member(mapped, sliced, A.extended.ring.size(),
                                opts)) {
                slice_ok = false;
                rep.notes.push_back("a family relation does not vanish even "
                                    "on the zero-coefficient slice");
            }
        }
    }
    rep.relations_hold_on_variety = relations_ok;
    rep.relations_hold_on_family_slice = slice_ok;
    rep.pass = rep.entries_satisfy_system && rep.relations_hold_on_family_slice;
    rep.notes.push_back("reduced to " +
                        std::to_string(rep.reduced_equation_count) +
                        " equations in " +
                        std::to_string(rep.reduced_unknowns.size()) +
                        " unknowns");
    return rep;
}

} // namespace orbicheck
