#include "orbicheck/groebner.hpp"

#include <algorithm>
#include <map>

namespace orbicheck {

namespace {

// Working representation: terms sorted descending by the active order.
using WPoly = std::vector<Term>;

WPoly to_wpoly(const Polynomial& p, const MonomialOrder& ord) {
    WPoly w(p.terms().begin(), p.terms().end());
    std::sort(w.begin(), w.end(), [&](const Term& a, const Term& b) {
        return ord.cmp(a.mono, b.mono) > 0;
    });
    return w;
}

Polynomial from_wpoly(WPoly w) { return Polynomial::from_terms(std::move(w)); }

// f (from index i0 on) minus c * m * g, merged in one pass.
WPoly merge_sub(const WPoly& f, size_t i0, const Rational& c, const Monomial& m,
                const WPoly& g, const MonomialOrder& ord) {
    WPoly out;
    out.reserve(f.size() - i0 + g.size());
    size_t i = i0, j = 0;
    while (i < f.size() && j < g.size()) {
        Monomial gm = g[j].mono * m;
        int cmp = ord.cmp(f[i].mono, gm);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({std::move(gm), -c * g[j].coeff});
            ++j;
        } else {
            Rational s = f[i].coeff - c * g[j].coeff;
            if (s != 0) out.push_back({f[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].mono * m, -c * g[j].coeff});
    return out;
}

struct Budget {
    uint64_t left;
    void spend() {
        if (left == 0)
            throw ResourceLimitError("groebner reduction step budget exhausted");
        --left;
    }
};

// Full reduction of f by basis; returns the normal form, untouched scaling.
WPoly reduce_full(WPoly f, const std::vector<WPoly>& basis,
                  const MonomialOrder& ord, Budget& budget) {
    WPoly out;
    size_t head = 0;
    while (head < f.size()) {
        const Term& t = f[head];
        const WPoly* hit = nullptr;
        for (const auto& g : basis) {
            if (!g.empty() && g[0].mono.divides(t.mono)) {
                hit = &g;
                break;
            }
        }
        if (!hit) {
            out.push_back(t);
            ++head;
            continue;
        }
        budget.spend();
        Rational c = t.coeff / (*hit)[0].coeff;
        Monomial m = (*hit)[0].mono.divided_into(t.mono);
        WPoly rest = merge_sub(f, head, c, m, *hit, ord);
        f = std::move(rest);
        head = 0;
        // merge_sub cancels the old head exactly, and anything already moved
        // to out is reduced, so restarting at 0 of the shrunk tail is safe
    }
    return out;
}

// Scale to integer coefficients with no common factor and positive lead.
void make_primitive(WPoly& f) {
    if (f.empty()) return;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : f) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (f[0].coeff < 0) scale = -scale;
    for (auto& t : f) t.coeff *= scale;
}

struct Pair {
    size_t i, j;
    Monomial lcm;
    int64_t deg;
};

struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

class Engine {
public:
    Engine(const MonomialOrder& ord, Budget& budget) : ord_(ord), budget_(budget) {}

    void add_generator(WPoly g) {
        size_t h = basis_.size();
        basis_.push_back(std::move(g));
        update_pairs(h);
    }

    void run() {
        while (!pairs_.empty()) {
            auto sel = std::min_element(pairs_.begin(), pairs_.end(), PairLess{});
            Pair p = *sel;
            pairs_.erase(sel);
            WPoly s = spoly(p.i, p.j);
            WPoly r = reduce_full(std::move(s), basis_, ord_, budget_);
            if (r.empty()) continue;
            make_primitive(r);
            add_generator(std::move(r));
        }
    }

    std::vector<WPoly> take_reduced() {
        // minimalize: keep only leading terms not divisible by another's
        std::vector<size_t> keep;
        for (size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j) continue;
                const Monomial &a = basis_[i][0].mono, &b = basis_[j][0].mono;
                if (b.divides(a) && (a != b || j < i)) redundant = true;
            }
            if (!redundant) keep.push_back(i);
        }
        std::vector<WPoly> g;
        for (size_t i : keep) g.push_back(basis_[i]);
        // interreduce tails until stable
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < g.size(); ++i) {
                std::vector<WPoly> others;
                for (size_t j = 0; j < g.size(); ++j)
                    if (j != i) others.push_back(g[j]);
                WPoly r = reduce_full(g[i], others, ord_, budget_);
                make_primitive(r);
                if (r != g[i]) {
                    changed = true;
                    g[i] = std::move(r);
                }
            }
        }
        // monic, sorted by decreasing leading term
        for (auto& f : g) {
            Rational inv = 1 / f[0].coeff;
            for (auto& t : f) t.coeff *= inv;
        }
        std::sort(g.begin(), g.end(), [&](const WPoly& a, const WPoly& b) {
            return ord_.cmp(a[0].mono, b[0].mono) > 0;
        });
        return g;
    }

private:
    WPoly spoly(size_t i, size_t j) {
        const WPoly &f = basis_[i], &g = basis_[j];
        Monomial l = Monomial::lcm(f[0].mono, g[0].mono);
        Monomial u = f[0].mono.divided_into(l);
        // (u f)/lc(f) - (v g)/lc(g); merge_sub with the empty head handles it
        WPoly uf;
        uf.reserve(f.size());
        Rational finv = 1 / f[0].coeff;
        for (const auto& t : f) uf.push_back({t.mono * u, t.coeff * finv});
        Monomial v = g[0].mono.divided_into(l);
        return merge_sub(uf, 0, Rational(1) / g[0].coeff, v, g, ord_);
    }

    // Gebauer-Moeller update for a newly appended basis element h.
    void update_pairs(size_t h) {
        const Monomial& lth = basis_[h][0].mono;
        std::vector<Pair> cand;
        for (size_t i = 0; i < h; ++i) {
            Monomial l = Monomial::lcm(basis_[i][0].mono, lth);
            cand.push_back({i, h, std::move(l), 0});
        }
        for (auto& p : cand) p.deg = p.lcm.total_degree();

        std::vector<char> drop(cand.size(), 0);
        // M: strictly smaller lcm elsewhere kills a pair; F: first of equals wins
        for (size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b) continue;
                if (cand[b].lcm.divides(cand[a].lcm)) {
                    if (cand[b].lcm != cand[a].lcm || (b < a && !drop[b])) {
                        drop[a] = 1;
                        break;
                    }
                }
            }
        }
        // B: coprime leading terms reduce to zero anyway
        for (size_t a = 0; a < cand.size(); ++a)
            if (!drop[a] && basis_[cand[a].i][0].mono.coprime(lth)) drop[a] = 1;

        // chain criterion on the surviving old pairs
        std::vector<Pair> kept_old;
        for (auto& p : pairs_) {
            bool gone = lth.divides(p.lcm) &&
                        Monomial::lcm(basis_[p.i][0].mono, lth) != p.lcm &&
                        Monomial::lcm(basis_[p.j][0].mono, lth) != p.lcm;
            if (!gone) kept_old.push_back(std::move(p));
        }
        pairs_ = std::move(kept_old);
        for (size_t a = 0; a < cand.size(); ++a)
            if (!drop[a]) pairs_.push_back(std::move(cand[a]));
    }

    const MonomialOrder& ord_;
    Budget& budget_;
    std::vector<WPoly> basis_;
    std::vector<Pair> pairs_;
};

size_t max_width(const std::vector<Polynomial>& ps) {
    size_t w = 0;
    for (const auto& p : ps)
        for (const auto& t : p.terms()) w = std::max(w, t.mono.width());
    return w;
}

} // namespace

bool GroebnerBasis::is_unit() const {
    return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
}

GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& opts) {
    if (order.is_block()) order.validate_for(max_width(gens));

    std::vector<WPoly> start;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        WPoly w = to_wpoly(g, order);
        make_primitive(w);
        start.push_back(std::move(w));
    }
    auto wpoly_less = [&](const WPoly& a, const WPoly& b) {
        size_t n = std::min(a.size(), b.size());
        for (size_t k = 0; k < n; ++k) {
            int c = order.cmp(a[k].mono, b[k].mono);
            if (c != 0) return c < 0;
            if (a[k].coeff != b[k].coeff) return a[k].coeff < b[k].coeff;
        }
        return a.size() < b.size();
    };
    std::sort(start.begin(), start.end(), wpoly_less);
    start.erase(std::unique(start.begin(), start.end()), start.end());

    Budget budget{opts.step_budget};
    Engine eng(order, budget);
    for (auto& w : start) eng.add_generator(std::move(w));
    eng.run();

    GroebnerBasis gb;
    gb.order = order;
    for (auto& w : eng.take_reduced()) gb.polys.push_back(from_wpoly(std::move(w)));
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb,
                       const GroebnerOptions& opts) {
    std::vector<WPoly> basis;
    for (const auto& g : gb.polys) basis.push_back(to_wpoly(g, gb.order));
    Budget budget{opts.step_budget};
    return from_wpoly(reduce_full(to_wpoly(p, gb.order), basis, gb.order, budget));
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).is_zero();
}

std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis& gb, size_t nvars) {
    if (gb.is_unit()) return {};
    std::vector<Monomial> lts;
    for (const auto& g : gb.polys) lts.push_back(g.leading_term().mono);

    // a finite quotient needs a pure power of every variable among the LTs
    std::vector<int32_t> bound(nvars, -1);
    for (const auto& m : lts) {
        VarIdx only = UINT32_MAX;
        bool pure = true;
        for (size_t v = 0; v < m.width(); ++v) {
            if (m.exp(VarIdx(v)) == 0) continue;
            if (only != UINT32_MAX) pure = false;
            only = VarIdx(v);
        }
        if (pure && only != UINT32_MAX && only < nvars) {
            int32_t e = m.exp(only);
            if (bound[only] < 0 || e < bound[only]) bound[only] = e;
        }
    }
    for (size_t v = 0; v < nvars; ++v)
        if (bound[v] < 0)
            throw NotZeroDimensionalError("no pure power leading term in variable " +
                                          std::to_string(v));

    std::vector<Monomial> out;
    std::vector<int32_t> cur(nvars, 0);
    // odometer over the box below the pure-power bounds
    for (;;) {
        Monomial m{std::vector<int32_t>(cur)};
        bool standard = true;
        for (const auto& lt : lts)
            if (lt.divides(m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(std::move(m));
        size_t v = 0;
        while (v < nvars) {
            if (++cur[v] < bound[v]) break;
            cur[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; });
    return out;
}

MilnorResult milnor_number(const Polynomial& w, const Ring& ring,
                           const GroebnerOptions& opts) {
    std::vector<Polynomial> jac;
    for (VarIdx v = 0; v < ring.size(); ++v) jac.push_back(w.derivative(v));
    GroebnerBasis gb = buchberger(std::move(jac), MonomialOrder::grevlex(), opts);
    try {
        return {true, quotient_monomial_basis(gb, ring.size()).size()};
    } catch (const NotZeroDimensionalError&) {
        return {false, 0};
    }
}

size_t ideal_dimension(const std::vector<Polynomial>& gens, size_t nvars,
                       const MonomialOrder& order, const GroebnerOptions& opts) {
    GroebnerBasis gb = buchberger(gens, order, opts);
    if (gb.is_unit()) throw UnitIdealError("dimension of the unit ideal");
    std::vector<uint32_t> supports;
    for (const auto& g : gb.polys) {
        uint32_t mask = 0;
        const Monomial& m = g.leading_term().mono;
        for (size_t v = 0; v < m.width(); ++v)
            if (m.exp(VarIdx(v)) > 0) mask |= 1u << v;
        supports.push_back(mask);
    }
    if (nvars > 24) throw UnsupportedError("dimension supported up to 24 variables");
    // largest variable subset S with no leading monomial supported inside S
    for (size_t k = nvars;; --k) {
        for (uint32_t s = 0; s < (1u << nvars); ++s) {
            if (size_t(__builtin_popcount(s)) != k) continue;
            bool independent = true;
            for (uint32_t sup : supports)
                if ((sup & ~s) == 0) {
                    independent = false;
                    break;
                }
            if (independent) return k;
        }
        if (k == 0) break;
    }
    return 0; // unreachable: the empty set is always independent for proper ideals
}

bool certify_nonvanishing(const Polynomial& q, std::vector<Polynomial> gens,
                          const GroebnerOptions& opts) {
    gens.push_back(q);
    return buchberger(std::move(gens), MonomialOrder::grevlex(), opts).is_unit();
}

bool radical_member(const Polynomial& p, std::vector<Polynomial> gens, size_t nvars,
                    const GroebnerOptions& opts) {
    size_t fresh = std::max(nvars, max_width(gens));
    Polynomial t = Polynomial::variable(VarIdx(fresh));
    gens.push_back(Polynomial::constant(Rational(1)) - t * p);
    return buchberger(std::move(gens), MonomialOrder::grevlex(), opts).is_unit();
}

} // namespace orbicheck
