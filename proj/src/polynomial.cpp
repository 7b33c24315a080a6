#include "orbicheck/polynomial.hpp"

#include <algorithm>

namespace orbicheck {

namespace {
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_cmp(a, b) < 0;
    }
};
} // namespace

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({Monomial(), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(VarIdx i, int32_t k) {
    if (k == 0) return constant(Rational(1));
    Polynomial p;
    p.terms_.push_back({Monomial::var(i, k), Rational(1)});
    return p;
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::map<Monomial, Rational, GrevlexLess> acc;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
        if (!fresh) {
            it->second += t.coeff;
            if (it->second == 0) acc.erase(it);
        }
    }
    Polynomial p;
    p.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        p.terms_.push_back({it->first, it->second});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    // merge of two descending term lists
    Polynomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = grevlex_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
    std::map<Monomial, Rational, GrevlexLess> acc;
    for (const auto& a : small.terms_)
        for (const auto& b : big.terms_) {
            Monomial m = a.mono * b.mono;
            Rational c = a.coeff * b.coeff;
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) acc.erase(it);
            }
        }
    Polynomial r;
    r.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        r.terms_.push_back({it->first, it->second});
    return r;
}

Polynomial Polynomial::pow(uint32_t k) const {
    Polynomial r = constant(Rational(1));
    Polynomial base = *this;
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

int32_t Polynomial::degree_in(VarIdx v) const {
    int32_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.exp(v));
    return d;
}

bool Polynomial::contains_var(VarIdx v) const {
    for (const auto& t : terms_)
        if (t.mono.exp(v) > 0) return true;
    return false;
}

std::vector<VarIdx> Polynomial::support_vars() const {
    size_t w = 0;
    for (const auto& t : terms_) w = std::max(w, t.mono.width());
    std::vector<VarIdx> out;
    for (VarIdx v = 0; v < w; ++v)
        if (contains_var(v)) out.push_back(v);
    return out;
}

Polynomial Polynomial::derivative(VarIdx v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int32_t e = t.mono.exp(v);
        if (e == 0) continue;
        Monomial m = Monomial::var(v, 1).divided_into(t.mono);
        out.push_back({std::move(m), t.coeff * e});
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::substituted(VarIdx v, const Polynomial& by) const {
    Polynomial result;
    for (const auto& t : terms_) {
        int32_t e = t.mono.exp(v);
        Polynomial piece =
            monomial(e ? Monomial::var(v, e).divided_into(t.mono) : t.mono, t.coeff);
        if (e) piece *= by.pow(uint32_t(e));
        result += piece;
    }
    return result;
}

std::complex<long double>
Polynomial::eval(const std::vector<std::complex<long double>>& point) const {
    using C = std::complex<long double>;
    C sum = 0;
    for (const auto& t : terms_) {
        C prod = to_longdouble(t.coeff);
        for (size_t v = 0; v < t.mono.width(); ++v) {
            int32_t e = t.mono.exp(VarIdx(v));
            if (e == 0) continue;
            if (v >= point.size()) throw DomainError("evaluation point too short");
            C base = point[v], acc = 1;
            for (int32_t k = 0; k < e; ++k) acc *= base;
            prod *= acc;
        }
        sum += prod;
    }
    return sum;
}

Rational Polynomial::content() const {
    if (is_zero()) throw DomainError("content of zero polynomial");
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return {};
    return scaled(Rational(1) / content());
}

Rational weighted_degree(const Monomial& m, const Ring& ring) {
    Rational d(0);
    for (size_t i = 0; i < m.width(); ++i) {
        int32_t e = m.exp(VarIdx(i));
        if (e == 0) continue;
        if (i >= ring.size()) throw DomainError("monomial wider than ring");
        d += ring.weight(VarIdx(i)) * e;
    }
    return d;
}

Rational weighted_degree(const Polynomial& p, const Ring& ring) {
    if (p.is_zero()) throw DomainError("weighted degree of zero polynomial");
    Rational best = weighted_degree(p.terms()[0].mono, ring);
    for (size_t i = 1; i < p.terms().size(); ++i)
        best = std::max(best, weighted_degree(p.terms()[i].mono, ring));
    return best;
}

bool is_quasi_homogeneous(const Polynomial& p, const Ring& ring, const Rational& d) {
    for (const auto& t : p.terms())
        if (weighted_degree(t.mono, ring) != d) return false;
    return true;
}

Polynomial euler_apply(const Polynomial& p, const Ring& ring) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        Rational f(0);
        for (size_t i = 0; i < t.mono.width(); ++i)
            f += ring.weight(VarIdx(i)) * t.mono.exp(VarIdx(i));
        f /= 2;
        if (f != 0) out.push_back({t.mono, t.coeff * f});
    }
    return Polynomial::from_terms(std::move(out));
}

namespace {
void enumerate_rec(const Ring& ring, const std::vector<VarIdx>& vars, size_t k,
                   Monomial cur, const Rational& remaining,
                   const std::map<VarIdx, int32_t>& mins,
                   std::vector<Monomial>& out) {
    if (k == vars.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    VarIdx v = vars[k];
    const Rational& w = ring.weight(v);
    auto it = mins.find(v);
    int32_t lo = it == mins.end() ? 0 : it->second;
    for (int32_t e = lo;; ++e) {
        Rational used = w * e;
        if (used > remaining) break;
        enumerate_rec(ring, vars, k + 1, e ? cur * Monomial::var(v, e) : cur,
                      remaining - used, mins, out);
    }
}
} // namespace

std::vector<Monomial>
monomials_of_degree(const Ring& ring, const Rational& d,
                    const std::map<VarIdx, int32_t>& min_exponents) {
    if (d < 0) return {};
    std::vector<VarIdx> vars;
    for (VarIdx v = 0; v < ring.size(); ++v)
        if (!ring.is_param(v)) vars.push_back(v);
    for (const auto& [v, e] : min_exponents) {
        if (v >= ring.size()) throw DomainError("minimum exponent for unknown variable");
        if (e < 0) throw DomainError("negative minimum exponent");
        if (ring.is_param(v) && e > 0)
            throw DomainError("minimum exponent on a parameter variable");
    }
    std::vector<Monomial> out;
    enumerate_rec(ring, vars, 0, Monomial(), d, min_exponents, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
    return out;
}

} // namespace orbicheck
