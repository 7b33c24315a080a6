#include "orbicheck/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "orbicheck/errors.hpp"

namespace orbicheck {

void UnivariatePoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePoly::UnivariatePoly(std::vector<Rational> ascending) : c_(std::move(ascending)) {
    trim();
}

UnivariatePoly::UnivariatePoly(std::initializer_list<long> ascending) {
    c_.reserve(ascending.size());
    for (long v : ascending) c_.emplace_back(v);
    trim();
}

Rational UnivariatePoly::coeff(int k) const {
    if (k < 0 || k >= (int)c_.size()) return Rational(0);
    return c_[k];
}

Rational UnivariatePoly::lc() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (c_.empty() || o.c_.empty()) return UnivariatePoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::scaled(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v *= s;
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::monic() const {
    if (c_.empty()) throw DomainError("monic normalization of the zero polynomial");
    return scaled(Rational(1) / c_.back());
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return UnivariatePoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational((long)i);
    return UnivariatePoly(std::move(r));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& d) const {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Rational> rem(c_);
    int dn = d.degree();
    if ((int)c_.size() - 1 < dn) return {UnivariatePoly(), *this};
    std::vector<Rational> quot(c_.size() - dn, Rational(0));
    Rational inv = Rational(1) / d.c_.back();
    for (int k = (int)rem.size() - 1; k >= dn; --k) {
        if (rem[k] == 0) continue;
        Rational q = rem[k] * inv;
        quot[k - dn] = q;
        for (int j = 0; j <= dn; ++j) rem[k - dn + j] -= q * d.c_[j];
    }
    return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

Rational UnivariatePoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::complex<long double> UnivariatePoly::eval(const std::complex<long double>& x) const {
    std::complex<long double> acc(0.0L, 0.0L);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + std::complex<long double>((long double)c_[i].get_d(), 0.0L);
    return acc;
}

std::string UnivariatePoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = (int)c_.size() - 1; k >= 0; --k) {
        if (c_[k] == 0) continue;
        Rational a = c_[k];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && k > 0;
        if (!unit) os << a.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UnivariatePoly uni_gcd(UnivariatePoly a, UnivariatePoly b) {
    while (!b.is_zero()) {
        UnivariatePoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

namespace {

// ----- integer polynomial layer (coefficients ascending, trimmed) -----

using ZV = std::vector<Integer>;

void ztrim(ZV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZV& a) { return (int)a.size() - 1; }

Integer zgcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// scale input so the result has content one and positive leading coefficient
ZV zprimitive(ZV a, Integer* content_out = nullptr) {
    ztrim(a);
    if (a.empty()) throw DomainError("primitive part of zero");
    Integer g = 0;
    for (const auto& v : a) g = zgcd(g, v);
    if (a.back() < 0) g = -g;
    for (auto& v : a) v /= g;
    if (content_out) *content_out = g;
    return a;
}

ZV zmul(const ZV& a, const ZV& b) {
    if (a.empty() || b.empty()) return {};
    ZV r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division over the integers; false if not exact
bool zdivide_exact(const ZV& num, const ZV& den, ZV& quot) {
    if (den.empty()) return false;
    ZV rem = num;
    ztrim(rem);
    if (rem.empty()) { quot.clear(); return true; }
    int dn = zdeg(den);
    if (zdeg(rem) < dn) return false;
    quot.assign(rem.size() - dn, Integer(0));
    for (int k = zdeg(rem); k >= dn; --k) {
        if (rem[k] == 0) continue;
        if (rem[k] % den.back() != 0) return false;
        Integer q = rem[k] / den.back();
        quot[k - dn] = q;
        for (int j = 0; j <= dn; ++j) rem[k - dn + j] -= q * den[j];
    }
    for (const auto& v : rem)
        if (v != 0) return false;
    return true;
}

UnivariatePoly z_to_uni(const ZV& a) {
    std::vector<Rational> c;
    c.reserve(a.size());
    for (const auto& v : a) c.emplace_back(v);
    return UnivariatePoly(std::move(c));
}

// ----- arithmetic mod a small odd prime p -----

using FpV = std::vector<int64_t>; // coefficients in [0, p)

void fptrim(FpV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fpdeg(const FpV& a) { return (int)a.size() - 1; }

int64_t fpinv(int64_t a, int64_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return ((t % p) + p) % p;
}

FpV fpmul(const FpV& a, const FpV& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpV r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fptrim(r);
    return r;
}

FpV fpsub(const FpV& a, const FpV& b, int64_t p) {
    FpV r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    fptrim(r);
    return r;
}

FpV fpmonic(FpV a, int64_t p) {
    fptrim(a);
    if (a.empty()) return a;
    int64_t inv = fpinv(a.back(), p);
    for (auto& v : a) v = v * inv % p;
    return a;
}

std::pair<FpV, FpV> fpdivmod(FpV a, const FpV& b, int64_t p) {
    fptrim(a);
    int db = fpdeg(b);
    if (fpdeg(a) < db) return {{}, std::move(a)};
    FpV q(a.size() - db, 0);
    int64_t inv = fpinv(b.back(), p);
    for (int k = fpdeg(a); k >= db; --k) {
        int64_t c = a[k] * inv % p;
        if (c != 0) {
            q[k - db] = c;
            for (int j = 0; j <= db; ++j) a[k - db + j] = ((a[k - db + j] - c * b[j]) % p + p) % p;
        }
        a.pop_back();
    }
    fptrim(a);
    return {std::move(q), std::move(a)};
}

FpV fprem(FpV a, const FpV& b, int64_t p) { return fpdivmod(std::move(a), b, p).second; }

FpV fpgcd(FpV a, FpV b, int64_t p) {
    fptrim(a);
    fptrim(b);
    while (!b.empty()) {
        FpV r = fprem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fpmonic(std::move(a), p);
}

FpV fpderiv(const FpV& a, int64_t p) {
    if (a.size() <= 1) return {};
    FpV r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (int64_t)(i % (size_t)p) * a[i] % p;
    fptrim(r);
    return r;
}

FpV fppowmod(FpV base, Integer e, const FpV& m, int64_t p) {
    FpV r{1};
    base = fprem(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fprem(fpmul(r, base, p), m, p);
        e >>= 1;
        if (e > 0) base = fprem(fpmul(base, base, p), m, p);
    }
    return r;
}

// equal-degree splitting of a monic product of degree-d irreducibles, p odd
void fp_edf(const FpV& g, int d, int64_t p, std::mt19937_64& rng, std::vector<FpV>& out) {
    if (fpdeg(g) == d) {
        out.push_back(g);
        return;
    }
    Integer pd(1);
    for (int i = 0; i < d; ++i) pd *= p;
    Integer expo = (pd - 1) / 2;
    while (true) {
        FpV r(fpdeg(g), 0);
        for (auto& v : r) v = (int64_t)(rng() % (uint64_t)p);
        fptrim(r);
        if (fpdeg(r) < 1) continue;
        FpV e = fppowmod(std::move(r), expo, g, p);
        if (e.empty()) continue;
        e[0] = ((e[0] - 1) % p + p) % p;
        fptrim(e);
        FpV t = fpgcd(std::move(e), g, p);
        if (fpdeg(t) > 0 && fpdeg(t) < fpdeg(g)) {
            auto qr = fpdivmod(g, t, p);
            fp_edf(t, d, p, rng, out);
            fp_edf(fpmonic(std::move(qr.first), p), d, p, rng, out);
            return;
        }
    }
}

// monic squarefree f mod p into monic irreducibles, distinct-degree first
std::vector<FpV> fp_factor(const FpV& f, int64_t p, std::mt19937_64& rng) {
    std::vector<FpV> out;
    FpV cur = f;
    FpV h{0, 1}; // x
    int d = 0;
    while (fpdeg(cur) > 0) {
        ++d;
        if (2 * d > fpdeg(cur)) {
            out.push_back(cur);
            break;
        }
        h = fppowmod(std::move(h), Integer((long)p), cur, p);
        FpV hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = ((hx[1] - 1) % p + p) % p;
        fptrim(hx);
        FpV g = fpgcd(std::move(hx), cur, p);
        if (fpdeg(g) > 0) {
            fp_edf(g, d, p, rng, out);
            cur = fpmonic(fpdivmod(std::move(cur), g, p).first, p);
            h = fprem(std::move(h), cur, p);
        }
    }
    return out;
}

// ----- arithmetic mod an integer modulus (Hensel stage) -----

Integer mreduce(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

ZV mmul(const ZV& a, const ZV& b, const Integer& m) {
    ZV r = zmul(a, b);
    for (auto& v : r) v = mreduce(v, m);
    ztrim(r);
    return r;
}

ZV msub(const ZV& a, const ZV& b, const Integer& m) {
    ZV r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    for (auto& v : r) v = mreduce(v, m);
    ztrim(r);
    return r;
}

// symmetric representative in (-m/2, m/2]
ZV msym(ZV a, const Integer& m) {
    Integer half = m / 2;
    for (auto& v : a) {
        v = mreduce(v, m);
        if (v > half) v -= m;
    }
    ztrim(a);
    return a;
}

int64_t z_to_fp(const Integer& v, int64_t p) {
    return mpz_class(mreduce(v, Integer((long)p))).get_si();
}

// try a few primes where f stays squarefree, keep the sparsest factorization
std::vector<FpV> modular_factorization(const ZV& f, int64_t& prime_out, std::mt19937_64& rng) {
    static const std::vector<int64_t> primes = [] {
        std::vector<int64_t> ps;
        for (int64_t n = 3; n < 2000; n += 2) {
            bool ok = true;
            for (int64_t d = 3; d * d <= n; d += 2)
                if (n % d == 0) { ok = false; break; }
            if (ok) ps.push_back(n);
        }
        return ps;
    }();

    std::vector<FpV> best;
    int64_t best_p = 0;
    int tried = 0;
    for (int64_t p : primes) {
        if (f.back() % p == 0) continue;
        FpV fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) fp[i] = z_to_fp(f[i], p);
        fptrim(fp);
        if (fpdeg(fp) != zdeg(f)) continue;
        FpV fm = fpmonic(std::move(fp), p);
        if (fpdeg(fpgcd(fm, fpderiv(fm, p), p)) != 0) continue;
        auto fac = fp_factor(fm, p, rng);
        if (best.empty() || fac.size() < best.size()) {
            best = std::move(fac);
            best_p = p;
        }
        if (++tried >= 3 || best.size() == 1) break;
    }
    if (best.empty()) throw DomainError("no usable prime found for modular factorization");
    prime_out = best_p;
    return best;
}

// factor a primitive squarefree integer polynomial with positive leading
// coefficient into primitive irreducible integer polynomials
std::vector<ZV> z_factor_squarefree(const ZV& f) {
    if (zdeg(f) <= 1) return {f};

    std::mt19937_64 rng(0xc0ffee5eedULL);
    int64_t p = 0;
    std::vector<FpV> modular = modular_factorization(f, p, rng);
    if (modular.size() == 1) return {f};

    // bound on any coefficient of lc * (monic true factor)
    Integer maxc = 0;
    for (const auto& v : f) maxc = std::max(maxc, Integer(abs(v)));
    int n = zdeg(f);
    Integer bound = (Integer(1) << n) * maxc * abs(f.back());
    {
        Integer s = 1;
        while (s * s < Integer(n + 1)) ++s;
        bound *= s;
    }
    Integer target = 2 * bound + 1;
    Integer P((long)p);
    while (P < target) P *= (long)p;

    // monic image of f mod P
    Integer lcinv;
    if (mpz_invert(lcinv.get_mpz_t(), Integer(f.back()).get_mpz_t(), P.get_mpz_t()) == 0)
        throw DomainError("leading coefficient not invertible at the chosen prime");
    ZV F(f.size());
    for (size_t i = 0; i < f.size(); ++i) F[i] = mreduce(f[i] * lcinv, P);
    ztrim(F);

    // Bezout data mod p: bez[i] inverts prod_{j != i} g_j modulo (g_i, p)
    size_t r = modular.size();
    std::vector<FpV> bez(r);
    for (size_t i = 0; i < r; ++i) {
        FpV prod{1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = fprem(fpmul(prod, modular[j], p), modular[i], p);
        FpV r0 = modular[i], r1 = prod;
        FpV t0{}, t1{1};
        while (!r1.empty()) {
            auto qr = fpdivmod(std::move(r0), r1, p);
            r0 = std::move(r1);
            r1 = std::move(qr.second);
            FpV nt = fpsub(t0, fpmul(qr.first, t1, p), p);
            t0 = std::move(t1);
            t1 = std::move(nt);
        }
        if (fpdeg(r0) != 0) throw DomainError("modular factors not coprime");
        int64_t inv = fpinv(r0[0], p);
        for (auto& v : t0) v = v * inv % p;
        fptrim(t0);
        bez[i] = fprem(std::move(t0), modular[i], p);
    }

    // linear Hensel lift, all factors at once
    std::vector<ZV> G(r);
    for (size_t i = 0; i < r; ++i) {
        G[i].assign(modular[i].size(), Integer(0));
        for (size_t k = 0; k < modular[i].size(); ++k) G[i][k] = modular[i][k];
    }
    Integer m((long)p);
    while (m < P) {
        Integer mp = m * (long)p;
        ZV prod{Integer(1)};
        for (const auto& g : G) prod = mmul(prod, g, mp);
        ZV diff = msub(F, prod, mp); // coefficients divisible by m
        FpV e(diff.size(), 0);
        for (size_t k = 0; k < diff.size(); ++k) e[k] = z_to_fp(diff[k] / m, p);
        fptrim(e);
        for (size_t i = 0; i < r; ++i) {
            FpV gi(G[i].size());
            for (size_t k = 0; k < G[i].size(); ++k) gi[k] = z_to_fp(G[i][k], p);
            FpV delta = fprem(fpmul(e, bez[i], p), gi, p);
            if (G[i].size() < delta.size() + 1) G[i].resize(delta.size() + 1, Integer(0));
            for (size_t k = 0; k < delta.size(); ++k) G[i][k] = mreduce(G[i][k] + m * delta[k], mp);
        }
        m = mp;
    }
    P = m;

    // subset recombination, increasing cardinality
    std::vector<ZV> out;
    ZV rem = f;
    std::vector<ZV> pool = std::move(G);
    size_t s = 1;
    while (2 * s <= pool.size()) {
        bool split = false;
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZV cand{Integer(rem.back())};
            for (size_t i : idx) cand = mmul(cand, pool[i], P);
            cand = msym(std::move(cand), P);
            if (!cand.empty() && zdeg(cand) >= 1) {
                cand = zprimitive(std::move(cand));
                ZV quot;
                if (zdivide_exact(rem, cand, quot)) {
                    out.push_back(cand);
                    rem = zprimitive(std::move(quot));
                    std::vector<ZV> next;
                    for (size_t i = 0; i < pool.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            next.push_back(std::move(pool[i]));
                    pool = std::move(next);
                    split = true;
                    break;
                }
            }
            size_t k = s;
            while (k > 0 && idx[k - 1] == pool.size() - s + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!split) ++s;
    }
    if (zdeg(rem) >= 1) out.push_back(rem);
    return out;
}

// Yun's decomposition of a monic rational polynomial into monic squarefree
// parts with multiplicities
std::vector<std::pair<UnivariatePoly, int>> yun_squarefree(const UnivariatePoly& f) {
    std::vector<std::pair<UnivariatePoly, int>> parts;
    UnivariatePoly df = f.derivative();
    UnivariatePoly g = uni_gcd(f, df);
    if (g.degree() == 0) {
        parts.emplace_back(f, 1);
        return parts;
    }
    auto exact = [](const UnivariatePoly& num, const UnivariatePoly& den) {
        auto qr = num.divmod(den);
        if (!qr.second.is_zero()) throw DomainError("inexact division in squarefree split");
        return qr.first;
    };
    UnivariatePoly b = exact(f, g);
    UnivariatePoly c = exact(df, g);
    UnivariatePoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UnivariatePoly pi = uni_gcd(b, d);
        if (pi.degree() > 0) parts.emplace_back(pi.monic(), i);
        b = exact(b, pi);
        c = exact(d, pi);
        d = c - b.derivative();
        ++i;
    }
    return parts;
}

} // namespace

FactorizationResult factor_univariate(const UnivariatePoly& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    if (f.degree() > 64) throw UnsupportedError("factorization supported up to degree 64");
    FactorizationResult res;
    res.unit = f.lc();
    if (f.degree() == 0) return res;

    auto parts = yun_squarefree(f.monic());
    for (const auto& [part, mult] : parts) {
        // integer primitive image of the monic part
        Integer den(1);
        for (const auto& cc : part.coeffs()) {
            Integer d = cc.get_den();
            den = den / zgcd(den, d) * d;
        }
        ZV zp(part.coeffs().size());
        for (size_t k = 0; k < zp.size(); ++k) {
            Rational lifted = part.coeffs()[k] * Rational(den);
            zp[k] = lifted.get_num();
        }
        Integer content;
        zp = zprimitive(std::move(zp), &content);
        // part = (content/den) * zp and the part is monic, so the scale joins the unit
        Rational scale(content, den);
        for (int t = 0; t < mult; ++t) res.unit *= scale;
        for (auto& irr : z_factor_squarefree(zp)) res.factors.emplace_back(z_to_uni(irr), mult);
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int k = a.first.degree(); k >= 0; --k) {
            Rational ca = a.first.coeff(k), cb = b.first.coeff(k);
            if (ca != cb) return ca < cb;
        }
        return a.second < b.second;
    });
    return res;
}

std::vector<NumericRoot> roots_numeric(const UnivariatePoly& f, long double eps) {
    if (f.degree() < 1) throw DomainError("root finding needs a nonconstant polynomial");
    if (uni_gcd(f, f.derivative()).degree() != 0)
        throw DomainError("root finding expects a squarefree input");

    int n = f.degree();
    UnivariatePoly fm = f.monic();
    std::vector<long double> a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = (long double)fm.coeff(k).get_d();

    auto horner = [&](const std::complex<long double>& z, std::complex<long double>& val,
                      std::complex<long double>& der) {
        val = a[n];
        der = 0;
        for (int k = n - 1; k >= 0; --k) {
            der = der * z + val;
            val = val * z + a[k];
        }
    };

    long double radius = 0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[k]));
    radius = 1 + radius;

    std::vector<std::complex<long double>> z(n);
    for (int k = 0; k < n; ++k) {
        long double th = 2 * 3.14159265358979323846L * k / n + 0.7L;
        z[k] = std::polar(0.5L * radius + 0.3L, th);
    }

    const int budget = 600;
    bool settled = false;
    for (int it = 0; it < budget && !settled; ++it) {
        long double maxstep = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<long double> val, der;
            horner(z[i], val, der);
            if (std::abs(der) == 0.0L) {
                z[i] += std::complex<long double>(1e-6L, 1e-6L);
                maxstep = 1;
                continue;
            }
            std::complex<long double> w = val / der;
            std::complex<long double> S = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                std::complex<long double> d = z[i] - z[j];
                if (std::abs(d) < 1e-30L) d = std::complex<long double>(1e-30L, 0.0L);
                S += 1.0L / d;
            }
            std::complex<long double> denom = 1.0L - w * S;
            std::complex<long double> step = (std::abs(denom) < 1e-30L) ? w : w / denom;
            z[i] -= step;
            maxstep = std::max(maxstep, std::abs(step) / (1 + std::abs(z[i])));
        }
        if (maxstep < 1e-18L) settled = true;
    }

    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < 3; ++t) {
            std::complex<long double> val, der;
            horner(z[i], val, der);
            if (std::abs(der) == 0.0L) break;
            z[i] -= val / der;
        }
    }

    std::vector<NumericRoot> out(n);
    for (int i = 0; i < n; ++i) {
        std::complex<long double> val, der;
        horner(z[i], val, der);
        out[i].value = z[i];
        out[i].residual = std::abs(val);
        if (out[i].residual > eps)
            throw ConvergenceError(
                "root iteration exhausted its budget before reaching the tolerance");
    }
    for (int i = 0; i < n; ++i) {
        long double sep = -1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            long double d = std::abs(z[i] - z[j]);
            if (sep < 0 || d < sep) sep = d;
        }
        out[i].separation = sep < 0 ? 0 : sep;
    }
    std::sort(out.begin(), out.end(), [](const NumericRoot& l, const NumericRoot& r) {
        if (std::abs(l.value.real() - r.value.real()) > 1e-9L) return l.value.real() < r.value.real();
        return l.value.imag() < r.value.imag();
    });
    return out;
}

} // namespace orbicheck
