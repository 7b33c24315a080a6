#include "orbicheck/monomial.hpp"

#include <algorithm>

namespace orbicheck {

namespace {
constexpr int32_t kMaxExp = INT32_MAX;
}

Monomial::Monomial(std::vector<int32_t> exps) : e_(std::move(exps)) {
    for (int32_t e : e_)
        if (e < 0) throw DomainError("negative exponent");
    trim();
}

Monomial Monomial::var(VarIdx i, int32_t k) {
    if (k < 0) throw DomainError("negative exponent");
    Monomial m(size_t(i) + 1);
    m.e_[i] = k;
    m.trim();
    return m;
}

void Monomial::trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

int64_t Monomial::total_degree() const {
    int64_t d = 0;
    for (int32_t e : e_) d += e;
    return d;
}

bool Monomial::is_one() const { return e_.empty(); }

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.resize(std::max(e_.size(), o.e_.size()), 0);
    for (size_t i = 0; i < r.e_.size(); ++i) {
        int64_t s = int64_t(exp(VarIdx(i))) + int64_t(o.exp(VarIdx(i)));
        if (s > kMaxExp) throw OverflowError("monomial exponent overflow");
        r.e_[i] = int32_t(s);
    }
    r.trim();
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.exp(VarIdx(i))) return false;
    return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
    Monomial r;
    r.e_.resize(std::max(e_.size(), o.e_.size()), 0);
    for (size_t i = 0; i < r.e_.size(); ++i) {
        int32_t d = o.exp(VarIdx(i)) - exp(VarIdx(i));
        if (d < 0) throw DomainError("monomial division not exact");
        r.e_[i] = d;
    }
    r.trim();
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    size_t n = std::min(e_.size(), o.e_.size());
    for (size_t i = 0; i < n; ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e_.resize(std::max(a.e_.size(), b.e_.size()), 0);
    for (size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] = std::max(a.exp(VarIdx(i)), b.exp(VarIdx(i)));
    r.trim();
    return r;
}

bool Monomial::operator==(const Monomial& o) const { return e_ == o.e_; }

int grevlex_cmp(const Monomial& a, const Monomial& b) {
    int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    size_t n = std::max(a.width(), b.width());
    for (size_t i = n; i-- > 0;) {
        int32_t d = a.exp(VarIdx(i)) - b.exp(VarIdx(i));
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

size_t MonomialHash::operator()(const Monomial& m) const {
    size_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < m.width(); ++i) {
        h ^= size_t(uint32_t(m.exp(VarIdx(i)))) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace orbicheck
