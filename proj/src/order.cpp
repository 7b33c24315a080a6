#include "orbicheck/order.hpp"

#include <set>

namespace orbicheck {

namespace {

int cmp_grevlex_on(const Monomial& a, const Monomial& b,
                   const std::vector<VarIdx>& vars) {
    int64_t da = 0, db = 0;
    for (VarIdx v : vars) {
        da += a.exp(v);
        db += b.exp(v);
    }
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = vars.size(); i-- > 0;) {
        int32_t d = a.exp(vars[i]) - b.exp(vars[i]);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

int cmp_lex_on(const Monomial& a, const Monomial& b,
               const std::vector<VarIdx>& vars) {
    for (VarIdx v : vars) {
        int32_t d = a.exp(v) - b.exp(v);
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

int cmp_lex_full(const Monomial& a, const Monomial& b) {
    size_t n = std::max(a.width(), b.width());
    for (size_t i = 0; i < n; ++i) {
        int32_t d = a.exp(VarIdx(i)) - b.exp(VarIdx(i));
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

} // namespace

MonomialOrder MonomialOrder::block(std::vector<SubOrder> blocks) {
    if (blocks.empty()) throw DomainError("block order needs at least one block");
    MonomialOrder o{Kind::Grevlex};
    o.blocks_ = std::move(blocks);
    return o;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (blocks_.empty()) {
        if (kind_ == Kind::Grevlex) return grevlex_cmp(a, b);
        return cmp_lex_full(a, b);
    }
    for (const auto& blk : blocks_) {
        int c = blk.kind == Kind::Grevlex ? cmp_grevlex_on(a, b, blk.vars)
                                          : cmp_lex_on(a, b, blk.vars);
        if (c != 0) return c;
    }
    return 0;
}

void MonomialOrder::validate_for(size_t nvars) const {
    if (blocks_.empty()) return;
    std::set<VarIdx> seen;
    for (const auto& blk : blocks_)
        for (VarIdx v : blk.vars) {
            if (v >= nvars) throw DomainError("block order names variable outside ring");
            if (!seen.insert(v).second)
                throw DomainError("block order repeats a variable");
        }
    if (seen.size() != nvars)
        throw DomainError("block order must cover every ring variable");
}

} // namespace orbicheck
