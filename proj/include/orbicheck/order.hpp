#pragma once
#include <vector>

#include "orbicheck/monomial.hpp"

namespace orbicheck {

// Term orders: graded reverse lexicographic, lexicographic, and block orders
// built from those. A block order compares block by block; inside a block
// only that block's variables are consulted, in the listed sequence.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex };

    struct SubOrder {
        Kind kind;
        std::vector<VarIdx> vars;
    };

    static MonomialOrder grevlex() { return MonomialOrder{Kind::Grevlex}; }
    static MonomialOrder lex() { return MonomialOrder{Kind::Lex}; }
    static MonomialOrder block(std::vector<SubOrder> blocks);

    bool is_block() const { return !blocks_.empty(); }
    const std::vector<SubOrder>& blocks() const { return blocks_; }
    Kind kind() const { return kind_; }

    // +1 if a > b, -1 if a < b, 0 if equal.
    int cmp(const Monomial& a, const Monomial& b) const;

    // Block orders must cover each of nvars variables exactly once.
    void validate_for(size_t nvars) const;

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Grevlex;
    std::vector<SubOrder> blocks_;
};

} // namespace orbicheck
