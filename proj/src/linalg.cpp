#include "orbicheck/linalg.hpp"

#include "orbicheck/errors.hpp"

namespace orbicheck {

namespace {

// Row echelon in place; returns pivot column per pivot row.
std::vector<size_t> echelon(QMat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

size_t rank(QMat m) { return echelon(m).size(); }

static std::optional<QVec> solve_impl(QMat a, QVec b, bool require_unique) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw DomainError("rhs length mismatch");
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = echelon(a);
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (require_unique && pivots.size() < cols)
        throw UnderdeterminedError("linear system has free variables");
    QVec x(cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::optional<QVec> solve_unique(QMat a, QVec b) {
    return solve_impl(std::move(a), std::move(b), true);
}

std::optional<QVec> solve_any(QMat a, QVec b) {
    return solve_impl(std::move(a), std::move(b), false);
}

} // namespace orbicheck
