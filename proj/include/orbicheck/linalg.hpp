#pragma once
#include <optional>
#include <vector>

#include "orbicheck/rational.hpp"

namespace orbicheck {

// Small dense exact linear algebra over the rationals; plain fraction-free
// needs don't arise at these sizes, so ordinary Gaussian elimination is used.
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>; // row major, rectangular

size_t rank(QMat m);

// Solves A x = b. Returns nullopt when inconsistent; throws
// UnderdeterminedError when consistent but not unique.
std::optional<QVec> solve_unique(QMat a, QVec b);

// Any solution of A x = b (free variables set to 0), or nullopt.
std::optional<QVec> solve_any(QMat a, QVec b);

} // namespace orbicheck
