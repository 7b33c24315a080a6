#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "orbicheck/polynomial.hpp"
#include "orbicheck/ring.hpp"

namespace orbicheck {

// Grammar: sums/differences of products of powers. '^' binds tightest and
// takes a nonnegative integer exponent; no implicit multiplication; rational
// literals are written p/q. Unary +/- are allowed where a term starts.
Polynomial parse_poly(std::string_view text, const Ring& ring);

// Canonical form: grevlex-descending terms, no spaces, exponent 1 and unit
// coefficients left implicit. parse(print(p)) == p and printing is stable.
std::string print_poly(const Polynomial& p, const Ring& ring);

// Identifiers in first-appearance order; used to build rings from raw input.
std::vector<std::string> scan_variables(std::string_view text);

} // namespace orbicheck
