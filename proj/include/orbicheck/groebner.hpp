#pragma once
#include <vector>

#include "orbicheck/order.hpp"
#include "orbicheck/polynomial.hpp"
#include "orbicheck/ring.hpp"

namespace orbicheck {

struct GroebnerOptions {
    // counts individual reduction subtractions; blown budgets throw
    // ResourceLimitError rather than returning a partial basis
    uint64_t step_budget = 10'000'000;
};

// Reduced Groebner basis: monic, interreduced, sorted by decreasing leading
// term. For a fixed ideal and order this representation is unique, so any
// permutation of the input generators produces an identical object.
struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial> polys;

    bool is_unit() const;
    bool operator==(const GroebnerBasis& o) const { return polys == o.polys; }
};

GroebnerBasis buchberger(std::vector<Polynomial> gens,
                         const MonomialOrder& order = MonomialOrder::grevlex(),
                         const GroebnerOptions& opts = {});

// Full normal form: no remaining term is divisible by a basis leading term.
// Linear in its argument (no rescaling), so it descends to the quotient.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb,
                       const GroebnerOptions& opts = {});

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

// Monomials outside the leading-term ideal, ascending; throws
// NotZeroDimensionalError when some variable has no pure-power leading term.
std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis& gb, size_t nvars);

struct MilnorResult {
    bool finite;
    uint64_t value; // meaningful only when finite
};

// Dimension of the Jacobian quotient algebra of w over the ring's variables.
MilnorResult milnor_number(const Polynomial& w, const Ring& ring,
                           const GroebnerOptions& opts = {});

// Krull dimension of the quotient by a proper ideal (unit ideals throw),
// computed from maximal independent variable sets of the leading-term ideal.
size_t ideal_dimension(const std::vector<Polynomial>& gens, size_t nvars,
                       const MonomialOrder& order = MonomialOrder::grevlex(),
                       const GroebnerOptions& opts = {});

// True iff q vanishes nowhere on the vanishing locus of gens (over the
// algebraic closure): the combined ideal is the unit ideal.
bool certify_nonvanishing(const Polynomial& q, std::vector<Polynomial> gens,
                          const GroebnerOptions& opts = {});

// True iff p vanishes everywhere on the vanishing locus of gens; localizes
// with a fresh variable at index nvars.
bool radical_member(const Polynomial& p, std::vector<Polynomial> gens,
                    size_t nvars, const GroebnerOptions& opts = {});

} // namespace orbicheck
