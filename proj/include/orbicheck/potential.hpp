#pragma once
#include <optional>
#include <string>
#include <vector>

#include "orbicheck/groebner.hpp"
#include "orbicheck/polynomial.hpp"
#include "orbicheck/ring.hpp"

namespace orbicheck {

// Integer weight data (a_1,...,a_n; h); the variable degrees are 2*a_i/h.
struct WeightSystem {
    std::vector<int64_t> a;
    int64_t h = 0;
};

struct ValidationReport {
    bool homogeneous = false;
    MilnorResult milnor{false, 0};
    bool pass = false;
};

// pass iff degree-2 quasi-homogeneous under the ring weights with an
// isolated critical point (finite Milnor number)
ValidationReport validate_potential(const Polynomial& p, const Ring& ring,
                                    const GroebnerOptions& opts = {});

struct Potential {
    Polynomial poly;
    Ring ring;
    std::string name;
};

// Validates and packages; throws DomainError when validation fails.
Potential make_potential(Polynomial poly, Ring ring, std::string name = "");

// Sum of (1 - weight) over the non-parameter variables.
Rational central_charge(const Ring& ring);
Rational central_charge(const Potential& p);

// Unique weights making every monomial of p have degree d; the returned ring
// keeps the names of the input ring. Throws UnderdeterminedError when the
// exponent matrix has a nontrivial kernel, InconsistentError when no exact
// solution exists, DomainError when a solved weight is not positive.
Ring infer_weights(const Polynomial& p, const Ring& names, const Rational& d);

// Row i holds the exponent vector of the i-th monomial in canonical term
// order. Requires as many monomials as variables (NotSquareError otherwise).
using ExponentMatrix = std::vector<std::vector<int64_t>>;
ExponentMatrix exponent_matrix(const Polynomial& p, size_t nvars);

bool exponent_matrix_invertible(const ExponentMatrix& e);

// Monomials rebuilt from the columns of the exponent matrix, coefficients
// carried along termwise. Terms are paired with the variables owning them
// (each variable's root power or pointer), which reverses the arrows of the
// shape graph and makes the transposition an exact involution.
Polynomial bh_transpose(const Polynomial& p, size_t nvars);

// Square exponent matrix with nonzero determinant, and both p and its
// transpose validate as potentials. Weights for both sides are inferred
// from degree-2 homogeneity; the ring supplies names and arity only.
bool is_invertible(const Polynomial& p, const Ring& ring,
                   const GroebnerOptions& opts = {});

// Root/pointer graph shapes on up to three variables. Roots are pure powers
// x^a (a >= 2); a pointer x^a*y sends x to y. The seven three-variable
// shapes, by arrow pattern:
//   I    three roots
//   II   one variable points at a root
//   III  two-cycle plus a root
//   IV   chain of two arrows into a root
//   V    three-cycle
//   VI   two variables point at the same root
//   VII  two-cycle with the third variable pointing into it
// Two-variable polynomials use I-III (no arrows, one arrow, two-cycle).
enum class ShapeTag { I, II, III, IV, V, VI, VII };

const char* shape_name(ShapeTag t);

struct ShapeCondition {
    std::string description;
    bool satisfied = false;
};

struct ShapeReport {
    ShapeTag tag;
    // Divisibility constraints attached to shapes VI and VII; empty for I-V.
    std::vector<ShapeCondition> conditions;

    bool conditions_ok() const;
};

// Classifies by exhaustive search over assignments of monomials to variables.
// Throws NotRepresentableError when no root/pointer reading covers every
// variable, UnsupportedArityError past three variables. Coefficients are
// ignored; the input need not have finite Milnor number (shapes VI and VII
// with violated conditions never do).
ShapeReport classify_shape(const Polynomial& p, const Ring& ring);

struct CatalogEntry {
    std::string name;
    std::vector<Potential> potentials;
    WeightSystem weights;
    std::optional<std::string> strange_dual;
};

// The fourteen exceptional unimodular singularities with all their listed
// potential forms, embedded from data/catalog.json at build time.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

// Rebuilds p with variable i renamed to perm[i].
Polynomial permute_variables(const Polynomial& p, const std::vector<VarIdx>& perm);

// True when some permutation of the variables carries p onto q exactly.
bool equal_up_to_variable_permutation(const Polynomial& p, const Polynomial& q,
                                      size_t nvars);

} // namespace orbicheck
