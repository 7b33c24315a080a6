#pragma once
#include <string>
#include <vector>

#include "orbicheck/groebner.hpp"
#include "orbicheck/mf.hpp"
#include "orbicheck/monomial.hpp"
#include "orbicheck/polynomial.hpp"
#include "orbicheck/ring.hpp"

namespace orbicheck {

// Deformation ansatz machinery: start from the unperturbed base
// factorization of a version, attach one unknown coefficient to every
// admissible monomial of matching degree, impose the square condition and
// reduce the resulting coefficient equations linearly.

// Position of a matrix slot inside one of the two blocks.
struct SlotRef {
    bool in_d1 = true;
    size_t row = 0, col = 0;
};
bool operator==(const SlotRef& a, const SlotRef& b);

// One unknown coefficient together with where it lives.
struct AnsatzUnknown {
    std::string name; // positional: p<row><col><n> in d1, q<row><col><n> in d0
    VarIdx index = 0; // variable index in the extended ring
    SlotRef slot;
    Monomial monomial; // geometric monomial the unknown multiplies
};

// Monomial list attached to one perturbable slot. unknown[i] indexes the
// ansatz unknown multiplying monomials[i]; tied slots share indices.
struct PerturbationSlot {
    SlotRef slot;
    Rational degree;
    std::vector<Monomial> monomials;
    std::vector<size_t> unknown;
    std::vector<Rational> sign; // entry coefficient per unknown; empty means +1
};

// Admissibility rule for candidate monomials: a candidate must involve at
// least one of the listed variables and must not duplicate a monomial the
// base entry already carries. tie_blocks shares unknowns across the slots
// the rank-4 block pattern forces equal, so only the six generator entries
// are enumerated; clearing it perturbs every nonzero slot of both blocks
// independently.
struct PerturbationConstraint {
    std::vector<VarIdx> involve;
    bool tie_blocks = true;
};
PerturbationConstraint v1_constraint(const Ring& ring); // involve u
PerturbationConstraint v2_constraint(const Ring& ring); // involve v, w

struct Ansatz {
    MatrixFactorization base;
    bool tied = true;
    std::vector<PerturbationSlot> slots;
    std::vector<AnsatzUnknown> unknowns;
    ParameterRing extended; // geometric variables plus the unknowns
    PolyMat d1, d0;         // perturbed blocks over the extended ring
};

// Coefficient equations with their origin: the geometric monomial of the
// product entry whose coefficient the equation is.
struct EquationOrigin {
    bool from_d1d0 = true;
    size_t row = 0, col = 0;
    Monomial monomial;
};

struct EquationSystem {
    Ring ring;                            // extended ring of the ansatz
    std::vector<AnsatzUnknown> unknowns;
    std::vector<Polynomial> equations;    // polynomials in the unknowns only
    std::vector<EquationOrigin> provenance; // parallel to equations
};

// One linear elimination: unknown := replacement, justified by pivot.
struct SubstStep {
    VarIdx index = 0;
    std::string unknown;
    Polynomial replacement;
    Polynomial pivot; // the equation the step consumed, as it stood
};

struct LinearReduction {
    EquationSystem reduced;
    std::vector<SubstStep> trace;
};

// Unperturbed base factorization of the version: the rank-4 block pattern
// over the version's weighted ring, pairing the x^4 + y^3 + x*z^2 potential
// with the base partner potential (v^3 + w^2 for version 1, u^3 + v^8 for
// version 2). det d1 equals the squared potential difference.
MatrixFactorization build_base(int version);

// Attaches unknowns to every admissible monomial slot by slot. Degrees come
// from the base grade table; zero entries are skipped.
Ansatz enumerate_perturbations(const MatrixFactorization& base,
                               const Ring& ring,
                               const PerturbationConstraint& constraint);

// Coefficient equations of d*d - target*Id over the extended ring, one per
// (entry, geometric monomial) with a nonzero coefficient, deduplicated.
EquationSystem impose_square(const Ansatz& ansatz, const Polynomial& target);

// Repeatedly eliminates the lowest-index unknown that appears in some
// equation linearly with a nonzero constant coefficient, recording each
// substitution. Solution set is preserved exactly.
LinearReduction linear_reduce(const EquationSystem& system);

// Each eliminated unknown expressed through surviving unknowns only, by
// back-substituting the later steps into the earlier replacements.
std::vector<SubstStep> resolved_assignments(const std::vector<SubstStep>& trace);

// Comparison of the generated system against the version's closed-form
// family (build_v1 or build_v2): (i) the family's coefficient expressions
// satisfy every generated equation modulo the family relation ideal, and
// (ii) the family relations, pulled through the substitution trace, vanish
// on the reduced system's variety (radical membership), checked both on the
// full variety and on the slice where the coefficients the family leaves at
// zero are imposed as zero. The full ansatz can be strictly larger than the
// family: version 1 admits one extra deformation direction (the x*u^3 slot
// of the degree 15/12 entries), so there the relations hold only on the
// slice. Failures are findings, not errors.
struct PerturbationReport {
    int version = 0;
    size_t unknown_count = 0;
    size_t equation_count = 0;
    size_t reduced_equation_count = 0;
    std::vector<std::string> reduced_unknowns;
    std::vector<std::string> zero_coefficient_unknowns;
    bool entries_satisfy_system = false;
    bool relations_hold_on_variety = false;
    bool relations_hold_on_family_slice = false;
    bool pass = false; // entries and the slice check
    std::vector<std::string> notes;
};
PerturbationReport verify_against_family(int version,
                                         const GroebnerOptions& opts = {});

} // namespace orbicheck
