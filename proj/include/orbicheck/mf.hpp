#pragma once
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbicheck/groebner.hpp"
#include "orbicheck/polynomial.hpp"
#include "orbicheck/ring.hpp"

namespace orbicheck {

using PolyMat = std::vector<std::vector<Polynomial>>;

// Coefficient ring for factorization families: geometric variables plus
// named deformation parameters, some with adjoined inverses, all modulo a
// relation ideal. Inverting a parameter p appends the parameter inverse_name(p)
// together with the relation p * inverse_name(p) - 1.
struct ParameterRing {
    Ring ring; // variables, then parameters, then adjoined inverses
    std::vector<std::string> parameters;
    std::vector<std::string> inverted;
    std::vector<Polynomial> relations;
};

std::string inverse_name(const std::string& parameter);

ParameterRing parameter_ring(const Ring& variables,
                             const std::vector<std::string>& parameters,
                             const std::vector<std::string>& inverted = {});

// Elements of the parameter quotient; operations that promise canonical
// values return the Groebner normal form modulo the relations.
using ParameterElement = Polynomial;

// Pair of square matrices with d1*d0 = d0*d1 = (target - source)*Id held
// exactly, or modulo the relation ideal when one is present. d1 maps the odd
// summand into the even one, so rows of d1 and columns of d0 index even
// generators. source and target are potentials on disjoint variable sets of
// the same ring.
struct MatrixFactorization {
    ParameterRing R;
    size_t rank = 0;
    PolyMat d0, d1;
    Polynomial source, target;
    std::vector<VarIdx> source_vars, target_vars;
    std::vector<std::string> notes; // construction remarks
};

// Reduced basis of the relation ideal; throws UnitIdealError when the
// relations are inconsistent.
GroebnerBasis relation_basis(const ParameterRing& R,
                             const GroebnerOptions& opts = {});

// Fills rank, d1 and d0 of a rank-4 factorization from its six generator
// entries. The sign pattern gives d1*d0 = d0*d1 = P*Id exactly when
// e16*e25 + e17*e35 - e15*e26 = P, with no condition on the individual
// entries beyond that single identity.
void assemble_blocks(MatrixFactorization& M, const Polynomial& e15,
                     const Polynomial& e16, const Polynomial& e17,
                     const Polynomial& e25, const Polynomial& e26,
                     const Polynomial& e35);

// Both products, entrywise minus (target - source)*Id, reduced modulo the
// relations; pass iff every residual entry is zero. Throws DomainError on
// any shape mismatch.
struct MFCheckReport {
    bool pass = false;
    PolyMat residual10, residual01; // d1*d0 and d0*d1 residuals
    std::vector<std::string> failures;
};
MFCheckReport mf_check(const MatrixFactorization& M,
                       const GroebnerOptions& opts = {});

// Entry degrees under the ring weights (nullopt marks zero entries, whose
// degree is unconstrained) plus generator degrees making the differential
// homogeneous of degree 1: deg d1[i][j] = 1 + m1[j] - m0[i] and
// deg d0[i][j] = 1 + m0[j] - m1[i]. Each connected component of the
// constraint graph is pinned by assigning its first generator degree 0.
struct GradeTable {
    std::vector<std::vector<std::optional<Rational>>> d1, d0;
    std::vector<Rational> m0_degrees, m1_degrees;
    bool homogeneous = false;
    bool consistent = false;
    bool pass = false;
    std::vector<std::string> problems;
};
GradeTable grade_check(const MatrixFactorization& M);

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a,
                                       const Polynomial& b);

Polynomial poly_det(const PolyMat& a); // cofactor expansion, exact

// Recovers d0 = W * adj(d1) / det(d1). det(d1) must be nonzero and divide
// W^rank (DetMismatchError otherwise) and every entry quotient must be a
// polynomial (NonPolynomialCompletionError); the products of the returned
// pair are verified before returning.
PolyMat complete_from_half(const PolyMat& d1, const Polynomial& W);

// Trace of the top-left block minus trace of the bottom-right block.
Polynomial supertrace(const PolyMat& a); // throws DomainError on odd size

// Grothendieck residue data for w over the variable subset svars: reduced
// basis of the partial-derivative ideal, standard monomial basis, the socle
// monomial (the unique standard monomial annihilated by every svar), and the
// normalization making residue(hessian(w)) = milnor number exactly.
struct ResidueContext {
    std::vector<VarIdx> svars;
    GroebnerBasis gb;            // partials ideal, mapped into the host ring
    std::vector<Monomial> basis; // standard monomials, host-ring exponents
    Monomial socle;
    uint64_t mu = 0;
    Rational scale; // mu / socle coefficient of NF(hessian)
};
ResidueContext residue_context(const Polynomial& w, const Ring& ring,
                               const std::vector<VarIdx>& svars,
                               const GroebnerOptions& opts = {});

// Socle coefficient of the normal form of g, scaled by the hessian
// normalization. Variables outside svars and parameters ride along as
// coefficients, so the result is a polynomial supported away from svars.
Polynomial residue(const Polynomial& g, const ResidueContext& ctx,
                   const GroebnerOptions& opts = {});
Polynomial residue(const Polynomial& g, const Polynomial& w, const Ring& ring,
                   const std::vector<VarIdx>& svars,
                   const GroebnerOptions& opts = {});

enum class Side { left, right };

// Global orientation of the quantum dimension formula. 1 means the signed
// residue below is reported verbatim. Every qdim in the library flips with
// this constant, including both closed forms of each rank-4 family; the
// Koszul identity defect measures the orientation and lands on -kQdimSign
// when its even exterior summand is taken as M0, on +kQdimSign with the
// parity labels exchanged, so only the relative signs carry content.
inline constexpr int kQdimSign = 1;

// Signed residue of str(D_s1 ... D_sm D_t1 ... D_tn) where D = [[0, d1],
// [d0, 0]] and D_v is its entrywise v-derivative; source partials come
// first, each list in ring order. The residue is taken over the target
// variables against the target potential (left) or over the source
// variables against the source potential (right), carries the sign
// (-1)^binom(m+1, 2) resp. (-1)^binom(n+1, 2), and is reduced modulo the
// relation ideal when one is present.
ParameterElement qdim(const MatrixFactorization& M, Side side,
                      const GroebnerOptions& opts = {});

// Rank-4 exact factorization of x^4 + y^3 + x*z^2 with det(d1) = W^2; the
// only supported name is "Q10".
MatrixFactorization kst_seed(const std::string& name);

// Rank-4 families factoring the difference between the x^4 + y^3 + x*z^2
// singularity and a partner singularity of Milnor number 14, over a
// parameter ring carrying the relation ideal of the family. build_v1 pairs
// with u^4*w + v^3 + w^2 and parameters a, b, c; build_v2 pairs with
// u^3 + v^8 + w^2 and parameters a, b, c, d with b inverted. Both blocks of
// each family are spanned by six generator entries; the d0 block reuses them
// with the sign pattern forced by d1*d0 = d0*d1 = (target - source)*Id.
MatrixFactorization build_v1();
MatrixFactorization build_v2();

struct Certificate {
    MFCheckReport mf;
    GradeTable grades;
    ParameterElement qdim_left, qdim_right;
    bool left_nonzero = false, right_nonzero = false;
    bool pass = false;
};
Certificate certificate(const MatrixFactorization& M,
                        const GroebnerOptions& opts = {});

// {rank, variables, parameters, relations, d0, d1} with polynomial entries
// in the text grammar. Weights, potentials, and inversion markers are not
// carried: a parsed factorization gets unit weights, empty potentials, and
// empty variable splits until the caller attaches them.
nlohmann::ordered_json mf_to_json(const MatrixFactorization& M);
MatrixFactorization mf_from_json(const nlohmann::json& j);

} // namespace orbicheck
