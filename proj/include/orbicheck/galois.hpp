#pragma once
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "orbicheck/mf.hpp"
#include "orbicheck/univariate.hpp"

namespace orbicheck {

// One numeric point of a parameter system, coordinates aligned with the
// owning set's name list. coord_tags[i] indexes SolutionSet::tag_polys and
// records the exact minimal polynomial of coordinate i.
struct NumericSolution {
    std::vector<std::complex<long double>> value;
    long double residual = 0; // largest defining-equation residual
    std::vector<int> coord_tags;
    std::string exact_label; // exact rational side data set by the solver
    int orbit = -1;
};

struct SolutionSet {
    std::vector<std::string> names;
    size_t designated = 0; // coordinate used for orbit assignment
    std::vector<UnivariatePoly> tag_polys; // monic irreducible, shared pool
    std::vector<NumericSolution> solutions;
    std::vector<std::string> notes;
};

// All 32 solutions of the second family's parameter relations, assembled
// from exact arithmetic in the eighth cyclotomic field and verified against
// the relation ideal both exactly and numerically.
SolutionSet solve_v2();

// Samples of the first family's one-dimensional solution set: for each of
// the three component families, the designated coordinate runs over the
// numeric roots of the component's minimal polynomial, the second
// coordinate sweeps exact rationals, and the third solves the component's
// linear relation. Each sample is verified exactly in the quotient field
// and numerically. Sweep values whose pivot lands within 1e-8 of zero are
// skipped and reported in the notes; extra_b values are tried first.
SolutionSet solve_v1_samples(size_t count_per_family = 20,
                             const std::vector<Rational>& extra_b = {});

// Assigns orbit labels by matching the designated coordinate against the
// irreducible factors of fact and sub-grouping by the solver's exact label.
// Returns the number of orbits. Throws AmbiguousMatchError when a
// coordinate sits within margin of two factors, DomainError when it matches
// none or contradicts its exact minimal-polynomial tag.
size_t orbit_partition(SolutionSet& set, const FactorizationResult& fact,
                       long double margin = 1e-6L);

struct GroupElement {
    std::string name;
    std::vector<size_t> perm;
};

struct RootPermutationGroup {
    std::vector<std::string> domain; // printable points acted on
    std::vector<GroupElement> generators;
    std::vector<std::string> generator_maps; // defining algebraic maps
    std::vector<GroupElement> elements;      // full closure, identity first
    size_t order = 0;
    bool abelian = false;
    std::map<size_t, size_t> order_histogram;
    size_t center_size = 0;
    std::vector<std::string> notes;
};

// Exhaustive closure of the given generators acting on domain, with order,
// abelianness, element-order histogram and center size filled in. Throws
// DomainError if a generator is not a bijection of the domain.
RootPermutationGroup close_permutation_group(std::vector<std::string> domain,
                                             std::vector<GroupElement> generators,
                                             std::vector<std::string> maps);

// version 1: the order-16 group generated by three algebraic maps permuting
// the sixteen numeric pairs (m, n) with m^8 + 6m^4 + 1 = 0 and
// n^2 = 1 + (m^4 + 3)/2. version 2: the order-4 group of eighth-root-of-
// unity substitutions permuting the 32 exact solutions of solve_v2.
RootPermutationGroup group_certificate(int version);

// Largest entry residual of d1*d0 - P*Id and d0*d1 - P*Id over a few fixed
// geometric sample points, with parameters filled by name and adjoined
// inverses derived from their base parameters when absent from names.
long double square_residual(const MatrixFactorization& M,
                            const std::vector<std::string>& names,
                            const std::vector<std::complex<long double>>& values);

// Applies sigma to the chosen solution by permutation and checks that the
// image still squares to the potential within tol.
bool galois_invariance_check(const MatrixFactorization& M, const GroupElement& sigma,
                             const SolutionSet& set, size_t index,
                             long double tol = 1e-10L);

} // namespace orbicheck
