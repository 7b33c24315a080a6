#pragma once
#include <vector>

#include "orbicheck/rational.hpp"

namespace orbicheck {

// Memoized partition counts by the pentagonal number recurrence, with the
// conventions P(0) = 1 and P(-1) = 0. count_no_units(n) is the number of
// partitions of n with no part equal to 1, P(n) - P(n-1).
class PartitionTable {
public:
    Integer count(long n);
    Integer count_no_units(long n);

private:
    std::vector<Integer> p_{Integer(1)}; // p_[k] = P(k)
    void extend(long n);
};

Integer partition_count(long n);          // P(n), n >= -1
Integer partition_count_no_units(long n); // P1(n), n >= 0

// Number of inequivalent invertible shapes on n variables: one empty shape,
// pure chain and pure loop multisets counted twice, mixed chain/loop splits
// once, dots filling the rest. inv_count_conv computes the same number as
// the convolution sum of P(n-k) * P1(k).
Integer inv_count(long n);      // n >= 0
Integer inv_count_conv(long n); // n >= 0

// A shape: some single-variable powers, chains of length >= 2, loops of
// length >= 2, accounting for every variable.
struct InvStructure {
    long fermat_dots = 0;
    std::vector<long> chain_lengths; // ascending, every part >= 2
    std::vector<long> loop_lengths;  // ascending, every part >= 2
};

// Complete duplicate-free enumeration; throws ResourceLimitError past the
// cap. |result| = inv_count(n).
std::vector<InvStructure> inv_enumerate(long n, long cap = 25);

// First N+1 coefficients of (1 - q) * prod_{m >= 1} (1 - q^m)^{-2};
// coefficient n equals inv_count(n).
struct SeriesCoeffs {
    std::vector<Integer> coeffs;
};
SeriesCoeffs series_coefficients(long N);

} // namespace orbicheck
