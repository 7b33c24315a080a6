#include "orbicheck/census.hpp"

#include <algorithm>

#include "orbicheck/errors.hpp"

namespace orbicheck {

void PartitionTable::extend(long n) {
    while (static_cast<long>(p_.size()) <= n) {
        long m = static_cast<long>(p_.size());
        Integer acc = 0;
        // generalized pentagonal numbers k(3k-1)/2 for k = 1, -1, 2, -2, ...
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            Integer term = p_[m - g1];
            if (g2 <= m) term += p_[m - g2];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p_.push_back(acc);
    }
}

Integer PartitionTable::count(long n) {
    if (n < -1) throw DomainError("partition counts are defined for n >= -1");
    if (n == -1) return 0;
    extend(n);
    return p_[n];
}

Integer PartitionTable::count_no_units(long n) {
    if (n < 0) throw DomainError("unit-free partition counts are defined for n >= 0");
    return count(n) - count(n - 1);
}

namespace {

PartitionTable& shared_table() {
    static PartitionTable table;
    return table;
}

} // namespace

Integer partition_count(long n) { return shared_table().count(n); }

Integer partition_count_no_units(long n) { return shared_table().count_no_units(n); }

Integer inv_count(long n) {
    if (n < 0) throw DomainError("shape counts are defined for n >= 0");
    PartitionTable& t = shared_table();
    Integer total = 1;
    for (long k = 2; k <= n; ++k) total += 2 * t.count_no_units(k);
    for (long k = 4; k <= n; ++k)
        for (long i = 2; i <= k - 2; ++i)
            total += t.count_no_units(i) * t.count_no_units(k - i);
    return total;
}

Integer inv_count_conv(long n) {
    if (n < 0) throw DomainError("shape counts are defined for n >= 0");
    PartitionTable& t = shared_table();
    Integer total = 0;
    for (long k = 0; k <= n; ++k) total += t.count(n - k) * t.count_no_units(k);
    return total;
}

namespace {

// partitions of n into parts >= 2, each sorted ascending
std::vector<std::vector<long>> partitions_min2(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    // parts chosen non-decreasing so each multiset appears once
    auto rec = [&](auto&& self, long rest, long minimum) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = minimum; part <= rest; ++part) {
            if (rest - part != 0 && rest - part < part) continue;
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, 2);
    return out;
}

} // namespace

std::vector<InvStructure> inv_enumerate(long n, long cap) {
    if (n < 0) throw DomainError("shape counts are defined for n >= 0");
    if (n > cap) throw ResourceLimitError("shape enumeration past the cap would take too long");
    std::vector<InvStructure> out;
    for (long dots = 0; dots <= n; ++dots) {
        long rest = n - dots;
        for (long chain_total = 0; chain_total <= rest; ++chain_total) {
            auto chains = partitions_min2(chain_total);
            auto loops = partitions_min2(rest - chain_total);
            for (const auto& ch : chains)
                for (const auto& lp : loops) {
                    InvStructure s;
                    s.fermat_dots = dots;
                    s.chain_lengths = ch;
                    s.loop_lengths = lp;
                    out.push_back(std::move(s));
                }
        }
    }
    return out;
}

SeriesCoeffs series_coefficients(long N) {
    if (N < 0) throw DomainError("series truncation order must be nonnegative");
    std::vector<Integer> c(static_cast<size_t>(N) + 1, Integer(0));
    c[0] = 1;
    // two factors of 1/(1 - q^m) per m, then one factor of (1 - q)
    for (long m = 1; m <= N; ++m)
        for (int rep = 0; rep < 2; ++rep)
            for (long j = m; j <= N; ++j) c[j] += c[j - m];
    for (long j = N; j >= 1; --j) c[j] -= c[j - 1];
    SeriesCoeffs out;
    out.coeffs = std::move(c);
    return out;
}

} // namespace orbicheck
