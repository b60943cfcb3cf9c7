#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "xyn/equation.hpp"

namespace xyn {

// Bounds and flags for one exhaustive enumeration run.
struct SearchConfig {
    unsigned n = 3;
    std::uint64_t y_max = 10'000;
    bool require_bc_positive = false;
    unsigned worker_count = 0;  // 0 = hardware concurrency
    std::array<std::uint64_t, 3> primes{2, 3, 11};
};

// Every (x, y, a, b, c, n) with 2 <= y <= y_max, C = 2^a 3^b 11^c < y^n,
// y^n - C a perfect square x^2, gcd(x, y) = 1 (and bc > 0 when required),
// sorted by (y, a, b, c). Deterministic for any worker_count.
//
// Dispatches on n*log2(y_max): 64-bit words, then 128-bit words up to
// y^n < 2^126, then GMP. Never wraps silently.
std::vector<Solution> enumerate_solutions(const SearchConfig& cfg);

// enumerate_solutions for every {2,3}-smooth n in [3, n_max]; returns
// solution counts keyed by n.
std::map<unsigned, std::size_t> smooth_exponent_scan(unsigned n_max, std::uint64_t y_max,
                                                     unsigned worker_count = 0);

// Claimed-vs-found comparison. Empty report = table confirmed.
struct TableDiscrepancies {
    std::vector<Solution> claimed_not_found;
    std::vector<Solution> found_not_claimed;
    std::vector<Solution> duplicate_claims;

    bool empty() const {
        return claimed_not_found.empty() && found_not_claimed.empty() && duplicate_claims.empty();
    }
};

// Both lists must share one n, and oracle_y_max must dominate every claimed
// y (otherwise the comparison could not certify completeness and throws).
TableDiscrepancies verify_table(const std::vector<Solution>& claimed,
                                const std::vector<Solution>& found,
                                std::uint64_t oracle_y_max);

}  // namespace xyn
