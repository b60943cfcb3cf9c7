#pragma once

#include <set>

#include "xyn/arith.hpp"

namespace xyn {

// A candidate or verified tuple (x, y, a, b, c, n) for x^2 + 2^a 3^b 11^c = y^n.
// x >= 0, y >= 2, n >= 3; the trivial tuple (0, 1, C=1) is excluded by type.
struct Solution {
    mpz_class x;
    mpz_class y;
    SUnitExponents exp;
    unsigned n = 3;

    friend bool operator==(const Solution&, const Solution&) = default;
};

// Orders by (y, a, b, c, n, x) -- the oracle's canonical output order.
bool solution_less(const Solution& lhs, const Solution& rhs);

enum class CheckStatus { valid, equation_fails, not_coprime };

// Verdict with exact witness: the residual y^n - x^2 - C when the equation
// fails, or gcd(x, y) when coprimality does.
struct CheckResult {
    CheckStatus status = CheckStatus::valid;
    mpz_class witness;

    bool ok() const { return status == CheckStatus::valid; }
};

CheckResult check_solution(const Solution& s);

// The divisors d of n with d in {4, odd prime}; nonempty for every n >= 3.
std::set<unsigned> canonical_exponents(unsigned n);

// (x, y^{n/d}, a, b, c, d). Throws std::invalid_argument unless
// d is in canonical_exponents(s.n).
Solution descend_solution(const Solution& s, unsigned d);

enum class Parity { even, odd };

// The mod-8 sieve: 3^b 11^c = 1, 3 (mod 8), so a = 0 forces x even.
// Returns false exactly for (a = 0, x odd).
bool mod8_admissible(const SUnitExponents& exp, Parity x_parity);

}  // namespace xyn
