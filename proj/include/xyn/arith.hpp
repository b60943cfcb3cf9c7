#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace xyn {

// Exponent triple (a, b, c) encoding the S-unit C = 2^a * 3^b * 11^c.
struct SUnitExponents {
    unsigned a = 0;
    unsigned b = 0;
    unsigned c = 0;

    friend bool operator==(const SUnitExponents&, const SUnitExponents&) = default;
    friend auto operator<=>(const SUnitExponents&, const SUnitExponents&) = default;
};

inline constexpr unsigned long kSUnitPrimes[3] = {2, 3, 11};

// 2^a * 3^b * 11^c, exact.
mpz_class s_unit_value(const SUnitExponents& e);

// Exponent vector of m over `primes` (strictly increasing, non-empty),
// or nullopt when m has a prime factor outside the list.
std::optional<std::vector<unsigned>> factor_as_s_unit(const mpz_class& m,
                                                      std::span<const unsigned long> primes);

// {2,3,11} special case, returned as the exponent triple.
std::optional<SUnitExponents> factor_as_s_unit_231(const mpz_class& m);

// r with r^2 = m, or nullopt.
std::optional<mpz_class> integer_sqrt_exact(const mpz_class& m);

// r with r^n = m (m >= 1, n >= 2), or nullopt.
std::optional<mpz_class> nth_root_exact(const mpz_class& m, unsigned n);

// Legendre symbol (a/q) by Euler's criterion. q must be an odd prime;
// q <= 10^6 is primality-checked, larger q is taken as asserted-prime.
// Throws std::invalid_argument on even or detectably composite q.
int legendre_symbol(const mpz_class& a, const mpz_class& q);

// Raised by largest_prime_factor when the cofactor left after stripping
// small primes does not fit the exact 64-bit factoring budget.
struct UnfactoredResidue : std::runtime_error {
    explicit UnfactoredResidue(const mpz_class& residue);
    mpz_class residue;
};

// P(|k|) with P(+-1) = 1. Exact for any k whose cofactor after trial
// division by primes < 10^5 fits in 64 bits (then Pollard rho finishes).
mpz_class largest_prime_factor(const mpz_class& k);

// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime_u64(std::uint64_t n);

// Residue prefilter for perfect squares, used in hot enumeration loops:
// a value m can only be a square if (m mod 5760) and (m mod 45045) are
// square residues. Exact root extraction runs on survivors only.
namespace squarefilter {

inline constexpr std::uint64_t kMod1 = 5760;   // 2^7 * 3^2 * 5
inline constexpr std::uint64_t kMod2 = 45045;  // 3^2 * 5 * 7 * 11 * 13

// Bit i of kMask64 is set iff i is a square mod 64.
inline constexpr std::uint64_t kMask64 = [] {
    std::uint64_t m = 0;
    for (unsigned i = 0; i < 64; ++i) m |= std::uint64_t{1} << ((i * i) & 63);
    return m;
}();

const std::vector<bool>& residue_table_5760();
const std::vector<bool>& residue_table_45045();

inline bool pass(std::uint64_t m) {
    if (!((kMask64 >> (m & 63)) & 1)) return false;
    return residue_table_5760()[m % kMod1] && residue_table_45045()[m % kMod2];
}

inline bool pass(unsigned __int128 m) {
    const auto lo = static_cast<std::uint64_t>(m);
    if (!((kMask64 >> (lo & 63)) & 1)) return false;
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    // m mod k from the two limbs; 2^64 mod k precomputed.
    constexpr std::uint64_t k64m1 = (~std::uint64_t{0} % kMod1) + 1;  // 2^64 mod 5760
    constexpr std::uint64_t k64m2 = (~std::uint64_t{0} % kMod2) + 1;  // 2^64 mod 45045
    const std::uint64_t r1 = (hi % kMod1 * k64m1 + lo % kMod1) % kMod1;
    if (!residue_table_5760()[r1]) return false;
    const std::uint64_t r2 = (hi % kMod2 * k64m2 + lo % kMod2) % kMod2;
    return residue_table_45045()[r2];
}

}  // namespace squarefilter

// Exact integer square root helpers for the machine-word fast paths.
std::uint64_t isqrt_u64(std::uint64_t m);
unsigned __int128 isqrt_u128(unsigned __int128 m);

}  // namespace xyn
