#include "xyn/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace xyn {

mpz_class s_unit_value(const SUnitExponents& e) {
    mpz_class v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), e.a);
    mpz_class p3, p11;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, e.b);
    mpz_ui_pow_ui(p11.get_mpz_t(), 11, e.c);
    return v * p3 * p11;
}

std::optional<std::vector<unsigned>> factor_as_s_unit(const mpz_class& m,
                                                      std::span<const unsigned long> primes) {
    if (m < 1) throw std::invalid_argument("factor_as_s_unit: m must be >= 1");
    if (primes.empty()) throw std::invalid_argument("factor_as_s_unit: empty prime list");
    for (std::size_t i = 1; i < primes.size(); ++i)
        if (primes[i] <= primes[i - 1])
            throw std::invalid_argument("factor_as_s_unit: primes not strictly increasing");

    std::vector<unsigned> exps(primes.size(), 0);
    mpz_class rest = m;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), primes[i])) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), primes[i]);
            ++exps[i];
        }
    }
    if (rest != 1) return std::nullopt;
    return exps;
}

std::optional<SUnitExponents> factor_as_s_unit_231(const mpz_class& m) {
    auto exps = factor_as_s_unit(m, kSUnitPrimes);
    if (!exps) return std::nullopt;
    return SUnitExponents{(*exps)[0], (*exps)[1], (*exps)[2]};
}

std::optional<mpz_class> integer_sqrt_exact(const mpz_class& m) {
    if (m < 0) return std::nullopt;
    if (!mpz_perfect_square_p(m.get_mpz_t())) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::optional<mpz_class> nth_root_exact(const mpz_class& m, unsigned n) {
    if (m < 1) throw std::invalid_argument("nth_root_exact: m must be >= 1");
    if (n < 2) throw std::invalid_argument("nth_root_exact: n must be >= 2");
    mpz_class r;
    if (!mpz_root(r.get_mpz_t(), m.get_mpz_t(), n)) return std::nullopt;
    return r;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Deterministic witness set for all n < 2^64 (Sinclair).
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre_symbol(const mpz_class& a, const mpz_class& q) {
    if (q < 3 || mpz_even_p(q.get_mpz_t()))
        throw std::invalid_argument("legendre_symbol: q must be an odd prime");
    if (q <= 1'000'000 && !is_prime_u64(q.get_ui()))
        throw std::invalid_argument("legendre_symbol: q is composite");

    mpz_class r, e = (q - 1) / 2;
    mpz_class base = a % q;
    if (base < 0) base += q;
    if (base == 0) return 0;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
    if (r == 1) return 1;
    if (r == q - 1) return -1;
    throw std::invalid_argument("legendre_symbol: Euler criterion failed, q not prime");
}

UnfactoredResidue::UnfactoredResidue(const mpz_class& r)
    : std::runtime_error("largest_prime_factor: unfactored residue " + r.get_str()),
      residue(r) {}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    // n odd composite, no factor below the trial-division bound.
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto step = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

// Largest prime factor of a 64-bit value.
std::uint64_t lpf_u64(std::uint64_t n) {
    std::uint64_t best = 1;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            n /= p;
            best = std::max(best, p);
        }
    }
    for (std::uint64_t p = 17; p < 100'000 && p * p <= n; p += 2) {
        while (n % p == 0) {
            n /= p;
            best = std::max(best, p);
        }
    }
    // n now has no factor < 10^5: it is 1, a prime, or a product of at
    // most three primes each > 10^5.
    std::vector<std::uint64_t> stack{n};
    while (!stack.empty()) {
        std::uint64_t v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_prime_u64(v)) {
            best = std::max(best, v);
            continue;
        }
        std::uint64_t d = pollard_rho(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
    return best;
}

}  // namespace

mpz_class largest_prime_factor(const mpz_class& k) {
    if (k == 0) throw std::invalid_argument("largest_prime_factor: k must be nonzero");
    mpz_class n = abs(k);
    if (n == 1) return 1;

    mpz_class best = 1;
    for (unsigned long p : kSUnitPrimes) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            best = std::max(best, mpz_class(p));
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
        }
    }
    if (n == 1) return best;
    if (!mpz_fits_ulong_p(n.get_mpz_t())) throw UnfactoredResidue(n);
    return std::max(best, mpz_class(lpf_u64(mpz_get_ui(n.get_mpz_t()))));
}

namespace squarefilter {

namespace {

std::vector<bool> build_table(std::uint64_t mod) {
    std::vector<bool> t(mod, false);
    for (std::uint64_t i = 0; i < mod; ++i) t[i * i % mod] = true;
    return t;
}

}  // namespace

const std::vector<bool>& residue_table_5760() {
    static const std::vector<bool> t = build_table(kMod1);
    return t;
}

const std::vector<bool>& residue_table_45045() {
    static const std::vector<bool> t = build_table(kMod2);
    return t;
}

}  // namespace squarefilter

std::uint64_t isqrt_u64(std::uint64_t m) {
    using u128 = unsigned __int128;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
    while (r > 0 && u128(r) * r > m) --r;
    while (u128(r + 1) * (r + 1) <= m) ++r;
    return r;
}

unsigned __int128 isqrt_u128(unsigned __int128 m) {
    auto r = static_cast<unsigned __int128>(sqrtl(static_cast<long double>(m)));
    while (r > 0 && r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    return r;
}

}  // namespace xyn
