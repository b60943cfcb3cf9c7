#include <doctest.h>

#include <random>
#include <set>

#include "xyn/arith.hpp"

using namespace xyn;

TEST_CASE("s_unit_value") {
    CHECK(s_unit_value({0, 0, 0}) == 1);
    CHECK(s_unit_value({1, 0, 2}) == 242);   // 1^2 + 242 = 3^5
    CHECK(s_unit_value({3, 1, 1}) == 264);   // 19^2 + 264 = 5^4
    CHECK(s_unit_value({10, 4, 1}) == 912384);
}

TEST_CASE("factor_as_s_unit examples") {
    const unsigned long primes[] = {2, 3, 11};
    CHECK(*factor_as_s_unit(242, primes) == std::vector<unsigned>{1, 0, 2});
    CHECK(*factor_as_s_unit(1, primes) == std::vector<unsigned>{0, 0, 0});
    CHECK(!factor_as_s_unit(7, primes));
    CHECK(*factor_as_s_unit_231(264) == SUnitExponents{3, 1, 1});
    CHECK(!factor_as_s_unit_231(242 * 5));

    const unsigned long other[] = {2, 5};
    CHECK(*factor_as_s_unit(40, other) == std::vector<unsigned>{3, 1});
}

TEST_CASE("factor_as_s_unit argument validation") {
    const unsigned long decreasing[] = {3, 2};
    CHECK_THROWS_AS((void)factor_as_s_unit(6, decreasing), std::invalid_argument);
    CHECK_THROWS_AS((void)factor_as_s_unit(6, std::span<const unsigned long>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)factor_as_s_unit(0, kSUnitPrimes), std::invalid_argument);
}

TEST_CASE("s_unit round trip over the exponent grid") {
    for (unsigned a = 0; a <= 20; a += 2)
        for (unsigned b = 0; b <= 20; b += 2)
            for (unsigned c = 0; c <= 20; c += 2) {
                SUnitExponents e{a, b, c};
                auto back = factor_as_s_unit_231(s_unit_value(e));
                REQUIRE(back);
                REQUIRE(*back == e);
            }
    // odd corners
    for (SUnitExponents e : {SUnitExponents{19, 1, 20}, {1, 19, 3}, {20, 20, 20}}) {
        auto back = factor_as_s_unit_231(s_unit_value(e));
        REQUIRE(back);
        REQUIRE(*back == e);
    }
}

TEST_CASE("integer_sqrt_exact") {
    CHECK(*integer_sqrt_exact(0) == 0);
    CHECK(*integer_sqrt_exact(289) == 17);  // 97^3 - 2^10 3^4 11 = 289
    CHECK(!integer_sqrt_exact(2));
    CHECK(!integer_sqrt_exact(-4));

    // against the floor-sqrt oracle
    for (unsigned long m = 0; m <= 100'000; ++m) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), mpz_class(m).get_mpz_t());
        const bool is_square = r * r == m;
        CHECK(integer_sqrt_exact(m).has_value() == is_square);
    }
}

TEST_CASE("nth_root_exact") {
    CHECK(*nth_root_exact(729, 6) == 3);       // 5^2 + 2^6 11 = 729
    CHECK(*nth_root_exact(759375, 5) == 15);   // 837^2 + 2 3^5 11^2 = 15^5
    CHECK(!nth_root_exact(10, 3));
    CHECK(*nth_root_exact(1, 7) == 1);
    CHECK_THROWS_AS((void)nth_root_exact(0, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)nth_root_exact(8, 1), std::invalid_argument);
}

namespace {

// Brute-force Legendre oracle: the set of nonzero squares mod q.
int legendre_brute(long a, unsigned long q) {
    std::set<unsigned long> squares;
    for (unsigned long r = 1; r < q; ++r) squares.insert(r * r % q);
    long r = a % static_cast<long>(q);
    if (r < 0) r += q;
    if (r == 0) return 0;
    return squares.count(r) ? 1 : -1;
}

}  // namespace

TEST_CASE("legendre_symbol examples") {
    CHECK(legendre_symbol(-2, 11) == 1);   // -2 = 9 = 3^2 (mod 11)
    CHECK(legendre_symbol(-6, 11) == 1);   // -6 = 5 = 4^2 (mod 11)
    CHECK(legendre_symbol(-1, 11) == -1);  // squares mod 11: {1,3,4,5,9}
    CHECK(legendre_symbol(0, 11) == 0);
    CHECK(legendre_symbol(22, 11) == 0);
}

TEST_CASE("legendre_symbol matches the brute-force oracle") {
    for (unsigned long q = 3; q <= 500; q += 2) {
        if (!is_prime_u64(q)) continue;
        for (unsigned long a = 0; a < q; ++a)
            CHECK(legendre_symbol(a, q) == legendre_brute(static_cast<long>(a), q));
    }
}

TEST_CASE("legendre_symbol gate for the d-list") {
    // (-d/11) = 1 exactly for d in {2,6}; 0 when 11 | d.
    for (unsigned d : {1u, 2u, 3u, 6u, 11u, 22u, 33u, 66u}) {
        const int sym = legendre_symbol(-static_cast<long>(d), 11);
        if (d % 11 == 0)
            CHECK(sym == 0);
        else
            CHECK((sym == 1) == (d == 2 || d == 6));
    }
}

TEST_CASE("legendre_symbol rejects bad moduli") {
    CHECK_THROWS_AS((void)legendre_symbol(3, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)legendre_symbol(3, 9), std::invalid_argument);
    CHECK_THROWS_AS((void)legendre_symbol(3, 561), std::invalid_argument);
    // beyond the primality-check budget, q is taken as asserted-prime
    CHECK(legendre_symbol(4, mpz_class("1000000007")) == 1);
    CHECK(legendre_symbol(mpz_class("1000000006"), mpz_class("1000000007")) == -1);
}

TEST_CASE("largest_prime_factor") {
    CHECK(largest_prime_factor(1) == 1);
    CHECK(largest_prime_factor(-1) == 1);
    CHECK(largest_prime_factor(-11) == 11);
    CHECK(largest_prime_factor(242) == 11);
    CHECK(largest_prime_factor(600851475143) == 6857);
    CHECK(largest_prime_factor(mpz_class(1000003) * 1000033) == 1000033);
    CHECK(largest_prime_factor(mpz_class("18446744073709551557")) ==
          mpz_class("18446744073709551557"));  // largest 64-bit prime
    CHECK_THROWS_AS((void)largest_prime_factor(0), std::invalid_argument);

    // cofactor beyond the 64-bit budget is reported, not guessed
    mpz_class m89 = (mpz_class(1) << 89) - 1;
    CHECK_THROWS_AS((void)largest_prime_factor(m89), UnfactoredResidue);
    // but S-primes are stripped first, so 2^200 * 11 is fine
    CHECK(largest_prime_factor((mpz_class(1) << 200) * 11) == 11);
}

TEST_CASE("is_prime_u64 spot checks") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(11));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(561));           // Carmichael
    CHECK(!is_prime_u64(3215031751ull)); // strong pseudoprime to 2,3,5,7
    CHECK(is_prime_u64(1000003));
    CHECK(is_prime_u64(18446744073709551557ull));
    CHECK(!is_prime_u64(18446744073709551615ull));
}

TEST_CASE("square filter never rejects a true square") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 20'000; ++i) {
        const std::uint64_t k = rng() >> 33;
        CHECK(squarefilter::pass(k * k));
        const unsigned __int128 big = static_cast<unsigned __int128>(rng() >> 2);
        CHECK(squarefilter::pass(big * big));
    }
    // and the exact square roots agree
    for (int i = 0; i < 2'000; ++i) {
        const std::uint64_t k = rng() >> 33;
        CHECK(isqrt_u64(k * k) == k);
        CHECK(isqrt_u64(k * k + 1) == k);
        const unsigned __int128 b = static_cast<unsigned __int128>(rng() >> 2);
        CHECK(isqrt_u128(b * b) == b);
        if (b > 0) CHECK(isqrt_u128(b * b - 1) == b - 1);
    }
}
