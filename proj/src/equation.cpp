#include "xyn/equation.hpp"

#include <tuple>

namespace xyn {

bool solution_less(const Solution& lhs, const Solution& rhs) {
    auto key = [](const Solution& s) {
        return std::tie(s.y, s.exp.a, s.exp.b, s.exp.c, s.n, s.x);
    };
    return key(lhs) < key(rhs);
}

CheckResult check_solution(const Solution& s) {
    if (s.x < 0 || s.y < 2 || s.n < 3)
        throw std::invalid_argument("check_solution: need x >= 0, y >= 2, n >= 3");

    mpz_class yn;
    mpz_pow_ui(yn.get_mpz_t(), s.y.get_mpz_t(), s.n);
    mpz_class residual = yn - s.x * s.x - s_unit_value(s.exp);
    if (residual != 0) return {CheckStatus::equation_fails, residual};

    mpz_class g = gcd(s.x, s.y);
    if (g != 1) return {CheckStatus::not_coprime, g};

    return {CheckStatus::valid, 0};
}

std::set<unsigned> canonical_exponents(unsigned n) {
    if (n < 3) throw std::invalid_argument("canonical_exponents: n must be >= 3");
    std::set<unsigned> out;
    if (n % 4 == 0) out.insert(4);
    unsigned rest = n;
    while (rest % 2 == 0) rest /= 2;
    for (unsigned p = 3; p * p <= rest; p += 2) {
        if (rest % p == 0) {
            out.insert(p);
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) out.insert(rest);
    return out;
}

Solution descend_solution(const Solution& s, unsigned d) {
    if (!canonical_exponents(s.n).contains(d))
        throw std::invalid_argument("descend_solution: d = " + std::to_string(d) +
                                    " is not a canonical divisor of n = " + std::to_string(s.n));
    mpz_class yd;
    mpz_pow_ui(yd.get_mpz_t(), s.y.get_mpz_t(), s.n / d);
    return Solution{s.x, yd, s.exp, d};
}

bool mod8_admissible(const SUnitExponents& exp, Parity x_parity) {
    return !(exp.a == 0 && x_parity == Parity::odd);
}

}  // namespace xyn
