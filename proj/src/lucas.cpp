#include "xyn/lucas.hpp"

#include <algorithm>
#include <numeric>

namespace xyn {

namespace {

bool valid_field_d(unsigned d) {
    return std::find(std::begin(kFieldDs), std::end(kFieldDs), d) != std::end(kFieldDs);
}

void require_same_field(const QuadraticInteger& lhs, const QuadraticInteger& rhs) {
    if (lhs.d != rhs.d)
        throw std::invalid_argument("quadratic integers from mixed fields");
}

// Smallest prime factor outside {2,3,11} of z, for rejection witnesses.
std::uint64_t witness_prime_outside_s(mpz_class z) {
    for (unsigned long p : kSUnitPrimes)
        while (mpz_divisible_ui_p(z.get_mpz_t(), p))
            mpz_divexact_ui(z.get_mpz_t(), z.get_mpz_t(), p);
    if (z == 1) return 0;
    for (std::uint64_t p = 5; p < 1'000'000; p += 2)
        if (mpz_divisible_ui_p(z.get_mpz_t(), p)) return p;
    if (mpz_fits_ulong_p(z.get_mpz_t()) && is_prime_u64(z.get_ui())) return z.get_ui();
    return 0;  // witness exists but exceeds the trial budget
}

}  // namespace

QuadField quad_field(unsigned d) {
    if (!valid_field_d(d))
        throw std::invalid_argument("quad_field: d = " + std::to_string(d) +
                                    " is not in {1,2,3,6,11,22,33,66}");
    QuadField f;
    f.d = d;
    f.allows_half_coordinates = (d == 3 || d == 11);
    f.discriminant = f.allows_half_coordinates ? -static_cast<long>(d) : -4 * static_cast<long>(d);
    f.class_number = class_number_by_forms(f.discriminant);
    f.unit_group_order = d == 1 ? 4 : d == 3 ? 6 : 2;
    return f;
}

QuadraticInteger QuadraticInteger::from_integers(unsigned d, const mpz_class& u,
                                                 const mpz_class& v) {
    if (!valid_field_d(d)) throw std::invalid_argument("from_integers: invalid d");
    return QuadraticInteger{d, 2 * u, 2 * v};
}

QuadraticInteger QuadraticInteger::from_doubled(unsigned d, const mpz_class& tu,
                                                const mpz_class& tv) {
    if (!valid_field_d(d)) throw std::invalid_argument("from_doubled: invalid d");
    const bool u_odd = mpz_odd_p(tu.get_mpz_t()), v_odd = mpz_odd_p(tv.get_mpz_t());
    if (u_odd != v_odd)
        throw std::invalid_argument("from_doubled: coordinates of mixed parity");
    if (u_odd && !(d == 3 || d == 11))
        throw std::invalid_argument("from_doubled: half coordinates need d = 3 or 11");
    return QuadraticInteger{d, tu, tv};
}

QuadraticInteger QuadraticInteger::conjugate() const {
    return QuadraticInteger{d, twice_u, -twice_v};
}

mpz_class QuadraticInteger::norm() const {
    mpz_class num = twice_u * twice_u + static_cast<long>(d) * twice_v * twice_v;
    // (2u)^2 + d (2v)^2 = 0 mod 4 by the parity invariant
    mpz_class q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), 4);
    if (r != 0) throw std::logic_error("norm: parity invariant violated");
    return q;
}

mpz_class QuadraticInteger::trace() const { return twice_u; }

QuadraticInteger operator+(const QuadraticInteger& lhs, const QuadraticInteger& rhs) {
    require_same_field(lhs, rhs);
    return QuadraticInteger::from_doubled(lhs.d, lhs.twice_u + rhs.twice_u,
                                          lhs.twice_v + rhs.twice_v);
}

QuadraticInteger operator-(const QuadraticInteger& lhs, const QuadraticInteger& rhs) {
    require_same_field(lhs, rhs);
    return QuadraticInteger::from_doubled(lhs.d, lhs.twice_u - rhs.twice_u,
                                          lhs.twice_v - rhs.twice_v);
}

QuadraticInteger operator*(const QuadraticInteger& lhs, const QuadraticInteger& rhs) {
    require_same_field(lhs, rhs);
    // (2u)(2u') - d (2v)(2v') and (2u)(2v') + (2v)(2u') are both twice the
    // doubled coordinates of the product; halving is exact by the invariant.
    mpz_class tu = lhs.twice_u * rhs.twice_u - static_cast<long>(lhs.d) * lhs.twice_v * rhs.twice_v;
    mpz_class tv = lhs.twice_u * rhs.twice_v + lhs.twice_v * rhs.twice_u;
    if (mpz_odd_p(tu.get_mpz_t()) || mpz_odd_p(tv.get_mpz_t()))
        throw std::logic_error("operator*: parity invariant violated");
    return QuadraticInteger::from_doubled(lhs.d, tu / 2, tv / 2);
}

QuadraticInteger pow_quad(const QuadraticInteger& base, unsigned m) {
    QuadraticInteger acc = QuadraticInteger::from_integers(base.d, 1, 0);
    QuadraticInteger sq = base;
    while (m) {
        if (m & 1) acc = acc * sq;
        if (m >>= 1) sq = sq * sq;
    }
    return acc;
}

mpz_class lucas_term(const QuadraticInteger& eta, unsigned m) {
    if (eta.twice_v == 0)
        throw std::invalid_argument("lucas_term: eta is rational, eta - conj(eta) = 0");
    const mpz_class P = eta.trace();
    const mpz_class Q = eta.norm();
    mpz_class prev = 0, cur = 1;  // L_0, L_1
    if (m == 0) return prev;
    for (unsigned i = 1; i < m; ++i) {
        mpz_class next = P * cur - Q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

mpz_class lucas_l5_quartic(unsigned d, const mpz_class& u, const mpz_class& v) {
    const mpz_class u2 = u * u, v2 = v * v;
    return 5 * u2 * u2 - 10 * static_cast<long>(d) * u2 * v2 +
           static_cast<long>(d) * static_cast<long>(d) * v2 * v2;
}

EtaLift lift_eta_power(const QuadraticInteger& eta, unsigned p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::invalid_argument("lift_eta_power: p must be an odd prime");
    if (mpz_odd_p(eta.twice_u.get_mpz_t()))
        throw std::invalid_argument("lift_eta_power: eta must have integral coordinates");
    if (eta.twice_v == 0) throw std::invalid_argument("lift_eta_power: eta is rational");

    const QuadraticInteger ep = pow_quad(eta, p);
    EtaLift lift;
    lift.x = abs(ep.twice_u) / 2;
    lift.y = eta.norm();
    const mpz_class lp = lucas_term(eta, p);
    lift.z = abs(eta.twice_v / 2 * lp);
    if (ep.twice_v != eta.twice_v * lp)
        throw std::logic_error("lift_eta_power: Im(eta^p) != v L_p");

    const unsigned d = eta.d;
    auto z_exp = lift.z == 0 ? std::nullopt : factor_as_s_unit_231(lift.z);
    if (!z_exp) {
        lift.z_is_s_unit = false;
        lift.witness_prime = lift.z == 0 ? 0 : witness_prime_outside_s(lift.z);
        return lift;
    }
    lift.z_is_s_unit = true;
    auto exp = factor_as_s_unit_231(static_cast<long>(d) * lift.z * lift.z);
    if (!exp) throw std::logic_error("lift_eta_power: d z^2 must be an S-unit");
    if (lift.y >= 2) lift.candidate = Solution{lift.x, lift.y, *exp, p};
    return lift;
}

ParityDecomposition d_from_parities(const SUnitExponents& exp) {
    ParityDecomposition out;
    unsigned d = 1;
    if (exp.a % 2) d *= 2;
    if (exp.b % 2) d *= 3;
    if (exp.c % 2) d *= 11;
    out.field = quad_field(d);
    out.half_exponents = SUnitExponents{exp.a / 2, exp.b / 2, exp.c / 2};
    out.z = s_unit_value(out.half_exponents);
    return out;
}

PrimitivityResult primitive_prime_test(std::uint64_t q, const QuadraticInteger& eta, unsigned m) {
    if (q < 3 || q % 2 == 0 || !is_prime_u64(q))
        throw std::invalid_argument("primitive_prime_test: q must be an odd prime");
    if (m < 2) throw std::invalid_argument("primitive_prime_test: m must be >= 2");

    // A divisor of the discriminant (eta - conj eta)^2 = -d (2v)^2 is never
    // primitive, whether or not it divides L_m.
    const mpz_class disc_abs = static_cast<long>(eta.d) * eta.twice_v * eta.twice_v;
    if (mpz_divisible_ui_p(disc_abs.get_mpz_t(), q))
        return {Primitivity::divides_discriminant, 0};

    const mpz_class lm = lucas_term(eta, m);
    if (!mpz_divisible_ui_p(lm.get_mpz_t(), q))
        throw std::invalid_argument("primitive_prime_test: q does not divide L_m");

    const std::uint64_t P = mpz_fdiv_ui(eta.trace().get_mpz_t(), q);
    const std::uint64_t Q = mpz_fdiv_ui(eta.norm().get_mpz_t(), q);
    std::uint64_t prev = 0, cur = 1;  // L_0, L_1 mod q
    for (unsigned k = 1; k < m; ++k) {
        if (cur == 0) return {Primitivity::divides_earlier_term, k};
        const auto pc = static_cast<unsigned __int128>(P) * cur % q;
        const auto qp = static_cast<unsigned __int128>(Q) * prev % q;
        const auto next = static_cast<std::uint64_t>((pc + q - qp) % q);
        prev = cur;
        cur = next;
    }

    const int eps = legendre_symbol(mpz_class(-static_cast<long>(eta.d)), mpz_class(q));
    const bool congruent = eps == 1 ? (q - 1) % m == 0 : (q + 1) % m == 0;
    if (!congruent)
        throw std::logic_error("primitive prime " + std::to_string(q) +
                               " violates q = (-d/q) (mod " + std::to_string(m) + ")");
    return {Primitivity::primitive, 0};
}

std::vector<QuadraticInteger> defective_lookup(const QuadField& field, unsigned p) {
    if (p < 5) throw std::invalid_argument("defective_lookup: p must be >= 5");
    std::vector<QuadraticInteger> out;
    if (field.d == 11 && p == 5) {
        auto eta = QuadraticInteger::from_doubled(11, 1, 1);
        if (abs(lucas_term(eta, p)) != 1)
            throw std::logic_error("defective_lookup: |L_5| != 1 for (1+i sqrt 11)/2");
        out.push_back(eta);
        out.push_back(eta.conjugate());
    }
    return out;
}

unsigned class_number_by_forms(long disc) {
    if (disc >= 0) throw std::invalid_argument("class_number_by_forms: disc must be negative");
    const long mod4 = ((disc % 4) + 4) % 4;
    if (mod4 != 0 && mod4 != 1)
        throw std::invalid_argument("class_number_by_forms: disc must be 0 or 1 mod 4");

    unsigned count = 0;
    const long abs_disc = -disc;
    for (long a = 1; 3 * a * a <= abs_disc; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            const long num = b * b - disc;  // 4ac
            if (num % (4 * a) != 0) continue;
            const long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (a == c)) continue;       // reduced: b >= 0 when a = c
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;  // primitive
            ++count;
        }
    }
    return count;
}

bool eleven_congruence_admits(unsigned p) {
    if (p == 0) throw std::invalid_argument("eleven_congruence_admits: p must be positive");
    return 10 % p == 0 || 12 % p == 0;
}

CaseReport case_analysis_p5(unsigned d, std::uint64_t box) {
    if (d != 2 && d != 6) throw std::invalid_argument("case_analysis_p5: d must be 2 or 6");
    if (box < 1) throw std::invalid_argument("case_analysis_p5: box must be >= 1");

    CaseReport report;
    report.d = d;
    report.box = box;

    // v ranges over the {2,3}-unit shapes of the three cases.
    std::vector<std::pair<mpz_class, unsigned>> vs;  // (v, case id)
    for (mpz_class p3 = 1; p3 <= static_cast<unsigned long>(box); p3 *= 3) {
        for (mpz_class v = p3; v <= static_cast<unsigned long>(box); v *= 2) {
            unsigned case_id;
            if (p3 == 1) case_id = 1;            // v = 2^i (includes v = 1)
            else if (v == p3) case_id = 2;       // v = 3^j, j > 0
            else case_id = 3;                    // v = 2^i 3^j, i, j > 0
            vs.emplace_back(v, case_id);
        }
    }
    std::sort(vs.begin(), vs.end());

    for (mpz_class u = 1; u <= static_cast<unsigned long>(box); u += 2) {  // u odd: y is odd
        for (const auto& [v, case_id] : vs) {
            if (gcd(u, v) != 1) continue;
            ++report.scanned;
            const mpz_class l5 = lucas_l5_quartic(d, u, v);
            if (mpz_fdiv_ui(l5.get_mpz_t(), 8) != 5)
                throw std::logic_error("case_analysis_p5: L_5 != 5 (mod 8) with u odd");

            if (l5 < 0) {
                // Rational point on a case curve -k V^2 = 5U^4 - 10d U^2 + d^2?
                const mpz_class w = -l5;
                for (unsigned k : {3u, 11u, 33u}) {
                    if (!mpz_divisible_ui_p(w.get_mpz_t(), k)) continue;
                    if (auto s = integer_sqrt_exact(w / k)) {
                        CurvePreimage cp;
                        cp.u = u;
                        cp.v = v;
                        cp.curve_k = k;
                        cp.U = mpq_class(u, v);
                        cp.U.canonicalize();
                        cp.V = mpq_class(*s, v * v);
                        cp.V.canonicalize();
                        report.curve_points.push_back(std::move(cp));
                        break;
                    }
                }
            }

            const auto lift =
                lift_eta_power(QuadraticInteger::from_integers(d, u, v), 5);
            if (!lift.z_is_s_unit || !lift.candidate) continue;

            if (l5 > 0) ++report.positive_sign_lifts;  // impossible mod 8 for S-units
            const Solution& sol = *lift.candidate;
            if (case_id == 2 && sol.exp.a >= 3) ++report.case2_alpha1_positive;

            CaseCandidate cand;
            cand.case_id = case_id;
            cand.u = u;
            cand.v = v;
            cand.l5 = l5;
            cand.z = lift.z;
            cand.lifted = sol;
            const CheckResult cr = check_solution(sol);
            if (cr.status == CheckStatus::equation_fails)
                throw std::logic_error("case_analysis_p5: lifted candidate fails the equation");
            if (cr.status == CheckStatus::not_coprime)
                cand.verdict = CaseVerdict::rejected_coprimality;
            else if (sol.exp.b == 0 || sol.exp.c == 0)
                cand.verdict = CaseVerdict::rejected_b_zero;
            else
                cand.verdict = CaseVerdict::accepted;
            report.candidates.push_back(std::move(cand));
        }
    }

    auto by_uv = [](const auto& l, const auto& r) {
        return std::tie(l.u, l.v) < std::tie(r.u, r.v);
    };
    std::sort(report.candidates.begin(), report.candidates.end(), by_uv);
    std::sort(report.curve_points.begin(), report.curve_points.end(), by_uv);
    return report;
}

}  // namespace xyn
