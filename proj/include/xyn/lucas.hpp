#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xyn/equation.hpp"

namespace xyn {

// The eight imaginary quadratic fields Q(i sqrt(d)) arising from the
// parities of (a, b, c). Half-integer coordinates occur only for
// d = 3, 11 (where -d = 1 mod 4).
struct QuadField {
    unsigned d = 1;
    bool allows_half_coordinates = false;
    unsigned class_number = 1;
    unsigned unit_group_order = 2;
    long discriminant = -4;

    friend bool operator==(const QuadField&, const QuadField&) = default;
};

inline constexpr unsigned kFieldDs[8] = {1, 2, 3, 6, 11, 22, 33, 66};

// Validated constructor; class_number comes from class_number_by_forms.
QuadField quad_field(unsigned d);

// (twice_u + twice_v * i sqrt(d)) / 2 with twice_u = twice_v (mod 2);
// odd pairs are admitted only in the two half-coordinate fields.
struct QuadraticInteger {
    unsigned d = 1;
    mpz_class twice_u;
    mpz_class twice_v;

    static QuadraticInteger from_integers(unsigned d, const mpz_class& u, const mpz_class& v);
    // Doubled coordinates; throws on parity/field violations.
    static QuadraticInteger from_doubled(unsigned d, const mpz_class& tu, const mpz_class& tv);

    QuadraticInteger conjugate() const;
    mpz_class norm() const;   // u^2 + d v^2
    mpz_class trace() const;  // 2u, always an integer
    bool is_rational_integer() const { return twice_v == 0; }

    friend bool operator==(const QuadraticInteger&, const QuadraticInteger&) = default;
};

QuadraticInteger operator+(const QuadraticInteger& lhs, const QuadraticInteger& rhs);
QuadraticInteger operator-(const QuadraticInteger& lhs, const QuadraticInteger& rhs);
QuadraticInteger operator*(const QuadraticInteger& lhs, const QuadraticInteger& rhs);

QuadraticInteger pow_quad(const QuadraticInteger& base, unsigned m);

// L_m of the pair (eta, conj eta) through the integer recurrence
// L_0 = 0, L_1 = 1, L_{m+1} = P L_m - Q L_{m-1}, P = trace, Q = norm.
// Throws when eta is rational (eta = conj eta).
mpz_class lucas_term(const QuadraticInteger& eta, unsigned m);

// Closed form L_5 = 5u^4 - 10d u^2 v^2 + d^2 v^4.
mpz_class lucas_l5_quartic(unsigned d, const mpz_class& u, const mpz_class& v);

// Candidate solution lifted from x + i sqrt(d) z = eta^p.
struct EtaLift {
    mpz_class x;  // |Re(eta^p)|
    mpz_class z;  // |v * L_p|
    mpz_class y;  // norm(eta)
    bool z_is_s_unit = false;
    std::uint64_t witness_prime = 0;      // a prime of z outside {2,3,11}
    std::optional<Solution> candidate;    // set when z is an S-unit
};

// p an odd prime; eta must have integral coordinates (the d = 2, 6 cases).
EtaLift lift_eta_power(const QuadraticInteger& eta, unsigned p);

// d = 2^(a mod 2) 3^(b mod 2) 11^(c mod 2) and the cofactor z with
// C = d z^2, z = 2^(a/2) 3^(b/2) 11^(c/2).
struct ParityDecomposition {
    QuadField field;
    SUnitExponents half_exponents;  // (floor(a/2), floor(b/2), floor(c/2))
    mpz_class z;
};

ParityDecomposition d_from_parities(const SUnitExponents& exp);

enum class Primitivity { primitive, divides_discriminant, divides_earlier_term };

struct PrimitivityResult {
    Primitivity status = Primitivity::primitive;
    unsigned earlier_index = 0;  // the k < m with q | L_k, when applicable

    bool is_primitive() const { return status == Primitivity::primitive; }
};

// Requires q an odd prime dividing L_m(eta). A primitive q must satisfy
// q = (-d/q) (mod m); a violation is reported as std::logic_error since
// it would falsify the engine itself.
PrimitivityResult primitive_prime_test(std::uint64_t q, const QuadraticInteger& eta, unsigned m);

// Defective pairs (L_p without primitive divisor, p >= 5) whose roots lie
// in one of the eight fields: only (1 +- i sqrt(11))/2 at p = 5.
std::vector<QuadraticInteger> defective_lookup(const QuadField& field, unsigned p);

// Class number of the order of discriminant `disc` (< 0, = 0 or 1 mod 4)
// by counting reduced primitive binary quadratic forms.
unsigned class_number_by_forms(long disc);

// 11 = +-1 (mod p): the congruence a primitive 11 | L_p forces. Among
// primes p >= 5 it holds only for p = 5.
bool eleven_congruence_admits(unsigned p);

// One (u, v) surviving the p = 5 case analysis, with its verdict.
enum class CaseVerdict { accepted, rejected_b_zero, rejected_coprimality };

struct CaseCandidate {
    unsigned case_id = 0;  // 1: v a 2-power, 2: v a 3-power, 3: mixed
    mpz_class u;
    mpz_class v;
    mpz_class l5;
    mpz_class z;  // |v * L_5|
    Solution lifted;
    CaseVerdict verdict = CaseVerdict::accepted;
};

// A (u, v) whose L_5 lands on one of the quartic case curves
// -k V^2 = 5 U^4 - 10d U^2 + d^2 (k the squarefree part of -L_5),
// whether or not the lift is an S-unit.
struct CurvePreimage {
    mpz_class u;
    mpz_class v;
    unsigned curve_k = 0;  // 3, 11, or 33
    mpq_class U;           // u / v
    mpq_class V;           // sqrt(-L5 / k) / v^2
};

struct CaseReport {
    unsigned d = 2;
    std::uint64_t box = 0;
    std::vector<CaseCandidate> candidates;     // S-unit lifts, classified
    std::vector<CurvePreimage> curve_points;
    std::size_t scanned = 0;
    // Branches the mod-8 congruences force empty; nonzero = discrepancy.
    std::size_t positive_sign_lifts = 0;       // L_5 > 0 with S-unit z
    std::size_t case2_alpha1_positive = 0;     // case-2 lift with alpha_1 > 0
};

// Replays the p = 5 analysis for d in {2, 6}: scans coprime (u, v) with
// u odd, v a {2,3}-unit, 1 <= u, v <= box, and lifts every (u, v) whose
// |v * L_5| is an S-unit.
CaseReport case_analysis_p5(unsigned d, std::uint64_t box);

}  // namespace xyn
