#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "xyn/equation.hpp"

namespace xyn {

enum class ModelKind { cubic, quartic };

// Reduced model obtained by pulling sixth (cubic) or fourth (quartic)
// powers out of C: V^2 = U^3 - A, respectively U^2 + A = V^4, with
// A = 2^alpha 3^beta 11^gamma, exponents in {0..5} resp. {0..3}.
struct CurveModel {
    ModelKind kind = ModelKind::cubic;
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned gamma = 0;

    mpz_class coefficient() const;  // A

    friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

// An S-rational point with S-unit denominator scale z:
// cubic  U = y/z^2, V = x/z^3; quartic U = x/z^2, V = y/z.
struct SPoint {
    mpq_class U;
    mpq_class V;
    mpz_class z;
};

// Splits 2^a 3^b 11^c = A * z^6 (cubic) or A * z^4 (quartic).
std::pair<CurveModel, mpz_class> decompose(const SUnitExponents& exp, ModelKind kind);

// All 216 cubic / 64 quartic models, exponents in lexicographic order.
std::vector<CurveModel> curve_family(ModelKind kind);

// Maps a verified solution with n in {3,4} to its model and point.
std::pair<CurveModel, SPoint> solution_to_point(const Solution& s);

// Inverse lift; nullopt when the reconstruction violates integrality,
// positivity, or coprimality. n must match the model kind (3 or 4).
std::optional<Solution> point_to_solution(const CurveModel& m, const SPoint& p, unsigned n);

// All points of the model with z an S-unit <= z_max and numerators
// <= num_max, nonnegative branch. Sound everywhere, complete in the box.
std::vector<SPoint> bounded_point_search(const CurveModel& m, std::uint64_t z_max,
                                         std::uint64_t num_max);

// True iff the point satisfies its model equation exactly.
bool point_on_model(const CurveModel& m, const SPoint& p);

}  // namespace xyn
