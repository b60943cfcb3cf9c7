#include "xyn/elliptic.hpp"

#include <algorithm>

namespace xyn {

namespace {

unsigned model_modulus(ModelKind kind) { return kind == ModelKind::cubic ? 6 : 4; }

mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// S-units <= bound, ascending.
std::vector<mpz_class> s_units_up_to(std::uint64_t bound) {
    std::vector<mpz_class> out;
    const mpz_class cap(static_cast<unsigned long>(bound));
    for (mpz_class pc = 1; pc <= cap; pc *= 11)
        for (mpz_class pbc = pc; pbc <= cap; pbc *= 3)
            for (mpz_class v = pbc; v <= cap; v *= 2) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

mpz_class CurveModel::coefficient() const {
    return s_unit_value(SUnitExponents{alpha, beta, gamma});
}

std::pair<CurveModel, mpz_class> decompose(const SUnitExponents& exp, ModelKind kind) {
    const unsigned k = model_modulus(kind);
    CurveModel m{kind, exp.a % k, exp.b % k, exp.c % k};
    const mpz_class z = s_unit_value(SUnitExponents{exp.a / k, exp.b / k, exp.c / k});
    return {m, z};
}

std::vector<CurveModel> curve_family(ModelKind kind) {
    const unsigned k = model_modulus(kind);
    std::vector<CurveModel> family;
    family.reserve(k * k * k);
    for (unsigned alpha = 0; alpha < k; ++alpha)
        for (unsigned beta = 0; beta < k; ++beta)
            for (unsigned gamma = 0; gamma < k; ++gamma)
                family.push_back(CurveModel{kind, alpha, beta, gamma});
    return family;
}

bool point_on_model(const CurveModel& m, const SPoint& p) {
    const mpq_class A(m.coefficient());
    if (m.kind == ModelKind::cubic) return p.V * p.V == p.U * p.U * p.U - A;
    return p.U * p.U + A == p.V * p.V * p.V * p.V;
}

std::pair<CurveModel, SPoint> solution_to_point(const Solution& s) {
    if (s.n != 3 && s.n != 4)
        throw std::invalid_argument("solution_to_point: n must be 3 or 4");
    if (!check_solution(s).ok())
        throw std::invalid_argument("solution_to_point: not a verified solution");

    const ModelKind kind = s.n == 3 ? ModelKind::cubic : ModelKind::quartic;
    auto [model, z] = decompose(s.exp, kind);
    SPoint p;
    p.z = z;
    if (kind == ModelKind::cubic) {
        p.U = make_rational(s.y, z * z);
        p.V = make_rational(s.x, z * z * z);
    } else {
        p.U = make_rational(s.x, z * z);
        p.V = make_rational(s.y, z);
    }
    return {model, p};
}

std::optional<Solution> point_to_solution(const CurveModel& m, const SPoint& p, unsigned n) {
    if ((n == 3) != (m.kind == ModelKind::cubic) || (n != 3 && n != 4))
        throw std::invalid_argument("point_to_solution: n does not match the model kind");
    if (!point_on_model(m, p))
        throw std::invalid_argument("point_to_solution: point is not on the model");

    if (p.z < 1 || !factor_as_s_unit_231(p.z)) return std::nullopt;
    const mpz_class z2 = p.z * p.z;

    mpq_class xq, yq;
    if (m.kind == ModelKind::cubic) {
        yq = p.U * z2;
        xq = p.V * z2 * p.z;
    } else {
        xq = p.U * z2;
        yq = p.V * p.z;
    }
    if (xq.get_den() != 1 || yq.get_den() != 1) return std::nullopt;  // integrality
    mpz_class x = xq.get_num(), y = yq.get_num();
    if (x < 0 || y < 2) return std::nullopt;  // positivity

    const unsigned k = model_modulus(m.kind);
    mpz_class zk;
    mpz_pow_ui(zk.get_mpz_t(), p.z.get_mpz_t(), k);
    auto exp = factor_as_s_unit_231(m.coefficient() * zk);
    if (!exp) return std::nullopt;

    Solution s{x, y, *exp, n};
    if (!check_solution(s).ok()) return std::nullopt;  // coprimality and exactness
    return s;
}

std::vector<SPoint> bounded_point_search(const CurveModel& m, std::uint64_t z_max,
                                         std::uint64_t num_max) {
    if (z_max < 1 || num_max < 1)
        throw std::invalid_argument("bounded_point_search: bounds must be positive");
    const mpz_class A = m.coefficient();
    std::vector<SPoint> points;

    for (const mpz_class& z : s_units_up_to(z_max)) {
        const mpz_class z2 = z * z;
        mpz_class zk;
        mpz_pow_ui(zk.get_mpz_t(), z.get_mpz_t(), model_modulus(m.kind));
        const mpz_class Azk = A * zk;
        for (mpz_class num = 1; num <= static_cast<unsigned long>(num_max); ++num) {
            if (z != 1 && gcd(num, z) != 1) continue;
            if (m.kind == ModelKind::cubic) {
                // U = num/z^2, V^2 = (num^3 - A z^6) / z^6
                const mpz_class t2 = num * num * num - Azk;
                if (t2 < 0) continue;
                if (auto t = integer_sqrt_exact(t2)) {
                    SPoint p{make_rational(num, z2), make_rational(*t, z2 * z), z};
                    points.push_back(std::move(p));
                }
            } else {
                // V = num/z, U^2 = (num^4 - A z^4) / z^4
                mpz_class n4;
                mpz_pow_ui(n4.get_mpz_t(), num.get_mpz_t(), 4);
                const mpz_class t2 = n4 - Azk;
                if (t2 < 0) continue;
                if (auto t = integer_sqrt_exact(t2)) {
                    SPoint p{make_rational(*t, z2), make_rational(num, z), z};
                    points.push_back(std::move(p));
                }
            }
        }
    }
    for (const auto& p : points)
        if (!point_on_model(m, p)) throw std::logic_error("bounded_point_search: unsound point");
    return points;
}

}  // namespace xyn
