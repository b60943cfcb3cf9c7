// Python bindings for the solver core. Integers cross the boundary as
// arbitrary-precision python ints (decimal-string bridge to GMP).

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xyn/elliptic.hpp"
#include "xyn/lucas.hpp"
#include "xyn/oracle.hpp"
#include "xyn/tables.hpp"

namespace py = pybind11;
using namespace xyn;

namespace {

py::int_ to_int(const mpz_class& z) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(py::handle h) { return mpz_class(py::str(h).cast<std::string>()); }

py::tuple to_pair(const mpq_class& q) {
    return py::make_tuple(to_int(q.get_num()), to_int(q.get_den()));
}

py::dict solution_dict(const Solution& s) {
    py::dict d;
    d["x"] = to_int(s.x);
    d["y"] = to_int(s.y);
    d["a"] = s.exp.a;
    d["b"] = s.exp.b;
    d["c"] = s.exp.c;
    d["n"] = s.n;
    return d;
}

Solution solution_from_args(py::handle x, py::handle y, unsigned a, unsigned b, unsigned c,
                            unsigned n) {
    return Solution{to_mpz(x), to_mpz(y), {a, b, c}, n};
}

ModelKind kind_from_string(const std::string& kind) {
    if (kind == "cubic") return ModelKind::cubic;
    if (kind == "quartic") return ModelKind::quartic;
    throw std::invalid_argument("kind must be 'cubic' or 'quartic'");
}

}  // namespace

PYBIND11_MODULE(xyn, m) {
    m.doc() = "solver/verifier for x^2 + 2^a 3^b 11^c = y^n with x, y coprime";

    // arithmetic primitives
    m.def("s_unit_value",
          [](unsigned a, unsigned b, unsigned c) { return to_int(s_unit_value({a, b, c})); },
          py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("factor_as_s_unit",
          [](py::handle value, const std::vector<unsigned long>& primes) -> py::object {
              auto exps = factor_as_s_unit(to_mpz(value), primes);
              if (!exps) return py::none();
              return py::cast(*exps);
          },
          py::arg("value"), py::arg("primes") = std::vector<unsigned long>{2, 3, 11});
    m.def("integer_sqrt_exact", [](py::handle v) -> py::object {
        auto r = integer_sqrt_exact(to_mpz(v));
        return r ? py::object(to_int(*r)) : py::none();
    });
    m.def("nth_root_exact", [](py::handle v, unsigned n) -> py::object {
        auto r = nth_root_exact(to_mpz(v), n);
        return r ? py::object(to_int(*r)) : py::none();
    });
    m.def("legendre_symbol",
          [](py::handle a, py::handle q) { return legendre_symbol(to_mpz(a), to_mpz(q)); });
    m.def("largest_prime_factor",
          [](py::handle k) { return to_int(largest_prime_factor(to_mpz(k))); });

    // equation model
    m.def("check_solution",
          [](py::handle x, py::handle y, unsigned a, unsigned b, unsigned c, unsigned n) {
              const CheckResult r = check_solution(solution_from_args(x, y, a, b, c, n));
              py::dict d;
              d["status"] = r.status == CheckStatus::valid          ? "valid"
                            : r.status == CheckStatus::equation_fails ? "equation-fails"
                                                                      : "not-coprime";
              d["witness"] = to_int(r.witness);
              return d;
          },
          py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"));
    m.def("canonical_exponents", [](unsigned n) {
        const auto s = canonical_exponents(n);
        return std::vector<unsigned>(s.begin(), s.end());
    });
    m.def("descend_solution",
          [](py::handle x, py::handle y, unsigned a, unsigned b, unsigned c, unsigned n,
             unsigned d) {
              return solution_dict(descend_solution(solution_from_args(x, y, a, b, c, n), d));
          });
    m.def("mod8_admissible", [](unsigned a, unsigned b, unsigned c, bool x_odd) {
        return mod8_admissible({a, b, c}, x_odd ? Parity::odd : Parity::even);
    });

    // oracle
    m.def("enumerate_solutions",
          [](unsigned n, std::uint64_t y_max, bool require_bc_positive, unsigned workers) {
              py::list out;
              for (const auto& s :
                   enumerate_solutions({n, y_max, require_bc_positive, workers}))
                  out.append(solution_dict(s));
              return out;
          },
          py::arg("n"), py::arg("y_max"), py::arg("require_bc_positive") = false,
          py::arg("workers") = 0);
    m.def("smooth_exponent_scan",
          [](unsigned n_max, std::uint64_t y_max) {
              py::dict out;
              for (const auto& [n, count] : smooth_exponent_scan(n_max, y_max))
                  out[py::int_(n)] = count;
              return out;
          },
          py::arg("n_max"), py::arg("y_max"));

    // elliptic reductions
    m.def("decompose",
          [](unsigned a, unsigned b, unsigned c, const std::string& kind) {
              const auto [model, z] = decompose({a, b, c}, kind_from_string(kind));
              py::dict d;
              d["alpha"] = model.alpha;
              d["beta"] = model.beta;
              d["gamma"] = model.gamma;
              d["A"] = to_int(model.coefficient());
              d["z"] = to_int(z);
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("kind"));
    m.def("curve_family_size",
          [](const std::string& kind) { return curve_family(kind_from_string(kind)).size(); });
    m.def("solution_to_point",
          [](py::handle x, py::handle y, unsigned a, unsigned b, unsigned c, unsigned n) {
              const auto [model, p] = solution_to_point(solution_from_args(x, y, a, b, c, n));
              py::dict d;
              d["alpha"] = model.alpha;
              d["beta"] = model.beta;
              d["gamma"] = model.gamma;
              d["U"] = to_pair(p.U);
              d["V"] = to_pair(p.V);
              d["z"] = to_int(p.z);
              return d;
          });

    // Lucas engine
    py::class_<QuadraticInteger>(m, "QuadraticInteger")
        .def_static("from_integers",
                    [](unsigned d, py::handle u, py::handle v) {
                        return QuadraticInteger::from_integers(d, to_mpz(u), to_mpz(v));
                    })
        .def_static("from_doubled",
                    [](unsigned d, py::handle tu, py::handle tv) {
                        return QuadraticInteger::from_doubled(d, to_mpz(tu), to_mpz(tv));
                    })
        .def_property_readonly("d", [](const QuadraticInteger& e) { return e.d; })
        .def_property_readonly("twice_u",
                               [](const QuadraticInteger& e) { return to_int(e.twice_u); })
        .def_property_readonly("twice_v",
                               [](const QuadraticInteger& e) { return to_int(e.twice_v); })
        .def("conjugate", &QuadraticInteger::conjugate)
        .def("norm", [](const QuadraticInteger& e) { return to_int(e.norm()); })
        .def("trace", [](const QuadraticInteger& e) { return to_int(e.trace()); })
        .def(py::self * py::self)
        .def(py::self + py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const QuadraticInteger& e, unsigned m) { return pow_quad(e, m); })
        .def("__repr__", [](const QuadraticInteger& e) {
            return "QuadraticInteger(d=" + std::to_string(e.d) + ", 2u=" + e.twice_u.get_str() +
                   ", 2v=" + e.twice_v.get_str() + ")";
        });

    m.def("quad_field", [](unsigned d) {
        const QuadField f = quad_field(d);
        py::dict out;
        out["d"] = f.d;
        out["allows_half_coordinates"] = f.allows_half_coordinates;
        out["class_number"] = f.class_number;
        out["unit_group_order"] = f.unit_group_order;
        out["discriminant"] = f.discriminant;
        return out;
    });
    m.def("lucas_term",
          [](const QuadraticInteger& eta, unsigned m) { return to_int(lucas_term(eta, m)); });
    m.def("lucas_l5_quartic", [](unsigned d, py::handle u, py::handle v) {
        return to_int(lucas_l5_quartic(d, to_mpz(u), to_mpz(v)));
    });
    m.def("lift_eta_power", [](const QuadraticInteger& eta, unsigned p) {
        const EtaLift lift = lift_eta_power(eta, p);
        py::dict d;
        d["x"] = to_int(lift.x);
        d["z"] = to_int(lift.z);
        d["y"] = to_int(lift.y);
        d["z_is_s_unit"] = lift.z_is_s_unit;
        d["witness_prime"] = lift.witness_prime;
        d["candidate"] = lift.candidate ? py::object(solution_dict(*lift.candidate)) : py::none();
        return d;
    });
    m.def("d_from_parities", [](unsigned a, unsigned b, unsigned c) {
        const auto pd = d_from_parities({a, b, c});
        py::dict d;
        d["d"] = pd.field.d;
        d["z"] = to_int(pd.z);
        d["half_exponents"] =
            py::make_tuple(pd.half_exponents.a, pd.half_exponents.b, pd.half_exponents.c);
        return d;
    });
    m.def("primitive_prime_test", [](std::uint64_t q, const QuadraticInteger& eta, unsigned m) {
        const auto r = primitive_prime_test(q, eta, m);
        switch (r.status) {
            case Primitivity::primitive: return std::string("primitive");
            case Primitivity::divides_discriminant:
                return std::string("not-primitive(divides discriminant)");
            case Primitivity::divides_earlier_term:
                return "not-primitive(divides L_" + std::to_string(r.earlier_index) + ")";
        }
        return std::string("?");
    });
    m.def("defective_lookup", [](unsigned d, unsigned p) {
        return defective_lookup(quad_field(d), p);
    });
    m.def("class_number_by_forms", &class_number_by_forms, py::arg("disc"));
    m.def("eleven_congruence_admits", &eleven_congruence_admits, py::arg("p"));
    m.def("case_analysis_p5", [](unsigned d, std::uint64_t box) {
        const CaseReport rep = case_analysis_p5(d, box);
        py::dict out;
        out["d"] = rep.d;
        out["box"] = rep.box;
        out["scanned"] = rep.scanned;
        out["positive_sign_lifts"] = rep.positive_sign_lifts;
        out["case2_alpha1_positive"] = rep.case2_alpha1_positive;
        py::list cands;
        for (const auto& c : rep.candidates) {
            py::dict j;
            j["case"] = c.case_id;
            j["u"] = to_int(c.u);
            j["v"] = to_int(c.v);
            j["l5"] = to_int(c.l5);
            j["z"] = to_int(c.z);
            j["solution"] = solution_dict(c.lifted);
            j["verdict"] = c.verdict == CaseVerdict::accepted            ? "accepted"
                           : c.verdict == CaseVerdict::rejected_b_zero   ? "rejected-b-zero"
                                                                         : "rejected-coprimality";
            cands.append(j);
        }
        out["candidates"] = cands;
        py::list points;
        for (const auto& cp : rep.curve_points) {
            py::dict j;
            j["u"] = to_int(cp.u);
            j["v"] = to_int(cp.v);
            j["curve_k"] = cp.curve_k;
            j["U"] = to_pair(cp.U);
            j["V"] = to_pair(cp.V);
            points.append(j);
        }
        out["curve_points"] = points;
        return out;
    }, py::arg("d"), py::arg("box") = 1000);

    // tables
    m.def("ingest_tables", [](const std::string& path) {
        py::list out;
        for (const auto& r : ingest_tables(path)) {
            py::dict d;
            d["table"] = r.table_id;
            d["n"] = r.n;
            d["alpha"] = r.alpha;
            d["beta"] = r.beta;
            d["gamma"] = r.gamma;
            d["z"] = to_int(r.z_claimed);
            d["a"] = r.exp.a;
            d["b"] = r.exp.b;
            d["c"] = r.exp.c;
            d["x"] = to_int(r.x);
            d["y"] = to_int(r.y);
            out.append(d);
        }
        return out;
    });
}
