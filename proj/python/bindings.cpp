#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hsq/adhm.hpp"
#include "hsq/cli.hpp"
#include "hsq/errors.hpp"
#include "hsq/json_io.hpp"
#include "hsq/oracle.hpp"
#include "hsq/quiver.hpp"
#include "hsq/toric.hpp"

namespace py = pybind11;

namespace {

using hsq::BigInt;
using hsq::BigRat;
using hsq::IntMatrix;
using hsq::LaurentPolynomial;

py::int_ to_py(const BigInt& x) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(x.str().c_str(), nullptr, 10));
}

// Polynomials cross the boundary as {exponent: coefficient} dicts.
py::dict poly_to_dict(const LaurentPolynomial& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
    return d;
}

IntMatrix to_matrix(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (long long v : r) m.back().emplace_back(v);
    }
    return m;
}

hsq::ToricInstance make_toric(const std::vector<std::vector<long long>>& matrix,
                              const std::optional<std::vector<long long>>& xi) {
    if (!xi) return hsq::ToricInstance(to_matrix(matrix));
    std::vector<BigRat> level;
    for (long long v : *xi) level.emplace_back(v);
    return hsq::ToricInstance(to_matrix(matrix), std::move(level));
}

// Instances arrive as the same JSON documents the command line reads,
// either as a string or as a plain dict.
hsq::RepresentationInstance parse_instance(const py::object& spec) {
    std::string text;
    if (py::isinstance<py::str>(spec)) {
        text = spec.cast<std::string>();
    } else {
        text = py::module_::import("json").attr("dumps")(spec).cast<std::string>();
    }
    return hsq::representation_from_json(hsq::parse_json_text(text));
}

hsq::OracleOptions make_options(long long budget, int workers) {
    hsq::OracleOptions opts;
    opts.budget = BigInt(budget);
    opts.workers = workers;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Point counts and Poincare polynomials of holomorphic "
              "symplectic quotients";

    py::register_exception<hsq::validation_error>(m, "ValidationError",
                                                  PyExc_ValueError);
    py::register_exception<hsq::internal_error>(m, "InternalError",
                                                PyExc_RuntimeError);

    m.def(
        "toric_count",
        [](const std::vector<std::vector<long long>>& matrix,
           const std::optional<std::vector<long long>>& xi) {
            return poly_to_dict(hsq::toric_count_polynomial(make_toric(matrix, xi)));
        },
        py::arg("matrix"), py::arg("xi") = py::none(),
        "Count polynomial in q of the hypertoric instance, as {exponent: coefficient}.");

    m.def(
        "toric_poincare",
        [](const std::vector<std::vector<long long>>& matrix,
           const std::optional<std::vector<long long>>& xi) {
            return poly_to_dict(hsq::toric_poincare(make_toric(matrix, xi)));
        },
        py::arg("matrix"), py::arg("xi") = py::none(),
        "Poincare polynomial in t of the hypertoric instance.");

    m.def(
        "toric_h_dual",
        [](const std::vector<std::vector<long long>>& matrix) {
            return poly_to_dict(
                hsq::h_polynomial(hsq::gale_dual(make_toric(matrix, std::nullopt))));
        },
        py::arg("matrix"),
        "h-polynomial of the Gale-dual matroid's independence complex.");

    m.def(
        "adhm_count",
        [](int n, int k) { return poly_to_dict(hsq::adhm_count(n, k)); },
        py::arg("n"), py::arg("k"),
        "Count polynomial of the rank-n, framing-k instance.");

    m.def(
        "adhm_poincare",
        [](int n, int k) {
            if (n == 0) {
                py::dict d;
                d[py::int_(0)] = py::int_(1);
                return d;
            }
            auto series = hsq::adhm_poincare_series(k, n);
            return poly_to_dict(series.coeff({n}).as_laurent());
        },
        py::arg("n"), py::arg("k"),
        "Poincare polynomial of the rank-n, framing-k instance.");

    m.def(
        "quiver_count",
        [](int vertices, const std::vector<std::pair<int, int>>& edges,
           const std::vector<int>& w, const std::vector<int>& v) {
            hsq::QuiverQuery query(hsq::Quiver(vertices, edges), w, v);
            return poly_to_dict(hsq::quiver_count(query, v));
        },
        py::arg("vertices"), py::arg("edges"), py::arg("w"), py::arg("v"),
        "Count polynomial of a framed quiver variety; edges use 0-based vertices.");

    m.def(
        "quiver_poincare",
        [](int vertices, const std::vector<std::pair<int, int>>& edges,
           const std::vector<int>& w, const std::vector<int>& v) {
            hsq::QuiverQuery query(hsq::Quiver(vertices, edges), w, v);
            return poly_to_dict(hsq::quiver_poincare(query, v));
        },
        py::arg("vertices"), py::arg("edges"), py::arg("w"), py::arg("v"));

    m.def(
        "quiver_dimension",
        [](int vertices, const std::vector<std::pair<int, int>>& edges,
           const std::vector<int>& w, const std::vector<int>& v) {
            return hsq::quiver_dimension(hsq::Quiver(vertices, edges), v, w);
        },
        py::arg("vertices"), py::arg("edges"), py::arg("w"), py::arg("v"),
        "Complex dimension of the quiver variety.");

    m.def(
        "brute_force_count",
        [](const py::object& instance, std::int64_t p, long long budget,
           int workers) {
            return to_py(hsq::brute_force_count(parse_instance(instance), p,
                                                make_options(budget, workers)));
        },
        py::arg("instance"), py::arg("p"), py::arg("budget") = 100000000LL,
        py::arg("workers") = 1,
        "Number of moment-map solutions over F_p by direct enumeration.");

    m.def(
        "character_sum_count",
        [](const py::object& instance, std::int64_t p, long long budget,
           int workers) {
            return to_py(hsq::character_sum_count(parse_instance(instance), p,
                                                  make_options(budget, workers)));
        },
        py::arg("instance"), py::arg("p"), py::arg("budget") = 100000000LL,
        py::arg("workers") = 1,
        "The same solution count through the additive character sum.");

    m.def(
        "is_good_prime",
        [](const py::object& instance, std::int64_t p) {
            return hsq::is_good_prime(parse_instance(instance), p);
        },
        py::arg("instance"), py::arg("p"));

    m.def(
        "interpolate_count",
        [](const py::object& instance, const std::vector<std::int64_t>& primes,
           int degree_bound, long long budget, int workers) {
            auto inst = parse_instance(instance);
            auto opts = make_options(budget, workers);
            auto poly = degree_bound < 0
                            ? hsq::interpolate_count(inst, primes, opts)
                            : hsq::interpolate_count(inst, primes, degree_bound, opts);
            return poly_to_dict(poly);
        },
        py::arg("instance"), py::arg("primes"), py::arg("degree_bound") = -1,
        py::arg("budget") = 100000000LL, py::arg("workers") = 1,
        "Count polynomial reconstructed from per-prime solution counts.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            auto result = hsq::run_cli(args);
            return py::make_tuple(result.status, result.out, result.err);
        },
        py::arg("args"), "Invoke the command driver; returns (status, stdout, stderr).");
}
