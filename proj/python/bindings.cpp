#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kohn/asymptotics.hpp"
#include "kohn/genfunc.hpp"
#include "kohn/invariant.hpp"
#include "kohn/isospectral.hpp"
#include "kohn/sphere.hpp"
#include "kohn/spectrum.hpp"

namespace py = pybind11;
using namespace kohn;

namespace {

py::int_ to_py(const BigInt& value) {
    return py::int_(py::str(value.str()));
}

py::object to_py(const BigRational& value) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(boost::multiprecision::numerator(value)), to_py(boost::multiprecision::denominator(value)));
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.size(); ++i) {
        py::list row;
        for (int j = 0; j < m.size(); ++j) row.append(m(i, j));
        rows.append(row);
    }
    return rows;
}

py::tuple bound_to_py(const BoundCheck& c) {
    return py::make_tuple(to_py(c.lhs), to_py(c.rhs), c.holds);
}

} // namespace

PYBIND11_MODULE(_kohn_lens, m) {
    m.doc() = "Exact Kohn Laplacian spectra on spheres and lens spaces";
    m.attr("__version__") = "0.1.0";

    static py::handle kohn_error = py::exception<Error>(m, "KohnError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object type = py::reinterpret_borrow<py::object>(kohn_error);
            py::object exc = type(std::string(to_string(e.code())) + ": " + e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(kohn_error.ptr(), exc.ptr());
        }
    });

    py::class_<LensSpace>(m, "LensSpace")
        .def(py::init([](int k, std::vector<std::int64_t> weights) {
                 return make_lens_space(static_cast<int>(weights.size()), k, weights);
             }),
             py::arg("k"), py::arg("weights"))
        .def_static("parse", [](const std::string& text) { return parse_lens_space(text); })
        .def_property_readonly("n", &LensSpace::n)
        .def_property_readonly("k", &LensSpace::k)
        .def_property_readonly("weights",
                               [](const LensSpace& l) { return std::vector<int>(l.weights().begin(), l.weights().end()); })
        .def("__eq__", [](const LensSpace& a, const LensSpace& b) { return a == b; })
        .def("__str__", &format_lens_space)
        .def("__repr__", [](const LensSpace& l) { return "LensSpace('" + format_lens_space(l) + "')"; });

    m.def("sphere", &sphere, py::arg("n"));
    m.def("gcd_invariant", &gcd_invariant);

    m.def("dim_hpq", [](int n, int p, int q) { return to_py(dim_hpq(n, {p, q})); });
    m.def("eigenvalue", [](int n, int p, int q) { return eigenvalue(n, {p, q}).value; });
    m.def("sphere_counting", [](int n, std::int64_t lambda) { return to_py(sphere_counting(n, lambda)); });

    m.def(
        "dim_invariant",
        [](const LensSpace& lens, int p, int q, const std::string& method, std::uint64_t budget) {
            const Bidegree b{p, q};
            if (method == "bruteforce") return to_py(dim_invariant_bruteforce(lens, b, budget));
            if (method == "recurrence") return to_py(dim_invariant_recurrence(lens, b));
            if (method == "dp") return to_py(dim_invariant_dp(lens, b));
            throw py::value_error("method must be 'dp', 'bruteforce' or 'recurrence'");
        },
        py::arg("lens"), py::arg("p"), py::arg("q"), py::arg("method") = "dp",
        py::arg("budget") = kDefaultEnumerationBudget);
    m.def("mn_counts", [](const LensSpace& lens, int p, int q) {
        const auto c = mn_counts(lens, {p, q});
        return py::make_tuple(c.m_pq, c.n_pq);
    });

    m.def("multiplicity", [](const LensSpace& lens, std::int64_t lambda) { return to_py(multiplicity(lens, lambda)); });
    m.def("lens_counting", [](const LensSpace& lens, std::int64_t lambda) { return to_py(lens_counting(lens, lambda)); });
    m.def(
        "build_spectrum",
        [](const LensSpace& lens, std::int64_t lambda_max, std::uint64_t budget) {
            py::dict out;
            for (const auto& [lambda, entry] : build_spectrum(lens, lambda_max, budget).entries) {
                py::list contributors;
                for (const auto& c : entry.contributors) {
                    contributors.append(py::make_tuple(c.bidegree.p, c.bidegree.q, to_py(c.dim)));
                }
                out[py::int_(lambda)] = py::make_tuple(to_py(entry.multiplicity), contributors);
            }
            return out;
        },
        py::arg("lens"), py::arg("lambda_max"), py::arg("budget") = kDefaultEnumerationBudget,
        "Map eigenvalue -> (multiplicity, [(p, q, dim), ...]).");

    m.def(
        "weyl_ratio_series",
        [](const LensSpace& lens, std::int64_t lambda_max, std::int64_t stride) {
            py::list out;
            for (const auto& s : weyl_ratio_series(lens, lambda_max, stride)) {
                out.append(py::make_tuple(s.lambda, to_py(s.n_lens), to_py(s.n_sphere), to_py(s.ratio)));
            }
            return out;
        },
        py::arg("lens"), py::arg("lambda_max"), py::arg("stride"));
    m.def(
        "universal_constant",
        [](int n, double truncation, double tolerance, int max_refinements) {
            return universal_constant(n, {truncation, tolerance, max_refinements});
        },
        py::arg("n"), py::arg("truncation") = 50.0, py::arg("tolerance") = 1e-10, py::arg("max_refinements") = 50);
    m.def("check_lower_bound", [](std::int64_t N, std::int64_t mm, std::int64_t d, int n) {
        return bound_to_py(check_lower_bound({N, mm, d, n}));
    });
    m.def("check_upper_bound", [](std::int64_t N, std::int64_t mm, std::int64_t d, int n) {
        return bound_to_py(check_upper_bound({N, mm, d, n}));
    });
    m.def("lemma_ratio", [](int n, std::int64_t lambda) { return to_py(lemma_ratio_exact(n, lambda)); });

    m.def(
        "condition4_witness",
        [](const LensSpace& a, const LensSpace& b) -> py::object {
            const auto w = condition4_witness(a, b);
            if (!w) return py::none();
            return py::make_tuple(w->a, w->sigma);
        },
        "(a, sigma) with sigma 0-based, or None.");
    m.def("spectra_equal_up_to", &spectra_equal_up_to);
    m.def("dims_equal", &dims_equal, py::arg("lens"), py::arg("other"), py::arg("p_max") = 0, py::arg("q_max") = 0);
    m.def("d_invariant_check", &d_invariant_check);
    m.def("c_matrix", [](int k, std::int64_t lambda) { return matrix_to_py(c_matrix(k, lambda).entries); });
    m.def("span_dimension", &span_dimension);
    m.def("classify_all", [](int k) {
        py::list out;
        for (const auto& c : classify_all(k).classes) {
            py::dict item;
            item["representative"] = c.representative;
            item["members"] = c.members;
            item["d"] = c.d;
            out.append(item);
        }
        return out;
    });

    m.def("genfunc_closed",
          [](const LensSpace& lens, Complex z, Complex w) { return genfunc_closed(lens, {z, w}); });
    m.def("genfunc_series", [](const LensSpace& lens, Complex z, Complex w, int p_max, int q_max) {
        return genfunc_series(lens, {z, w}, p_max, q_max);
    });
    m.def("independence_probe", [](int k, const std::vector<std::pair<Complex, Complex>>& points) {
        std::vector<GenFuncPoint> pts;
        for (const auto& [z, w] : points) pts.push_back({z, w});
        return independence_probe(k, pts);
    });
}
