#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numrad/extremal.hpp"
#include "numrad/matrix.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/pattern.hpp"
#include "numrad/radius.hpp"
#include "numrad/simplex.hpp"
#include "numrad/verify.hpp"

namespace py = pybind11;
using namespace numrad;

namespace {

ComplexMatrix matrix_from_list(const std::vector<std::vector<Complex>>& rows) {
    return ComplexMatrix::from_rows(rows);
}

std::vector<std::vector<Complex>> matrix_to_list(const ComplexMatrix& a) {
    const int n = a.order();
    std::vector<std::vector<Complex>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(a(i, j));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "numerical radius, zero-pattern clique numbers and the sharp bounds relating them";

    py::class_<ComplexMatrix>(m, "Matrix")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init(&matrix_from_list), py::arg("rows"))
        .def_property_readonly("n", &ComplexMatrix::order)
        .def("__getitem__",
             [](const ComplexMatrix& a, std::pair<int, int> ij) {
                 if (ij.first < 0 || ij.first >= a.order() || ij.second < 0 ||
                     ij.second >= a.order())
                     throw py::index_error();
                 return a(ij.first, ij.second);
             })
        .def("__setitem__",
             [](ComplexMatrix& a, std::pair<int, int> ij, Complex v) {
                 if (ij.first < 0 || ij.first >= a.order() || ij.second < 0 ||
                     ij.second >= a.order())
                     throw py::index_error();
                 a(ij.first, ij.second) = v;
                 a.validate();
             })
        .def("to_rows", &matrix_to_list)
        .def("__repr__", [](const ComplexMatrix& a) {
            return "Matrix(n=" + std::to_string(a.order()) + ")";
        });

    m.def("quadratic_form",
          [](const ComplexMatrix& a, const std::vector<Complex>& x) {
              return quadratic_form(a, std::span<const Complex>(x));
          },
          py::arg("a"), py::arg("x"));
    m.def("frobenius_norm_sq", &frobenius_norm_sq, py::arg("a"));
    m.def("is_hermitian", &is_hermitian, py::arg("a"), py::arg("tol") = 0.0);
    m.def("has_zero_diagonal", &has_zero_diagonal, py::arg("a"), py::arg("tol") = 0.0);
    m.def("scale", &scale, py::arg("a"), py::arg("c"));

    m.def("omega",
          [](const ComplexMatrix& a, double tol) {
              return omega_exact(extract_pattern(a, tol));
          },
          py::arg("a"), py::arg("tol") = 0.0,
          "exact clique number of the bidirectional-nonzero pattern");
    m.def("pattern_mass",
          [](const ComplexMatrix& a, const std::vector<Complex>& y, double tol) {
              return pattern_mass(a, UnitVector::checked(y), tol);
          },
          py::arg("a"), py::arg("y"), py::arg("tol") = 0.0);

    py::class_<RadiusResult>(m, "RadiusResult")
        .def_readonly("value", &RadiusResult::value)
        .def_readonly("theta_star", &RadiusResult::theta_star)
        .def_property_readonly("witness",
                               [](const RadiusResult& r) { return r.witness.coords; })
        .def_readonly("iterations", &RadiusResult::iterations)
        .def("__repr__", [](const RadiusResult& r) {
            return "RadiusResult(value=" + std::to_string(r.value) + ")";
        });
    m.def("numerical_radius",
          [](const ComplexMatrix& a) { return numerical_radius(a); }, py::arg("a"));
    m.def("spectral_radius_hermitian", &spectral_radius_hermitian, py::arg("a"));

    py::class_<MSResult>(m, "MSResult")
        .def_readonly("value", &MSResult::value)
        .def_property_readonly("argmax", [](const MSResult& r) { return r.argmax.coords; })
        .def_readonly("restarts_used", &MSResult::restarts_used)
        .def_readonly("converged", &MSResult::converged);
    m.def("general_simplex_max", &general_simplex_max, py::arg("a"), py::arg("restarts") = 20,
          py::arg("seed") = 0);
    m.def("replicator_max",
          [](const ComplexMatrix& s, int restarts, std::uint64_t seed) {
              return replicator_max(s, restarts, seed);
          },
          py::arg("s"), py::arg("restarts") = 20, py::arg("seed") = 0);
    m.def("ms_bound_symmetric", &ms_bound_symmetric, py::arg("omega"));
    m.def("lemma1_bound", &lemma1_bound, py::arg("omega"), py::arg("n"));
    m.def("saturate", &saturate, py::arg("a"));
    m.def("symmetrize_support", &symmetrize_support, py::arg("a"));
    m.def("simplex_grid_max", &simplex_grid_max, py::arg("a"), py::arg("denominator"));

    m.def("turan_partite_filled", &turan_partite_filled, py::arg("n"), py::arg("r"));
    m.def("clique_plus_isolated", &clique_plus_isolated, py::arg("n"), py::arg("r"));
    m.def("proposition_matrix",
          [](const std::vector<int>& partition, const std::vector<Complex>& x, Complex c) {
              return proposition_matrix(partition, UnitVector::checked(x), c);
          },
          py::arg("partition"), py::arg("x"), py::arg("c"));

    py::class_<EqualityCertificate>(m, "EqualityCertificate")
        .def_readonly("c", &EqualityCertificate::c)
        .def_readonly("partition", &EqualityCertificate::partition)
        .def_readonly("condition_i", &EqualityCertificate::condition_i)
        .def_readonly("condition_ii", &EqualityCertificate::condition_ii)
        .def_readonly("condition_iii", &EqualityCertificate::condition_iii)
        .def_readonly("overall", &EqualityCertificate::overall)
        .def_readonly("r", &EqualityCertificate::r)
        .def_readonly("equality_gap", &EqualityCertificate::equality_gap)
        .def_readonly("equality_holds", &EqualityCertificate::equality_holds);
    m.def("check_equality_conditions",
          [](const ComplexMatrix& a, const std::vector<Complex>& x, double tol) {
              return check_equality_conditions(a, UnitVector::checked(x), tol);
          },
          py::arg("a"), py::arg("x"), py::arg("tol") = 1e-8);

    py::class_<BoundParams>(m, "BoundParams")
        .def_readonly("n", &BoundParams::n)
        .def_readonly("omega", &BoundParams::omega)
        .def_readonly("frob_sq", &BoundParams::frob_sq)
        .def_readonly("eta_or_value", &BoundParams::eta_or_value);
    py::class_<BoundReport>(m, "BoundReport")
        .def_property_readonly("bound_id",
                               [](const BoundReport& r) { return to_string(r.bound_id); })
        .def_readonly("lhs", &BoundReport::lhs)
        .def_readonly("rhs", &BoundReport::rhs)
        .def_readonly("slack", &BoundReport::slack)
        .def_readonly("holds", &BoundReport::holds)
        .def_readonly("degenerate", &BoundReport::degenerate)
        .def_readonly("params", &BoundReport::params)
        .def_readonly("witness", &BoundReport::witness)
        .def("__repr__", [](const BoundReport& r) {
            return "BoundReport(" + to_string(r.bound_id) + ", slack=" + std::to_string(r.slack) +
                   ")";
        });
    m.def("check_theorem1", &check_theorem1, py::arg("a"));
    m.def("check_theorem2", &check_theorem2, py::arg("a"));
    m.def("check_lemma1", &check_lemma1, py::arg("a"), py::arg("solver_restarts") = 20,
          py::arg("seed") = 0);
    m.def("check_turan_edge_bound", &check_turan_edge_bound, py::arg("a"));

    m.def("load_matrix", &load_matrix, py::arg("path"));
    m.def("save_matrix", &save_matrix, py::arg("a"), py::arg("path"));
    m.def("matrix_to_json", &matrix_to_json, py::arg("a"));
    m.def("matrix_from_json", &matrix_from_json, py::arg("text"));
}
