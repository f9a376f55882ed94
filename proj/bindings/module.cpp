#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biercert/certify.hpp"
#include "biercert/cochain.hpp"
#include "biercert/dual_join.hpp"
#include "biercert/errors.hpp"
#include "biercert/facet_file.hpp"
#include "biercert/report.hpp"

namespace py = pybind11;
using namespace bier;

namespace {

std::vector<std::vector<int>> faces_to_lists(const std::vector<FaceSet>& faces) {
    std::vector<std::vector<int>> out;
    out.reserve(faces.size());
    for (FaceSet f : faces) out.push_back(f.labels());
    return out;
}

SimplicialComplex complex_from_lists(int n, const std::vector<std::vector<int>>& facets) {
    return SimplicialComplex::from_vertex_lists(n, facets);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "nonembeddability certificates for simplicial complexes";
#ifdef BIERCERT_VERSION
    m.attr("__version__") = BIERCERT_VERSION;
#endif

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init(&complex_from_lists), py::arg("n"), py::arg("facets"))
        .def_property_readonly("n", &SimplicialComplex::n)
        .def_property_readonly("kind",
                               [](const SimplicialComplex& k) { return to_string(k.kind()); })
        .def_property_readonly("facets",
                               [](const SimplicialComplex& k) { return faces_to_lists(k.facets()); })
        .def("dimension", &SimplicialComplex::dimension)
        .def("is_face",
             [](const SimplicialComplex& k, const std::vector<int>& s) {
                 return k.is_face(face_from_labels(s, k.n()));
             })
        .def("is_pure", &SimplicialComplex::is_pure)
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& k) {
            return "SimplicialComplex(n=" + std::to_string(k.n()) + ", kind=" + to_string(k.kind()) +
                   ", facets=" + std::to_string(k.facets().size()) + ")";
        });

    py::class_<JoinedComplex>(m, "JoinedComplex")
        .def_readonly("complex", &JoinedComplex::complex)
        .def_readonly("factor1_n", &JoinedComplex::factor1_n)
        .def_readonly("factor2_n", &JoinedComplex::factor2_n);

    m.def("boundary_of_simplex", &boundary_of_simplex, py::arg("m"));
    m.def("full_simplex", &full_simplex, py::arg("n"));
    m.def("cross_polytope_boundary", &cross_polytope_boundary, py::arg("k"));
    m.def("cycle_complex", &cycle_complex, py::arg("n"));

    m.def("f_vector", &f_vector);
    m.def("euler_characteristic", &euler_characteristic);
    m.def("is_k_neighborly", &is_k_neighborly, py::arg("complex"), py::arg("k"));
    m.def("minimal_nonfaces", [](const SimplicialComplex& k) {
        return faces_to_lists(minimal_nonfaces(k).members);
    });
    m.def("betti_numbers", &betti_numbers_z2);

    m.def("alexander_dual", &alexander_dual);
    m.def("is_self_dual", &is_self_dual);
    m.def("join_complexes", &join, py::arg("a"), py::arg("b"));
    m.def("deleted_join", &deleted_join, py::arg("a"), py::arg("b"));
    m.def("bier_sphere", &bier_sphere, py::arg("n"), py::arg("complex"));
    m.def("deleted_join_f_vector", &deleted_join_f_vector, py::arg("a"), py::arg("b"),
          py::arg("threads") = 0);

    m.def("complementarity_check", [](const SimplicialComplex& k) {
        const ComplementarityResult r = complementarity_check(k);
        py::object witness = py::none();
        if (r.witness) witness = py::cast(r.witness->labels());
        return py::make_tuple(r.holds, witness);
    });
    m.def("sarkaria_bound", [](const SimplicialComplex& k) {
        const SarkariaBound b = sarkaria_bound(k);
        return b.bound ? py::cast(*b.bound) : py::none().cast<py::object>();
    });
    m.def("index_lower_bound", [](const SimplicialComplex& k) {
        const IndexBound b = index_lower_bound(k);
        py::object value = b.value ? py::cast(*b.value) : py::none().cast<py::object>();
        return py::make_tuple(value, b.trail);
    });
    m.def("search_complementarity_surfaces", &search_complementarity_surfaces);
    m.def("prop32_equivalence", [](const SimplicialComplex& k, int m_) {
        const Prop32Result r = prop32_equivalence(k, m_);
        return r.holds;
    }, py::arg("complex"), py::arg("m") = 1);

    m.def("parse_facet_string", [](const std::string& text) { return parse_facet_string(text); });
    m.def("parse_facet_file",
          [](const std::string& path) { return parse_facet_file(std::filesystem::path(path)); });
    m.def("to_facet_string", &to_facet_string);
    m.def("input_digest", &input_digest);

    m.def(
        "report_json",
        [](const SimplicialComplex& k, int exact_chi_limit, int threads) {
            ReportOptions opts;
            opts.certify.exact_chi_limit = exact_chi_limit;
            opts.certify.threads = threads;
            return report_to_json(build_report(k, opts));
        },
        py::arg("complex"), py::arg("exact_chi_limit") = 32, py::arg("threads") = 0);
}
