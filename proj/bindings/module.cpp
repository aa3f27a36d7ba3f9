// Python bindings: the graph model, validators, complexes, cohomology
// profiles, codes, and Clifford checks.  Matrices cross the boundary as
// lists of string-rendered polynomials; profiles as lists of rows.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adk/adinkra.hpp"
#include "adk/clifford.hpp"
#include "adk/codes.hpp"
#include "adk/cohomology.hpp"
#include "adk/complexes.hpp"
#include "adk/io.hpp"

namespace py = pybind11;
using namespace adk;

namespace {

std::vector<std::vector<std::string>> matrix_strings(const PolyMatrix& m, const VariableSet& sig) {
  std::vector<std::vector<std::string>> out(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i].push_back(m.at(i, j).to_string(sig));
  return out;
}

std::vector<std::vector<long long>> profile_rows(const HilbertProfile& p, int levels) {
  std::vector<std::vector<long long>> rows;
  for (int i = 0; i < levels; ++i) rows.push_back(p.row(i));
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Adinkra graphs, free-module complexes, and their invariants";

  py::class_<VariableSet>(m, "VariableSet")
      .def(py::init<int, int, int>(), py::arg("n_lambda"), py::arg("n_mu") = 0,
           py::arg("n_rho") = 0)
      .def_readonly("n_lambda", &VariableSet::n_lambda)
      .def_readonly("n_mu", &VariableSet::n_mu)
      .def_readonly("n_rho", &VariableSet::n_rho)
      .def("n_vars", &VariableSet::n_vars)
      .def("n_colors", &VariableSet::n_colors)
      .def("var_name", &VariableSet::var_name);

  py::class_<Adinkra>(m, "Adinkra")
      .def_readonly("sig", &Adinkra::sig)
      .def_property_readonly("name", [](const Adinkra& a) { return a.metadata.name; })
      .def_property_readonly("n_vertices",
                             [](const Adinkra& a) { return a.vertices.size(); })
      .def_property_readonly("n_edges", [](const Adinkra& a) { return a.edges.size(); })
      .def("min_height", &Adinkra::min_height)
      .def("max_height", &Adinkra::max_height)
      .def("to_json", [](const Adinkra& a) { return adinkra_to_json(a).dump(2); })
      .def("to_dot", [](const Adinkra& a) { return to_dot(a); })
      .def("__repr__", [](const Adinkra& a) {
        return "<Adinkra " + (a.metadata.name.empty() ? "(unnamed)" : a.metadata.name) + " " +
               rank_sequence(a).to_string() + ">";
      });

  m.def("load", [](const std::string& path) { return load_adinkra(path); }, py::arg("path"));
  m.def("from_json", [](const std::string& text) { return adinkra_from_json(json::parse(text)); },
        py::arg("text"));

  m.def(
      "validate",
      [](const Adinkra& a, bool q) {
        ValidationReport r = q ? validate_q(a) : validate(a);
        return py::make_tuple(r.ok, r.violations);
      },
      py::arg("a"), py::arg("q") = false,
      "Returns (ok, violations); pass q=True for mu/rho signatures.");

  m.def("rank_sequence", [](const Adinkra& a) { return rank_sequence(a).ranks; });
  m.def("zero_modes", &zero_modes);
  m.def("valise", &valise_of);
  m.def("is_valise", &is_valise);
  m.def("raise_vertex", &raise_vertex, py::arg("a"), py::arg("vertex"));
  m.def("lower_vertex", &lower_vertex, py::arg("a"), py::arg("vertex"));
  m.def("raisable_vertices", &raisable_vertices);
  m.def("koszul_adinkra", &koszul_adinkra, py::arg("n"));
  m.def("graph_tensor", &graph_tensor);
  m.def("rainbow", [](const Adinkra& a) {
    RainbowResult r = rainbow(a);
    return py::make_tuple(r.closes, r.boson_eigenvalue);
  });

  py::class_<FreeComplex>(m, "FreeComplex")
      .def_readonly("sig", &FreeComplex::sig)
      .def_property_readonly("over_quotient",
                             [](const FreeComplex& c) { return c.ring == RingTag::RModQ; })
      .def("length", &FreeComplex::length)
      .def("rank_at", &FreeComplex::rank_at)
      .def("d_squared_zero", &FreeComplex::differential_squares_to_zero)
      .def("differential",
           [](const FreeComplex& c, int i) {
             int k = i < 0 ? -i : i;
             if (k < 1 || k > c.length()) throw std::out_of_range("level out of range");
             return matrix_strings(c.d[k], c.sig);
           },
           py::arg("level"), "Entries of d : C^{-level} -> C^{-level+1} as strings.")
      .def("to_json", [](const FreeComplex& c) { return complex_to_json(c).dump(2); });

  m.def("complex_of", &complex_of);
  m.def("check_laplacian", [](const FreeComplex& c) {
    LaplacianReport r = check_laplacian(c);
    return py::make_tuple(r.ok, r.detail);
  });
  m.def(
      "hilbert_profile",
      [](const FreeComplex& c, int max_degree, const std::string& ring) {
        FreeComplex cc = c;
        if (ring == "RmodQ") cc.ring = RingTag::RModQ;
        return profile_rows(hilbert_profile(cc, max_degree), c.length() + 1);
      },
      py::arg("c"), py::arg("max_degree"), py::arg("ring") = "R",
      "Rows H^{0}, H^{-1}, ... of degreewise cohomology dimensions.");
  m.def("cone_of_raise", &cone_of_raise, py::arg("a"), py::arg("vertex"));
  m.def("unroll", [](const FreeComplex& c, int truncation) {
    UnrollResult u = unroll(c, truncation);
    return py::make_tuple(u.unrolled, u.truncation, u.d_squared_zero_mod_q);
  }, py::arg("c"), py::arg("truncation") = -1);
  m.def("embed_into_koszul", [](const Adinkra& a) {
    ChainMap cm = embed_into_koszul(a);
    std::vector<std::vector<std::vector<std::string>>> comps;
    for (auto& f : cm.f) comps.push_back(matrix_strings(f, cm.source.sig));
    return py::make_tuple(verify_chain_map(cm), comps);
  });

  py::class_<MatrixFactorization>(m, "MatrixFactorization")
      .def_readonly("sig", &MatrixFactorization::sig)
      .def("rank", &MatrixFactorization::rank)
      .def("verify", &MatrixFactorization::verify)
      .def("psi", [](const MatrixFactorization& mf) { return matrix_strings(mf.psi, mf.sig); })
      .def("phi", [](const MatrixFactorization& mf) { return matrix_strings(mf.phi, mf.sig); });
  m.def("valise_mf", &valise_mf);
  m.def("knorrer", &knorrer);
  m.def("clifford", [](const MatrixFactorization& mf) {
    CliffordAction act = clifford_action(mf);
    return py::make_tuple(act.relations_ok, act.detail);
  });
  m.def("irreducible_dim", [](int n) {
    IrreducibleDim d = irreducible_dim(n);
    return py::make_tuple(d.d_r, d.nu, d.algebra);
  });
  m.def("is_irreducible", &is_irreducible);

  py::class_<BinaryCode>(m, "BinaryCode")
      .def_readonly("length", &BinaryCode::length)
      .def("dimension", &BinaryCode::dimension)
      .def("is_doubly_even", [](const BinaryCode& c) { return is_doubly_even(c); });
  m.def("builtin_code", [](const std::string& name) -> BinaryCode {
    auto c = builtin_code(name);
    if (!c) throw std::runtime_error("unknown builtin code: " + name);
    return *c;
  });
  m.def("parse_code", &parse_code);
  m.def("coset_rank_sequence",
        [](const BinaryCode& c) { return coset_rank_sequence(c).ranks; });
  m.def("code_to_adinkra", &code_to_adinkra);

  m.def("betti_linear", [](int n) { return betti_linear(n).b; });
  m.def("hilb_formula", &hilb_formula);
  m.def("hilb_series_coeff", &hilb_series_coeff);
}
