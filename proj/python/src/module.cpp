#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "topontk/complex.hpp"
#include "topontk/dblp.hpp"
#include "topontk/error.hpp"
#include "topontk/hodge.hpp"
#include "topontk/learn.hpp"
#include "topontk/ntk.hpp"

namespace py = pybind11;
using namespace topontk;

namespace {

// Missing features mean the constant all-ones column.
EdgeFeatures features_for(const SimplicialComplex& c, const std::optional<Eigen::MatrixXd>& f) {
  if (f) return EdgeFeatures(*f);
  return EdgeFeatures::constant(static_cast<Eigen::Index>(c.n_edges()));
}

}  // namespace

PYBIND11_MODULE(_topontk, m) {
  m.doc() = "Hodge-Laplacian neural tangent kernels on edge signals";

  py::register_exception<Error>(m, "TopoNTKError", PyExc_RuntimeError);
  // InvalidArgument is a usage error on the Python side too.
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::enum_<Activation>(m, "Activation")
      .value("Linear", Activation::Linear)
      .value("ReLU", Activation::ReLU);
  py::enum_<ZeroVariance>(m, "ZeroVariance")
      .value("Throw", ZeroVariance::Throw)
      .value("ZeroDerivative", ZeroVariance::ZeroDerivative);
  py::enum_<Variant>(m, "Variant")
      .value("Graph", Variant::Graph)
      .value("Lower", Variant::Lower)
      .value("Upper", Variant::Upper)
      .value("Full", Variant::Full);
  py::enum_<HodgeLabel>(m, "HodgeLabel")
      .value("Exact", HodgeLabel::Exact)
      .value("Harmonic", HodgeLabel::Harmonic)
      .value("Coexact", HodgeLabel::Coexact);

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init<int, std::vector<Edge>, std::vector<Triangle>>(), py::arg("n_vertices"),
           py::arg("edges"), py::arg("triangles") = std::vector<Triangle>{})
      .def_property_readonly("n_vertices", &SimplicialComplex::n_vertices)
      .def_property_readonly("edges", &SimplicialComplex::edges)
      .def_property_readonly("triangles", &SimplicialComplex::triangles)
      .def_property_readonly("n_edges", &SimplicialComplex::n_edges)
      .def_property_readonly("n_triangles", &SimplicialComplex::n_triangles)
      .def("has_edge", &SimplicialComplex::has_edge)
      .def("has_triangle", &SimplicialComplex::has_triangle)
      .def("with_triangles", &SimplicialComplex::with_triangles)
      .def(py::self == py::self)
      .def("__repr__", [](const SimplicialComplex& c) {
        return "SimplicialComplex(n_vertices=" + std::to_string(c.n_vertices()) +
               ", edges=" + std::to_string(c.n_edges()) +
               ", triangles=" + std::to_string(c.n_triangles()) + ")";
      });

  m.def("boundary_matrices", [](const SimplicialComplex& c) {
    auto bm = boundary_matrices(c);
    return py::make_tuple(bm.b1, bm.b2);
  });
  m.def("three_cliques", &three_cliques);
  m.def("er_clique_complex", &er_clique_complex, py::arg("n"), py::arg("p"), py::arg("q"),
        py::arg("seed"));
  m.def("cycle_chord_skeleton", [](int n) {
    auto s = cycle_chord_skeleton(n);
    return py::make_tuple(s.skeleton, s.candidates);
  });
  m.def(
      "fill_candidates",
      [](const SimplicialComplex& skeleton, const std::vector<Triangle>& candidates, double q,
         std::uint64_t seed) { return fill_candidates(skeleton, candidates, q, seed); },
      py::arg("skeleton"), py::arg("candidates"), py::arg("q"), py::arg("seed"));
  m.def("flip_triangles", &flip_triangles, py::arg("complex"), py::arg("eps"), py::arg("seed"));
  m.def("read_complex_file", &read_complex_file);
  m.def("write_complex_file", &write_complex_file);

  py::class_<HodgeBasis>(m, "HodgeBasis")
      .def_readonly("exact", &HodgeBasis::exact)
      .def_readonly("harmonic", &HodgeBasis::harmonic)
      .def_readonly("coexact", &HodgeBasis::coexact)
      .def("dims", &HodgeBasis::dims);
  m.def("hodge_basis", [](const SimplicialComplex& c) { return hodge_basis(boundary_matrices(c)); });
  m.def(
      "propagator",
      [](const SimplicialComplex& c, double gamma, double alpha, double beta, bool normalize) {
        return build_propagator(boundary_matrices(c), gamma, alpha, beta, normalize).p;
      },
      py::arg("complex"), py::arg("gamma") = 0.5, py::arg("alpha") = 1.0, py::arg("beta") = 1.0,
      py::arg("normalize") = true);

  py::class_<KernelConfig>(m, "KernelConfig")
      .def(py::init<>())
      .def_readwrite("depth", &KernelConfig::depth)
      .def_readwrite("gamma", &KernelConfig::gamma)
      .def_readwrite("alpha", &KernelConfig::alpha)
      .def_readwrite("beta", &KernelConfig::beta)
      .def_readwrite("activation", &KernelConfig::activation)
      .def_readwrite("normalize_laplacians", &KernelConfig::normalize_laplacians)
      .def_readwrite("trace_normalize", &KernelConfig::trace_normalize)
      .def_readwrite("pool_normalize", &KernelConfig::pool_normalize)
      .def_readwrite("variant", &KernelConfig::variant)
      .def_readwrite("zero_variance", &KernelConfig::zero_variance)
      .def("validate", &KernelConfig::validate)
      .def("with_variant", &KernelConfig::with_variant);

  m.def(
      "ntk_pair",
      [](const SimplicialComplex& x, const SimplicialComplex& y,
         const std::optional<Eigen::MatrixXd>& fx, const std::optional<Eigen::MatrixXd>& fy,
         const KernelConfig& cfg) {
        const auto s = ntk_pair(x, y, features_for(x, fx), features_for(y, fy), cfg);
        return py::make_tuple(s.sigma_xy, s.theta_xy);
      },
      py::arg("x"), py::arg("y"), py::arg("fx") = py::none(), py::arg("fy") = py::none(),
      py::arg("cfg") = KernelConfig{}, "(Sigma, Theta) cross blocks after cfg.depth layers");
  m.def("architecture_operator", &architecture_operator, py::arg("complex"),
        py::arg("cfg") = KernelConfig{});
  m.def(
      "gram_matrix",
      [](const std::vector<SimplicialComplex>& cs, const KernelConfig& cfg, bool clip_negative) {
        std::vector<EdgeFeatures> fs;
        fs.reserve(cs.size());
        for (const auto& c : cs) fs.push_back(features_for(c, std::nullopt));
        py::gil_scoped_release release;
        return gram_matrix(cs, fs, cfg, {clip_negative, 1}).gram;
      },
      py::arg("complexes"), py::arg("cfg") = KernelConfig{}, py::arg("clip_negative") = false,
      "Pooled Gram matrix with constant edge features");
  m.def(
      "finite_width_ntk",
      [](const SimplicialComplex& c, const std::optional<Eigen::MatrixXd>& f,
         const KernelConfig& cfg, int width, int n_nets, std::uint64_t seed) {
        const EdgeFeatures feats = features_for(c, f);
        py::gil_scoped_release release;
        return finite_width_ntk(c, feats, cfg, width, n_nets, seed);
      },
      py::arg("complex"), py::arg("features") = py::none(), py::arg("cfg") = KernelConfig{},
      py::arg("width") = 1024, py::arg("n_nets") = 8, py::arg("seed") = 1);

  py::class_<RidgeModel>(m, "RidgeModel")
      .def_readonly("dual_coeffs", &RidgeModel::dual_coeffs)
      .def_readonly("offset", &RidgeModel::offset)
      .def_readonly("lambda_", &RidgeModel::lambda)
      .def("fitted", &RidgeModel::fitted)
      .def("predict", [](const RidgeModel& r, const Eigen::MatrixXd& cross) {
        return krr_predict(r, cross);
      });
  m.def(
      "krr_fit",
      [](const Eigen::MatrixXd& k, const Eigen::MatrixXd& y, double lambda, bool offset) {
        return offset ? krr_fit_offset(k, y, lambda) : krr_fit(k, y, lambda);
      },
      py::arg("gram"), py::arg("y"), py::arg("lambda_"), py::arg("offset") = false);
  m.def(
      "kernel_gradient_flow",
      [](const Eigen::MatrixXd& k, const Eigen::VectorXd& y, double t) {
        return kernel_gradient_flow(k, y, t);
      },
      py::arg("k"), py::arg("y"), py::arg("t"));

  m.def("average_precision", [](const std::vector<double>& s, const std::vector<int>& l) {
    return average_precision(s, l);
  });
}
