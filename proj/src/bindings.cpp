#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "harmonet/cli.hpp"
#include "harmonet/closedform.hpp"
#include "harmonet/errors.hpp"
#include "harmonet/gaussian.hpp"
#include "harmonet/graphs.hpp"

namespace py = pybind11;
using namespace harmonet;

namespace {

std::vector<std::vector<double>> to_rows(const Matrix& m) {
    std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    const int c = n ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(n, c);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("rows have inconsistent lengths");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "entanglement of formation for harmonically coupled bosonic modes on graphs";

    py::register_exception<AsymmetricPairError>(m, "AsymmetricPairError");
    py::register_exception<NegativeDiscriminantError>(m, "NegativeDiscriminantError");
    py::register_exception<InfiniteEntanglementError>(m, "InfiniteEntanglementError");
    py::register_exception<NotEntangledAtZeroError>(m, "NotEntangledAtZeroError");
    py::register_exception<ToleranceNotReachedError>(m, "ToleranceNotReachedError");

    m.attr("ground_state_beta") = ground_state_beta;

    py::class_<Graph>(m, "Graph")
        .def_readonly("n", &Graph::n)
        .def_readonly("name", &Graph::name)
        .def("adjacent", &Graph::adjacent, py::arg("i"), py::arg("j"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("edge_count", &Graph::edge_count)
        .def("adjacency_rows", [](const Graph& g) { return to_rows(g.adjacency); })
        .def("__repr__",
             [](const Graph& g) { return "Graph('" + g.name + "', n=" + std::to_string(g.n) + ")"; });

    m.def("path", &make_path, py::arg("n"));
    m.def("ring", &make_ring, py::arg("n"));
    m.def("complete", &make_complete, py::arg("n"));
    m.def("lattice", &make_lattice, py::arg("dim"), py::arg("side"));
    m.def("platonic", [](const std::string& name) {
        const Graph g = parse_graph_spec(name);
        if (g.family != GraphFamily::Platonic)
            throw std::invalid_argument("not a platonic solid: '" + name + "'");
        return g;
    }, py::arg("name"));
    m.def("graph", &parse_graph_spec, py::arg("spec"),
          "build a graph from a spec string such as 'ring:11', 'lattice:2:5' or 'cube'");
    m.def("graph_distance", &graph_distance, py::arg("g"), py::arg("i"), py::arg("j"));

    py::class_<PotentialMatrix>(m, "PotentialMatrix")
        .def_readonly("omega", &PotentialMatrix::omega)
        .def("rows", [](const PotentialMatrix& p) { return to_rows(p.v); });
    m.def("potential_matrix", &potential_matrix, py::arg("g"), py::arg("omega"));

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("eigenvalues", &Spectrum::eigenvalues)
        .def("eigenvector_rows", [](const Spectrum& s) { return to_rows(s.q); });
    m.def("eig_sym",
          [](const std::vector<std::vector<double>>& rows) { return eig_sym(from_rows(rows)); },
          py::arg("rows"), "eigendecomposition of a symmetric matrix given as nested lists");
    m.def("apply_spectral_function",
          [](const Spectrum& s, const std::function<double(double)>& f) {
              return to_rows(apply_spectral_function(s, f));
          },
          py::arg("spectrum"), py::arg("f"));

    py::class_<WPair>(m, "WPair")
        .def("w_rows", [](const WPair& wp) { return to_rows(wp.w); })
        .def("winv_rows", [](const WPair& wp) { return to_rows(wp.winv); });
    m.def("w_pair", &w_pair, py::arg("potential"));

    py::class_<CovariancePair>(m, "CovariancePair")
        .def_readonly("beta", &CovariancePair::beta)
        .def("gx_rows", [](const CovariancePair& c) { return to_rows(c.gx); })
        .def("gp_rows", [](const CovariancePair& c) { return to_rows(c.gp); });
    m.def("covariance", &covariance, py::arg("potential"), py::arg("beta"));

    py::class_<TwoModeForm>(m, "TwoModeForm")
        .def_readonly("nx", &TwoModeForm::nx)
        .def_readonly("np", &TwoModeForm::np)
        .def_readonly("mx", &TwoModeForm::mx)
        .def_readonly("mp", &TwoModeForm::mp)
        .def_readonly("n", &TwoModeForm::n)
        .def_readonly("kx", &TwoModeForm::kx)
        .def_readonly("kp", &TwoModeForm::kp);
    m.def("reduce_pair", &reduce_pair, py::arg("cov"), py::arg("i"), py::arg("j"),
          py::arg("sym_tol") = 1e-8);
    m.def("delta_of", &delta_of, py::arg("form"));

    py::class_<EofResult>(m, "EofResult")
        .def_readonly("delta", &EofResult::delta)
        .def_readonly("big_delta", &EofResult::big_delta)
        .def_readonly("c_plus", &EofResult::c_plus)
        .def_readonly("c_minus", &EofResult::c_minus)
        .def_readonly("eof", &EofResult::eof)
        .def("__repr__", [](const EofResult& r) {
            std::ostringstream os;
            os << "EofResult(delta=" << r.delta << ", eof=" << r.eof << ")";
            return os.str();
        });
    m.def("eof_from_delta", &eof_from_delta, py::arg("delta"));
    m.def("eof_pair", &eof_pair, py::arg("g"), py::arg("omega"), py::arg("beta"), py::arg("i"),
          py::arg("j"));
    m.def("threshold_temperature", &threshold_temperature, py::arg("g"), py::arg("omega"),
          py::arg("i"), py::arg("j"));

    m.def("delta_two_vertex", &delta_two_vertex, py::arg("omega"), py::arg("beta"));
    m.def("delta_path3", &delta_path3, py::arg("omega"));
    m.def("delta_meanfield", &delta_meanfield, py::arg("n_verts"), py::arg("omega"));
    m.def("ring_w_element", &ring_w_element, py::arg("n_verts"), py::arg("omega"),
          py::arg("offset"), py::arg("power"));

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init([](int dims, double abs_tol, int max_depth) {
                 QuadratureSpec q;
                 q.dims = dims;
                 q.abs_tol = abs_tol;
                 q.max_depth = max_depth;
                 return q;
             }),
             py::arg("dims") = 1, py::arg("abs_tol") = 1e-6, py::arg("max_depth") = 40)
        .def_readwrite("dims", &QuadratureSpec::dims)
        .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
        .def_readwrite("max_depth", &QuadratureSpec::max_depth);
    m.def("lattice_w_integral", &lattice_w_integral, py::arg("dims"), py::arg("omega"),
          py::arg("offset"), py::arg("power"), py::arg("quad"));
    m.def("eof_infinite_lattice", &eof_infinite_lattice, py::arg("dims"), py::arg("omega"),
          py::arg("quad"));
    m.def("meanfield_largen_estimate", &meanfield_largen_estimate, py::arg("n_verts"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "run the command-line tool in process; returns (code, stdout, stderr)");
}
