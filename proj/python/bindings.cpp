#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "monopath/gradient.hpp"
#include "monopath/io.hpp"
#include "monopath/oracle.hpp"
#include "monopath/solver.hpp"

namespace py = pybind11;
using namespace monopath;

namespace {

template <typename T>
py::array_t<T> grid_to_numpy(const BasicGrid<T>& g) {
    py::array_t<T> out({g.rows(), g.cols()});
    auto view = out.template mutable_unchecked<2>();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            view(i, j) = g(i + 1, j + 1);
        }
    }
    return out;
}

CostMatrix matrix_from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2) {
        throw DimensionMismatch("cost matrix must be two-dimensional");
    }
    const auto rows = static_cast<std::size_t>(arr.shape(0));
    const auto cols = static_cast<std::size_t>(arr.shape(1));
    std::vector<double> values(arr.data(), arr.data() + rows * cols);
    return CostMatrix(rows, cols, std::move(values));
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "' for reading");
    }
    return in;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minimal-cost upward-monotone paths through a cost matrix";

    const auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
    py::register_exception<ValueOutOfRange>(m, "ValueOutOfRange", base);
    py::register_exception<WindowTooLarge>(m, "WindowTooLarge", base);
    py::register_exception<InvalidParams>(m, "InvalidParams", base);
    py::register_exception<ShapeMismatch>(m, "ShapeMismatch", base);
    py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", base);
    py::register_exception<InfeasiblePath>(m, "InfeasiblePath", base);

    py::enum_<StartMode>(m, "StartMode")
        .value("FreeStart", StartMode::FreeStart)
        .value("EnforcedBottomStart", StartMode::EnforcedBottomStart);

    py::class_<CostMatrix>(m, "CostMatrix",
                           "m*n cost field, every value in [0,1]; row 0 is the top")
        .def(py::init(&matrix_from_numpy), py::arg("values"))
        .def_property_readonly("rows", &CostMatrix::rows)
        .def_property_readonly("cols", &CostMatrix::cols)
        .def("to_numpy", [](const CostMatrix& c) { return grid_to_numpy(c.grid()); });

    py::class_<SolverParams>(m, "SolverParams")
        .def(py::init([](std::size_t w, double beta, double mu, StartMode start_mode) {
                 return SolverParams{w, beta, mu, start_mode};
             }),
             py::arg("w") = 5, py::arg("beta") = 7.0, py::arg("mu") = 16.0,
             py::arg("start_mode") = StartMode::FreeStart)
        .def_readwrite("w", &SolverParams::w)
        .def_readwrite("beta", &SolverParams::beta)
        .def_readwrite("mu", &SolverParams::mu)
        .def_readwrite("start_mode", &SolverParams::start_mode);

    py::class_<DerivativeField>(m, "DerivativeField")
        .def_property_readonly("rows", &DerivativeField::rows)
        .def_property_readonly("cols", &DerivativeField::cols)
        .def("to_numpy", [](const DerivativeField& d) { return grid_to_numpy(d.grid()); });

    py::class_<StrengthField>(m, "StrengthField")
        .def_property_readonly("rows", &StrengthField::rows)
        .def_property_readonly("cols", &StrengthField::cols)
        .def("to_numpy", [](const StrengthField& s) { return grid_to_numpy(s.grid()); });

    py::class_<DpTables>(m, "DpTables")
        .def_property_readonly("q", [](const DpTables& t) { return grid_to_numpy(t.q); })
        .def_property_readonly("p", [](const DpTables& t) { return grid_to_numpy(t.p); });

    py::class_<PathResult>(m, "PathResult")
        .def_readonly("path", &PathResult::path, "1-based row index per column")
        .def_readonly("total_cost", &PathResult::total_cost)
        .def("__repr__", [](const PathResult& r) {
            std::ostringstream out;
            out << "PathResult(path=[";
            for (std::size_t j = 0; j < r.path.size(); ++j) {
                out << (j ? ", " : "") << r.path[j];
            }
            out << "], total_cost=" << r.total_cost << ")";
            return out.str();
        });

    py::class_<SolveOutput>(m, "SolveOutput")
        .def_readonly("result", &SolveOutput::result)
        .def_readonly("tables", &SolveOutput::tables)
        .def_readonly("derivative", &SolveOutput::derivative)
        .def_readonly("strength", &SolveOutput::strength);

    m.def("windowed_derivative", &windowed_derivative, py::arg("c"), py::arg("w"),
          "Mean absolute difference between adjacent w-wide windows, per row; "
          "edge columns replicate the nearest interior column.");
    m.def("strength", &strength, py::arg("d"), py::arg("beta"),
          "Logistic squashing 1/(1+exp(-beta*D)), element-wise, into [1/2, 1).");
    m.def("forward_pass", &forward_pass, py::arg("c"), py::arg("s"), py::arg("mu"),
          py::arg("start_mode"),
          "Accumulated-cost and predecessor tables; climbing a row costs an extra "
          "mu*(1 - S) against the row climbed from.");
    m.def("backtrack", &backtrack, py::arg("tables"),
          "Optimal path from completed tables, ending at the topmost minimizer "
          "of the final column.");
    m.def("solve", &solve, py::arg("c"), py::arg("params") = SolverParams{},
          "Full pipeline: derivative, strength, forward pass, backtrack.");

    m.def("count_paths", &count_paths, py::arg("m"), py::arg("n"), py::arg("start_mode"),
          "Number of feasible monotone paths, saturating at 2^64-1.");
    m.def("enumerate_paths", &enumerate_paths, py::arg("m"), py::arg("n"),
          py::arg("start_mode"), py::arg("cap") = kDefaultEnumerationCap,
          "Every feasible path exactly once; raises InstanceTooLarge beyond cap.");
    m.def("path_cost", &path_cost, py::arg("c"), py::arg("s"), py::arg("mu"), py::arg("path"),
          "Direct cost of one path, no dynamic programming involved.");
    m.def("brute_force_solve", &brute_force_solve, py::arg("c"), py::arg("params"),
          py::arg("cap") = kDefaultEnumerationCap,
          "Exhaustive minimum over all feasible paths; ground truth for solve().");

    m.def("read_csv",
          [](const std::string& path, bool normalize) {
              auto in = open_input(path);
              return read_csv(in, normalize);
          },
          py::arg("path"), py::arg("normalize") = false,
          "Cost matrix from a CSV file, one row per line.");
    m.def("read_pgm",
          [](const std::string& path) {
              auto in = open_input(path);
              return read_pgm(in);
          },
          py::arg("path"),
          "Cost matrix from a P2/P5 PGM image; white maps to cost 0.");
}
