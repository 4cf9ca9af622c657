#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chainsub/cli.hpp"
#include "chainsub/errors.hpp"
#include "chainsub/functors.hpp"

namespace py = pybind11;

namespace {

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = chainsub::cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

std::size_t commutant_dim(std::uint64_t q, const std::vector<std::vector<std::uint32_t>>& x,
                          const std::vector<std::vector<std::uint32_t>>& y) {
  const chainsub::FiniteField k(q, 1);
  const auto to_matrix = [&](const std::vector<std::vector<std::uint32_t>>& rows) {
    chainsub::FieldMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw py::value_error("matrices must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = static_cast<chainsub::FieldElem>(rows[i][j] % q);
    }
    return m;
  };
  const chainsub::TwoMatrixModule v(k, to_matrix(x), to_matrix(y));
  return chainsub::commutant_oracle(v, v).size();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Submodule categories over truncated chain rings";
  m.def("run", &run, py::arg("args"),
        "Run one command-line subcommand; returns (exit_code, stdout, stderr).");
  m.def("commutant_dim", &commutant_dim, py::arg("q"), py::arg("X"), py::arg("Y"),
        "Dimension of the commutant of a pair of square matrices over F_q (q prime).");

  py::register_exception<chainsub::Error>(m, "Error");
}
