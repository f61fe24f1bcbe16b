#include "isohom/casefile.hpp"
#include "isohom/extension.hpp"
#include "isohom/families.hpp"
#include "isohom/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace isohom;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

IntMatrix matrix_from(const std::vector<std::vector<py::object>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw py::value_error("matrix rows must all have the same length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = from_py(rows[r][c]);
  }
  return m;
}

py::list matrix_to(const IntMatrix& m) {
  py::list out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
    out.append(row);
  }
  return out;
}

std::size_t column_count(const std::vector<std::vector<py::object>>& rows, std::optional<std::size_t> cols) {
  if (cols) return *cols;
  if (rows.empty()) throw py::value_error("cols is required for a matrix with no rows");
  return rows.front().size();
}

py::list factor_list(const InvariantFactors& f) {
  py::list out;
  for (const auto& d : f.factors) out.append(to_py(d));
  return out;
}

}  // namespace

PYBIND11_MODULE(_isohom, m) {
  m.doc() = "H_1 of surfaces isogenous to a product of curves with abelian group action";

  static py::exception<CaseFileError> case_file_error(m, "CaseFileError", PyExc_ValueError);
  static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CaseFileError& e) {
      PyErr_SetString(case_file_error.ptr(), e.what());
    } catch (const ValidationError& e) {
      std::string msg;
      for (const auto& f : e.failures()) msg += (msg.empty() ? "" : "; ") + f;
      PyErr_SetString(validation_error.ptr(), msg.c_str());
    }
  });

  py::class_<InvariantFactors>(m, "InvariantFactors")
      .def_property_readonly("torsion", &factor_list)
      .def_readonly("free_rank", &InvariantFactors::free_rank)
      .def_property_readonly("order", [](const InvariantFactors& f) -> py::object {
        if (!f.is_finite()) return py::none();
        return to_py(f.torsion_order());
      })
      .def("__eq__", [](const InvariantFactors& a, const InvariantFactors& b) { return a == b; })
      .def("__str__", &InvariantFactors::to_string)
      .def("__repr__", [](const InvariantFactors& f) {
        return "InvariantFactors(" + f.to_string() + ")";
      });

  py::class_<FamilyCase>(m, "Case")
      .def_readonly("id", &FamilyCase::id)
      .def_readonly("label", &FamilyCase::label)
      .def_property_readonly("k", [](const FamilyCase& fc) { return fc.action.k; })
      .def_property_readonly("group_orders", [](const FamilyCase& fc) { return fc.group().orders(); })
      .def_property_readonly("phi", [](const FamilyCase& fc) { return to_case_file(fc).phi; })
      .def_property_readonly("psi", [](const FamilyCase& fc) { return to_case_file(fc).psi; })
      .def("validate", [](const FamilyCase& fc) { return fc.action.validate(); },
           "List of failed conditions; empty when the case is valid.")
      .def("is_free", [](const FamilyCase& fc) { return fc.action.is_free(); })
      .def("to_json", [](const FamilyCase& fc) { return serialize_case_file(to_case_file(fc)); })
      .def("__repr__", [](const FamilyCase& fc) { return "<Case " + fc.label + ">"; });

  m.def("builtin_case", &builtin_case, py::arg("id"));
  m.def("builtin_cases", &builtin_cases);
  m.def("load_case", [](const std::string& text) { return to_family_case(parse_case_file(text)); },
        py::arg("text"), "Parse a JSON case file.");

  m.def("h1_extension", [](const FamilyCase& fc) { return h1_extension(fc.action); }, py::arg("case"));
  m.def("kernel_h1", [](const FamilyCase& fc) { return kernel_h1(fc.action); }, py::arg("case"));
  m.def(
      "cross_check",
      [](const FamilyCase& fc) {
        const auto r = cross_check(fc.action);
        py::dict d;
        d["extension"] = r.extension;
        d["oracle"] = r.oracle;
        d["match"] = r.match;
        return d;
      },
      py::arg("case"));
  m.def(
      "run_case",
      [](const FamilyCase& fc, bool require_free) {
        const auto r = run_case(fc, require_free);
        py::dict d;
        d["h1"] = r.h1_extension;
        d["free"] = r.action_free;
        if (r.action_free) {
          d["genera"] = py::make_tuple(r.invariants.genus_first, r.invariants.genus_second);
          d["chi_top"] = r.invariants.chi_top;
          py::list graded;
          for (const auto& h : r.graded) graded.append(h.to_string());
          d["homology"] = graded;
        }
        return d;
      },
      py::arg("case"), py::arg("require_free") = true);

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<py::object>>& rows, std::optional<std::size_t> cols) {
        const auto snf = smith_normal_form(matrix_from(rows, column_count(rows, cols)));
        return py::make_tuple(matrix_to(snf.diagonal), matrix_to(snf.left), matrix_to(snf.right));
      },
      py::arg("rows"), py::arg("cols") = py::none(), "Returns (D, U, V) with U A V = D.");
  m.def(
      "abelian_invariants",
      [](const std::vector<std::vector<py::object>>& rows, std::optional<std::size_t> cols) {
        return abelian_invariants(matrix_from(rows, column_count(rows, cols)));
      },
      py::arg("rows"), py::arg("cols") = py::none(),
      "Invariant factors of Z^cols modulo the row span.");
}
