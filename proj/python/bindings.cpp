#include "superformat/algebras.hpp"
#include "superformat/embeddings.hpp"
#include "superformat/formats.hpp"
#include "superformat/rootspace.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
namespace sf = superformat;

namespace {

// Matrices cross the boundary as lists of rows of fractions.Fraction; any
// entry whose str() parses as a rational is accepted on the way in.
py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }

py::object to_py(const sf::Rational& r) {
  return fraction_type()(r.to_string());
}

py::list to_py(const sf::Matrix& m) {
  py::list rows;
  for (int i = 1; i <= m.size(); ++i) {
    py::list row;
    for (int j = 1; j <= m.size(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

sf::Rational rational_from_py(const py::handle& x) { return sf::Rational::parse(py::str(x).cast<std::string>()); }

sf::Matrix matrix_from_py(const py::sequence& rows) {
  const int p = static_cast<int>(py::len(rows));
  sf::Matrix m(p);
  for (int i = 0; i < p; ++i) {
    const py::sequence row = rows[i];
    if (static_cast<int>(py::len(row)) != p) throw std::invalid_argument("matrix must be square");
    for (int j = 0; j < p; ++j) m(i + 1, j + 1) = rational_from_py(row[j]);
  }
  return m;
}

sf::GradedMatrix graded(const py::sequence& rows, const std::vector<int>& signs) {
  return {matrix_from_py(rows), sf::Format(signs)};
}

sf::AlgebraId algebra(const std::string& family, int parameter, const std::string& layout) {
  sf::AlgebraId a{sf::parse_family(family), parameter, sf::parse_layout(layout)};
  a.validate();
  return a;
}

py::dict basis_to_py(const sf::ChevalleyBasis& b) {
  py::list h, e, f;
  for (int i = 0; i < b.rank(); ++i) {
    h.append(to_py(b.h[i].mat));
    e.append(to_py(b.e[i].mat));
    f.append(to_py(b.f[i].mat));
  }
  py::dict d;
  d["h"] = h;
  d["e"] = e;
  d["f"] = f;
  d["signs"] = b.format().signs();
  return d;
}

}  // namespace

PYBIND11_MODULE(_superformat, m) {
  m.doc() = "Exact matrix formats of Lie superalgebras";

  py::register_exception<sf::FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<sf::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("supertrace", [](const py::sequence& mat, const std::vector<int>& signs) {
    return to_py(sf::supertrace(graded(mat, signs)));
  });
  m.def("graded_commutator", [](const py::sequence& a, const py::sequence& b, const std::vector<int>& signs) {
    return to_py(sf::graded_commutator(graded(a, signs), graded(b, signs)).mat);
  });
  m.def(
      "supertranspose",
      [](const py::sequence& mat, const std::vector<int>& signs, bool dual) {
        const auto g = graded(mat, signs);
        return to_py((dual ? sf::supertranspose_dual(g) : sf::supertranspose(g)).mat);
      },
      py::arg("mat"), py::arg("signs"), py::arg("dual") = false);
  m.def("change_format", [](const py::sequence& mat, const std::vector<int>& signs, const py::sequence& changer) {
    const auto moved = sf::change_format(graded(mat, signs), sf::FormatChanger(matrix_from_py(changer)));
    return py::make_tuple(to_py(moved.mat), moved.fmt.signs());
  });
  m.def("perm_matrix", [](const std::vector<int>& images) {
    return to_py(sf::perm_matrix(sf::Permutation(images)).matrix());
  });
  m.def("alternating_perm", [](int n_even, int n_odd) { return sf::alternating_perm(n_even, n_odd).images(); });
  m.def("osp_L", [](const std::string& variant, int m) {
    if (variant != "plus" && variant != "minus") throw std::invalid_argument("variant must be 'plus' or 'minus'");
    return to_py(sf::osp_L(variant == "plus" ? sf::OspVariant::plus : sf::OspVariant::minus, m));
  });

  m.def(
      "chevalley_basis",
      [](const std::string& family, int parameter, const std::string& layout) {
        return basis_to_py(sf::chevalley_basis(algebra(family, parameter, layout)));
      },
      py::arg("family"), py::arg("parameter"), py::arg("layout") = "diagonal");
  m.def("cartan_matrix", [](const std::string& family, int rank) {
    return to_py(sf::cartan_matrix(sf::parse_family(family), rank));
  });
  m.def("inverse_cartan", [](const std::string& family, int rank) {
    return to_py(sf::inverse_cartan(sf::parse_family(family), rank));
  });
  m.def(
      "supermetric",
      [](const std::string& family, int parameter, const std::string& layout) {
        return to_py(sf::supermetric(algebra(family, parameter, layout)));
      },
      py::arg("family"), py::arg("parameter"), py::arg("layout") = "diagonal");
  m.def(
      "is_member",
      [](const std::string& family, int parameter, const std::string& layout, const py::sequence& mat) {
        const auto a = algebra(family, parameter, layout);
        return sf::is_member(a, sf::GradedMatrix(matrix_from_py(mat), a.format()));
      },
      py::arg("family"), py::arg("parameter"), py::arg("layout"), py::arg("mat"));
  m.def(
      "verify_chevalley",
      [](const std::string& family, int parameter, const std::string& layout) {
        const auto a = algebra(family, parameter, layout);
        const auto b = sf::chevalley_basis(a);
        const auto report = sf::verify_chevalley(b, sf::cartan_from_basis(b));
        std::vector<std::string> failed;
        for (const auto& c : report.checks)
          if (!c.pass) failed.push_back(c.name);
        return py::make_tuple(report.checks.size(), failed);
      },
      py::arg("family"), py::arg("parameter"), py::arg("layout") = "diagonal");
  m.def("principal_triple", [](const std::string& family, int parameter) {
    const auto a = algebra(family, parameter, "diagonal");
    const auto t = sf::principal_osp12(sf::chevalley_basis(a), sf::inverse_cartan(a.family, a.rank()));
    py::dict d;
    d["J_minus"] = to_py(t.j_minus.mat);
    d["J_plus"] = to_py(t.j_plus.mat);
    d["H"] = to_py(t.h.mat);
    d["relations_hold"] = sf::verify_osp12(t).all_pass();
    return d;
  });
  m.def(
      "highest_weights",
      [](const std::string& family, int parameter, int k, const std::string& layout) {
        py::list out;
        for (const auto& s : sf::highest_weights_solve(algebra(family, parameter, layout), k)) out.append(to_py(s.mat));
        return out;
      },
      py::arg("family"), py::arg("parameter"), py::arg("k"), py::arg("layout") = "diagonal");
  m.def("simple_roots", [](const std::vector<int>& signs) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& r : sf::simple_root_system(sf::Format(signs))) out.emplace_back(r.to_string(), r.parity);
    return out;
  });
  m.def("odd_simple_root_count", [](const std::vector<int>& signs) {
    return sf::odd_simple_root_count(sf::Format(signs));
  });
}
