#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "preproj/classification.hpp"
#include "preproj/json_io.hpp"
#include "preproj/khare.hpp"
#include "preproj/oracle.hpp"
#include "preproj/reflection.hpp"
#include "preproj/roots.hpp"
#include "preproj/wreath_induction.hpp"

namespace py = pybind11;
using namespace preproj;
using io::json;

// Structured arguments cross the boundary as JSON text in the layouts of
// docs/formats.md; the Python package wraps them with json.dumps/loads.
namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Quiver quiver_arg(const std::string& text) { return io::quiver_from_json(parse(text)); }
Weight weight_arg(const std::string& text) { return io::weight_from_json(parse(text)); }
Scalar scalar_arg(const std::string& text) { return io::scalar_from_json(parse(text)); }
DimVector dim_arg(const std::string& text) { return io::dimvector_from_json(parse(text)); }

std::set<Vertex> window_arg(const std::vector<Vertex>& w) { return {w.begin(), w.end()}; }

std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_preproj, m) {
  m.doc() = "Exact computations with deformed preprojective algebras (JSON-text core)";

  static py::exception<ValidationError> validation(m, "ValidationError", PyExc_ValueError);
  static py::exception<DomainError> domain(m, "DomainError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::set_error(validation, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const json::exception& e) {
      py::set_error(validation, (std::string("schema: ") + e.what()).c_str());
    }
  });

  m.def("positive_roots", [](const std::string& q, const std::vector<Vertex>& window) {
    json out = json::array();
    for (const auto& r : enumerate_positive_roots(quiver_arg(q), window_arg(window))) out.push_back(io::to_json(r));
    return dump(out);
  });

  m.def("p_value", [](const std::string& q, const std::string& alpha) { return p_value(quiver_arg(q), dim_arg(alpha)); });

  m.def("dominate", [](const std::string& q, const std::string& weight, const std::vector<Vertex>& window) {
    auto w = window_arg(window);
    auto d = dominate(quiver_arg(q), weight_arg(weight), w);
    return dump({{"weight", io::to_json(d.weight)}, {"word", d.word}, {"dominant", is_weakly_dominant(d.weight, w)}});
  });

  m.def("exists_simple", [](const std::string& q, const std::string& weight, const std::string& alpha) {
    return dump(io::to_json(exists_simple(quiver_arg(q), weight_arg(weight), dim_arg(alpha))));
  });

  m.def(
      "enumerate_simples",
      [](const std::string& q, const std::string& weight, const std::vector<Vertex>& window, unsigned jobs) {
        json out = json::array();
        for (const auto& c : enumerate_simples(quiver_arg(q), weight_arg(weight), window_arg(window), jobs))
          out.push_back(io::to_json(c));
        return dump(out);
      },
      py::arg("quiver"), py::arg("weight"), py::arg("window"), py::arg("jobs") = 1);

  m.def("interval_conditions", [](const std::string& q, const std::string& weight, Vertex s, Vertex r) {
    return interval_conditions(quiver_arg(q), weight_arg(weight), s, r);
  });

  m.def("oracle_exists_simple", [](const std::string& q, const std::string& weight, const std::string& alpha) {
    return oracle_exists_simple(quiver_arg(q), weight_arg(weight), dim_arg(alpha));
  });

  m.def("khare_lambda", [](const std::vector<std::string>& f) {
    std::vector<Rational> coeffs;
    for (const auto& c : f) coeffs.push_back(parse_rational(c));
    return dump(io::to_json(khare_lambda(CasimirPolynomial(std::move(coeffs)))));
  });

  m.def("enumerate_vrs", [](const std::vector<std::string>& f, std::int64_t r_max) {
    std::vector<Rational> coeffs;
    for (const auto& c : f) coeffs.push_back(parse_rational(c));
    json out = json::array();
    for (const auto& v : enumerate_Vrs(CasimirPolynomial(std::move(coeffs)), r_max)) out.push_back(io::to_json(v));
    return dump(out);
  });

  m.def("check_module", [](const std::string& module, const std::string& weight, const std::string& nu) {
    auto doc = io::module_from_json(parse(module));
    return dump(io::to_json(check_wreath(doc.module, weight_arg(weight), scalar_arg(nu))));
  });

  m.def("reflect", [](const std::string& module, const std::vector<Vertex>& word, const std::string& weight,
                      const std::string& nu) {
    auto doc = io::module_from_json(parse(module));
    Scalar n = scalar_arg(nu);
    auto res = reflect_word(doc.module, weight_arg(weight), n, word);
    json j = io::to_json(res.module, res.weight, n);
    j["outside_lambda"] = res.outside_lambda;
    return dump(j);
  });

  m.def(
      "is_isomorphic",
      [](const std::string& a, const std::string& b, const std::string& weight, const std::string& nu,
         std::uint64_t seed) {
        return is_isomorphic(io::module_from_json(parse(a)).module, io::module_from_json(parse(b)).module,
                             weight_arg(weight), scalar_arg(nu), seed)
            .isomorphic;
      },
      py::arg("a"), py::arg("b"), py::arg("weight"), py::arg("nu"), py::arg("seed") = 0x5eed);

  m.def("in_lambda_i", [](const std::string& weight, const std::string& nu, Vertex i, int n) {
    return in_lambda_i(weight_arg(weight), scalar_arg(nu), i, n);
  });

  m.def("check_extension_conditions",
        [](const std::string& q, const std::vector<int>& partition, const std::vector<std::vector<int>>& diagrams,
           const std::vector<Vertex>& vertices, const std::string& weight, const std::string& nu, bool verify) {
          std::vector<YoungDiagram> ds;
          for (const auto& d : diagrams) ds.emplace_back(d);
          Quiver quiver = quiver_arg(q);
          Weight w = weight_arg(weight);
          Scalar n = scalar_arg(nu);
          auto verdict = check_extension_conditions(quiver, partition, ds, vertices, w, n);
          if (verify) verdict.relation_check = verify_relation_I_with_zero_arrows(quiver, partition, ds, vertices, w, n);
          return dump(io::to_json(verdict));
        });

  m.def("symmetric_group_irrep", [](const std::vector<int>& rows) {
    auto irrep = symmetric_group_irrep(YoungDiagram(rows));
    json gens = json::array();
    for (const auto& g : irrep.generators) gens.push_back(io::to_json(g));
    return dump({{"dim", irrep.dim}, {"generators", gens}});
  });
}
