#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "eo/chart_emit.hpp"
#include "eo/comodule.hpp"
#include "eo/comodule_io.hpp"
#include "eo/reps.hpp"
#include "eo/splitting.hpp"
#include "eo/sseq.hpp"

namespace py = pybind11;
using namespace eo;

namespace {

// Structured values cross the boundary as JSON text parsed by the host
// interpreter; keeps the binding thin and the schemas identical to the CLI.
py::object json_to_py(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

std::string py_to_json(const py::object& obj) {
    return py::module_::import("json").attr("dumps")(obj).cast<std::string>();
}

GradedComodule comodule_from_py(const py::object& obj) {
    return parse_comodule(py_to_json(obj));
}

std::vector<std::pair<int, int>> summands_to_pairs(const SummandList& list) {
    std::vector<std::pair<int, int>> out;
    for (const auto& s : list) out.emplace_back(s.shift, s.length);
    return out;
}

SummandList pairs_to_summands(const std::vector<std::pair<int, int>>& pairs) {
    SummandList out;
    for (const auto& [shift, length] : pairs) out.push_back({shift, length});
    return canonical(std::move(out));
}

py::object chart_to_py(const BigradedChart& chart) {
    return json_to_py(chart_emit(chart, ChartFormat::Json));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic computations for EO-module splittings: modular "
              "representation theory of C_p, P(1)*-comodule decompositions, and "
              "spectral sequence charts.";

    py::register_exception<Error>(m, "EoError");

    m.def("tensor_rep", [](int r, int s, int p) { return tensor_rep(r, s, p).mults; },
          py::arg("r"), py::arg("s"), py::arg("p"),
          "Multiplicities of V_1..V_p in V_r (x) V_s (closed formula).");
    m.def("tensor_rep_brute",
          [](int r, int s, int p) { return tensor_rep_brute(r, s, p).mults; }, py::arg("r"),
          py::arg("s"), py::arg("p"), "Same decomposition from explicit matrices.");
    m.def("sym_power", [](int l, long long k, int p) { return sym_power(l, k, p).mults; },
          py::arg("l"), py::arg("k"), py::arg("p"),
          "Multiplicities of V_1..V_p in Sym^k V_l.");
    m.def("sym_power_brute",
          [](int l, int k, int p) { return sym_power_brute(l, k, p).mults; }, py::arg("l"),
          py::arg("k"), py::arg("p"), "Same decomposition from the monomial basis.");
    m.def("aq_tensor_square_check", &aq_tensor_square_check, py::arg("p"), py::arg("q"),
          "True when the A_q tensor square of the rank-2 free module is U_1 + U_3.");
    m.def("power_sums", &power_sums_from_chern, py::arg("cherns"), py::arg("p"),
          "Newton power sums psi_1..psi_k mod p from Chern residues c_1..c_k.");

    m.def("zeta_matrix",
          [](int l, int p) {
              FpMatrix z = zeta_matrix(l, p);
              std::vector<std::vector<int>> rows(l, std::vector<int>(l));
              for (int i = 0; i < l; ++i)
                  for (int j = 0; j < l; ++j) rows[i][j] = z.at(i, j);
              return rows;
          },
          py::arg("l"), py::arg("p"), "Normalized C_p generator acting on E_*(X_l)/m.");

    m.def("xl_homology",
          [](int l, int p) { return json_to_py(comodule_to_json(homology_of_Xl(l, p))); },
          py::arg("l"), py::arg("p"), "The comodule W_l as a schema dict.");

    m.def("decompose",
          [](const py::object& comodule) {
              return summands_to_pairs(decompose(comodule_from_py(comodule)));
          },
          py::arg("comodule"), "Decompose a comodule dict into (shift, length) pairs.");

    m.def("split_spectrum",
          [](const py::object& comodule, bool connective, bool torsion_free) {
              SpectrumSpec spec{comodule_from_py(comodule), connective, torsion_free};
              return json_to_py(splitting_to_json(split_spectrum(spec)));
          },
          py::arg("comodule"), py::arg("connective") = false, py::arg("torsion_free") = false,
          "Splitting rule and summands for EO ^ Z from its comodule dict.");

    m.def("smash_splitting",
          [](const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b,
             int p) {
              return summands_to_pairs(
                  smash_splitting(pairs_to_summands(a), pairs_to_summands(b), p));
          },
          py::arg("a"), py::arg("b"), py::arg("p"));
    m.def("sym_splitting",
          [](const std::vector<std::pair<int, int>>& a, int k, int p) {
              return summands_to_pairs(sym_splitting(pairs_to_summands(a), k, p));
          },
          py::arg("summands"), py::arg("k"), py::arg("p"));

    m.def("y2p_summands",
          [](int p, int max_degree) {
              auto list = decompose(y2p_comodule(p, max_degree));
              std::vector<std::tuple<int, int, bool>> out;
              for (const auto& s : list)
                  out.emplace_back(s.shift, s.length, summand_complete(s, p, max_degree));
              return out;
          },
          py::arg("p"), py::arg("max_degree"),
          "(shift, length, complete) triples for the truncated Y_2p cohomology.");

    m.def("orientability",
          [](const py::object& comodule, int psi_val) {
              return std::string(
                  to_string(orientable_chern_determined(comodule_from_py(comodule), psi_val)));
          },
          py::arg("comodule"), py::arg("psi_val"),
          "Orientable / NotOrientable / Undetermined for a sparse comodule.");

    m.def("hfpss_chart",
          [](int p, long long lo, long long hi, bool flags) {
              BigradedChart chart = hfpss_run(p, lo, hi);
              if (flags) hurewicz_flags(chart);
              return chart_to_py(chart);
          },
          py::arg("p"), py::arg("stem_lo"), py::arg("stem_hi"), py::arg("hurewicz_flags") = true,
          "Homotopy fixed point chart as a dict (classes, lines, differentials).");

    m.def("ahss_chart",
          [](int p, int l, long long lo, long long hi) {
              return chart_to_py(ahss_run(p, l, lo, hi));
          },
          py::arg("p"), py::arg("l"), py::arg("stem_lo"), py::arg("stem_hi"),
          "Atiyah-Hirzebruch chart for EO ^ X_l as a dict.");

    m.def("chart_render",
          [](int p, long long lo, long long hi, const std::string& format) {
              BigradedChart chart = hfpss_run(p, lo, hi);
              hurewicz_flags(chart);
              return chart_emit(chart, parse_chart_format(format));
          },
          py::arg("p"), py::arg("stem_lo"), py::arg("stem_hi"), py::arg("format") = "svg",
          "Rendered homotopy fixed point chart (svg, ascii or json text).");
}
