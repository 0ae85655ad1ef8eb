// eotool: command line surface for the EO splitting toolkit.
//
// Exit codes: 0 success, 1 internal verification failure (formula/oracle
// disagreement or a failed structural check), 2 invalid input, 3 honest
// Undetermined.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "eo/chart_emit.hpp"
#include "eo/comodule.hpp"
#include "eo/comodule_io.hpp"
#include "eo/reps.hpp"
#include "eo/splitting.hpp"
#include "eo/sseq.hpp"

namespace {

struct Window {
    long long lo = 0;
    long long hi = 0;
};

Window parse_window(const std::string& text) {
    auto pos = text.find("..", 1);  // skip a leading minus sign
    if (pos == std::string::npos)
        eo::fail(eo::ErrorKind::InvalidArgument, "stems must look like LO..HI, got '" + text + "'");
    try {
        Window w;
        w.lo = std::stoll(text.substr(0, pos));
        w.hi = std::stoll(text.substr(pos + 2));
        return w;
    } catch (const std::exception&) {
        eo::fail(eo::ErrorKind::InvalidArgument, "stems must look like LO..HI, got '" + text + "'");
    }
}

std::vector<int> parse_residues(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) {
                try {
                    out.push_back(std::stoi(cur));
                } catch (const std::exception&) {
                    eo::fail(eo::ErrorKind::InvalidArgument, "bad residue '" + cur + "'");
                }
                cur.clear();
            }
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) eo::fail(eo::ErrorKind::InvalidArgument, "cannot open file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int exit_code_for(const eo::Error&) { return 2; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for EO-module splittings, P(1)*-comodule "
                 "decompositions, and homotopy fixed point / Atiyah-Hirzebruch charts."};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- homotopy ------------------------------------------------------
    auto* homotopy = app.add_subcommand("homotopy", "Homotopy fixed point chart of EO");
    int h_prime = 3;
    std::string h_stems = "0..71", h_format = "ascii", h_overrides;
    homotopy->add_option("--prime", h_prime, "odd prime")->required();
    homotopy->add_option("--stems", h_stems, "stem window LO..HI");
    homotopy->add_option("--format", h_format, "svg, ascii or json");
    homotopy->add_option("--override-flags", h_overrides, "JSON file of Hurewicz fill overrides");
    homotopy->callback([&] {
        auto w = parse_window(h_stems);
        auto chart = eo::hfpss_run(h_prime, w.lo, w.hi);
        std::vector<eo::FlagOverride> overrides;
        if (!h_overrides.empty()) overrides = eo::parse_flag_overrides(read_file(h_overrides));
        eo::hurewicz_flags(chart, overrides);
        std::cout << eo::chart_emit(chart, eo::parse_chart_format(h_format));
    });

    // ---- ahss ----------------------------------------------------------
    auto* ahss = app.add_subcommand("ahss", "Algebraic Atiyah-Hirzebruch chart of EO ^ X_l");
    int a_prime = 3, a_length = 1;
    std::string a_stems = "0..71", a_format = "ascii";
    ahss->add_option("--prime", a_prime, "odd prime")->required();
    ahss->add_option("--length", a_length, "number of cells l (1..p)")->required();
    ahss->add_option("--stems", a_stems, "stem window LO..HI");
    ahss->add_option("--format", a_format, "svg, ascii or json");
    ahss->callback([&] {
        auto w = parse_window(a_stems);
        auto chart = eo::ahss_run(a_prime, a_length, w.lo, w.hi);
        std::cout << eo::chart_emit(chart, eo::parse_chart_format(a_format));
    });

    // ---- split ---------------------------------------------------------
    auto* split = app.add_subcommand("split", "Split EO ^ Z from a comodule file");
    std::string s_file, s_grading;
    bool s_connective = false, s_torsion_free = false;
    split->add_option("file", s_file, "comodule JSON file")->required();
    split->add_flag("--connective", s_connective, "the spectrum is connective");
    split->add_flag("--torsion-free", s_torsion_free, "the spectrum is torsion free");
    split->add_option("--grading", s_grading, "override the file's grading field");
    split->callback([&] {
        std::optional<std::string> grading;
        if (!s_grading.empty()) grading = s_grading;
        eo::SpectrumSpec spec{eo::load_comodule_file(s_file, grading), s_connective,
                              s_torsion_free};
        auto result = eo::split_spectrum(spec);
        std::cout << eo::splitting_to_json(result);
        if (result.rule == eo::SplitRule::Undetermined) exit_code = 3;
    });

    // ---- decompose -----------------------------------------------------
    auto* dec = app.add_subcommand("decompose", "Decompose a comodule into Sigma^s W_l");
    std::string d_file, d_grading;
    dec->add_option("file", d_file, "comodule JSON file")->required();
    dec->add_option("--grading", d_grading, "override the file's grading field");
    dec->callback([&] {
        std::optional<std::string> grading;
        if (!d_grading.empty()) grading = d_grading;
        auto m = eo::load_comodule_file(d_file, grading);
        std::string summands = eo::summands_to_json(eo::decompose(m));
        summands.pop_back();  // trailing newline
        std::cout << "{\"prime\": " << m.prime << ", \"summands\": " << summands << "}\n";
    });

    // ---- tensor --------------------------------------------------------
    auto* tensor = app.add_subcommand("tensor", "Decompose V_r (x) V_s, formula vs oracle");
    int t_r = 1, t_s = 1, t_prime = 3;
    tensor->add_option("r", t_r, "first length")->required();
    tensor->add_option("s", t_s, "second length")->required();
    tensor->add_option("--prime", t_prime, "odd prime")->required();
    tensor->callback([&] {
        auto formula = eo::tensor_rep(t_r, t_s, t_prime);
        auto oracle = eo::tensor_rep_brute(t_r, t_s, t_prime);
        std::cout << "V_" << t_r << " (x) V_" << t_s << " over F_" << t_prime << "\n";
        std::cout << "formula: " << eo::to_string(formula) << "\n";
        std::cout << "oracle:  " << eo::to_string(oracle) << "\n";
        bool agree = formula == oracle;
        std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
        if (!agree) exit_code = 1;
    });

    // ---- sym -----------------------------------------------------------
    auto* sym = app.add_subcommand("sym", "Decompose Sym^k V_l, formula vs oracle");
    int y_l = 1, y_prime = 3;
    long long y_k = 0;
    sym->add_option("l", y_l, "module length")->required();
    sym->add_option("k", y_k, "symmetric power")->required();
    sym->add_option("--prime", y_prime, "odd prime")->required();
    sym->callback([&] {
        auto formula = eo::sym_power(y_l, y_k, y_prime);
        std::cout << "Sym^" << y_k << " V_" << y_l << " over F_" << y_prime << "\n";
        std::cout << "formula: " << eo::to_string(formula) << "\n";
        if (y_k > 1000000) {
            std::cout << "oracle:  skipped (k too large for the monomial basis)\n"
                      << "ORACLE-SKIPPED\n";
            return;
        }
        try {
            auto oracle = eo::sym_power_brute(y_l, static_cast<int>(y_k), y_prime);
            std::cout << "oracle:  " << eo::to_string(oracle) << "\n";
            bool agree = formula == oracle;
            std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
            if (!agree) exit_code = 1;
        } catch (const eo::Error& e) {
            if (e.kind() != eo::ErrorKind::TooLarge) throw;
            std::cout << "oracle:  skipped (basis dimension exceeds the guard)\n"
                      << "ORACLE-SKIPPED\n";
        }
    });

    // ---- y2p -----------------------------------------------------------
    auto* y2p = app.add_subcommand("y2p", "Decomposition report for the Y_2p cohomology");
    int w_prime = 3, w_max = 0;
    y2p->add_option("--prime", w_prime, "odd prime")->required();
    y2p->add_option("--max-degree", w_max, "truncation degree (>= 2p)")->required();
    y2p->callback([&] {
        auto y = eo::y2p_comodule(w_prime, w_max);
        auto list = eo::decompose(y);
        std::cout << "Y_2p cohomology at p=" << w_prime << ", truncated above degree " << w_max
                  << " (dimension " << y.dim() << ")\n";
        eo::SummandList complete, boundary;
        for (const auto& s : list)
            (eo::summand_complete(s, w_prime, w_max) ? complete : boundary).push_back(s);
        std::cout << "complete summands:   " << eo::to_string(complete) << "\n";
        std::cout << "boundary-incomplete: " << eo::to_string(boundary) << "\n";
        bool ok = true;
        for (const auto& s : complete)
            if (s.length < w_prime && (s.length != 1 || ((s.shift % (2 * w_prime)) + 2 * w_prime) %
                                                                (2 * w_prime) !=
                                                            0))
                ok = false;
        std::cout << "trivial-summand degree check: "
                  << (ok ? "OK (complete short summands are trivial in degrees 0 mod 2p)"
                         : "VIOLATION")
                  << "\n";
        if (!ok) exit_code = 1;
    });

    // ---- orient --------------------------------------------------------
    auto* orient = app.add_subcommand("orient", "Chern-determined orientability verdict");
    std::string o_file, o_chern, o_grading;
    orient->add_option("file", o_file, "comodule JSON file")->required();
    orient->add_option("--chern", o_chern, "comma-separated residues c_1,c_2,...")->required();
    orient->add_option("--grading", o_grading, "override the file's grading field");
    orient->callback([&] {
        std::optional<std::string> grading;
        if (!o_grading.empty()) grading = o_grading;
        auto z = eo::load_comodule_file(o_file, grading);
        auto cherns = parse_residues(o_chern);
        cherns.resize(std::max<size_t>(cherns.size(), z.prime - 1), 0);
        auto psi = eo::power_sums_from_chern(cherns, z.prime);
        std::cout << "psi:";
        for (size_t i = 0; i < psi.size(); ++i) std::cout << " " << psi[i];
        std::cout << "\n";
        int psi_val = psi[z.prime - 2];
        auto verdict = eo::orientable_chern_determined(z, psi_val);
        std::cout << "psi_" << z.prime - 1 << " = " << psi_val << " (mod " << z.prime << ")\n";
        std::cout << "verdict: " << eo::to_string(verdict) << "\n";
        if (verdict == eo::OrientVerdict::NotOrientable) exit_code = 1;
        if (verdict == eo::OrientVerdict::Undetermined) exit_code = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const eo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
