#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "eo/error.hpp"

namespace eo {

// Monomial alpha^eps beta^b u^c of the homotopy fixed point E_2 page
// F_p[alpha, beta, u^{+-}] (positive filtration) with
//   alpha in (2n-1, 1), beta in (2pn-2, 2), u in (2pn^2, 0).
// alpha^2 = 0 is structural (eps <= 1).
struct Monomial {
    int eps = 0;      // 0 or 1
    long long b = 0;  // beta exponent, >= 0
    long long c = 0;  // u exponent, any integer

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;
};

long long monomial_stem(int p, const Monomial& m);
int monomial_filtration(const Monomial& m);
std::string monomial_label(const Monomial& m);

// E-infinity membership for positive-filtration classes, plus the zero-line
// u^c markers (eps = b = 0), which always persist as squares.
bool survives_einf(int p, const Monomial& m);

enum class ChartKind { Hfpss, Ahss };
enum class ClassShape { Dot, Marker };
enum class Fill { Filled, Open, Unknown };

struct ChartClass {
    Monomial mono;
    int cell = 0;  // AHSS cell index; always 0 for HFPSS charts
    long long stem = 0;
    int filtration = 0;
    ClassShape shape = ClassShape::Dot;
    Fill fill = Fill::Unknown;
    bool upper_bound = false;  // AHSS-only: survivor not certified by the localization
    std::string label;

    auto key() const { return std::make_tuple(stem, filtration, label); }
};

struct ChartDifferential {
    int page;
    long long from_stem;
    int from_filt;
    long long to_stem;
    int to_filt;
    std::string from_label;
    std::string to_label;
};

struct ChartPage {
    int page;
    std::vector<ChartClass> classes;
};

struct ChartLine {
    std::string type;  // "alpha" or "beta"
    long long from_stem;
    int from_filt;
    long long to_stem;
    int to_filt;
};

struct BigradedChart {
    int prime;
    long long stem_lo;
    long long stem_hi;
    int max_filtration;
    ChartKind kind;
    int cells = 1;  // number of AHSS cells (1 for HFPSS)
    long long periodicity = 0;  // 2 p^2 n^2

    std::vector<ChartPage> pages;          // E_2 and the later snapshots
    std::vector<ChartClass> survivors;     // E-infinity display classes (incl. markers)
    std::vector<ChartDifferential> differentials;
    std::vector<ChartLine> lines;          // alpha/beta multiplications between survivors
};

// Homotopy fixed point spectral sequence of EO over the stem window
// [lo, hi]. Two generating differentials d_{2n+1}(u) = alpha beta^n and
// d_{2n^2+1}(alpha u^n) = beta^{n^2+1}, propagated by the Leibniz rule;
// the E-infinity page sits below the horizontal vanishing line at
// filtration 2n^2+2 and is 2p^2n^2-periodic under u^p.
BigradedChart hfpss_run(int p, long long stem_lo, long long stem_hi);

// Algebraic Atiyah-Hirzebruch chart for EO smashed with the l-cell complex:
// E_2 = (HFPSS survivors and u^c markers) tensor cells [x_0..x_{l-1}],
// rule A d(theta[x_{i+1}]) = (alpha theta)[x_i] whenever the product lands
// in the survivor basis, and (l = p only) rule B
// d((alpha theta)[x_{p-1}]) = (beta theta)[x_0] when beta theta survives.
BigradedChart ahss_run(int p, int l, long long stem_lo, long long stem_hi);

struct FlagOverride {
    long long stem;
    int filtration;
    Fill fill;
};

// Hurewicz fill flags per the chart conventions: the unit and alpha are
// filled, alpha u^c (c != 0) and the nonunit zero-line squares are open,
// everything else comes from the override table and defaults to Unknown.
void hurewicz_flags(BigradedChart& chart, const std::vector<FlagOverride>& overrides = {});

// Internal consistency of a chart: within the window and filtration cap,
// every positive-filtration class of the E_2 page is either a survivor or
// an endpoint of a recorded differential, and every recorded differential
// moves (stem, filtration) the way its page dictates.
bool chart_consistent(const BigradedChart& chart);

}  // namespace eo
