#include "eo/sseq.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eo/fp.hpp"

namespace eo {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

int cmod(long long x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}

struct Geometry {
    int p, n;
    long long alpha_stem, beta_stem, u_stem;
    int cap;  // filtration ceiling: the vanishing line 2n^2+2

    explicit Geometry(int p_)
        : p(p_),
          n(p_ - 1),
          alpha_stem(2 * n - 1),
          beta_stem(2LL * p * n - 2),
          u_stem(2LL * p * n * n),
          cap(2 * n * n + 2) {}

    long long stem(const Monomial& m) const {
        return m.eps * alpha_stem + m.b * beta_stem + m.c * u_stem;
    }
};

// c-range so that the monomial (eps, b, c) has stem within [lo, hi].
std::pair<long long, long long> c_range(const Geometry& g, int eps, long long b, long long lo,
                                        long long hi) {
    long long base = eps * g.alpha_stem + b * g.beta_stem;
    return {ceil_div(lo - base, g.u_stem), floor_div(hi - base, g.u_stem)};
}

ChartClass make_class(const Geometry& g, const Monomial& m, int cell, ChartKind kind) {
    ChartClass c;
    c.mono = m;
    c.cell = cell;
    c.stem = g.stem(m) + 2LL * g.n * cell;
    c.filtration = monomial_filtration(m);
    c.shape = (m.eps == 0 && m.b == 0) ? ClassShape::Marker : ClassShape::Dot;
    c.label = monomial_label(m);
    if (kind == ChartKind::Ahss) c.label += "[x" + std::to_string(cell) + "]";
    return c;
}

void sort_classes(std::vector<ChartClass>& classes) {
    std::sort(classes.begin(), classes.end(),
              [](const ChartClass& a, const ChartClass& b) { return a.key() < b.key(); });
}

// alpha/beta multiplication lines between displayed classes.
std::vector<ChartLine> structure_lines(const std::vector<ChartClass>& classes) {
    std::map<std::pair<Monomial, int>, const ChartClass*> by_mono;
    for (const auto& c : classes) by_mono[{c.mono, c.cell}] = &c;
    std::vector<ChartLine> lines;
    for (const auto& c : classes) {
        if (c.mono.eps == 0) {
            Monomial am{1, c.mono.b, c.mono.c};
            auto it = by_mono.find({am, c.cell});
            if (it != by_mono.end())
                lines.push_back({"alpha", c.stem, c.filtration, it->second->stem,
                                 it->second->filtration});
        }
        Monomial bm{c.mono.eps, c.mono.b + 1, c.mono.c};
        auto it = by_mono.find({bm, c.cell});
        if (it != by_mono.end())
            lines.push_back({"beta", c.stem, c.filtration, it->second->stem,
                             it->second->filtration});
    }
    std::sort(lines.begin(), lines.end(), [](const ChartLine& a, const ChartLine& b) {
        return std::tie(a.from_stem, a.from_filt, a.type) < std::tie(b.from_stem, b.from_filt, b.type);
    });
    return lines;
}

}  // namespace

long long monomial_stem(int p, const Monomial& m) { return Geometry(p).stem(m); }

int monomial_filtration(const Monomial& m) { return m.eps + 2 * static_cast<int>(m.b); }

std::string monomial_label(const Monomial& m) {
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += "*";
        out += part;
    };
    if (m.eps) append("a");
    if (m.b == 1) append("b");
    else if (m.b != 0) append("b^" + std::to_string(m.b));
    if (m.c == 1) append("u");
    else if (m.c != 0) append("u^" + std::to_string(m.c));
    return out.empty() ? "1" : out;
}

bool survives_einf(int p, const Monomial& m) {
    const int n = p - 1;
    if (m.eps == 0 && m.b == 0) return true;  // zero-line marker
    if (m.eps == 0) return cmod(m.c, p) == 0 && m.b <= static_cast<long long>(n) * n;
    return m.b < n && cmod(m.c, p) != p - 1;
}

BigradedChart hfpss_run(int p, long long stem_lo, long long stem_hi) {
    require_odd_prime(p);
    if (stem_lo > stem_hi)
        fail(ErrorKind::WindowEmpty, "stem window [" + std::to_string(stem_lo) + ", " +
                                         std::to_string(stem_hi) + "] is empty");
    const Geometry g(p);
    const int n = g.n;

    BigradedChart chart;
    chart.prime = p;
    chart.stem_lo = stem_lo;
    chart.stem_hi = stem_hi;
    chart.max_filtration = g.cap;
    chart.kind = ChartKind::Hfpss;
    chart.cells = 1;
    chart.periodicity = 2LL * p * p * n * n;

    // E_2: zero-line markers u^c plus all positive-filtration monomials
    // below the filtration cap.
    std::vector<ChartClass> e2;
    auto add_range = [&](int eps, long long b, std::vector<ChartClass>& dst) {
        auto [clo, chi] = c_range(g, eps, b, stem_lo, stem_hi);
        for (long long c = clo; c <= chi; ++c) dst.push_back(make_class(g, {eps, b, c}, 0, chart.kind));
    };
    for (int eps = 0; eps <= 1; ++eps)
        for (long long b = (eps == 0 ? 0 : 0); eps + 2 * b <= g.cap; ++b) add_range(eps, b, e2);
    sort_classes(e2);

    // Snapshot after the d_{2n+1} family.
    std::vector<ChartClass> mid;
    for (const auto& c : e2) {
        const Monomial& m = c.mono;
        bool alive;
        if (m.eps == 0 && m.b == 0) alive = true;
        else if (m.eps == 0) alive = cmod(m.c, p) == 0;
        else alive = (m.b < n) || (cmod(m.c, p) == p - 1);
        if (alive) mid.push_back(c);
    }

    std::vector<ChartClass> einf;
    for (const auto& c : e2)
        if (survives_einf(p, c.mono)) einf.push_back(c);

    chart.pages.push_back({2, e2});
    chart.pages.push_back({2 * n + 2, mid});
    chart.pages.push_back({2 * n * n + 2, einf});
    chart.survivors = einf;

    // d_{2n+1}(beta^b u^c) = c alpha beta^{b+n} u^{c-1}; recorded when either
    // endpoint stem is in the window.
    for (long long b = 0; 2 * b <= g.cap; ++b) {
        auto [clo, chi] = c_range(g, 0, b, stem_lo, stem_hi + 1);
        for (long long c = clo; c <= chi; ++c) {
            if (cmod(c, p) == 0) continue;
            Monomial src{0, b, c}, dst{1, b + n, c - 1};
            chart.differentials.push_back({2 * n + 1, g.stem(src), monomial_filtration(src),
                                           g.stem(dst), monomial_filtration(dst),
                                           monomial_label(src), monomial_label(dst)});
        }
    }
    // d_{2n^2+1}(alpha beta^b u^{pm+n}) = beta^{b+n^2+1} u^{pm} on survivors.
    for (long long b = 0; 1 + 2 * b <= g.cap; ++b) {
        auto [clo, chi] = c_range(g, 1, b, stem_lo, stem_hi + 1);
        for (long long c = clo; c <= chi; ++c) {
            if (cmod(c, p) != cmod(n, p)) continue;
            Monomial src{1, b, c}, dst{0, b + n * n + 1, c - n};
            chart.differentials.push_back({2 * n * n + 1, g.stem(src), monomial_filtration(src),
                                           g.stem(dst), monomial_filtration(dst),
                                           monomial_label(src), monomial_label(dst)});
        }
    }
    std::sort(chart.differentials.begin(), chart.differentials.end(),
              [](const ChartDifferential& a, const ChartDifferential& b) {
                  return std::tie(a.page, a.from_stem, a.from_filt) <
                         std::tie(b.page, b.from_stem, b.from_filt);
              });

    chart.lines = structure_lines(chart.survivors);
    return chart;
}

BigradedChart ahss_run(int p, int l, long long stem_lo, long long stem_hi) {
    require_odd_prime(p);
    if (l < 1 || l > p)
        fail(ErrorKind::OutOfRange, "cell count " + std::to_string(l) + " outside 1.." +
                                        std::to_string(p));
    if (stem_lo > stem_hi)
        fail(ErrorKind::WindowEmpty, "stem window [" + std::to_string(stem_lo) + ", " +
                                         std::to_string(stem_hi) + "] is empty");
    const Geometry g(p);
    const int n = g.n;

    BigradedChart chart;
    chart.prime = p;
    chart.stem_lo = stem_lo;
    chart.stem_hi = stem_hi;
    chart.max_filtration = g.cap;
    chart.kind = ChartKind::Ahss;
    chart.cells = l;
    chart.periodicity = 2LL * p * p * n * n;

    // E_2 = (survivors and markers) tensor the cells x_0..x_{l-1}.
    std::vector<ChartClass> e2;
    for (int cell = 0; cell < l; ++cell) {
        long long lo = stem_lo - 2LL * n * cell, hi = stem_hi - 2LL * n * cell;
        auto add_range = [&](int eps, long long b) {
            auto [clo, chi] = c_range(g, eps, b, lo, hi);
            for (long long c = clo; c <= chi; ++c) {
                Monomial m{eps, b, c};
                if (survives_einf(p, m)) e2.push_back(make_class(g, m, cell, chart.kind));
            }
        };
        for (long long b = 0; 2 * b <= g.cap; ++b) add_range(0, b);
        for (long long b = 0; 1 + 2 * b <= g.cap; ++b) add_range(1, b);
    }
    sort_classes(e2);
    chart.pages.push_back({2, e2});

    // Rule A: d(theta[x_{i+1}]) = (alpha theta)[x_i] when alpha*theta lies in
    // the survivor basis. Sources with an alpha factor vanish (alpha^2 = 0);
    // products outside the survivor basis are zero.
    std::set<std::pair<Monomial, int>> dead;
    for (int cell = 1; cell < l; ++cell) {
        long long lo = stem_lo - 2LL * n * cell, hi = stem_hi + 1 - 2LL * n * cell;
        for (long long b = 0; 2 * b <= g.cap; ++b) {
            auto [clo, chi] = c_range(g, 0, b, lo, hi);
            for (long long c = clo; c <= chi; ++c) {
                Monomial theta{0, b, c};
                if (!survives_einf(p, theta)) continue;
                Monomial prod{1, b, c};
                if (!survives_einf(p, prod) || prod.b >= n) continue;
                chart.differentials.push_back(
                    {2 * n, g.stem(theta) + 2LL * n * cell, monomial_filtration(theta),
                     g.stem(prod) + 2LL * n * (cell - 1), monomial_filtration(prod),
                     monomial_label(theta) + "[x" + std::to_string(cell) + "]",
                     monomial_label(prod) + "[x" + std::to_string(cell - 1) + "]"});
                if (theta.b != 0) dead.insert({theta, cell});  // markers persist as squares
                dead.insert({prod, cell - 1});
            }
        }
    }

    std::vector<ChartClass> after_a;
    for (const auto& c : e2)
        if (!dead.count({c.mono, c.cell})) after_a.push_back(c);
    chart.pages.push_back({2 * n + 1, after_a});

    // Rule B (l = p only): d((alpha theta)[x_{p-1}]) = (beta theta)[x_0]
    // when beta*theta lies in the survivor basis.
    if (l == p) {
        long long lo = stem_lo - 2LL * n * (l - 1), hi = stem_hi + 1 - 2LL * n * (l - 1);
        for (long long b = 0; b < n; ++b) {
            auto [clo, chi] = c_range(g, 1, b, lo, hi);
            for (long long c = clo; c <= chi; ++c) {
                Monomial src{1, b, c};
                if (!survives_einf(p, src)) continue;
                Monomial tgt{0, b + 1, c};
                if (!survives_einf(p, tgt) || tgt.b == 0) continue;
                if (cmod(c, p) != 0) continue;
                chart.differentials.push_back(
                    {2 * n * (p - 1), g.stem(src) + 2LL * n * (l - 1), monomial_filtration(src),
                     g.stem(tgt), monomial_filtration(tgt),
                     monomial_label(src) + "[x" + std::to_string(l - 1) + "]",
                     monomial_label(tgt) + "[x0]"});
                dead.insert({src, l - 1});
                dead.insert({tgt, 0});
            }
        }
        std::vector<ChartClass> after_b;
        for (const auto& c : e2)
            if (!dead.count({c.mono, c.cell})) after_b.push_back(c);
        chart.pages.push_back({2 * n * (p - 1) + 1, after_b});
    }

    std::sort(chart.differentials.begin(), chart.differentials.end(),
              [](const ChartDifferential& a, const ChartDifferential& b) {
                  return std::tie(a.page, a.from_stem, a.from_filt) <
                         std::tie(b.page, b.from_stem, b.from_filt);
              });

    chart.survivors = chart.pages.back().classes;
    // Only stems congruent to -1 mod 2n carry certified answers; everything
    // else is an upper bound because the zero line is modeled by markers only.
    for (auto& c : chart.survivors) c.upper_bound = (cmod(c.stem, 2 * n) != 2 * n - 1);

    chart.lines = structure_lines(chart.survivors);
    return chart;
}

void hurewicz_flags(BigradedChart& chart, const std::vector<FlagOverride>& overrides) {
    if (chart.kind != ChartKind::Hfpss)
        fail(ErrorKind::InvalidArgument, "hurewicz_flags expects a homotopy fixed point chart");
    const int n = chart.prime - 1;
    std::map<std::pair<long long, int>, Fill> table;
    for (const auto& o : overrides) table[{o.stem, o.filtration}] = o.fill;

    for (auto& c : chart.survivors) {
        if (c.shape == ClassShape::Marker) {
            c.fill = (c.mono.c == 0) ? Fill::Filled : Fill::Open;
        } else if (cmod(c.stem, 2 * n) == 2 * n - 1) {
            // These survivors are the alpha u^c family; only alpha itself is
            // in the Hurewicz image.
            c.fill = (c.mono.c == 0) ? Fill::Filled : Fill::Open;
        } else {
            auto it = table.find({c.stem, c.filtration});
            c.fill = (it != table.end()) ? it->second : Fill::Unknown;
        }
    }
}

bool chart_consistent(const BigradedChart& chart) {
    if (chart.pages.empty()) return false;
    const auto& e2 = chart.pages.front().classes;

    std::set<std::tuple<long long, int, std::string>> survivor_keys, endpoint_keys;
    for (const auto& c : chart.survivors) survivor_keys.insert(c.key());
    for (const auto& d : chart.differentials) {
        endpoint_keys.insert({d.from_stem, d.from_filt, d.from_label});
        endpoint_keys.insert({d.to_stem, d.to_filt, d.to_label});
        if (d.to_stem != d.from_stem - 1) return false;
        int expected_jump = (chart.kind == ChartKind::Hfpss) ? d.page : 1;
        if (d.to_filt != d.from_filt + expected_jump) return false;
    }
    for (const auto& c : e2) {
        if (c.shape == ClassShape::Marker) continue;  // markers persist by convention
        bool survived = survivor_keys.count(c.key()) > 0;
        bool endpoint = endpoint_keys.count(c.key()) > 0;
        if (survived == endpoint) return false;
    }
    return true;
}

}  // namespace eo
