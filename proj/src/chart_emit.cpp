#include "eo/chart_emit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace eo {

namespace {

// Display flag per class: "filled" / "open" for dots, "square" /
// "square-filled" for the zero-line markers. Dots with unknown Hurewicz
// status render filled and carry an annotation.
std::string class_flag(const ChartClass& c) {
    if (c.shape == ClassShape::Marker)
        return c.fill == Fill::Filled ? "square-filled" : "square";
    return c.fill == Fill::Open ? "open" : "filled";
}

std::string emit_json(const BigradedChart& chart) {
    nlohmann::json doc;
    doc["prime"] = chart.prime;
    doc["window"] = {chart.stem_lo, chart.stem_hi};
    doc["kind"] = chart.kind == ChartKind::Hfpss ? "hfpss" : "ahss";
    doc["periodicity"] = chart.periodicity;

    auto classes = nlohmann::json::array();
    for (const auto& c : chart.survivors) {
        nlohmann::json item;
        item["stem"] = c.stem;
        item["filtration"] = c.filtration;
        item["flag"] = class_flag(c);
        item["label"] = c.label;
        if (c.fill == Fill::Unknown && c.shape == ClassShape::Dot) item["annotated"] = true;
        if (chart.kind == ChartKind::Ahss && c.upper_bound) item["upper_bound"] = true;
        classes.push_back(std::move(item));
    }
    doc["classes"] = std::move(classes);

    auto lines = nlohmann::json::array();
    for (const auto& l : chart.lines)
        lines.push_back({{"type", l.type},
                         {"from", {l.from_stem, l.from_filt}},
                         {"to", {l.to_stem, l.to_filt}}});
    doc["lines"] = std::move(lines);

    auto diffs = nlohmann::json::array();
    for (const auto& d : chart.differentials)
        diffs.push_back({{"page", d.page},
                         {"from", {d.from_stem, d.from_filt}},
                         {"to", {d.to_stem, d.to_filt}}});
    doc["differentials"] = std::move(diffs);

    return doc.dump(2) + "\n";
}

std::string emit_ascii(const BigradedChart& chart) {
    std::map<std::pair<long long, int>, int> counts;
    int max_filt = 0;
    for (const auto& c : chart.survivors) {
        counts[{c.stem, c.filtration}] += 1;
        max_filt = std::max(max_filt, c.filtration);
    }
    std::ostringstream out;
    out << "# " << (chart.kind == ChartKind::Hfpss ? "hfpss" : "ahss") << " p=" << chart.prime
        << " stems " << chart.stem_lo << ".." << chart.stem_hi << "\n";
    for (int f = max_filt; f >= 0; --f) {
        out << (f < 10 ? " " : "") << f << " |";
        for (long long s = chart.stem_lo; s <= chart.stem_hi; ++s) {
            auto it = counts.find({s, f});
            if (it == counts.end()) out << '.';
            else if (it->second < 10) out << it->second;
            else out << '+';
        }
        out << "\n";
    }
    out << "   +";
    for (long long s = chart.stem_lo; s <= chart.stem_hi; ++s) out << (s % 10 == 0 ? '|' : '-');
    out << "\n    ";
    for (long long s = chart.stem_lo; s <= chart.stem_hi; ++s) {
        if (s % 10 == 0) {
            std::string label = std::to_string(s);
            out << label;
            s += static_cast<long long>(label.size()) - 1;
        } else {
            out << ' ';
        }
    }
    out << "\n";
    return out.str();
}

std::string emit_svg(const BigradedChart& chart) {
    const int xscale = 14, yscale = 22, margin = 30;
    int max_filt = chart.max_filtration;
    const long long width = (chart.stem_hi - chart.stem_lo) * xscale + 2 * margin;
    const long long height = static_cast<long long>(max_filt) * yscale + 2 * margin;
    auto x = [&](long long stem) { return margin + (stem - chart.stem_lo) * xscale; };
    auto y = [&](int filt) { return height - margin - static_cast<long long>(filt) * yscale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // Grid ticks.
    out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (long long s = chart.stem_lo; s <= chart.stem_hi; ++s)
        if (s % 5 == 0)
            out << "<line x1=\"" << x(s) << "\" y1=\"" << y(0) + 6 << "\" x2=\"" << x(s)
                << "\" y2=\"" << y(max_filt) << "\"/>\n";
    for (int f = 0; f <= max_filt; f += 2)
        out << "<line x1=\"" << x(chart.stem_lo) - 6 << "\" y1=\"" << y(f) << "\" x2=\""
            << x(chart.stem_hi) << "\" y2=\"" << y(f) << "\"/>\n";
    out << "</g>\n";

    // Axis labels.
    out << "<g font-family=\"monospace\" font-size=\"10\" fill=\"#444444\">\n";
    for (long long s = chart.stem_lo; s <= chart.stem_hi; ++s)
        if (s % 5 == 0)
            out << "<text x=\"" << x(s) - 4 << "\" y=\"" << y(0) + 18 << "\">" << s << "</text>\n";
    for (int f = 0; f <= max_filt; f += 2)
        out << "<text x=\"" << x(chart.stem_lo) - 24 << "\" y=\"" << y(f) + 4 << "\">" << f
            << "</text>\n";
    out << "</g>\n";

    out << "<g stroke=\"#888888\" stroke-width=\"1\">\n";
    for (const auto& l : chart.lines)
        out << "<line x1=\"" << x(l.from_stem) << "\" y1=\"" << y(l.from_filt) << "\" x2=\""
            << x(l.to_stem) << "\" y2=\"" << y(l.to_filt) << "\"/>\n";
    out << "</g>\n";

    out << "<g stroke=\"#cc3333\" stroke-width=\"1\">\n";
    for (const auto& d : chart.differentials) {
        if (d.from_stem < chart.stem_lo || d.from_stem > chart.stem_hi) continue;
        if (d.to_stem < chart.stem_lo || d.to_stem > chart.stem_hi) continue;
        if (d.from_filt > chart.max_filtration || d.to_filt > chart.max_filtration) continue;
        out << "<line x1=\"" << x(d.from_stem) << "\" y1=\"" << y(d.from_filt) << "\" x2=\""
            << x(d.to_stem) << "\" y2=\"" << y(d.to_filt) << "\"/>\n";
    }
    out << "</g>\n";

    for (const auto& c : chart.survivors) {
        if (c.shape == ClassShape::Marker) {
            const char* fill = c.fill == Fill::Filled ? "black" : "white";
            out << "<rect x=\"" << x(c.stem) - 3 << "\" y=\"" << y(c.filtration) - 3
                << "\" width=\"6\" height=\"6\" fill=\"" << fill
                << "\" stroke=\"black\" stroke-width=\"1\"><title>" << c.label
                << "</title></rect>\n";
        } else {
            const char* fill = c.fill == Fill::Open ? "white" : "black";
            out << "<circle cx=\"" << x(c.stem) << "\" cy=\"" << y(c.filtration)
                << "\" r=\"3\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"1\">"
                << "<title>" << c.label << (c.fill == Fill::Unknown ? " (?)" : "")
                << "</title></circle>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace

ChartFormat parse_chart_format(const std::string& name) {
    if (name == "svg") return ChartFormat::Svg;
    if (name == "ascii") return ChartFormat::Ascii;
    if (name == "json") return ChartFormat::Json;
    fail(ErrorKind::UnsupportedFormat, "unknown chart format '" + name + "'");
}

std::string chart_emit(const BigradedChart& chart, ChartFormat format) {
    switch (format) {
        case ChartFormat::Svg: return emit_svg(chart);
        case ChartFormat::Ascii: return emit_ascii(chart);
        case ChartFormat::Json: return emit_json(chart);
    }
    fail(ErrorKind::UnsupportedFormat, "unknown chart format");
}

}  // namespace eo
