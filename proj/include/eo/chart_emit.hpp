#pragma once

#include <string>

#include "eo/sseq.hpp"

namespace eo {

enum class ChartFormat { Svg, Ascii, Json };

// Parses "svg", "ascii" or "json"; throws UnsupportedFormat otherwise.
ChartFormat parse_chart_format(const std::string& name);

// Deterministic rendering: identical charts yield byte-identical output.
std::string chart_emit(const BigradedChart& chart, ChartFormat format);

}  // namespace eo
