#include "eo/comodule_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"


namespace eo {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(ErrorKind::SchemaViolation, "input is not valid JSON");
    return doc;
}

void check_keys(const json& obj, const std::vector<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) fail(ErrorKind::SchemaViolation, where + ": expected an object");
    for (const auto& [key, value] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(ErrorKind::SchemaViolation, where + ": unknown field '" + key + "'");
}

const json& require_field(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(ErrorKind::SchemaViolation, where + ": missing field '" + key + "'");
    return *it;
}

int require_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(ErrorKind::SchemaViolation, where + ": expected an integer");
    return v.get<int>();
}

std::string require_string(const json& v, const std::string& where) {
    if (!v.is_string()) fail(ErrorKind::SchemaViolation, where + ": expected a string");
    return v.get<std::string>();
}

}  // namespace

GradedComodule parse_comodule(const std::string& json_text,
                              const std::optional<std::string>& grading_override) {
    json doc = parse_json(json_text);
    check_keys(doc, {"prime", "grading", "generators", "theta"}, "comodule");

    const int prime = require_int(require_field(doc, "prime", "comodule"), "prime");
    if (!is_odd_prime(prime))
        fail(ErrorKind::SchemaViolation, "prime: " + std::to_string(prime) + " is not an odd prime");

    std::string grading = require_string(require_field(doc, "grading", "comodule"), "grading");
    if (grading_override) grading = *grading_override;
    if (grading != "cohomological" && grading != "homological")
        fail(ErrorKind::SchemaViolation, "grading: expected 'cohomological' or 'homological'");

    const json& gens = require_field(doc, "generators", "comodule");
    if (!gens.is_array()) fail(ErrorKind::SchemaViolation, "generators: expected an array");

    GradedComodule out{prime, {}, {}};
    std::map<std::string, int> by_id;
    for (size_t i = 0; i < gens.size(); ++i) {
        const std::string where = "generators[" + std::to_string(i) + "]";
        check_keys(gens[i], {"id", "degree"}, where);
        std::string id = require_string(require_field(gens[i], "id", where), where + ".id");
        int degree = require_int(require_field(gens[i], "degree", where), where + ".degree");
        if (by_id.count(id)) fail(ErrorKind::SchemaViolation, where + ": duplicate id '" + id + "'");
        by_id[id] = static_cast<int>(i);
        out.generators.push_back({id, degree});
    }
    out.theta.resize(out.generators.size());

    const json& theta = require_field(doc, "theta", "comodule");
    if (!theta.is_array()) fail(ErrorKind::SchemaViolation, "theta: expected an array");
    for (size_t i = 0; i < theta.size(); ++i) {
        const std::string where = "theta[" + std::to_string(i) + "]";
        check_keys(theta[i], {"from", "to"}, where);
        std::string from = require_string(require_field(theta[i], "from", where), where + ".from");
        auto from_it = by_id.find(from);
        if (from_it == by_id.end())
            fail(ErrorKind::SchemaViolation, where + ": unknown generator '" + from + "'");
        const json& to = require_field(theta[i], "to", where);
        if (!to.is_array()) fail(ErrorKind::SchemaViolation, where + ".to: expected an array");
        for (size_t j = 0; j < to.size(); ++j) {
            const std::string entry = where + ".to[" + std::to_string(j) + "]";
            if (!to[j].is_array() || to[j].size() != 2)
                fail(ErrorKind::SchemaViolation, entry + ": expected an [id, coeff] pair");
            std::string tid = require_string(to[j][0], entry + "[0]");
            int coeff = require_int(to[j][1], entry + "[1]");
            auto tid_it = by_id.find(tid);
            if (tid_it == by_id.end())
                fail(ErrorKind::SchemaViolation, entry + ": unknown generator '" + tid + "'");
            int reduced = mod_reduce(coeff, prime);
            if (reduced != 0)
                out.theta[from_it->second].emplace_back(tid_it->second, reduced);
        }
    }

    if (grading == "homological" && !out.generators.empty()) {
        // Reflect degrees so the lowering operator becomes a raising one
        // while the bottom degree stays put.
        int lo = out.generators[0].degree, hi = lo;
        for (const auto& g : out.generators) {
            lo = std::min(lo, g.degree);
            hi = std::max(hi, g.degree);
        }
        for (auto& g : out.generators) g.degree = lo + hi - g.degree;
    }

    validate(out);
    return out;
}

GradedComodule load_comodule_file(const std::string& path,
                                  const std::optional<std::string>& grading_override) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_comodule(buffer.str(), grading_override);
}

std::string comodule_to_json(const GradedComodule& m) {
    json doc;
    doc["prime"] = m.prime;
    doc["grading"] = "cohomological";
    auto gens = json::array();
    for (const auto& g : m.generators) gens.push_back({{"id", g.id}, {"degree", g.degree}});
    doc["generators"] = std::move(gens);
    auto theta = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        if (m.theta[i].empty()) continue;
        auto to = json::array();
        for (const auto& [tgt, coeff] : m.theta[i])
            to.push_back({m.generators[tgt].id, coeff});
        theta.push_back({{"from", m.generators[i].id}, {"to", std::move(to)}});
    }
    doc["theta"] = std::move(theta);
    return doc.dump(2) + "\n";
}

std::string summands_to_json(const SummandList& list) {
    json arr = json::array();
    for (const auto& s : list) arr.push_back({s.shift, s.length});
    return arr.dump() + "\n";
}

std::string splitting_to_json(const SplittingResult& result) {
    json doc;
    doc["rule"] = to_string(result.rule);
    auto summands = json::array();
    for (const auto& s : result.summands) summands.push_back({s.shift, s.length});
    doc["summands"] = std::move(summands);
    auto remainder = json::array();
    for (const auto& s : result.remainder) remainder.push_back({s.shift, s.length});
    doc["remainder"] = std::move(remainder);
    return doc.dump(2) + "\n";
}

std::vector<FlagOverride> parse_flag_overrides(const std::string& json_text) {
    json doc = parse_json(json_text);
    if (!doc.is_array()) fail(ErrorKind::SchemaViolation, "overrides: expected an array");
    std::vector<FlagOverride> out;
    for (size_t i = 0; i < doc.size(); ++i) {
        const std::string where = "overrides[" + std::to_string(i) + "]";
        check_keys(doc[i], {"stem", "filtration", "fill"}, where);
        FlagOverride o;
        o.stem = require_int(require_field(doc[i], "stem", where), where + ".stem");
        o.filtration =
            require_int(require_field(doc[i], "filtration", where), where + ".filtration");
        std::string fill = require_string(require_field(doc[i], "fill", where), where + ".fill");
        if (fill == "filled") o.fill = Fill::Filled;
        else if (fill == "open") o.fill = Fill::Open;
        else fail(ErrorKind::SchemaViolation, where + ".fill: expected 'filled' or 'open'");
        out.push_back(o);
    }
    return out;
}

}  // namespace eo
