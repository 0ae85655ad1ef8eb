#pragma once

#include <optional>
#include <string>

#include "eo/comodule.hpp"
#include "eo/splitting.hpp"
#include "eo/sseq.hpp"

namespace eo {

// Parses the comodule schema
//   { "prime": int, "grading": "cohomological"|"homological",
//     "generators": [{"id": string, "degree": int}, ...],
//     "theta": [{"from": id, "to": [[id, coeff], ...]}, ...] }
// rejecting unknown fields. Homological inputs are converted by degree
// reflection d -> (min+max) - d, which fixes the bottom degree. An explicit
// grading_override replaces the file's "grading" value.
GradedComodule parse_comodule(const std::string& json_text,
                              const std::optional<std::string>& grading_override = std::nullopt);

GradedComodule load_comodule_file(const std::string& path,
                                  const std::optional<std::string>& grading_override = std::nullopt);

std::string comodule_to_json(const GradedComodule& m);

std::string summands_to_json(const SummandList& list);

// { "rule": string, "summands": [[shift, length], ...], "remainder": [...] }
std::string splitting_to_json(const SplittingResult& result);

std::vector<FlagOverride> parse_flag_overrides(const std::string& json_text);

}  // namespace eo
