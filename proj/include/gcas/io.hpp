#pragma once

#include <string>
#include <variant>

#include "gcas/construct.hpp"

namespace gcas {

/// Parsed parameter file: either construction, discriminated by the
/// "theorem" field ("t1" / "t2").
struct ParamsDocument {
    std::variant<Theorem1Params, Theorem2Params> payload;

    bool is_t1() const { return std::holds_alternative<Theorem1Params>(payload); }
};

/// Parse a params JSON document. Malformed JSON raises nlohmann's parse
/// error; a structurally inconsistent document (unknown theorem tag, k not
/// matching the partition count, ragged matrices) raises std::invalid_argument.
ParamsDocument parse_params(const std::string& json_text);
std::string serialize_params(const ParamsDocument& doc);

ArraySet parse_array_set(const std::string& json_text);
std::string serialize_array_set(const ArraySet& set);

/// Export-only CSV: a q,rows,cols header pair of lines, then one line per
/// member with entries flattened row-major.
std::string array_set_to_csv(const ArraySet& set);

OffsetStrategy strategy_from_string(const std::string& name);

/// Row of a member as a compact digit string ("00030003"); only valid for
/// q <= 10, otherwise entries are joined with commas.
std::string row_digit_string(const ExponentArray& member, Int row);

}  // namespace gcas
