#pragma once

#include <string>
#include <string_view>

#include "monoslicer/model.hpp"

namespace monoslicer {

/// Parses a fact file (JSON, UTF-8). Top-level keys: facades, functions,
/// tables, calls, accesses, signatures. Throws SyntaxError on malformed
/// JSON, SchemaError on missing/mistyped/duplicated fields; the error names
/// the offending field path.
SystemModel parse_model(std::string_view text);
SystemModel parse_model_file(const std::string& path);

/// Canonical JSON rendering of a model. parse_model(serialize_model(m)) == m.
std::string serialize_model(const SystemModel& model);

/// Parses a table→area CSV (header `table,area`). Rows whose area is the
/// reserved name `control` assign the table to the Control Subsystem.
/// Throws SyntaxError (with line number) or EmptyMapError.
AreaMap parse_area_map(std::string_view text);
AreaMap parse_area_map_file(const std::string& path);

/// Reserved area name for Control Subsystem tables in the CSV input.
inline constexpr std::string_view kControlAreaName = "control";

}  // namespace monoslicer
