#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "zonocube/bruhat.hpp"
#include "zonocube/cubillage.hpp"
#include "zonocube/order.hpp"
#include "zonocube/systems.hpp"

namespace zonocube::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become MalformedInput.
Json parse(const std::string& text);
/// Compact single-line rendering followed by a newline.
std::string dump(const Json& j);

Json to_json(ColorSet s);
Json to_json(const std::vector<ColorSet>& sets);
Json to_json(const Cubillage& Q);
Json to_json(const SetSystem& S);
Json to_json(const Membrane& M);
Json to_json(const AdmissibleOrder& O);
Json to_json(const Triangulation& T);

/// Each reader validates the schema and throws MalformedInput on violations.
ColorSet color_set_from_json(const Json& j);
std::vector<ColorSet> color_sets_from_json(const Json& j);
Cubillage cubillage_from_json(const Json& j);
SetSystem set_system_from_json(const Json& j);
Membrane membrane_from_json(const Json& j);
AdmissibleOrder order_from_json(const Json& j);
Triangulation triangulation_from_json(const Json& j);

/// Reads a compact set list: JSON (`[[2,4,6],[1,3]]`) or digit words (`246,13`, `0` for the empty set).
std::vector<ColorSet> parse_set_list(const std::string& text);
/// Reads one set: JSON array or a digit word.
ColorSet parse_set(const std::string& text);

}  // namespace zonocube::io
