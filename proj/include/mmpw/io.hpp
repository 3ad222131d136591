#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mmpw/fan.hpp"
#include "mmpw/ring.hpp"
#include "mmpw/valuations.hpp"
#include "mmpw/veronese.hpp"
#include "mmpw/walk.hpp"

namespace mmpw::io {

using json = nlohmann::json;

/// Parses UTF-8 JSON text. Throws ParseError with the byte offset on failure.
json parse_document(std::string_view text);
/// Two-space indented, keys sorted, trailing newline.
std::string dump(const json& doc);

json to_json(const Rat& x);
json to_json(const QVector& v);
json to_json(const PolyCone& c);
json to_json(const RingDatum& d);
json to_json(const Fan& fan);
json to_json(const ChamberDecomposition& dec);
json to_json(const LinearityFan& lf);
json to_json(const ChamberWalk& walk);
json to_json(const MmpTrace& trace);
json to_json(const VeroneseResult& v);
json to_json(const GridReport& report);
json to_json(const ValidationReport& report);
json to_json(const OValue& v);

// Readers throw ParseError naming the JSON path of the offending value.
Rat rat_from_json(const json& j, const std::string& path = "");
QVector vector_from_json(const json& j, const std::string& path = "");
PolyCone cone_from_json(const json& j, std::size_t ambient_dim, const std::string& path = "");
RingDatum datum_from_json(const json& j);
ChamberDecomposition decomposition_from_json(const json& j);
inline Fan fan_from_json(const json& j) { return decomposition_from_json(j).fan; }
MmpTrace trace_from_json(const json& j);

std::string render_text(const Fan& fan);
std::string render_text(const ChamberDecomposition& dec);

}  // namespace mmpw::io
