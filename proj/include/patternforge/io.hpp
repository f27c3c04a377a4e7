#pragma once

#include "patternforge/constructions.hpp"
#include "patternforge/geom.hpp"
#include "patternforge/ledger.hpp"
#include "patternforge/patterns.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace patternforge {

inline constexpr std::string_view kDocumentFormat = "pattern-pointset/1";

/// Persisted point set: exact coefficient vectors, never decimals.
struct PointSetDocument {
    std::string format_version{kDocumentFormat};
    PointSet points;
    nlohmann::json metadata = nlohmann::json::object();
};

nlohmann::json to_json(const PointSetDocument &doc);
/// Throws ParseError on a malformed document or unknown format version.
PointSetDocument document_from_json(const nlohmann::json &j);

std::string serialize(const PointSetDocument &doc);
PointSetDocument parse_document(std::string_view text);

PointSetDocument read_document(const std::filesystem::path &path);
void write_document(const std::filesystem::path &path, const PointSetDocument &doc);

/// Document for a build, with the recipe record and check summary as metadata.
PointSetDocument document_from_build(const BuildReport &r);

nlohmann::json to_json(const CountReport &r, bool include_witnesses = true);
nlohmann::json to_json(const VerdictLedger &l);
nlohmann::json to_json(const BuildReport &r);

struct SvgOptions {
    double scale = 1.0;       // multiplies the default 600px canvas
    unsigned precision = 128;  // bits for coordinate conversion
};

/// Points as circles; each highlight (indices into s) drawn as a translucent
/// polygon in the given vertex order.
std::string render_svg(const PointSet &s, const std::vector<std::vector<std::size_t>> &highlights,
                       const SvgOptions &opt = {});

}  // namespace patternforge
