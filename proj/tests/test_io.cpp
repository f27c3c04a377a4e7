#include "patternforge/io.hpp"

#include <doctest.h>

#include <filesystem>

using namespace patternforge;
using nlohmann::json;

namespace {

std::size_t occurrences(const std::string &text, const std::string &needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("documents round-trip exactly")
{
    ParamSampler rng(3);
    const BuildReport r = scalene14(rng);
    const PointSetDocument doc = document_from_build(r);
    const std::string text = serialize(doc);
    const PointSetDocument back = parse_document(text);
    CHECK(back.points == r.output);
    CHECK(back.format_version == kDocumentFormat);
    CHECK(back.metadata.at("recipe") == "scalene14");
    CHECK(back.metadata.at("seed") == 3);
    CHECK(serialize(back) == text);

    // large conductors and fractions survive as well
    const PointSet pent = pentagon120(rng).output;
    PointSetDocument d2;
    d2.points = pent;
    CHECK(parse_document(serialize(d2)).points == pent);
}

TEST_CASE("file round trip")
{
    const auto path = std::filesystem::temp_directory_path() / "patternforge_io_test.json";
    PointSetDocument doc;
    doc.points = hex_lattice_cluster(6).output;
    write_document(path, doc);
    CHECK(read_document(path).points == doc.points);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_document(path), ParseError);
}

TEST_CASE("malformed documents are rejected")
{
    CHECK_THROWS_AS(parse_document("not json"), ParseError);
    CHECK_THROWS_AS(parse_document("[]"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format_version": "pattern-pointset/9", "conductor": 4, "points": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format_version": "pattern-pointset/1", "points": []})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format_version": "pattern-pointset/1", "conductor": 121, "points": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format_version": "pattern-pointset/1", "conductor": 4, "points": [["1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_document(R"({"format_version": "pattern-pointset/1", "conductor": 4, "points": [["1", "x"]]})"),
        ParseError);
    CHECK_THROWS_AS(parse_document(
                        R"({"format_version": "pattern-pointset/1", "conductor": 4, "points": [["1", "0"], [1, 0]]})"),
                    ParseError);
    const auto ok = parse_document(
        R"({"format_version": "pattern-pointset/1", "conductor": 4, "points": [["1/2", "-3"], [0, 1]]})");
    CHECK(ok.points.size() == 2);
    CHECK(ok.points[0] == CycloNum::gaussian(4, Rational(1, 2), -3));
}

TEST_CASE("reports serialise")
{
    const BuildReport r = isosceles8(IsoscelesVariant::a, 1, 5);
    const json j = to_json(r);
    CHECK(j.at("copies") == "9");
    CHECK(j.at("size") == 8);
    CHECK(j.at("checks").at("summary").at("failed") == 0);
    const json c = to_json(r.count);
    CHECK(c.at("witness_sample").size() == 9);
    CHECK_FALSE(to_json(r.count, false).contains("witness_sample"));
    const json l = to_json(r.checks);
    CHECK(l.at("entries").size() == r.checks.size());
    CHECK(l.at("entries")[0].contains("claim_id"));
}

TEST_CASE("svg draws one circle per point and one polygon per highlight")
{
    const BuildReport hex = hex_lattice_cluster(6);
    CountOptions opt;
    opt.full_witnesses = true;
    const CountReport r = count_similar(equilateral_triangle(), hex.output, opt);
    const std::string svg = render_svg(hex.output, r.witnesses);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(occurrences(svg, "<circle") == 19);
    CHECK(occurrences(svg, "<polygon") == 66);
    CHECK(occurrences(render_svg(hex.output, {}), "<polygon") == 0);
    CHECK(render_svg(PointSet(4), {}).find("</svg>") != std::string::npos);
}
