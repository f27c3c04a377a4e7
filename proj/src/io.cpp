#include "patternforge/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace patternforge {

using nlohmann::json;

namespace {

json coefficients(const CycloNum &a)
{
    json row = json::array();
    for (const auto &q : a.coefficients())
        row.push_back(rational_to_string(q));
    return row;
}

std::string fmt(double v, const char *spec = "%.3f")
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

}  // namespace

json to_json(const PointSetDocument &doc)
{
    json pts = json::array();
    for (const auto &p : doc.points)
        pts.push_back(coefficients(p));
    return json{{"format_version", doc.format_version},
                {"conductor", doc.points.order()},
                {"points", std::move(pts)},
                {"metadata", doc.metadata}};
}

PointSetDocument document_from_json(const json &j)
{
    try {
        if (!j.is_object())
            throw ParseError("document must be a JSON object");
        const std::string version = j.at("format_version").get<std::string>();
        if (version != kDocumentFormat)
            throw ParseError("unsupported format_version '" + version + "' (expected " + std::string(kDocumentFormat) +
                             ")");
        const int order = j.at("conductor").get<int>();
        if (order < 1 || order > kMaxConductor)
            throw ParseError("conductor " + std::to_string(order) + " out of range");
        const auto degree = static_cast<std::size_t>(totient(order));
        std::vector<CycloNum> pts;
        for (const auto &row : j.at("points")) {
            if (!row.is_array() || row.size() != degree)
                throw ParseError("each point needs " + std::to_string(degree) + " coefficients for conductor " +
                                 std::to_string(order));
            std::vector<Rational> c;
            c.reserve(degree);
            for (const auto &item : row)
                c.push_back(item.is_number_integer() ? Rational(item.get<long>()) : parse_rational(item.get<std::string>()));
            pts.push_back(CycloNum::from_coefficients(order, c));
        }
        PointSetDocument doc;
        doc.format_version = version;
        try {
            doc.points = PointSet(order, std::move(pts));
        } catch (const std::invalid_argument &e) {
            throw ParseError(std::string("invalid point list: ") + e.what());
        }
        if (j.contains("metadata"))
            doc.metadata = j.at("metadata");
        return doc;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

std::string serialize(const PointSetDocument &doc) { return to_json(doc).dump(2) + "\n"; }

PointSetDocument parse_document(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return document_from_json(j);
}

PointSetDocument read_document(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

void write_document(const std::filesystem::path &path, const PointSetDocument &doc)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << serialize(doc);
}

json to_json(const VerdictLedger &l)
{
    json entries = json::array();
    for (const auto &e : l.entries()) {
        auto value = [](const ClaimValue &v) -> json {
            if (const auto *i = std::get_if<Integer>(&v))
                return i->fits_slong_p() ? json(i->get_si()) : json(i->get_str());
            return std::get<double>(v);
        };
        json row{{"claim_id", e.claim_id},
                 {"statement", e.statement},
                 {"kind", bound_kind_name(e.kind)},
                 {"expected", value(e.expected)},
                 {"computed", value(e.computed)},
                 {"passed", e.passed()}};
        if (std::holds_alternative<double>(e.expected))
            row["tolerance"] = e.tolerance;
        entries.push_back(std::move(row));
    }
    return json{{"entries", std::move(entries)},
                {"summary", {{"passed", l.pass_count()}, {"failed", l.fail_count()}}}};
}

json to_json(const CountReport &r, bool include_witnesses)
{
    json j{{"pattern_size", r.pattern_size},
           {"sym_order", r.sym_order},
           {"target_size", r.target_size},
           {"conductor", r.conductor},
           {"ordered_matches", r.ordered_matches.get_str()},
           {"copies", r.copies.get_str()},
           {"index", r.index}};
    if (include_witnesses)
        j["witness_sample"] = r.witnesses;
    if (!r.incidence.empty())
        j["incidence"] = r.incidence;
    return j;
}

json to_json(const BuildReport &r)
{
    json params = json::object();
    for (const auto &[k, v] : r.params)
        params[k] = v;
    json generic = json::array();
    for (const auto &g : r.parameters)
        generic.push_back({{"name", g.name}, {"value", g.value.to_string()}, {"height", g.height}});
    json j{{"recipe", r.recipe},
           {"params", std::move(params)},
           {"generic_parameters", std::move(generic)},
           {"size", r.output.size()},
           {"expected_size", r.expected_size.get_str()},
           {"max_collinear", r.max_collinear},
           {"copies", r.count.copies.get_str()},
           {"expected_copies", r.expected_copies.get_str()},
           {"copies_kind", bound_kind_name(r.copies_kind)},
           {"index", r.count.index},
           {"resamples", r.resamples},
           {"checks", to_json(r.checks)}};
    if (r.seed)
        j["seed"] = *r.seed;
    if (!r.notes.empty())
        j["notes"] = r.notes;
    return j;
}

PointSetDocument document_from_build(const BuildReport &r)
{
    PointSetDocument doc;
    doc.points = r.output;
    json report = to_json(r);
    doc.metadata = json{{"recipe", r.recipe},
                        {"params", report["params"]},
                        {"generic_parameters", report["generic_parameters"]},
                        {"seed", r.seed ? json(*r.seed) : json()},
                        {"checks", {{"passed", r.checks.pass_count()}, {"failed", r.checks.fail_count()}}}};
    return doc;
}

std::string render_svg(const PointSet &s, const std::vector<std::vector<std::size_t>> &highlights,
                       const SvgOptions &opt)
{
    std::vector<double> xs, ys;
    xs.reserve(s.size());
    ys.reserve(s.size());
    for (const auto &p : s) {
        const auto z = to_float(p, opt.precision).value;
        xs.push_back(z.real());
        ys.push_back(z.imag());
    }
    const double size = 600.0 * opt.scale, margin = 20.0 * opt.scale;
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!xs.empty()) {
        x0 = *std::min_element(xs.begin(), xs.end());
        x1 = *std::max_element(xs.begin(), xs.end());
        y0 = *std::min_element(ys.begin(), ys.end());
        y1 = *std::max_element(ys.begin(), ys.end());
    }
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    const double k = (size - 2 * margin) / span;
    auto px = [&](std::size_t i) { return margin + (xs[i] - x0) * k; };
    auto py = [&](std::size_t i) { return size - margin - (ys[i] - y0) * k; };  // y grows downward in SVG

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\"" << fmt(size)
       << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!highlights.empty()) {
        os << "<g fill=\"#1f77b4\" fill-opacity=\"0.12\" stroke=\"#1f77b4\" stroke-opacity=\"0.6\" stroke-width=\""
           << fmt(0.8 * opt.scale) << "\">\n";
        for (const auto &poly : highlights) {
            os << "<polygon points=\"";
            for (std::size_t t = 0; t < poly.size(); ++t)
                os << (t ? " " : "") << fmt(px(poly[t])) << ',' << fmt(py(poly[t]));
            os << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "<g fill=\"black\">\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        os << "<circle cx=\"" << fmt(px(i)) << "\" cy=\"" << fmt(py(i)) << "\" r=\"" << fmt(3.0 * opt.scale)
           << "\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace patternforge
