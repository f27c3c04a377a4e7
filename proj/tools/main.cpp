// patternforge command-line driver.
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include "patternforge/constructions.hpp"
#include "patternforge/io.hpp"
#include "patternforge/patterns.hpp"
#include "patternforge/simd/mod_kernels.hpp"
#include "patternforge/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace patternforge;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
    // shared
    std::uint64_t seed = 0;
    std::string out;
    bool as_json = false;
    int budget = kDefaultBudget;

    // build
    std::string recipe;
    int k = 0;
    int m = 0;
    std::string variant = "a";
    std::string alpha = "1/5";

    // count / svg / sum / iterate / pfree
    std::string pattern_path, set_path, second_path;
    bool witnesses = false, full = false, oracle = false;
    std::string highlight;
    double scale = 1.0;
    int j = 2;
    bool strict = false;

    // verify
    std::string scope = "all";

    // pattern
    std::string shape;
    std::string z;
};

void print_summary(const BuildReport &r)
{
    std::printf("recipe        %s\n", r.recipe.c_str());
    for (const auto &[k, v] : r.params)
        std::printf("  %-11s %s\n", k.c_str(), v.c_str());
    for (const auto &g : r.parameters)
        std::printf("  %-11s %s\n", g.name.c_str(), g.value.to_string().c_str());
    std::printf("size          %zu\n", r.output.size());
    std::printf("max_collinear %zu\n", r.max_collinear);
    std::printf("copies        %s (%s %s)\n", r.count.copies.get_str().c_str(), bound_kind_name(r.copies_kind),
                r.expected_copies.get_str().c_str());
    std::printf("index         %.6f\n", r.count.index);
    std::printf("resamples     %d\n", r.resamples);
    std::printf("checks        %zu passed, %zu failed\n", r.checks.pass_count(), r.checks.fail_count());
    for (const auto &n : r.notes)
        std::printf("note          %s\n", n.c_str());
}

int emit_build(const BuildReport &r, const Options &o)
{
    if (!o.out.empty()) {
        write_document(o.out, document_from_build(r));
    }
    if (o.as_json)
        std::cout << to_json(r).dump(2) << '\n';
    else
        print_summary(r);
    return r.checks.all_passed() ? kOk : kVerifyFailed;
}

std::pair<long, long> parse_alpha(const std::string &text)
{
    const Rational q = parse_rational(text);
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        throw std::invalid_argument("alpha out of range");
    return {q.get_num().get_si(), q.get_den().get_si()};
}

Pattern load_pattern(const std::string &path) { return Pattern(read_document(path).points); }

int cmd_catalog()
{
    std::printf("%-20s %-36s %-18s %s\n", "recipe", "pattern", "|A|", "S_P(A)");
    for (const auto &r : recipe_catalog())
        std::printf("%-20s %-36s %-18s %s\n", r.name.c_str(), r.pattern.c_str(), r.size.c_str(), r.copies.c_str());
    return kOk;
}

int cmd_build(const Options &o)
{
    ParamSampler rng(o.seed);
    SampleOptions so{o.budget};
    const std::string &name = o.recipe;
    if (name == "theorem3") {
        const Pattern p = generic_polygon(o.k ? o.k : 3, rng);
        return emit_build(theorem3_generic(p, rng, o.m ? o.m : 3, so), o);
    }
    if (name == "scalene5")
        return emit_build(scalene5(rng, so), o);
    if (name == "scalene14")
        return emit_build(scalene14(rng, so), o);
    if (name == "isosceles8") {
        if (o.variant != "a" && o.variant != "b")
            throw std::invalid_argument("variant must be a or b");
        const auto [num, den] = parse_alpha(o.alpha);
        return emit_build(isosceles8(o.variant == "a" ? IsoscelesVariant::a : IsoscelesVariant::b, num, den), o);
    }
    if (name == "equilateral15")
        return emit_build(equilateral15(rng, so), o);
    if (name == "even_kgon") {
        if (o.k % 2 != 0)
            throw std::invalid_argument("k must be even");
        return emit_build(even_kgon(o.k ? o.k : 4, rng, so), o);
    }
    if (name == "pentagon120")
        return emit_build(pentagon120(rng, so), o);
    if (name == "hex_lattice_cluster")
        return emit_build(hex_lattice_cluster(o.m ? o.m : 4), o);
    throw std::invalid_argument("unknown recipe '" + name + "' (see `catalog`)");
}

int cmd_count(const Options &o)
{
    const Pattern p = load_pattern(o.pattern_path);
    const PointSet a = read_document(o.set_path).points;
    CountOptions co;
    co.full_witnesses = o.full;
    const CountReport r = count_similar(p, a, co);
    std::optional<Integer> brute;
    if (o.oracle)
        brute = brute_force_count(p, a);
    const bool agree = !brute || *brute == r.copies;
    if (o.as_json) {
        json j = to_json(r, o.witnesses || o.full);
        if (brute)
            j["oracle"] = {{"copies", brute->get_str()}, {"agree", agree}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::printf("pattern size   %zu (|Iso+| = %zu)\n", r.pattern_size, r.sym_order);
        std::printf("target size    %zu\n", r.target_size);
        std::printf("copies: %s\n", r.copies.get_str().c_str());
        std::printf("index: %.6f\n", r.index);
        if (o.witnesses || o.full)
            for (const auto &w : r.witnesses) {
                std::printf("witness");
                for (auto i : w)
                    std::printf(" %zu", i);
                std::printf("\n");
            }
        if (brute)
            std::printf("oracle: %s (brute force %s)\n", agree ? "agree" : "DISAGREE", brute->get_str().c_str());
    }
    return agree ? kOk : kVerifyFailed;
}

int cmd_verify(const Options &o)
{
    const VerdictLedger l = run_acceptance_suite(parse_scope(o.scope), o.seed);
    if (o.as_json) {
        json j = to_json(l);
        j["scope"] = o.scope;
        j["seed"] = o.seed;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << l.to_table();
    }
    if (!l.all_passed()) {
        std::cerr << "failing claims:";
        for (const auto &e : l.entries())
            if (!e.passed())
                std::cerr << ' ' << e.claim_id;
        std::cerr << '\n';
        return kVerifyFailed;
    }
    return kOk;
}

int cmd_svg(const Options &o)
{
    const PointSet a = read_document(o.set_path).points;
    std::vector<std::vector<std::size_t>> polys;
    if (!o.highlight.empty()) {
        CountOptions co;
        co.full_witnesses = true;
        const CountReport r = count_similar(load_pattern(o.highlight), a, co);
        polys = r.witnesses;
        std::fprintf(stderr, "highlighted %zu copies\n", polys.size());
    }
    SvgOptions so;
    so.scale = o.scale;
    std::ofstream out(o.out);
    if (!out)
        throw std::runtime_error("cannot write " + o.out);
    out << render_svg(a, polys, so);
    return kOk;
}

int cmd_sum(const Options &o)
{
    const PointSet a = read_document(o.set_path).points;
    const PointSet b = read_document(o.second_path).points;
    ParamSampler rng(o.seed);
    const GenericSum s = minkowski_sum_generic(a, b, o.m ? o.m : 3, rng, {o.budget});
    std::printf("v          %s\n", s.v.value.to_string().c_str());
    std::printf("size       %zu\n", s.sum.size());
    std::printf("resamples  %d\n", s.resamples);
    if (!o.out.empty()) {
        PointSetDocument doc;
        doc.points = s.sum;
        doc.metadata = {{"recipe", "sum"}, {"seed", o.seed}, {"v", s.v.value.to_string()}};
        write_document(o.out, doc);
    }
    return kOk;
}

int cmd_iterate(const Options &o)
{
    const Pattern p = load_pattern(o.pattern_path);
    const PointSet a = read_document(o.set_path).points;
    ParamSampler rng(o.seed);
    return emit_build(minkowski_iterate(p, a, o.j, o.m ? o.m : 3, rng, {o.budget}), o);
}

int cmd_pfree(const Options &o)
{
    const Pattern p = load_pattern(o.pattern_path);
    ParamSampler rng(o.seed);
    PfreeOptions po;
    po.budget = o.budget;
    po.strict = o.strict;
    return emit_build(pfree_iterate(p, o.m ? o.m : 2, rng, po), o);
}

int cmd_pattern(const Options &o)
{
    Pattern p = [&] {
        if (o.shape == "triangle")
            return equilateral_triangle();
        if (o.shape == "square")
            return unit_square();
        if (o.shape == "regular")
            return regular_polygon(o.k ? o.k : 5);
        if (o.shape == "isosceles") {
            const auto [num, den] = parse_alpha(o.alpha);
            return isosceles_triangle(num, den);
        }
        if (o.shape == "scalene") {
            if (o.z.empty())
                throw std::invalid_argument("scalene needs --z M:[c0,...]");
            return scalene_triangle(CycloNum::parse(o.z));
        }
        throw std::invalid_argument("unknown shape '" + o.shape + "'");
    }();
    PointSetDocument doc;
    doc.points = p.base();
    doc.metadata = {{"pattern", o.shape}, {"sym_order", p.sym_order()}};
    if (o.out.empty())
        std::cout << serialize(doc);
    else
        write_document(o.out, doc);
    return kOk;
}

}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact constructions and counts of similar copies of planar patterns"};
    app.require_subcommand(1);
    Options o;

    auto *catalog = app.add_subcommand("catalog", "List the construction recipes");

    auto *build = app.add_subcommand("build", "Build and verify a catalog set");
    build->add_option("recipe", o.recipe, "Recipe name")->required();
    build->add_option("--seed", o.seed, "PRNG seed for generic parameters");
    build->add_option("--k", o.k, "Polygon size (theorem3, even_kgon)");
    build->add_option("--m", o.m, "Collinearity limit (theorem3, hex_lattice_cluster)");
    build->add_option("--variant", o.variant, "isosceles8 variant (a or b)");
    build->add_option("--alpha", o.alpha, "isosceles8 base angle as a fraction of pi, e.g. 1/5");
    build->add_option("--budget", o.budget, "Resample budget");
    build->add_option("-o,--out", o.out, "Write the point-set document here");
    build->add_flag("--json", o.as_json, "Print the build report as JSON");

    auto *count = app.add_subcommand("count", "Count similar copies of a pattern");
    count->add_option("pattern", o.pattern_path, "Pattern document")->required()->check(CLI::ExistingFile);
    count->add_option("set", o.set_path, "Point-set document")->required()->check(CLI::ExistingFile);
    count->add_flag("--witnesses", o.witnesses, "List up to 64 copies");
    count->add_flag("--full", o.full, "List every copy");
    count->add_flag("--oracle", o.oracle, "Cross-check against brute-force enumeration");
    count->add_flag("--json", o.as_json, "Print the count report as JSON");

    auto *verify = app.add_subcommand("verify", "Run the acceptance ledger");
    verify->add_option("--scope", o.scope, "none, tables, catalog, oracle, lemmas, pfree, genericity or all");
    verify->add_option("--seed", o.seed, "Seed for sampled parameters");
    verify->add_flag("--json", o.as_json, "Print the ledger as JSON");

    auto *svg = app.add_subcommand("svg", "Render a point set");
    svg->add_option("set", o.set_path, "Point-set document")->required()->check(CLI::ExistingFile);
    svg->add_option("out", o.out, "Output SVG path")->required();
    svg->add_option("--highlight-pattern", o.highlight, "Draw every copy of this pattern")->check(CLI::ExistingFile);
    svg->add_option("--scale", o.scale, "Canvas scale factor")->check(CLI::PositiveNumber);

    auto *sum = app.add_subcommand("sum", "Generic Minkowski sum A + vB");
    sum->add_option("a", o.set_path, "First set")->required()->check(CLI::ExistingFile);
    sum->add_option("b", o.second_path, "Second set")->required()->check(CLI::ExistingFile);
    sum->add_option("--m", o.m, "Require fewer than m points on a line");
    sum->add_option("--seed", o.seed, "PRNG seed");
    sum->add_option("--budget", o.budget, "Resample budget");
    sum->add_option("-o,--out", o.out, "Write the sum here");

    auto *iterate = app.add_subcommand("iterate", "Iterated generic Minkowski sum");
    iterate->add_option("pattern", o.pattern_path, "Pattern document")->required()->check(CLI::ExistingFile);
    iterate->add_option("set", o.set_path, "Initial set")->required()->check(CLI::ExistingFile);
    iterate->add_option("--j", o.j, "Number of summands")->check(CLI::PositiveNumber);
    iterate->add_option("--m", o.m, "Require fewer than m points on a line");
    iterate->add_option("--seed", o.seed, "PRNG seed");
    iterate->add_option("--budget", o.budget, "Resample budget");
    iterate->add_option("-o,--out", o.out, "Write the iterate here");
    iterate->add_flag("--json", o.as_json, "Print the build report as JSON");

    auto *pfree = app.add_subcommand("pfree", "Parallelogram-free recursion");
    pfree->add_option("pattern", o.pattern_path, "Pattern document")->required()->check(CLI::ExistingFile);
    pfree->add_option("--m", o.m, "Recursion depth");
    pfree->add_flag("--strict", o.strict, "Also forbid disjoint parallel segments");
    pfree->add_option("--seed", o.seed, "PRNG seed");
    pfree->add_option("--budget", o.budget, "Resample budget");
    pfree->add_option("-o,--out", o.out, "Write the set here");
    pfree->add_flag("--json", o.as_json, "Print the build report as JSON");

    auto *pattern = app.add_subcommand("pattern", "Write a pattern document");
    pattern->add_option("shape", o.shape, "triangle, square, regular, isosceles or scalene")->required();
    pattern->add_option("--k", o.k, "Number of vertices (regular)");
    pattern->add_option("--alpha", o.alpha, "Base angle as a fraction of pi (isosceles)");
    pattern->add_option("--z", o.z, "Third vertex as M:[c0,...] (scalene)");
    pattern->add_option("-o,--out", o.out, "Output path (default stdout)");

    auto *isa = app.add_subcommand("isa", "Show the SIMD kernel family in use");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*catalog)
            return cmd_catalog();
        if (*build)
            return cmd_build(o);
        if (*count)
            return cmd_count(o);
        if (*verify)
            return cmd_verify(o);
        if (*svg)
            return cmd_svg(o);
        if (*sum)
            return cmd_sum(o);
        if (*iterate)
            return cmd_iterate(o);
        if (*pfree)
            return cmd_pfree(o);
        if (*pattern)
            return cmd_pattern(o);
        if (*isa) {
            std::printf("detected %s, active %s\n", std::string(simd::isa_name(simd::detected_isa())).c_str(),
                        std::string(simd::isa_name(simd::active_isa())).c_str());
            return kOk;
        }
    } catch (const BuildError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OracleGuardError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}
