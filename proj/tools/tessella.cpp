// tessella: sequence tables, census reports, verification suites, grossone
// evaluation and disk rendering.
//
// Exit status: 0 success, 1 verification failure, 2 bad arguments.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <tessella/tessella.hpp>

namespace {

using namespace tessella;

// Writes to the file if a path was given, otherwise to stdout.
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
}

struct SeqArgs {
    std::string family = "p4_standard";
    int p = 5;
    int q = 4;
    int last = 10;
    bool text_variant = false;
    std::string output;
};

int run_seq(const SeqArgs& a) {
    auto reading = a.text_variant ? CoefficientReading::inline_recurrence
                                  : CoefficientReading::characteristic_polynomial;
    auto spec = make_spec(parse_family(a.family), a.p, a.q, reading);
    std::ostringstream out;
    write_csv(out, CumulativeTable::build(spec, a.last));
    emit(a.output, out.str());
    return 0;
}

struct CensusArgs {
    std::string family = "penta";
    std::string splitting = "odd";
    int p = 0;
    int q = 0;
    int r = 0;
    std::string mode;
    std::string budget;
    std::string sectors = "cumulative";
    std::string output;
};

int run_census(const CensusArgs& a) {
    std::string mode = a.mode.empty() ? (a.budget.empty() ? "symbolic" : "concrete") : a.mode;
    auto scheme = SplittingScheme::make(parse_scheme_family(a.family), parse_splitting(a.splitting),
                                        a.p, a.q, a.r);
    CensusReport report;
    if (mode == "symbolic") {
        if (!a.budget.empty()) throw InvalidBudget("--budget is only meaningful in concrete mode");
        report = census(scheme);
    } else {
        if (a.budget.empty()) throw InvalidBudget("concrete mode needs --budget");
        auto indexing = a.sectors == "inline" ? SectorIndexing::inline_fibonacci : SectorIndexing::cumulative;
        report = census(scheme, Budget::parse(a.budget), indexing);
    }
    emit(a.output, to_json(report).dump(2) + "\n");
    return 0;
}

int run_verify(const std::string& suite) {
    auto report = run_suite(parse_suite(suite));
    report.print(std::cout);
    const auto& checks = report.checks();
    auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; });
    std::cout << (failed ? "FAIL" : "PASS") << " suite " << suite << ": " << checks.size() - failed << "/"
              << checks.size() << " checks\n";
    return failed ? 1 : 0;
}

int run_gross(const std::string& expr, const std::string& budget) {
    auto value = parse_gross(expr);
    if (budget.empty())
        std::cout << to_string(value) << '\n';
    else
        std::cout << to_string(gross_evaluate(value, Budget::parse(budget))) << '\n';
    return 0;
}

struct RenderArgs {
    int p = 5;
    int q = 4;
    int depth = 3;
    std::string format = "svg";
    std::string output;
    std::optional<std::size_t> cap;
};

int run_render(const RenderArgs& a) {
    auto patch = expand(a.p, a.q, a.depth, a.cap.value_or(cap_from_env(default_tile_cap)));
    emit(a.output, a.format == "json" ? to_json(patch).dump() + "\n" : to_svg(patch));
    return 0;
}

struct TreeArgs {
    int p = 5;
    std::string kind = "standard";
    int height = 4;
    bool colors = false;
    std::optional<std::uint64_t> cap;
};

int run_tree(const TreeArgs& a) {
    auto tree = build_tree(a.p, a.kind == "smaller" ? TreeKind::smaller : TreeKind::standard, a.height,
                           a.cap.value_or(cap_from_env(default_node_cap)));
    dump(std::cout, tree, a.colors);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact census engine for hyperbolic {p,q} tilings"};
    app.require_subcommand(1);

    SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "CSV table n,u_n,U_n");
    seq_cmd->add_option("--family", seq.family, "fib | p4_standard | p4_smaller | p4_sibling_v | pq_even | pq_odd_v1 | pq_odd_v2")
        ->capture_default_str();
    seq_cmd->add_option("-p,--p", seq.p)->capture_default_str();
    seq_cmd->add_option("-q,--q", seq.q)->capture_default_str();
    seq_cmd->add_option("-n,--last", seq.last, "last index")->capture_default_str()->check(CLI::Range(0, 100000));
    seq_cmd->add_flag("--text-variant", seq.text_variant, "use the inline recurrence coefficients");
    seq_cmd->add_option("-o,--output", seq.output);

    CensusArgs cen;
    auto* census_cmd = app.add_subcommand("census", "JSON tile count and area report");
    census_cmd->add_option("--family", cen.family, "penta | hepta | p4 | p23 | pq_even | pq_odd_v1 | pq_odd_v2")
        ->capture_default_str();
    census_cmd->add_option("--splitting", cen.splitting, "even | odd | odd_r")->capture_default_str();
    census_cmd->add_option("-p,--p", cen.p);
    census_cmd->add_option("-q,--q", cen.q);
    census_cmd->add_option("-r,--r", cen.r, "radius of the r-augmented splitting");
    census_cmd->add_option("--mode", cen.mode)->check(CLI::IsMember({"symbolic", "concrete"}));
    census_cmd->add_option("--budget", cen.budget, "finite stand-in for G, decimal digits");
    census_cmd->add_option("--sectors", cen.sectors, "sector sizes of odd_r")
        ->check(CLI::IsMember({"cumulative", "inline"}))
        ->capture_default_str();
    census_cmd->add_option("-o,--output", cen.output);

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "axioms | identities | thm1 | thm2 | thm3 | thm4 | geometry-oracle | all")
        ->capture_default_str();

    std::string expr, gross_budget;
    auto* gross_cmd = app.add_subcommand("gross", "print or evaluate a gross-number");
    gross_cmd->add_option("--eval,expr", expr, "expression such as \"3*G^2 + 2*G + 5\"")->required();
    gross_cmd->add_option("--budget", gross_budget, "substitute this budget for G");

    RenderArgs ren;
    auto* render_cmd = app.add_subcommand("render", "draw a {p,q} patch");
    render_cmd->add_option("-p,--p", ren.p)->capture_default_str();
    render_cmd->add_option("-q,--q", ren.q)->capture_default_str();
    render_cmd->add_option("--depth", ren.depth)->capture_default_str()->check(CLI::Range(0, 64));
    render_cmd->add_option("--format", ren.format)->check(CLI::IsMember({"svg", "json"}))->capture_default_str();
    render_cmd->add_option("-o,--output", ren.output);
    render_cmd->add_option("--cap", ren.cap, "tile cap (default 100000 or TESSELLA_CAP)");

    TreeArgs tree;
    auto* tree_cmd = app.add_subcommand("tree", "level census of a substitution tree");
    tree_cmd->add_option("-p,--p", tree.p)->capture_default_str();
    tree_cmd->add_option("--kind", tree.kind)->check(CLI::IsMember({"standard", "smaller"}))->capture_default_str();
    tree_cmd->add_option("--height", tree.height)->capture_default_str()->check(CLI::Range(0, 1000));
    tree_cmd->add_flag("--colors", tree.colors, "append level color strings (height <= 8)");
    tree_cmd->add_option("--cap", tree.cap, "node cap (default 10^7 or TESSELLA_CAP)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*seq_cmd) return run_seq(seq);
        if (*census_cmd) return run_census(cen);
        if (*verify_cmd) return run_verify(suite);
        if (*gross_cmd) return run_gross(expr, gross_budget);
        if (*render_cmd) return run_render(ren);
        if (*tree_cmd) return run_tree(tree);
    } catch (const tessella::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
