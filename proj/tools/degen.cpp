// Command-line front end: tables, generating-function coefficients,
// Monte-Carlo moments, and the identity suite.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degen/dowling.hpp"
#include "degen/error.hpp"
#include "degen/genfun.hpp"
#include "degen/io.hpp"
#include "degen/poisson_lab.hpp"
#include "degen/stirling.hpp"
#include "degen/verify.hpp"

using namespace degen;

namespace {

// Exit statuses: 0 ok, 1 a check or estimate failed, 2 bad input.
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(Rat::parse(item));
    return out;
}

struct TableArgs {
    std::string kind = "S2";
    std::string lambda = "0";
    int m = 1;
    int r = 0;
    int nmax = 10;
    std::string format = "csv";
};

int run_table(const TableArgs& a) {
    const Rat lambda = Rat::parse(a.lambda);
    const std::vector<std::pair<std::string, StirlingKind>> stirling{
        {"S1", StirlingKind::S1}, {"S2", StirlingKind::S2}, {"S1deg", StirlingKind::S1deg}, {"S2deg", StirlingKind::S2deg}};
    for (const auto& [name, kind] : stirling)
        if (name == a.kind) {
            auto t = stirling_table(kind, lambda, a.nmax);
            std::cout << (a.format == "json" ? to_json(*t).dump() + "\n" : to_csv(*t));
            return 0;
        }
    for (WhitneyKind kind : {WhitneyKind::W_classical, WhitneyKind::V_classical, WhitneyKind::W_deg, WhitneyKind::W_r_deg})
        if (to_string(kind) == a.kind) {
            auto t = whitney_table(kind, DegParams(lambda, a.m, a.r), a.nmax);
            std::cout << (a.format == "json" ? to_json(t).dump() + "\n" : to_csv(t));
            return 0;
        }
    throw DomainError("unknown table kind '" + a.kind + "'");
}

struct SeriesArgs {
    std::string kind;
    std::string lambda = "0";
    int m = 1;
    int r = 0;
    std::optional<int> k;
    std::size_t order = kDefaultOrder;
    std::string alpha = "1";
};

int run_series(const SeriesArgs& a) {
    GfSpec spec{parse_gf_kind(a.kind), DegParams(Rat::parse(a.lambda), a.m, a.r), a.k, a.order,
                Rat::parse(a.alpha)};
    std::cout << to_json(gf_coefficients(spec)).dump() << "\n";
    return 0;
}

struct McArgs {
    int m = 1;
    int r = 0;
    std::string lambda = "0";
    std::string alpha = "1";
    int n = 1;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = kDefaultSeed;
    unsigned shards = 1;
};

int run_mc(const McArgs& a) {
    const DegParams params(Rat::parse(a.lambda), a.m, a.r);
    const Rat alpha = Rat::parse(a.alpha);
    const PoissonSpec spec{(alpha / Rat(a.m)).to_double(), a.seed, a.samples, a.shards};
    const McEstimate est = estimate_deg_moment(params, a.n, alpha, spec);
    std::cout << to_json(est).dump() << "\n";
    return est.passes() ? 0 : kExitFailed;
}

struct VerifyArgs {
    std::string check = "all";
    std::optional<int> nmax;
    std::optional<std::string> lambdas;
    std::string format = "json";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> mc_samples;
    unsigned threads = 1;
};

int run_verify(const VerifyArgs& a) {
    SuiteConfig cfg;
    if (a.check != "all") {
        std::stringstream ss(a.check);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty()) cfg.checks.push_back(parse_check_id(id));
    }
    if (a.nmax) {
        cfg.grid.nmax = *a.nmax;
        cfg.grid.stirling_nmax = *a.nmax + 2;
    }
    if (a.lambdas) cfg.grid.lambdas = parse_rat_list(*a.lambdas);
    if (a.seed) {
        cfg.grid.seed = *a.seed;
        cfg.grid.mc_cells = default_mc_cells(*a.seed);
    }
    if (a.mc_samples) cfg.grid.mc_samples = *a.mc_samples;
    cfg.threads = a.threads;

    const SuiteReport report = run_suite(cfg);
    if (a.format == "csv") std::cout << to_csv(report);
    else if (a.format == "markdown") std::cout << to_markdown(report);
    else std::cout << to_json(report).dump(2) << "\n";
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    return report.exit_status();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact degenerate Stirling, Whitney, Dowling and Charlier computations"};
    app.require_subcommand(1);

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Print a Stirling or Whitney triangle");
    table_cmd->add_option("--kind", table.kind, "S1|S2|S1deg|S2deg|W|V|Wdeg|Wrdeg")
        ->check(CLI::IsMember({"S1", "S2", "S1deg", "S2deg", "W", "V", "Wdeg", "Wrdeg"}));
    table_cmd->add_option("--lambda", table.lambda, "Degeneracy parameter, p/q");
    table_cmd->add_option("--m", table.m, "Group order")->check(CLI::PositiveNumber);
    table_cmd->add_option("--r", table.r, "Shift")->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--nmax", table.nmax, "Last row")->check(CLI::Range(0, kMaxTableN));
    table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));

    SeriesArgs series;
    auto* series_cmd = app.add_subcommand("series", "Print n! [t^n] of a generating function as JSON");
    series_cmd->add_option("--kind", series.kind, "Generating-function kind")->required();
    series_cmd->add_option("--lambda", series.lambda, "Degeneracy parameter, p/q");
    series_cmd->add_option("--m", series.m)->check(CLI::PositiveNumber);
    series_cmd->add_option("--r", series.r)->check(CLI::NonNegativeNumber);
    series_cmd->add_option("--k", series.k, "Block index for S1DEG, S2DEG, DEG_WHITNEY");
    series_cmd->add_option("--order", series.order)->check(CLI::Range(std::size_t{0}, kMaxOrder));
    series_cmd->add_option("--alpha", series.alpha, "Charlier parameter, p/q");

    McArgs mc;
    auto* mc_cmd = app.add_subcommand("mc", "Estimate E[(mX+r)_{n,lambda}] for X ~ Poisson(alpha/m)");
    mc_cmd->add_option("--m", mc.m)->check(CLI::PositiveNumber);
    mc_cmd->add_option("--r", mc.r)->check(CLI::NonNegativeNumber);
    mc_cmd->add_option("--lambda", mc.lambda, "p/q");
    mc_cmd->add_option("--alpha", mc.alpha, "p/q");
    mc_cmd->add_option("--n", mc.n)->check(CLI::Range(0, kMaxMcMomentOrder));
    mc_cmd->add_option("--samples", mc.samples)->check(CLI::PositiveNumber);
    mc_cmd->add_option("--seed", mc.seed);
    mc_cmd->add_option("--shards", mc.shards)->check(CLI::PositiveNumber);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run identity checks; exits 1 on any failure");
    verify_cmd->add_option("--check", verify.check, "Check id, comma-separated ids, or all");
    verify_cmd->add_option("--nmax", verify.nmax)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--lambdas", verify.lambdas, "Comma-separated rationals");
    verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv", "markdown"}));
    verify_cmd->add_option("--seed", verify.seed, "Base seed for Monte-Carlo cells and random pairs");
    verify_cmd->add_option("--mc-samples", verify.mc_samples)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--threads", verify.threads)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (table_cmd->parsed()) return run_table(table);
        if (series_cmd->parsed()) return run_series(series);
        if (mc_cmd->parsed()) return run_mc(mc);
        if (verify_cmd->parsed()) return run_verify(verify);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
