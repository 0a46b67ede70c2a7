#include <gtest/gtest.h>

#include "degen/dowling.hpp"
#include "degen/error.hpp"
#include "degen/verify.hpp"
#include "mutations.hpp"

using namespace degen;

namespace {

Grid small_grid() {
    Grid g;
    g.nmax = 5;
    g.stirling_nmax = 6;
    g.lambdas = {Rat(0), Rat(1, 2), Rat(-1, 3)};
    g.ms = {1, 2};
    g.rs = {0, 1, 2};
    g.gf_order = 6;
    g.mc_samples = 20'000;
    return g;
}

void expect_same_report(const CheckReport& a, const CheckReport& b) {
    EXPECT_EQ(a.id, b.id);
    EXPECT_EQ(a.cells_run, b.cells_run);
    EXPECT_EQ(a.cells_failed, b.cells_failed);
    ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
    if (a.witness) {
        EXPECT_EQ(a.witness->cell, b.witness->cell);
        EXPECT_EQ(a.witness->lhs, b.witness->lhs);
        EXPECT_EQ(a.witness->rhs, b.witness->rhs);
    }
}

Poly lambda_const(const Rat& c) { return Poly::constant(c, Var::Alpha); }

} // namespace

TEST(CertifyLambda, Examples) {
    auto one_minus = [](const Rat& l) { return lambda_const(Rat(1) - l); };
    auto one_minus_sq = [](const Rat& l) { return lambda_const(Rat(1) - l * l); };
    EXPECT_TRUE(certify_lambda_identity(one_minus, one_minus, 1, {Rat(0), Rat(1)}));
    // 1 - l and 1 - l^2 agree at 0 and 1; the third point exposes them.
    EXPECT_FALSE(certify_lambda_identity(one_minus, one_minus_sq, 2, {Rat(0), Rat(1), Rat(2)}));
    auto c = certify_lambda(one_minus, one_minus_sq, 2, {Rat(0), Rat(1), Rat(2)});
    ASSERT_TRUE(c.failing_lambda.has_value());
    EXPECT_EQ(*c.failing_lambda, Rat(2));

    auto lhs = [](const Rat& l) { return deg_r_dowling_poly(DegParams(l, 3, 1), 2).with_var(Var::Alpha); };
    auto rhs = [](const Rat& l) { return thm_rhs(TheoremId::T2, DegParams(l, 3, 1), 2); };
    EXPECT_TRUE(certify_lambda_identity(lhs, rhs, 2, certification_points({}, 2)));
}

TEST(CertifyLambda, NeedsEnoughDistinctPoints) {
    auto f = [](const Rat& l) { return lambda_const(l); };
    EXPECT_THROW(certify_lambda(f, f, 2, {Rat(0), Rat(1), Rat(2, 2)}), DomainError);
    EXPECT_THROW(certify_lambda(f, f, -1, {Rat(0)}), DomainError);
}

TEST(CertifyLambda, PointsAreDistinctAndSufficient) {
    auto pts = certification_points({Rat(1, 2), Rat(1, 2), Rat(0)}, 6);
    EXPECT_EQ(pts.size(), 7u);
    EXPECT_EQ(pts[0], Rat(0));
    EXPECT_EQ(pts[1], Rat(1, 2));
    std::set<Rat> unique(pts.begin(), pts.end());
    EXPECT_EQ(unique.size(), pts.size());
}

TEST(CheckIds, RoundTrip) {
    for (CheckId id : all_check_ids()) EXPECT_EQ(parse_check_id(to_string(id)), id);
    EXPECT_THROW(parse_check_id("T99"), DomainError);
    EXPECT_EQ(mode_of(CheckId::T1_MC), CheckMode::McStatistical);
    EXPECT_EQ(mode_of(CheckId::T8), CheckMode::ExactAlphaSymbolic);
}

TEST(McCells, DefaultLayout) {
    auto cells = default_mc_cells(100);
    ASSERT_EQ(cells.size(), 12u);
    std::set<std::tuple<int, int, std::string>> combos;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        EXPECT_EQ(cells[i].seed, 100 + i);
        EXPECT_GE(cells[i].n, 1);
        EXPECT_LE(cells[i].n, 4);
        combos.insert({cells[i].m, cells[i].r, cells[i].lambda.str()});
    }
    EXPECT_EQ(combos.size(), 12u);
}

TEST(RunCheck, ExactChecksPassOnSmallGrid) {
    const Grid g = small_grid();
    for (CheckId id : all_check_ids()) {
        if (mode_of(id) == CheckMode::McStatistical) continue;
        auto report = run_check(IdentityCheck{id, g});
        EXPECT_GT(report.cells_run, 0u) << to_string(id);
        EXPECT_TRUE(report.passed()) << to_string(id) << " " << (report.witness ? report.witness->cell : "");
    }
}

TEST(RunCheck, EightAndVandermondeOnDefaultGrid) {
    for (CheckId id : {CheckId::T8, CheckId::EQ32}) {
        auto report = run_check(IdentityCheck{id, Grid{}});
        EXPECT_GT(report.cells_run, 0u);
        EXPECT_TRUE(report.passed()) << to_string(id);
    }
}

TEST(RunCheck, MonteCarloCellsPass) {
    Grid g = small_grid();
    g.mc_samples = 200'000;
    auto t1 = run_check(IdentityCheck{CheckId::T1_MC, g});
    auto t4 = run_check(IdentityCheck{CheckId::T4_MC, g});
    EXPECT_EQ(t1.cells_run + t4.cells_run, 12u);
    EXPECT_TRUE(t1.passed());
    EXPECT_TRUE(t4.passed());
}

TEST(RunCells, MutatedIdentityFailsWithWitness) {
    const Grid g = small_grid();
    auto report = run_cells("T8*", mutation::t8_mutant_cells(g));
    EXPECT_GT(report.cells_failed, 0u);
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_FALSE(report.witness->cell.empty());
    EXPECT_NE(report.witness->lhs, report.witness->rhs);
    EXPECT_FALSE(report.passed());
}

TEST(RunCells, ExceptionsCountAsFailures) {
    std::vector<Cell> cells{Cell{"ok", [] { return CellOutcome{}; }},
                            Cell{"boom", []() -> CellOutcome { throw DomainError("bad cell"); }}};
    auto report = run_cells("X", cells);
    EXPECT_EQ(report.cells_run, 2u);
    EXPECT_EQ(report.cells_failed, 1u);
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_EQ(report.witness->cell, "boom");
}

TEST(RunCells, ThreadedMatchesSequential) {
    const Grid g = small_grid();
    auto mutants = mutation::t8_mutant_cells(g);
    expect_same_report(run_cells("T8*", mutants, 1), run_cells("T8*", mutants, 4));
    for (CheckId id : {CheckId::T7, CheckId::GF_ALL, CheckId::T4_MC})
        expect_same_report(run_check(IdentityCheck{id, g}, 1), run_check(IdentityCheck{id, g}, 3));
}

TEST(RunSuite, EmptyGridWarnsAndPasses) {
    SuiteConfig cfg;
    cfg.checks = {CheckId::T8};
    cfg.grid = small_grid();
    cfg.grid.nmin = 3;
    cfg.grid.nmax = 2;
    auto suite = run_suite(cfg);
    ASSERT_EQ(suite.reports.size(), 1u);
    EXPECT_EQ(suite.reports[0].cells_run, 0u);
    EXPECT_EQ(suite.warnings.size(), 1u);
    EXPECT_EQ(suite.exit_status(), 0);
}

TEST(RunSuite, SelectsRequestedChecks) {
    SuiteConfig cfg;
    cfg.checks = {CheckId::GF_ALL};
    cfg.grid = small_grid();
    auto suite = run_suite(cfg);
    ASSERT_EQ(suite.reports.size(), 1u);
    EXPECT_EQ(suite.reports[0].id, "GF_ALL");
    EXPECT_TRUE(suite.passed());
    EXPECT_TRUE(suite.warnings.empty());
}
