#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degen/poly.hpp"
#include "degen/rat.hpp"

namespace degen {

/// One entry per theorem, corollary, or structural fact the suite checks.
enum class CheckId { T1_MC, T2, C3, T4_MC, C5, T6, T7, T8, T9, T10, T11, EQ32, GF_ALL, LIMIT_L0, INV_PAIR };

enum class CheckMode { ExactAlphaSymbolic, McStatistical };

std::string to_string(CheckId id);
CheckId parse_check_id(std::string_view name);
const std::vector<CheckId>& all_check_ids();
CheckMode mode_of(CheckId id);

/// One fixed-seed Monte-Carlo cell.
struct McCell {
    int n;
    int m;
    int r;
    Rat lambda;
    Rat alpha;
    std::uint64_t seed;
};

/// The 12 acceptance cells: m in {1,2}, r in {0,1,2}, lambda in {0, 1/2};
/// alpha alternates 1, 2 and n cycles 1..4 with the cell index.
std::vector<McCell> default_mc_cells(std::uint64_t base_seed);

inline constexpr std::uint64_t kDefaultSeed = 20240617;

struct Grid {
    int nmin = 0;
    int nmax = 10;
    /// Upper n for Stirling-only checks (LIMIT_L0 tables, INV_PAIR).
    int stirling_nmax = 12;
    std::vector<int> ms{1, 2, 3};
    std::vector<int> rs{0, 1, 2, 3};
    std::vector<Rat> lambdas{Rat(0), Rat(1, 2), Rat(-1, 3), Rat(2), Rat(-5)};
    std::size_t gf_order = 10;
    /// Random (x, y) pairs per (n, lambda) for the Vandermonde check.
    int eq32_pairs = 5;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t mc_samples = 1'000'000;
    std::vector<McCell> mc_cells = default_mc_cells(kDefaultSeed);
};

struct IdentityCheck {
    CheckId id;
    Grid grid;

    CheckMode mode() const { return mode_of(id); }
};

/// A concrete reproducer for the first failing cell.
struct Witness {
    std::string cell;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string id;
    std::uint64_t cells_run = 0;
    std::uint64_t cells_failed = 0;
    std::optional<Witness> witness;
    double seconds = 0.0;

    bool passed() const { return cells_failed == 0; }
};

struct CellOutcome {
    bool passed = true;
    std::string lhs;
    std::string rhs;
};

/// A unit of work in a check; `label` names its parameters.
struct Cell {
    std::string label;
    std::function<CellOutcome()> run;
};

/// Evaluates every cell (optionally on `threads` workers) and aggregates.
/// The witness is always that of the lowest-index failing cell, so the
/// report does not depend on evaluation order.
CheckReport run_cells(std::string id, const std::vector<Cell>& cells, unsigned threads = 1);

using LambdaFamily = std::function<Poly(const Rat&)>;

struct LambdaCertificate {
    bool holds = true;
    std::optional<Rat> failing_lambda;
    std::string lhs;
    std::string rhs;
};

/// Compares lhs and rhs at every point. Both must be polynomials in lambda of
/// degree <= degree_bound; at least degree_bound + 1 distinct points are
/// required, which makes agreement a proof of the identity.
LambdaCertificate certify_lambda(const LambdaFamily& lhs, const LambdaFamily& rhs, int degree_bound,
                                 const std::vector<Rat>& points);

bool certify_lambda_identity(const LambdaFamily& lhs, const LambdaFamily& rhs, int degree_bound,
                             const std::vector<Rat>& points);

/// `base` (deduplicated, 0 added) extended with further integers until it
/// holds at least degree_bound + 1 points.
std::vector<Rat> certification_points(const std::vector<Rat>& base, int degree_bound);

/// The cells a check enumerates over its grid.
std::vector<Cell> build_cells(const IdentityCheck& check);

CheckReport run_check(const IdentityCheck& check, unsigned threads = 1);

struct SuiteConfig {
    /// Empty selects every check.
    std::vector<CheckId> checks;
    Grid grid;
    unsigned threads = 1;
};

struct SuiteReport {
    std::vector<CheckReport> reports;
    std::vector<std::string> warnings;

    bool passed() const;
    int exit_status() const { return passed() ? 0 : 1; }
};

SuiteReport run_suite(const SuiteConfig& config);

} // namespace degen
