#include "degen/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "degen/dowling.hpp"
#include "degen/error.hpp"
#include "degen/genfun.hpp"
#include "degen/poisson_lab.hpp"
#include "degen/stirling.hpp"

namespace degen {

namespace {

const std::vector<std::pair<CheckId, std::string>>& id_names() {
    static const std::vector<std::pair<CheckId, std::string>> names{
        {CheckId::T1_MC, "T1_MC"}, {CheckId::T2, "T2"},       {CheckId::C3, "C3"},
        {CheckId::T4_MC, "T4_MC"}, {CheckId::C5, "C5"},       {CheckId::T6, "T6"},
        {CheckId::T7, "T7"},       {CheckId::T8, "T8"},       {CheckId::T9, "T9"},
        {CheckId::T10, "T10"},     {CheckId::T11, "T11"},     {CheckId::EQ32, "EQ32"},
        {CheckId::GF_ALL, "GF_ALL"}, {CheckId::LIMIT_L0, "LIMIT_L0"}, {CheckId::INV_PAIR, "INV_PAIR"},
    };
    return names;
}

} // namespace

std::string to_string(CheckId id) {
    for (const auto& [k, name] : id_names())
        if (k == id) return name;
    return "?";
}

CheckId parse_check_id(std::string_view name) {
    for (const auto& [k, n] : id_names())
        if (n == name) return k;
    throw DomainError("unknown check id '" + std::string(name) + "'");
}

const std::vector<CheckId>& all_check_ids() {
    static const std::vector<CheckId> ids = [] {
        std::vector<CheckId> out;
        for (const auto& [k, name] : id_names()) out.push_back(k);
        return out;
    }();
    return ids;
}

CheckMode mode_of(CheckId id) {
    return (id == CheckId::T1_MC || id == CheckId::T4_MC) ? CheckMode::McStatistical
                                                         : CheckMode::ExactAlphaSymbolic;
}

std::vector<McCell> default_mc_cells(std::uint64_t base_seed) {
    std::vector<McCell> cells;
    int index = 0;
    for (int m : {1, 2})
        for (int r : {0, 1, 2})
            for (const Rat& lambda : {Rat(0), Rat(1, 2)}) {
                cells.push_back(McCell{1 + index % 4, m, r, lambda, Rat(1 + index % 2),
                                       base_seed + static_cast<std::uint64_t>(index)});
                ++index;
            }
    return cells;
}

CheckReport run_cells(std::string id, const std::vector<Cell>& cells, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CellOutcome> outcomes(cells.size());
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < cells.size(); i += stride) {
            try {
                outcomes[i] = cells[i].run();
            } catch (const std::exception& e) {
                outcomes[i] = CellOutcome{false, std::string("exception: ") + e.what(), ""};
            }
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1 || cells.size() < 2) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }

    CheckReport report;
    report.id = std::move(id);
    report.cells_run = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (outcomes[i].passed) continue;
        ++report.cells_failed;
        if (!report.witness) report.witness = Witness{cells[i].label, outcomes[i].lhs, outcomes[i].rhs};
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

LambdaCertificate certify_lambda(const LambdaFamily& lhs, const LambdaFamily& rhs, int degree_bound,
                                 const std::vector<Rat>& points) {
    std::set<Rat> distinct(points.begin(), points.end());
    if (degree_bound < 0) throw DomainError("certify_lambda: degree bound must be nonnegative");
    if (distinct.size() < static_cast<std::size_t>(degree_bound) + 1)
        throw DomainError("certify_lambda: need " + std::to_string(degree_bound + 1) +
                          " distinct lambda points, got " + std::to_string(distinct.size()));
    for (const Rat& lambda : distinct) {
        Poly a = lhs(lambda);
        Poly b = rhs(lambda);
        if (!(a == b)) return LambdaCertificate{false, lambda, a.str(), b.str()};
    }
    return {};
}

bool certify_lambda_identity(const LambdaFamily& lhs, const LambdaFamily& rhs, int degree_bound,
                             const std::vector<Rat>& points) {
    return certify_lambda(lhs, rhs, degree_bound, points).holds;
}

std::vector<Rat> certification_points(const std::vector<Rat>& base, int degree_bound) {
    std::vector<Rat> out;
    std::set<Rat> seen;
    auto add = [&](const Rat& v) {
        if (seen.insert(v).second) out.push_back(v);
    };
    add(Rat(0));
    for (const auto& v : base) add(v);
    for (std::int64_t i = 1; out.size() < static_cast<std::size_t>(degree_bound) + 1; ++i) {
        add(Rat(i));
        if (out.size() < static_cast<std::size_t>(degree_bound) + 1) add(Rat(-i));
    }
    return out;
}

namespace {

std::string cell_label(int n, int m, int r) {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " r=" + std::to_string(r);
}

Poly in_alpha(const Poly& p) { return p.with_var(Var::Alpha); }

CellOutcome from_certificate(const LambdaCertificate& c) {
    if (c.holds) return {};
    return CellOutcome{false, "lambda=" + c.failing_lambda->str() + ": " + c.lhs, c.rhs};
}

// A (n, m, r) cell comparing D^{(r')}_{m,lambda}(n, alpha) with a closed form,
// certified in lambda. `dowling_r` maps the cell's r to the r' on the left.
Cell theorem_cell(const Grid& g, TheoremId id, int n, int m, int r, int dowling_r) {
    auto points = certification_points(g.lambdas, n);
    return Cell{to_string(id) + " " + cell_label(n, m, r), [=] {
                    auto lhs = [&](const Rat& lambda) {
                        return in_alpha(deg_r_dowling_poly(DegParams(lambda, m, dowling_r), n));
                    };
                    auto rhs = [&](const Rat& lambda) { return thm_rhs(id, DegParams(lambda, m, r), n); };
                    return from_certificate(certify_lambda(lhs, rhs, n, points));
                }};
}

void add_theorem_cells(const Grid& g, TheoremId id, std::vector<Cell>& cells) {
    for (int n = g.nmin; n <= g.nmax; ++n)
        for (int m : g.ms) switch (id) {
            case TheoremId::T2: cells.push_back(theorem_cell(g, id, n, m, 1, 1)); break;
            case TheoremId::T10: cells.push_back(theorem_cell(g, id, n, m, m, m)); break;
            default:
                for (int r : g.rs) cells.push_back(theorem_cell(g, id, n, m, r, r));
            }
}

std::vector<Cell> corollary3_cells(const Grid& g) {
    std::vector<Cell> cells;
    for (int n = g.nmin; n <= g.nmax; ++n) {
        auto points = certification_points(g.lambdas, n);
        auto dowling = [n](const Rat& lambda) { return in_alpha(deg_dowling_poly(DegParams(lambda, 1, 1), n)); };
        cells.push_back(Cell{"C3 closed form n=" + std::to_string(n), [=] {
                                 auto rhs = [&](const Rat& l) { return thm_rhs(TheoremId::C3, DegParams(l, 1, 0), n); };
                                 return from_certificate(certify_lambda(dowling, rhs, n, points));
                             }});
        cells.push_back(Cell{"C3 phi + dphi/dalpha n=" + std::to_string(n), [=] {
                                 auto rhs = [&](const Rat& l) {
                                     Poly phi = in_alpha(deg_bell_poly(n, l));
                                     return phi + phi.derivative();
                                 };
                                 return from_certificate(certify_lambda(dowling, rhs, n, points));
                             }});
    }
    return cells;
}

std::vector<Cell> theorem9_cells(const Grid& g) {
    std::vector<Cell> cells;
    for (int n = g.nmin; n <= g.nmax; ++n)
        for (int m : g.ms) {
            auto points = certification_points(g.lambdas, n);
            cells.push_back(Cell{"T9 n=" + std::to_string(n) + " m=" + std::to_string(m), [=] {
                                     auto lhs = [&](const Rat& l) { return in_alpha(deg_bell_poly(n, l / Rat(m))); };
                                     auto rhs = [&](const Rat& l) { return thm_rhs(TheoremId::T9, DegParams(l, m, 0), n); };
                                     return from_certificate(certify_lambda(lhs, rhs, n, points));
                                 }});
        }
    return cells;
}

std::vector<Cell> theorem_cells(const Grid& g, CheckId id) {
    std::vector<Cell> cells;
    switch (id) {
    case CheckId::T2: add_theorem_cells(g, TheoremId::T2, cells); break;
    case CheckId::C5: add_theorem_cells(g, TheoremId::C5, cells); break;
    case CheckId::T6: add_theorem_cells(g, TheoremId::T6, cells); break;
    case CheckId::T7: add_theorem_cells(g, TheoremId::T7, cells); break;
    case CheckId::T8: add_theorem_cells(g, TheoremId::T8, cells); break;
    case CheckId::T10:
        add_theorem_cells(g, TheoremId::T10, cells);
        add_theorem_cells(g, TheoremId::T10R, cells);
        break;
    case CheckId::T11: add_theorem_cells(g, TheoremId::T11, cells); break;
    default: break;
    }
    return cells;
}

CellOutcome compare_rats(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a == b) return {};
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        Rat x = i < a.size() ? a[i] : Rat(0);
        Rat y = i < b.size() ? b[i] : Rat(0);
        if (!(x == y)) return {false, "[" + std::to_string(i) + "] " + x.str(), y.str()};
    }
    return {false, "size " + std::to_string(a.size()), "size " + std::to_string(b.size())};
}

CellOutcome compare_polys(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        if (i >= a.size() || i >= b.size()) return {false, "size " + std::to_string(a.size()), "size " + std::to_string(b.size())};
        if (!(a[i] == b[i])) return {false, "[" + std::to_string(i) + "] " + a[i].str(), b[i].str()};
    }
    return {};
}

CellOutcome compare_values(const GfValues& got, const std::vector<Rat>& want) {
    if (const auto* v = std::get_if<std::vector<Rat>>(&got)) return compare_rats(*v, want);
    return {false, "symbolic coefficients", "rational expected"};
}

CellOutcome compare_values(const GfValues& got, const std::vector<Poly>& want) {
    if (const auto* v = std::get_if<std::vector<Poly>>(&got)) return compare_polys(*v, want);
    return {false, "rational coefficients", "symbolic expected"};
}

template <typename F>
auto collect(std::size_t order, F&& f) {
    using T = decltype(f(0));
    std::vector<T> out;
    for (std::size_t n = 0; n <= order; ++n) out.push_back(f(static_cast<int>(n)));
    return out;
}

std::string params_label(const Rat& lambda, int m, int r) {
    return "lambda=" + lambda.str() + " m=" + std::to_string(m) + " r=" + std::to_string(r);
}

std::vector<Cell> gf_cells(const Grid& g) {
    std::vector<Cell> cells;
    const std::size_t N = g.gf_order;
    const int Ni = static_cast<int>(N);
    auto gf = [N](GfKind kind, const Rat& lambda, int m, int r, std::optional<int> k = std::nullopt) {
        return GfSpec{kind, DegParams(lambda, m, r), k, N, Rat(1)};
    };

    cells.push_back(Cell{"BELL", [=] {
                             return compare_values(gf_coefficients(gf(GfKind::BELL, Rat(0), 1, 0)),
                                                   collect(N, [](int n) { return bell_poly(n); }));
                         }});
    for (const Rat& lambda : g.lambdas) {
        cells.push_back(Cell{"EXP_DEG lambda=" + lambda.str(), [=] {
                                 return compare_values(gf_coefficients(gf(GfKind::EXP_DEG, lambda, 1, 0)),
                                                       collect(N, [&](int n) { return deg_falling_poly(n, lambda); }));
                             }});
        cells.push_back(Cell{"LOG_DEG lambda=" + lambda.str(), [=] {
                                 return compare_values(gf_coefficients(gf(GfKind::LOG_DEG, lambda, 1, 0)),
                                                       collect(N, [&](int n) { return deg_stirling1(n, 1, lambda); }));
                             }});
        cells.push_back(Cell{"DEG_BELL lambda=" + lambda.str(), [=] {
                                 return compare_values(gf_coefficients(gf(GfKind::DEG_BELL, lambda, 1, 0)),
                                                       collect(N, [&](int n) { return deg_bell_poly(n, lambda); }));
                             }});
        for (int k = 0; k <= Ni; ++k) {
            cells.push_back(Cell{"S1DEG k=" + std::to_string(k) + " lambda=" + lambda.str(), [=] {
                                     return compare_values(
                                         gf_coefficients(gf(GfKind::S1DEG, lambda, 1, 0, k)),
                                         collect(N, [&](int n) { return deg_stirling1(n, k, lambda); }));
                                 }});
            cells.push_back(Cell{"S2DEG k=" + std::to_string(k) + " lambda=" + lambda.str(), [=] {
                                     return compare_values(
                                         gf_coefficients(gf(GfKind::S2DEG, lambda, 1, 0, k)),
                                         collect(N, [&](int n) { return deg_stirling2(n, k, lambda); }));
                                 }});
        }
        for (int m : g.ms) {
            for (int k = 0; k <= Ni; ++k)
                cells.push_back(Cell{"DEG_WHITNEY k=" + std::to_string(k) + " " + params_label(lambda, m, 1), [=] {
                                         return compare_values(
                                             gf_coefficients(gf(GfKind::DEG_WHITNEY, lambda, m, 1, k)),
                                             collect(N, [&](int n) {
                                                 return k <= n ? deg_whitney2(DegParams(lambda, m, 1), n, k) : Rat(0);
                                             }));
                                     }});
            cells.push_back(Cell{"DEG_DOWLING " + params_label(lambda, m, 1), [=] {
                                     return compare_values(
                                         gf_coefficients(gf(GfKind::DEG_DOWLING, lambda, m, 1)),
                                         collect(N, [&](int n) { return deg_dowling_poly(DegParams(lambda, m, 1), n); }));
                                 }});
            for (int r : g.rs)
                cells.push_back(Cell{"DEG_R_DOWLING " + params_label(lambda, m, r), [=] {
                                         return compare_values(
                                             gf_coefficients(gf(GfKind::DEG_R_DOWLING, lambda, m, r)),
                                             collect(N, [&](int n) { return deg_r_dowling_poly(DegParams(lambda, m, r), n); }));
                                     }});
        }
    }
    // C_n has degree n in alpha, so order + 1 alpha points certify the GF in alpha.
    for (const Rat& alpha : certification_points(g.lambdas, Ni)) {
        cells.push_back(Cell{"CHARLIER alpha=" + alpha.str(), [=] {
                                 GfSpec spec{GfKind::CHARLIER, DegParams(Rat(0), 1, 0), std::nullopt, N, alpha};
                                 return compare_values(gf_coefficients(spec),
                                                       collect(N, [&](int n) { return charlier_poly(n, alpha); }));
                             }});
    }
    for (const Rat& lambda : g.lambdas) {
        cells.push_back(Cell{"log/exp inverse lambda=" + lambda.str(), [=] {
                                 RatSeries e_minus_one = e_lambda_series(Rat(1), lambda, N) - RatSeries::one(N, Rat(0));
                                 RatSeries log1p = log_lambda_series(lambda, N);
                                 RatSeries id = RatSeries::t(N, Rat(0));
                                 RatSeries a = series_compose(log1p, e_minus_one);
                                 RatSeries b = series_compose(e_minus_one, log1p);
                                 if (!(a == id)) return CellOutcome{false, "log(e(t)) != t", ""};
                                 if (!(b == id)) return CellOutcome{false, "e(log(1+t)) - 1 != t", ""};
                                 return CellOutcome{};
                             }});
        for (int m : g.ms) {
            cells.push_back(Cell{"rescaling " + params_label(lambda, m, 0), [=] {
                                     return compare_rats(e_lambda_series(Rat(m), lambda, N).coeffs(),
                                                         rescaled_e_lambda(Rat(1), lambda, m, N).coeffs());
                                 }});
            cells.push_back(Cell{"Poisson mgf chain " + params_label(lambda, m, 0), [=] {
                                     // exp((x/m)(e_lambda^m(t) - 1)) against phi_{n,lambda/m}(x/m) m^n.
                                     RatSeries em = e_lambda_series(Rat(m), lambda, N) - RatSeries::one(N, Rat(0));
                                     PolySeries lhs = series_exp(
                                         lift(em, Var::X).scaled(Poly::monomial(Rat(1, m), 1, Var::X)));
                                     auto want = collect(N, [&](int n) {
                                         return bell_at_scaled_alpha(deg_bell_poly(n, lambda / Rat(m)), Rat(1, m))
                                                    .with_var(Var::X) *
                                                Rat(m).pow(n);
                                     });
                                     return compare_polys(lhs.egf_values(), want);
                                 }});
        }
    }
    return cells;
}

std::vector<Cell> limit_cells(const Grid& g) {
    std::vector<Cell> cells;
    const Rat zero(0);
    for (auto [deg, classical] : {std::pair{StirlingKind::S1deg, StirlingKind::S1},
                                  std::pair{StirlingKind::S2deg, StirlingKind::S2}}) {
        for (int n = 0; n <= g.stirling_nmax; ++n)
            cells.push_back(Cell{to_string(deg) + " row n=" + std::to_string(n), [=] {
                                     return compare_rats(stirling_table(deg, zero, g.stirling_nmax)->row(n),
                                                         stirling_table(classical, zero, g.stirling_nmax)->row(n));
                                 }});
    }
    for (int n = 0; n <= g.nmax; ++n) {
        cells.push_back(Cell{"deg_bell n=" + std::to_string(n), [=] {
                                 return compare_polys({deg_bell_poly(n, zero)}, {bell_poly(n)});
                             }});
        for (int m : g.ms) {
            cells.push_back(Cell{"deg_whitney n=" + std::to_string(n) + " m=" + std::to_string(m), [=] {
                                     std::vector<Rat> deg;
                                     std::vector<Rat> classical;
                                     for (int k = 0; k <= n; ++k) {
                                         deg.push_back(deg_whitney2(DegParams(zero, m, 1), n, k));
                                         classical.emplace_back(whitney_classical(m, n, k));
                                     }
                                     return compare_rats(deg, classical);
                                 }});
            cells.push_back(Cell{"deg_dowling n=" + std::to_string(n) + " m=" + std::to_string(m), [=] {
                                     return compare_polys({deg_dowling_poly(DegParams(zero, m, 1), n)},
                                                          {dowling_poly(m, n)});
                                 }});
        }
    }
    const std::size_t N = g.gf_order;
    cells.push_back(Cell{"e_0^x(t) = exp(xt)", [=] {
                             return compare_polys(e_lambda_series(zero, N).egf_values(),
                                                  collect(N, [](int n) { return Poly::monomial(Rat(1), n); }));
                         }});
    cells.push_back(Cell{"log_0(1+t) = log(1+t)", [=] {
                             // lambda^{n-1} (1)_{n,1/lambda} = prod_{j=1}^{n-1} (lambda - j), taken at lambda = 0.
                             auto want = collect(N, [](int n) {
                                 if (n == 0) return Rat(0);
                                 Rat v(1);
                                 for (int j = 1; j < n; ++j) v *= Rat(-j);
                                 return v;
                             });
                             return compare_rats(log_lambda_series(zero, N).egf_values(), want);
                         }});
    return cells;
}

std::vector<Cell> inverse_pair_cells(const Grid& g) {
    std::vector<Cell> cells;
    for (const Rat& lambda : g.lambdas)
        cells.push_back(Cell{"S1deg*S2deg lambda=" + lambda.str(), [=] {
                                 const int N = g.stirling_nmax;
                                 auto s1 = stirling_table(StirlingKind::S1deg, lambda, N);
                                 auto s2 = stirling_table(StirlingKind::S2deg, lambda, N);
                                 for (int n = 0; n <= N; ++n)
                                     for (int j = 0; j <= N; ++j) {
                                         Rat sum(0);
                                         for (int k = 0; k <= N; ++k) sum += s1->at(n, k) * s2->at(k, j);
                                         if (!(sum == Rat(n == j ? 1 : 0)))
                                             return CellOutcome{false,
                                                                "(" + std::to_string(n) + "," + std::to_string(j) +
                                                                    ") = " + sum.str(),
                                                                n == j ? "1" : "0"};
                                     }
                                 return CellOutcome{};
                             }});
    return cells;
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-20, 20);
    std::uniform_int_distribution<std::int64_t> den(1, 6);
    return Rat(num(rng), den(rng));
}

std::vector<Cell> vandermonde_cells(const Grid& g) {
    std::vector<Cell> cells;
    std::mt19937_64 rng(g.seed);
    for (int n = g.nmin; n <= g.nmax; ++n)
        for (const Rat& lambda : g.lambdas)
            for (int i = 0; i < g.eq32_pairs; ++i) {
                Rat x = random_rat(rng);
                Rat y = random_rat(rng);
                cells.push_back(Cell{"EQ32 n=" + std::to_string(n) + " lambda=" + lambda.str() + " x=" + x.str() +
                                         " y=" + y.str(),
                                     [=] {
                                         Rat lhs = deg_falling_eval(x + y, n, lambda);
                                         Rat rhs(0);
                                         for (int k = 0; k <= n; ++k)
                                             rhs += Rat(binom(n, k)) * deg_falling_eval(x, k, lambda) *
                                                    deg_falling_eval(y, n - k, lambda);
                                         return CellOutcome{lhs == rhs, lhs.str(), rhs.str()};
                                     }});
            }
    return cells;
}

std::vector<Cell> mc_cells(const Grid& g, CheckId id) {
    std::vector<Cell> cells;
    for (const McCell& c : g.mc_cells) {
        const bool theorem1 = c.r == 1;
        if ((id == CheckId::T1_MC) != theorem1) continue;
        std::ostringstream label;
        label << to_string(id) << " n=" << c.n << " m=" << c.m << " r=" << c.r << " lambda=" << c.lambda
              << " alpha=" << c.alpha << " seed=" << c.seed;
        const std::uint64_t samples = g.mc_samples;
        cells.push_back(Cell{label.str(), [=] {
                                 const Rat rate = c.alpha / Rat(c.m);
                                 PoissonSpec spec{rate.to_double(), c.seed, samples, 1};
                                 McEstimate est = estimate_deg_moment(DegParams(c.lambda, c.m, c.r), c.n, c.alpha, spec);
                                 std::ostringstream lhs;
                                 lhs.precision(10);
                                 lhs << est.mean << " +/- " << est.std_error;
                                 return CellOutcome{est.passes(), lhs.str(), est.target.str()};
                             }});
    }
    return cells;
}

} // namespace

std::vector<Cell> build_cells(const IdentityCheck& check) {
    const Grid& g = check.grid;
    switch (check.id) {
    case CheckId::T1_MC:
    case CheckId::T4_MC: return mc_cells(g, check.id);
    case CheckId::C3: return corollary3_cells(g);
    case CheckId::T9: return theorem9_cells(g);
    case CheckId::EQ32: return vandermonde_cells(g);
    case CheckId::GF_ALL: return gf_cells(g);
    case CheckId::LIMIT_L0: return limit_cells(g);
    case CheckId::INV_PAIR: return inverse_pair_cells(g);
    default: return theorem_cells(g, check.id);
    }
}

CheckReport run_check(const IdentityCheck& check, unsigned threads) {
    return run_cells(to_string(check.id), build_cells(check), threads);
}

bool SuiteReport::passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport out;
    const auto& ids = config.checks.empty() ? all_check_ids() : config.checks;
    for (CheckId id : ids) {
        out.reports.push_back(run_check(IdentityCheck{id, config.grid}, config.threads));
        if (out.reports.back().cells_run == 0)
            out.warnings.push_back(to_string(id) + ": grid is empty, zero cells run");
    }
    return out;
}

} // namespace degen
