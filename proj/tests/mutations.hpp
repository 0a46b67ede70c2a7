#pragma once

// Deliberately wrong identities. A suite that reports these as passing is
// comparing vacuously.

#include <vector>

#include "degen/dowling.hpp"
#include "degen/verify.hpp"

namespace degen::mutation {

// The shifted Dowling expansion with the inner sum started one term late
// (l from j+1 instead of j). Dropping the l = n, j = n term loses the
// leading alpha^n, so every cell fails.
inline Poly t8_off_by_one(const DegParams& p, int n) {
    const Rat mu = p.lambda / Rat(p.m);
    Poly acc(Var::Alpha);
    for (int j = 0; j <= n; ++j) {
        Rat inner(0);
        for (int l = j + 1; l <= n; ++l)
            inner += Rat(binom(n, l)) * deg_falling_eval(Rat(p.r), n - l, p.lambda) * Rat(p.m).pow(l - j) *
                     deg_stirling2(l, j, mu);
        acc += Poly::monomial(inner, j, Var::Alpha);
    }
    return acc;
}

// The T8 grid cells with the mutated right-hand side.
inline std::vector<Cell> t8_mutant_cells(const Grid& g) {
    std::vector<Cell> cells;
    for (int n = g.nmin; n <= g.nmax; ++n)
        for (int m : g.ms)
            for (int r : g.rs) {
                auto points = certification_points(g.lambdas, n);
                cells.push_back(Cell{"T8* n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                         " r=" + std::to_string(r),
                                     [=] {
                                         auto lhs = [&](const Rat& l) {
                                             return deg_r_dowling_poly(DegParams(l, m, r), n).with_var(Var::Alpha);
                                         };
                                         auto rhs = [&](const Rat& l) {
                                             return t8_off_by_one(DegParams(l, m, r), n);
                                         };
                                         auto c = certify_lambda(lhs, rhs, n, points);
                                         if (c.holds) return CellOutcome{};
                                         return CellOutcome{false, "lambda=" + c.failing_lambda->str() + ": " + c.lhs,
                                                            c.rhs};
                                     }});
            }
    return cells;
}

} // namespace degen::mutation
