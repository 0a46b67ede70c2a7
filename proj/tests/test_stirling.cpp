#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "degen/error.hpp"
#include "degen/stirling.hpp"
#include "oracles/oracles.hpp"

using namespace degen;

namespace {

const std::vector<Rat> kLambdas{Rat(0), Rat(1, 2), Rat(-1, 3), Rat(2), Rat(-5)};

std::vector<Rat> rats(std::initializer_list<std::int64_t> xs) {
    std::vector<Rat> out;
    for (auto v : xs) out.emplace_back(v);
    return out;
}

} // namespace

TEST(FallingFactorial, Polynomials) {
    EXPECT_EQ(falling_poly(0), Poly::constant(Rat(1)));
    EXPECT_EQ(falling_poly(3), Poly(Var::X, rats({0, 2, -3, 1})));
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(falling_poly(n).eval(Rat(n)), Rat(factorial(n)));

    const Rat l(3, 7);
    EXPECT_EQ(deg_falling_poly(2, l), Poly(Var::X, {Rat(0), -l, Rat(1)}));
    EXPECT_EQ(deg_falling_poly(4, Rat(0)), Poly::monomial(Rat(1), 4));
    EXPECT_EQ(deg_falling_poly(3, Rat(1)), falling_poly(3));
}

TEST(FallingFactorial, Evaluation) {
    EXPECT_EQ(deg_falling_eval(Rat(1), 3, Rat(1)), Rat(0));
    EXPECT_EQ(deg_falling_eval(Rat(5), 2, Rat(1, 2)), Rat(45, 2));
    EXPECT_EQ(deg_falling_eval(Rat(-4, 3), 0, Rat(9)), Rat(1));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Rat x = oracle::random_rat(rng), l = oracle::random_rat(rng);
        for (int n = 0; n < 7; ++n) EXPECT_EQ(deg_falling_eval(x, n, l), deg_falling_poly(n, l).eval(x));
    }
}

TEST(BasisConversion, FallingBasis) {
    EXPECT_EQ(to_falling_basis(Poly::monomial(Rat(1), 2)), rats({0, 1, 1}));
    auto unit = to_falling_basis(falling_poly(5));
    EXPECT_EQ(unit, rats({0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(to_falling_basis(Poly::constant(Rat(1))), rats({1}));
}

TEST(BasisConversion, DegenerateFallingBasis) {
    const Rat l(2, 5);
    EXPECT_EQ(to_deg_falling_basis(Poly(Var::X, {Rat(0), -l, Rat(1)}), l), rats({0, 0, 1}));
    EXPECT_EQ(to_deg_falling_basis(Poly::monomial(Rat(1), 2), Rat(1, 2)), (std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)}));
    Poly p(Var::X, {Rat(3), Rat(-1, 2), Rat(0), Rat(7)});
    EXPECT_EQ(to_deg_falling_basis(p, Rat(0)), p.coeffs());
}

TEST(BasisConversion, RoundTripOnRandomPolynomials) {
    std::mt19937_64 rng(8);
    for (const Rat& l : {Rat(0), Rat(1, 2), Rat(-1, 3), Rat(2)}) {
        for (int i = 0; i < 40; ++i) {
            std::vector<Rat> cs;
            std::uniform_int_distribution<int> deg(0, 8);
            for (int j = 0, d = deg(rng); j <= d; ++j) cs.push_back(oracle::random_rat(rng));
            Poly p(Var::X, cs);
            auto c = to_deg_falling_basis(p, l);
            Poly back(Var::X);
            for (std::size_t k = 0; k < c.size(); ++k) back += deg_falling_poly(static_cast<int>(k), l) * c[k];
            EXPECT_EQ(back, p);
        }
    }
}

TEST(StirlingTable, ClassicalRows) {
    auto s2 = stirling_table(StirlingKind::S2, Rat(0), 8);
    EXPECT_EQ(s2->row(3), rats({0, 1, 3, 1}));
    auto s1 = stirling_table(StirlingKind::S1, Rat(0), 8);
    EXPECT_EQ(s1->row(3), rats({0, 2, -3, 1}));
}

TEST(StirlingTable, S2MatchesSetPartitionCount) {
    auto s2 = stirling_table(StirlingKind::S2, Rat(0), 8);
    for (int n = 0; n <= 8; ++n) {
        auto counts = oracle::partitions_by_blocks(n);
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(s2->at(n, k), Rat(static_cast<std::int64_t>(counts[static_cast<std::size_t>(k)])))
                << n << "," << k;
    }
}

TEST(StirlingTable, DegenerateRowTwo) {
    for (const Rat& l : kLambdas) {
        auto t = stirling_table(StirlingKind::S2deg, l, 4);
        EXPECT_EQ(t->row(2), (std::vector<Rat>{Rat(0), Rat(1) - l, Rat(1)}));
    }
}

TEST(StirlingTable, DegenerateValuesFromSeriesExpansion) {
    // Frozen from the sympy closed-form expansion in tests/oracles/derive_expected.py.
    auto s2 = stirling_table(StirlingKind::S2deg, Rat(-1, 3), 5);
    EXPECT_EQ(s2->at(3, 2), Rat(4));
    EXPECT_EQ(s2->at(4, 2), Rat(128, 9));
    EXPECT_EQ(s2->at(5, 2), Rat(1400, 27));
    auto s1 = stirling_table(StirlingKind::S1deg, Rat(1, 2), 5);
    EXPECT_EQ(s1->at(3, 2), Rat(-3, 2));
    EXPECT_EQ(s1->at(4, 2), Rat(15, 4));
    EXPECT_EQ(s1->at(5, 2), Rat(-105, 8));
}

TEST(StirlingTable, TriangleInvariants) {
    for (auto kind : {StirlingKind::S1, StirlingKind::S2, StirlingKind::S1deg, StirlingKind::S2deg})
        for (const Rat& l : kLambdas) {
            auto t = stirling_table(kind, l, 12);
            EXPECT_EQ(t->at(0, 0), Rat(1));
            for (int n = 0; n <= 12; ++n) {
                EXPECT_EQ(t->at(n, n), Rat(1));
                EXPECT_EQ(t->at(n, n + 1), Rat(0));
                EXPECT_EQ(t->at(n, -1), Rat(0));
            }
        }
}

TEST(StirlingTable, MatchesOneStepRecurrence) {
    for (const Rat& l : kLambdas) {
        auto want = oracle::deg_stirling2_recurrence(12, l);
        auto got = stirling_table(StirlingKind::S2deg, l, 12);
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= n; ++k)
                EXPECT_EQ(got->at(n, k), want[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)])
                    << "lambda=" << l << " n=" << n << " k=" << k;
    }
}

TEST(StirlingTable, DegenerateKindsAreMutualInverses) {
    for (const Rat& l : kLambdas) {
        auto s1 = stirling_table(StirlingKind::S1deg, l, 12);
        auto s2 = stirling_table(StirlingKind::S2deg, l, 12);
        for (int n = 0; n <= 12; ++n)
            for (int j = 0; j <= 12; ++j) {
                Rat a(0), b(0);
                for (int k = 0; k <= 12; ++k) {
                    a += s1->at(n, k) * s2->at(k, j);
                    b += s2->at(n, k) * s1->at(k, j);
                }
                EXPECT_EQ(a, Rat(n == j ? 1 : 0));
                EXPECT_EQ(b, Rat(n == j ? 1 : 0));
            }
    }
}

TEST(StirlingTable, ClassicalLimitAtLambdaZero) {
    auto s1 = stirling_table(StirlingKind::S1, Rat(0), 12);
    auto s2 = stirling_table(StirlingKind::S2, Rat(0), 12);
    auto d1 = stirling_table(StirlingKind::S1deg, Rat(0), 12);
    auto d2 = stirling_table(StirlingKind::S2deg, Rat(0), 12);
    for (int n = 0; n <= 12; ++n) {
        EXPECT_EQ(s1->row(n), d1->row(n));
        EXPECT_EQ(s2->row(n), d2->row(n));
    }
}

TEST(StirlingTable, LambdaOneDegenerateSecondKindIsIdentity) {
    auto t = stirling_table(StirlingKind::S2deg, Rat(1), 10);
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(t->at(n, k), Rat(n == k ? 1 : 0));
}

TEST(StirlingTable, CapAndMemoization) {
    EXPECT_THROW(stirling_table(StirlingKind::S2, Rat(0), kMaxTableN + 1), DomainError);
    EXPECT_NO_THROW(stirling_table(StirlingKind::S2, Rat(0), 32));
    auto a = stirling_table(StirlingKind::S2deg, Rat(3, 11), 9);
    auto b = stirling_table(StirlingKind::S2deg, Rat(6, 22), 9);
    EXPECT_EQ(a.get(), b.get());
}

TEST(StirlingTable, ConcurrentReadThroughCache) {
    std::vector<std::shared_ptr<const TriangleTable>> seen(8);
    {
        std::vector<std::jthread> workers;
        for (int i = 0; i < 8; ++i)
            workers.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = stirling_table(StirlingKind::S1deg, Rat(5, 13), 14); });
    }
    for (const auto& t : seen) EXPECT_EQ(t->row(14), seen[0]->row(14));
}

TEST(BellPolynomials, Values) {
    EXPECT_EQ(bell_poly(0), Poly::constant(Rat(1)));
    EXPECT_EQ(bell_poly(2), Poly(Var::X, rats({0, 1, 1})));
    EXPECT_EQ(bell_poly(3).eval(Rat(1)), Rat(5));
    for (int n = 0; n <= 8; ++n)
        EXPECT_EQ(bell_poly(n).eval(Rat(1)), Rat(static_cast<std::int64_t>(oracle::bell_number(n))));
}

TEST(BellPolynomials, Degenerate) {
    for (const Rat& l : kLambdas) {
        EXPECT_EQ(deg_bell_poly(2, l), Poly(Var::X, {Rat(0), Rat(1) - l, Rat(1)}));
        EXPECT_EQ(deg_bell_poly(1, l), Poly::identity());
    }
    EXPECT_EQ(deg_bell_poly(3, Rat(0)), Poly(Var::X, rats({0, 1, 3, 1})));
    EXPECT_EQ(deg_bell_poly(2, Rat(1, 3)).eval(Rat(1)), Rat(5, 3));
}

TEST(Vandermonde, DegenerateBinomialIdentity) {
    std::mt19937_64 rng(9);
    for (const Rat& l : kLambdas)
        for (int n = 0; n <= 10; ++n)
            for (int i = 0; i < 5; ++i) {
                Rat x = oracle::random_rat(rng), y = oracle::random_rat(rng);
                Rat rhs(0);
                for (int k = 0; k <= n; ++k)
                    rhs += Rat(binom(n, k)) * deg_falling_eval(x, k, l) * deg_falling_eval(y, n - k, l);
                EXPECT_EQ(deg_falling_eval(x + y, n, l), rhs);
            }
}

TEST(DegParams, Validation) {
    EXPECT_THROW(DegParams(Rat(0), 0, 0), DomainError);
    EXPECT_THROW(DegParams(Rat(0), 1, -1), DomainError);
    EXPECT_NO_THROW(DegParams(Rat(-5), 3, 0));
}
