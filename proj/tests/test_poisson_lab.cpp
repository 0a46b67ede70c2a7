#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "degen/dowling.hpp"
#include "degen/error.hpp"
#include "degen/poisson_lab.hpp"

using namespace degen;

namespace {

double mean_of(const std::vector<std::uint64_t>& xs) {
    return static_cast<double>(std::accumulate(xs.begin(), xs.end(), std::uint64_t{0})) /
           static_cast<double>(xs.size());
}

PoissonSpec spec_for(double rate, std::uint64_t seed, std::uint64_t n, unsigned shards = 1) {
    PoissonSpec s;
    s.rate = rate;
    s.seed = seed;
    s.n_samples = n;
    s.shards = shards;
    return s;
}

} // namespace

TEST(PoissonSampler, TinyRateIsAlmostAlwaysZero) {
    auto xs = poisson_sample(spec_for(1e-9, 7, 10'000));
    EXPECT_LT(mean_of(xs), 1e-6);
}

TEST(PoissonSampler, MeanMatchesRate) {
    auto xs = poisson_sample(spec_for(2.0, 11, 1'000'000));
    EXPECT_NEAR(mean_of(xs), 2.0, 4.0 * std::sqrt(2.0) / 1e3);
}

TEST(PoissonSampler, LargeRateStaysFinite) {
    auto xs = poisson_sample(spec_for(kMaxPoissonRate, 3, 20'000));
    EXPECT_NEAR(mean_of(xs), kMaxPoissonRate, 5.0 * std::sqrt(kMaxPoissonRate / 20'000.0));
}

TEST(PoissonSampler, SameSeedSameStream) {
    EXPECT_EQ(poisson_sample(spec_for(1.5, 99, 5000)), poisson_sample(spec_for(1.5, 99, 5000)));
    EXPECT_NE(poisson_sample(spec_for(1.5, 99, 5000)), poisson_sample(spec_for(1.5, 100, 5000)));
}

TEST(PoissonSampler, RejectsBadRates) {
    EXPECT_THROW(PoissonSampler(0.0, 1), DomainError);
    EXPECT_THROW(PoissonSampler(-1.0, 1), DomainError);
    EXPECT_THROW(PoissonSampler(kMaxPoissonRate * 2, 1), DomainError);
    EXPECT_THROW(poisson_sample(spec_for(std::nan(""), 1, 10)), DomainError);
}

TEST(PoissonHistogram, SingleShardMatchesStream) {
    const auto spec = spec_for(3.0, 5, 20'000);
    SampleHistogram direct;
    for (auto x : poisson_sample(spec)) ++direct[x];
    EXPECT_EQ(poisson_histogram(spec), direct);
}

TEST(PoissonHistogram, ShardedRunIsReproducible) {
    const auto spec = spec_for(2.0, 17, 100'001, 4);
    const auto a = poisson_histogram(spec);
    const auto b = poisson_histogram(spec);
    EXPECT_EQ(a, b);
    std::uint64_t total = 0;
    for (const auto& [value, count] : a) total += count;
    EXPECT_EQ(total, spec.n_samples);
    EXPECT_NE(shard_seed(17, 0), shard_seed(17, 1));
}

TEST(DegenerateMoment, ZerothMomentIsExactlyOne) {
    auto est = estimate_deg_moment(DegParams(Rat(1, 2), 2, 1), 0, Rat(2), spec_for(1.0, 1, 1000));
    EXPECT_EQ(est.mean, 1.0);
    EXPECT_EQ(est.std_error, 0.0);
    EXPECT_EQ(est.target, Rat(1));
    EXPECT_TRUE(est.passes());
}

TEST(DegenerateMoment, ClassicalCaseTargetsTouchard) {
    for (int n = 1; n <= 4; ++n) {
        auto est = estimate_deg_moment(DegParams(Rat(0), 1, 0), n, Rat(3, 2), spec_for(1.5, 21, 200'000));
        EXPECT_EQ(est.target, bell_poly(n).eval(Rat(3, 2)));
        EXPECT_TRUE(est.passes()) << n;
    }
}

TEST(DegenerateMoment, ShiftedDowlingCell) {
    auto est = estimate_deg_moment(DegParams(Rat(1, 2), 2, 1), 3, Rat(2), spec_for(1.0, 42, 1'000'000));
    EXPECT_EQ(est.target, Rat(53));
    EXPECT_GT(est.std_error, 0.0);
    EXPECT_TRUE(est.passes()) << est.mean << " +- " << est.std_error;
    EXPECT_EQ(est.seed, 42u);
    EXPECT_EQ(est.n_samples, 1'000'000u);
}

TEST(DegenerateMoment, Errors) {
    EXPECT_THROW(estimate_deg_moment(DegParams(Rat(0), 1, 0), kMaxMcMomentOrder + 1, Rat(1), spec_for(1.0, 1, 10)),
                 DomainError);
    EXPECT_THROW(estimate_deg_moment(DegParams(Rat(0), 2, 0), 2, Rat(1), spec_for(1.0, 1, 10)), DomainError);
    EXPECT_THROW(estimate_deg_moment(DegParams(Rat(0), 1, 0), -1, Rat(1), spec_for(1.0, 1, 10)), DomainError);
}

TEST(RawMoment, Targets) {
    auto first = estimate_raw_moment(1, Rat(3), spec_for(3.0, 8, 100'000));
    EXPECT_EQ(first.target, Rat(3));
    EXPECT_TRUE(first.passes());

    auto second = estimate_raw_moment(2, Rat(1), spec_for(1.0, 9, 100'000));
    EXPECT_EQ(second.target, Rat(2));
    EXPECT_TRUE(second.passes());

    // E[(X)_{2,mu}] for X ~ Poi(1) is 1 + (1 - mu) = 2 - mu.
    auto deg = estimate_raw_moment(2, Rat(1), spec_for(1.0, 10, 100'000), Rat(1, 3));
    EXPECT_EQ(deg.target, Rat(5, 3));
    EXPECT_TRUE(deg.passes());
}

TEST(McEstimate, ZeroErrorDemandsExactAgreement) {
    McEstimate e;
    e.mean = 1.0;
    e.target_exact = 1.0;
    EXPECT_TRUE(e.passes());
    e.mean = 1.0 + 1e-12;
    EXPECT_FALSE(e.passes());
}
