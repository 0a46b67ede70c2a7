#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "degen/rat.hpp"
#include "degen/stirling.hpp"

namespace degen {

/// Largest Poisson rate the inversion sampler accepts.
inline constexpr double kMaxPoissonRate = 100.0;
/// Largest moment order the Monte-Carlo estimators accept.
inline constexpr int kMaxMcMomentOrder = 6;
/// Statistical acceptance: |mean - exact| <= kMcTolerance * std_error.
inline constexpr double kMcTolerance = 5.0;

struct PoissonSpec {
    double rate = 1.0;
    std::uint64_t seed = 0;
    std::uint64_t n_samples = 1;
    /// Independent substreams; each derives its seed from (seed, shard index).
    unsigned shards = 1;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    double target_exact = 0.0;
    /// Exact closed form the estimate is compared against.
    Rat target{0};

    /// |mean - target| <= kMcTolerance * std_error. A zero standard error
    /// demands exact agreement.
    bool passes(double tolerance = kMcTolerance) const;

    friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Draws a Poisson variate by CDF inversion using p(i+1) = p(i) * rate / (i+1).
class PoissonSampler {
public:
    /// Throws DomainError unless 0 < rate <= kMaxPoissonRate.
    PoissonSampler(double rate, std::uint64_t seed);

    std::uint64_t operator()();
    double rate() const { return rate_; }

private:
    double rate_;
    double p0_;
    std::mt19937_64 engine_;
};

/// Seed of shard `index` in a run seeded with `seed`.
std::uint64_t shard_seed(std::uint64_t seed, unsigned index);

/// The first n_samples draws of a single stream seeded by shard_seed(seed, 0).
std::vector<std::uint64_t> poisson_sample(const PoissonSpec& spec);

/// Counts of each sampled value, merged across shards.
using SampleHistogram = std::map<std::uint64_t, std::uint64_t>;
SampleHistogram poisson_histogram(const PoissonSpec& spec);

/// Mean and standard error of f(X) with f exact; sums are accumulated exactly
/// from the histogram and converted to double once.
McEstimate estimate_exact_integrand(const PoissonSpec& spec, const std::function<Rat(std::uint64_t)>& f,
                                    const Rat& target);

/// E[(mX + r)_{n,lambda}] for X ~ Poi(alpha/m); target D^{(r)}_{m,lambda}(n, alpha).
McEstimate estimate_deg_moment(const DegParams& params, int n, const Rat& alpha, const PoissonSpec& spec);

/// E[X^n] (or E[(X)_{n,mu}] when mu is given) for X ~ Poi(alpha); target
/// phi_n(alpha) (or phi_{n,mu}(alpha)).
McEstimate estimate_raw_moment(int n, const Rat& alpha, const PoissonSpec& spec,
                               const std::optional<Rat>& mu = std::nullopt);

} // namespace degen
