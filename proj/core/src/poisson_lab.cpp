#include "degen/poisson_lab.hpp"

#include <cmath>
#include <future>
#include <string>

#include "degen/dowling.hpp"
#include "degen/error.hpp"

namespace degen {

bool McEstimate::passes(double tolerance) const {
    return std::abs(mean - target_exact) <= tolerance * std_error;
}

PoissonSampler::PoissonSampler(double rate, std::uint64_t seed)
    : rate_(rate), p0_(std::exp(-rate)), engine_(seed) {
    if (!(rate > 0.0) || rate > kMaxPoissonRate)
        throw DomainError("Poisson rate must be in (0, " + std::to_string(kMaxPoissonRate) + "]");
}

std::uint64_t PoissonSampler::operator()() {
    // 53-bit uniform in [0, 1); fixed here so streams do not depend on the
    // standard library's distribution implementation.
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    std::uint64_t i = 0;
    double p = p0_;
    double cdf = p;
    while (u >= cdf) {
        ++i;
        p *= rate_ / static_cast<double>(i);
        const double next = cdf + p;
        // Rounded CDF stalled below u; the remaining tail mass is negligible.
        if (next == cdf) break;
        cdf = next;
    }
    return i;
}

std::uint64_t shard_seed(std::uint64_t seed, unsigned index) {
    // splitmix64 finalizer over (seed, index).
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

void check_spec(const PoissonSpec& spec) {
    if (spec.n_samples < 1) throw DomainError("PoissonSpec: n_samples must be >= 1");
    if (spec.shards < 1) throw DomainError("PoissonSpec: shards must be >= 1");
    if (!(spec.rate > 0.0) || spec.rate > kMaxPoissonRate)
        throw DomainError("Poisson rate must be in (0, " + std::to_string(kMaxPoissonRate) + "]");
}

std::uint64_t shard_size(const PoissonSpec& spec, unsigned index) {
    std::uint64_t base = spec.n_samples / spec.shards;
    return base + (index < spec.n_samples % spec.shards ? 1 : 0);
}

SampleHistogram shard_histogram(const PoissonSpec& spec, unsigned index) {
    PoissonSampler sampler(spec.rate, shard_seed(spec.seed, index));
    SampleHistogram h;
    const std::uint64_t count = shard_size(spec, index);
    for (std::uint64_t i = 0; i < count; ++i) ++h[sampler()];
    return h;
}

void check_order(int n) {
    if (n < 0) throw DomainError("moment order must be nonnegative");
    if (n > kMaxMcMomentOrder)
        throw DomainError("moment order " + std::to_string(n) + " exceeds " + std::to_string(kMaxMcMomentOrder) +
                          ": degenerate factorial moments this large need far more samples than the "
                          "5-SE budget assumes; raise the sample count and the cap together");
}

void check_rate(const PoissonSpec& spec, const Rat& expected) {
    const double want = expected.to_double();
    if (std::abs(spec.rate - want) > 1e-12 * std::max(1.0, std::abs(want)))
        throw DomainError("PoissonSpec rate " + std::to_string(spec.rate) + " does not match " + expected.str());
}

} // namespace

std::vector<std::uint64_t> poisson_sample(const PoissonSpec& spec) {
    check_spec(spec);
    PoissonSampler sampler(spec.rate, shard_seed(spec.seed, 0));
    std::vector<std::uint64_t> out;
    out.reserve(spec.n_samples);
    for (std::uint64_t i = 0; i < spec.n_samples; ++i) out.push_back(sampler());
    return out;
}

SampleHistogram poisson_histogram(const PoissonSpec& spec) {
    check_spec(spec);
    std::vector<std::future<SampleHistogram>> parts;
    for (unsigned s = 0; s < spec.shards; ++s)
        parts.push_back(std::async(spec.shards > 1 ? std::launch::async : std::launch::deferred,
                                   shard_histogram, spec, s));
    SampleHistogram merged;
    for (auto& part : parts)
        for (const auto& [value, count] : part.get()) merged[value] += count;
    return merged;
}

McEstimate estimate_exact_integrand(const PoissonSpec& spec, const std::function<Rat(std::uint64_t)>& f,
                                    const Rat& target) {
    const SampleHistogram hist = poisson_histogram(spec);
    Rat sum(0);
    Rat sum_sq(0);
    for (const auto& [value, count] : hist) {
        const Rat fx = f(value);
        const Rat weight{BigInt(std::to_string(count), 10)};
        sum += fx * weight;
        sum_sq += fx * fx * weight;
    }
    const Rat n{BigInt(std::to_string(spec.n_samples), 10)};
    const Rat mean = sum / n;
    McEstimate est;
    est.mean = mean.to_double();
    if (spec.n_samples > 1) {
        // Unbiased sample variance, exact until this conversion.
        const Rat var = (sum_sq - sum * mean) / (n - Rat(1));
        est.std_error = std::sqrt(var.to_double() / static_cast<double>(spec.n_samples));
    }
    est.n_samples = spec.n_samples;
    est.seed = spec.seed;
    est.target = target;
    est.target_exact = target.to_double();
    return est;
}

McEstimate estimate_deg_moment(const DegParams& params, int n, const Rat& alpha, const PoissonSpec& spec) {
    check_order(n);
    check_rate(spec, alpha / Rat(params.m));
    const Rat target = deg_r_dowling_poly(params, n).eval(alpha);
    return estimate_exact_integrand(
        spec,
        [&](std::uint64_t x) {
            const Rat v = Rat(params.m) * Rat(static_cast<std::int64_t>(x)) + Rat(params.r);
            return deg_falling_eval(v, n, params.lambda);
        },
        target);
}

McEstimate estimate_raw_moment(int n, const Rat& alpha, const PoissonSpec& spec, const std::optional<Rat>& mu) {
    check_order(n);
    check_rate(spec, alpha);
    const Rat step = mu.value_or(Rat(0));
    const Rat target = (mu ? deg_bell_poly(n, step) : bell_poly(n)).eval(alpha);
    return estimate_exact_integrand(
        spec, [&](std::uint64_t x) { return deg_falling_eval(Rat(static_cast<std::int64_t>(x)), n, step); },
        target);
}

} // namespace degen
