#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "degen/poly.hpp"
#include "degen/rat.hpp"
#include "degen/series.hpp"
#include "degen/stirling.hpp"

namespace degen {

/// Default truncation order for generating-function checks.
inline constexpr std::size_t kDefaultOrder = 16;
/// Largest truncation order gf_coefficients accepts.
inline constexpr std::size_t kMaxOrder = 40;

/// e_lambda^x(t) = sum_n (x)_{n,lambda} t^n / n! for a rational x.
RatSeries e_lambda_series(const Rat& x, const Rat& lambda, std::size_t order);
/// e_lambda^x(t) with x symbolic: coefficients (x)_{n,lambda} / n! in x.
PolySeries e_lambda_series(const Rat& lambda, std::size_t order);

/// log_lambda(1+t); classical log(1+t) at lambda = 0.
RatSeries log_lambda_series(const Rat& lambda, std::size_t order);

/// e_{lambda/m}^x(m t): the rescaled form of e_lambda^{m x}(t).
RatSeries rescaled_e_lambda(const Rat& x, const Rat& lambda, int m, std::size_t order);

enum class GfKind {
    EXP_DEG,
    LOG_DEG,
    BELL,
    DEG_BELL,
    S1DEG,
    S2DEG,
    DEG_WHITNEY,
    DEG_DOWLING,
    DEG_R_DOWLING,
    CHARLIER,
};

std::string to_string(GfKind kind);
GfKind parse_gf_kind(std::string_view name);
const std::vector<GfKind>& all_gf_kinds();
bool gf_needs_k(GfKind kind);
/// True when the kind's coefficients are polynomials in x.
bool gf_is_symbolic(GfKind kind);

struct GfSpec {
    GfKind kind;
    DegParams params{Rat(0), 1, 0};
    /// Block index for S1DEG, S2DEG and DEG_WHITNEY.
    std::optional<int> k;
    std::size_t order = kDefaultOrder;
    /// Fixed alpha for CHARLIER; x stays symbolic.
    Rat alpha{1};
};

/// Rational values for numeric kinds, polynomials in x for symbolic ones.
using GfValues = std::variant<std::vector<Rat>, std::vector<Poly>>;

/// The generating function of `spec`, built from exact series primitives.
std::variant<RatSeries, PolySeries> gf_series(const GfSpec& spec);

/// n! [t^n] of the generating function, n = 0..order.
GfValues gf_coefficients(const GfSpec& spec);

} // namespace degen
