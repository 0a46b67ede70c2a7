#include "degen/genfun.hpp"


#include "degen/error.hpp"

namespace degen {

namespace {

Rat inv_factorial(std::size_t n) { return Rat(BigInt(1), factorial(static_cast<long>(n))); }


// f(t) - f(0).
template <SeriesCoefficient C>
Series<C> drop_constant(const Series<C>& s) {
    std::vector<C> cs = s.coeffs();
    cs[0] = ring::zero_like(cs[0]);
    return Series<C>(std::move(cs));
}

} // namespace

RatSeries e_lambda_series(const Rat& x, const Rat& lambda, std::size_t order) {
    std::vector<Rat> cs;
    cs.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        cs.push_back(deg_falling_eval(x, static_cast<int>(n), lambda) * inv_factorial(n));
    return RatSeries(std::move(cs));
}

PolySeries e_lambda_series(const Rat& lambda, std::size_t order) {
    std::vector<Poly> cs;
    cs.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        cs.push_back(deg_falling_poly(static_cast<int>(n), lambda) * inv_factorial(n));
    return PolySeries(std::move(cs));
}

RatSeries log_lambda_series(const Rat& lambda, std::size_t order) {
    std::vector<Rat> cs(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        const int ni = static_cast<int>(n);
        if (lambda.is_zero()) {
            cs[n] = Rat((ni % 2 == 1) ? 1 : -1, ni);
        } else {
            cs[n] = lambda.pow(ni - 1) * deg_falling_eval(Rat(1), ni, lambda.inverse()) * inv_factorial(n);
        }
    }
    return RatSeries(std::move(cs));
}

RatSeries rescaled_e_lambda(const Rat& x, const Rat& lambda, int m, std::size_t order) {
    if (m < 1) throw DomainError("rescaled_e_lambda: m must be >= 1");
    return e_lambda_series(x, lambda / Rat(m), order).dilated(Rat(m));
}

std::string to_string(GfKind kind) {
    switch (kind) {
    case GfKind::EXP_DEG: return "EXP_DEG";
    case GfKind::LOG_DEG: return "LOG_DEG";
    case GfKind::BELL: return "BELL";
    case GfKind::DEG_BELL: return "DEG_BELL";
    case GfKind::S1DEG: return "S1DEG";
    case GfKind::S2DEG: return "S2DEG";
    case GfKind::DEG_WHITNEY: return "DEG_WHITNEY";
    case GfKind::DEG_DOWLING: return "DEG_DOWLING";
    case GfKind::DEG_R_DOWLING: return "DEG_R_DOWLING";
    case GfKind::CHARLIER: return "CHARLIER";
    }
    return "?";
}

const std::vector<GfKind>& all_gf_kinds() {
    static const std::vector<GfKind> kinds{GfKind::EXP_DEG,     GfKind::LOG_DEG,     GfKind::BELL,
                                           GfKind::DEG_BELL,    GfKind::S1DEG,       GfKind::S2DEG,
                                           GfKind::DEG_WHITNEY, GfKind::DEG_DOWLING, GfKind::DEG_R_DOWLING,
                                           GfKind::CHARLIER};
    return kinds;
}

GfKind parse_gf_kind(std::string_view name) {
    for (auto k : all_gf_kinds())
        if (to_string(k) == name) return k;
    throw DomainError("unknown generating-function kind '" + std::string(name) + "'");
}

bool gf_needs_k(GfKind kind) {
    return kind == GfKind::S1DEG || kind == GfKind::S2DEG || kind == GfKind::DEG_WHITNEY;
}

bool gf_is_symbolic(GfKind kind) {
    switch (kind) {
    case GfKind::EXP_DEG:
    case GfKind::BELL:
    case GfKind::DEG_BELL:
    case GfKind::DEG_DOWLING:
    case GfKind::DEG_R_DOWLING:
    case GfKind::CHARLIER: return true;
    default: return false;
    }
}

namespace {

// exp(x * (g(t) - 1)) for a rational series g with g(0) = 1.
PolySeries exp_x_times(const RatSeries& g_minus_one, const Rat& x_scale) {
    PolySeries inner = lift(g_minus_one, Var::X).scaled(Poly::monomial(x_scale, 1, Var::X));
    return series_exp(inner);
}

// e_lambda^r(t) * exp((x/m)(e_lambda^m(t) - 1)).
PolySeries r_dowling_gf(const DegParams& p, std::size_t order) {
    RatSeries em_minus_one = drop_constant(e_lambda_series(Rat(p.m), p.lambda, order));
    PolySeries body = exp_x_times(em_minus_one, Rat(1, p.m));
    return lift(e_lambda_series(Rat(p.r), p.lambda, order), Var::X) * body;
}

RatSeries block_power(const RatSeries& base, int k) {
    return base.pow(k) * inv_factorial(static_cast<std::size_t>(k));
}

} // namespace

std::variant<RatSeries, PolySeries> gf_series(const GfSpec& spec) {
    const std::size_t order = spec.order;
    if (order > kMaxOrder) throw DomainError("generating function order exceeds " + std::to_string(kMaxOrder));
    if (gf_needs_k(spec.kind)) {
        if (!spec.k) throw DomainError(to_string(spec.kind) + " requires a block index k");
        if (*spec.k < 0) throw DomainError("block index k must be nonnegative");
    }
    const DegParams& p = spec.params;
    switch (spec.kind) {
    case GfKind::EXP_DEG: return e_lambda_series(p.lambda, order);
    case GfKind::LOG_DEG: return log_lambda_series(p.lambda, order);
    case GfKind::BELL: return exp_x_times(drop_constant(e_lambda_series(Rat(1), Rat(0), order)), Rat(1));
    case GfKind::DEG_BELL:
        return exp_x_times(drop_constant(e_lambda_series(Rat(1), p.lambda, order)), Rat(1));
    case GfKind::S1DEG: return block_power(log_lambda_series(p.lambda, order), *spec.k);
    case GfKind::S2DEG:
        return block_power(drop_constant(e_lambda_series(Rat(1), p.lambda, order)), *spec.k);
    case GfKind::DEG_WHITNEY: {
        RatSeries base = drop_constant(e_lambda_series(Rat(p.m), p.lambda, order)) * Rat(1, p.m);
        return e_lambda_series(Rat(1), p.lambda, order) * block_power(base, *spec.k);
    }
    case GfKind::DEG_DOWLING: return r_dowling_gf(DegParams(p.lambda, p.m, 1), order);
    case GfKind::DEG_R_DOWLING: return r_dowling_gf(p, order);
    case GfKind::CHARLIER: {
        // e^{-alpha t} is the lambda = 0 exponential at x = -alpha; (1+t)^x is e_1^x(t).
        RatSeries damp = e_lambda_series(-spec.alpha, Rat(0), order);
        return lift(damp, Var::X) * e_lambda_series(Rat(1), order);
    }
    }
    throw DomainError("unknown generating-function kind");
}

GfValues gf_coefficients(const GfSpec& spec) {
    auto series = gf_series(spec);
    if (auto* rs = std::get_if<RatSeries>(&series)) return rs->egf_values();
    return std::get<PolySeries>(series).egf_values();
}

} // namespace degen
