#include "degen/dowling.hpp"

#include "degen/error.hpp"

namespace degen {

namespace {

void check_indices(int n, int k, const char* what) {
    if (n < 0 || k < 0 || k > n) throw DomainError(std::string(what) + ": need 0 <= k <= n");
}

Rat rat_binom(int n, int k) { return Rat(binom(n, k)); }

std::vector<Rat> falling_basis_scaled(const Poly& p, int m, int n) {
    auto c = to_falling_basis(p);
    c.resize(static_cast<std::size_t>(n) + 1);
    Rat mk(1);
    for (auto& v : c) {
        v /= mk;
        mk *= Rat(m);
    }
    return c;
}

} // namespace

std::vector<Rat> deg_r_whitney2_row(const DegParams& params, int n) {
    if (n < 0) throw DomainError("deg_r_whitney2: n must be nonnegative");
    const Poly affine = Poly::linear(Rat(params.r), Rat(params.m));
    return falling_basis_scaled(deg_falling_poly(n, params.lambda).compose(affine), params.m, n);
}

Rat deg_r_whitney2(const DegParams& params, int n, int k) {
    check_indices(n, k, "deg_r_whitney2");
    return deg_r_whitney2_row(params, n)[static_cast<std::size_t>(k)];
}

Rat deg_whitney2(const DegParams& params, int n, int k) {
    return deg_r_whitney2(DegParams(params.lambda, params.m, 1), n, k);
}

namespace {

std::vector<Rat> whitney_classical_row(int m, int n) {
    const Poly p = Poly::linear(Rat(1), Rat(m)).pow(n);
    return falling_basis_scaled(p, m, n);
}

// Substituting x = (y-1)/m turns m^n (x)_n into prod_j (y - 1 - j m), whose
// monomial coefficients in y are V_m(n, k).
std::vector<Rat> whitney_first_row(int m, int n) {
    Poly y_basis = (falling_poly(n) * Rat(m).pow(n)).compose(Poly::linear(Rat(-1, m), Rat(1, m)));
    auto c = y_basis.coeffs();
    c.resize(static_cast<std::size_t>(n) + 1);
    return c;
}

BigInt as_integer(const Rat& v, const char* what) {
    if (!v.is_integer()) throw Error(std::string(what) + ": non-integral value " + v.str());
    return v.numerator();
}

} // namespace

BigInt whitney_classical(int m, int n, int k) {
    check_indices(n, k, "whitney_classical");
    if (m < 1) throw DomainError("whitney_classical: m must be >= 1");
    return as_integer(whitney_classical_row(m, n)[static_cast<std::size_t>(k)], "whitney_classical");
}

BigInt whitney_first(int m, int n, int k) {
    check_indices(n, k, "whitney_first");
    if (m < 1) throw DomainError("whitney_first: m must be >= 1");
    return as_integer(whitney_first_row(m, n)[static_cast<std::size_t>(k)], "whitney_first");
}

WhitneyTable::WhitneyTable(WhitneyKind kind, DegParams params, std::vector<std::vector<Rat>> rows)
    : kind_(kind), params_(std::move(params)), rows_(std::move(rows)) {}

Rat WhitneyTable::at(int n, int k) const {
    if (n < 0 || n > nmax()) throw DomainError("WhitneyTable::at: n out of range");
    if (k < 0 || k > n) return Rat(0);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

WhitneyTable whitney_table(WhitneyKind kind, const DegParams& params, int nmax) {
    if (nmax < 0 || nmax > kMaxTableN) throw DomainError("whitney_table: nmax out of range");
    std::vector<std::vector<Rat>> rows;
    for (int n = 0; n <= nmax; ++n) {
        switch (kind) {
        case WhitneyKind::W_classical: rows.push_back(whitney_classical_row(params.m, n)); break;
        case WhitneyKind::V_classical: rows.push_back(whitney_first_row(params.m, n)); break;
        case WhitneyKind::W_deg:
            rows.push_back(deg_r_whitney2_row(DegParams(params.lambda, params.m, 1), n));
            break;
        case WhitneyKind::W_r_deg: rows.push_back(deg_r_whitney2_row(params, n)); break;
        }
    }
    return WhitneyTable(kind, params, std::move(rows));
}

Poly dowling_poly(int m, int n) {
    if (m < 1 || n < 0) throw DomainError("dowling_poly: need m >= 1, n >= 0");
    return Poly(Var::X, whitney_classical_row(m, n));
}

Poly deg_dowling_poly(const DegParams& params, int n) {
    return deg_r_dowling_poly(DegParams(params.lambda, params.m, 1), n);
}

Poly deg_r_dowling_poly(const DegParams& params, int n) {
    return Poly(Var::X, deg_r_whitney2_row(params, n));
}

CharlierPoly::CharlierPoly(int n, std::vector<Poly> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}

Poly CharlierPoly::at_x(const Rat& x0) const {
    Poly acc(Var::Alpha);
    Rat power(1);
    for (const auto& c : coeffs_) {
        acc += c * power;
        power *= x0;
    }
    return acc;
}

Poly CharlierPoly::at_alpha(const Rat& alpha0) const {
    std::vector<Rat> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c.eval(alpha0));
    return Poly(Var::X, std::move(cs));
}

CharlierPoly charlier_poly(int n) {
    if (n < 0) throw DomainError("charlier_poly: n must be nonnegative");
    std::vector<Poly> coeffs;
    for (int l = 0; l <= n; ++l) {
        Poly inner(Var::Alpha);
        for (int k = l; k <= n; ++k) {
            Rat c = rat_binom(n, k) * stirling1(k, l);
            if ((n - k) % 2 != 0) c = -c;
            inner += Poly::monomial(c, n - k, Var::Alpha);
        }
        coeffs.push_back(std::move(inner));
    }
    return CharlierPoly(n, std::move(coeffs));
}

Poly charlier_poly(int n, const Rat& alpha) { return charlier_poly(n).at_alpha(alpha); }

std::string to_string(TheoremId id) {
    switch (id) {
    case TheoremId::T2: return "T2";
    case TheoremId::C3: return "C3";
    case TheoremId::C5: return "C5";
    case TheoremId::T6: return "T6";
    case TheoremId::T7: return "T7";
    case TheoremId::T8: return "T8";
    case TheoremId::T9: return "T9";
    case TheoremId::T10: return "T10";
    case TheoremId::T10R: return "T10R";
    case TheoremId::T11: return "T11";
    }
    return "?";
}

TheoremId parse_theorem_id(std::string_view name) {
    for (auto id : {TheoremId::T2, TheoremId::C3, TheoremId::C5, TheoremId::T6, TheoremId::T7,
                    TheoremId::T8, TheoremId::T9, TheoremId::T10, TheoremId::T10R, TheoremId::T11})
        if (to_string(id) == name) return id;
    throw DomainError("unknown theorem id '" + std::string(name) + "'");
}

Poly bell_at_scaled_alpha(const Poly& bell_in_x, const Rat& c) {
    return bell_in_x.compose(Poly::linear(Rat(0), c, Var::Alpha));
}

namespace {

Poly alpha_pow(const Rat& c, int j) { return Poly::monomial(c, j, Var::Alpha); }

// sum_{j} alpha^j sum_{l=j}^{n} binom(n,l) (shift)_{n-l,lambda} m^{l-j} S2_{lambda/m}(l,j)
Poly shifted_bell_sum(const DegParams& p, int n, const Rat& shift) {
    const Rat mu = p.lambda / Rat(p.m);
    const auto s2 = stirling_table(StirlingKind::S2deg, mu, std::max(n, 16));
    Poly acc(Var::Alpha);
    for (int j = 0; j <= n; ++j) {
        Rat inner(0);
        for (int l = j; l <= n; ++l)
            inner += rat_binom(n, l) * deg_falling_eval(shift, n - l, p.lambda) * Rat(p.m).pow(l - j) *
                     s2->at(l, j);
        acc += alpha_pow(inner, j);
    }
    return acc;
}

Poly theorem2(const DegParams& p, int n) { return shifted_bell_sum(p, n, Rat(1)); }

Poly corollary3(const DegParams& p, int n) {
    const auto s2 = stirling_table(StirlingKind::S2deg, p.lambda, std::max(n + 1, 16));
    Poly acc(Var::Alpha);
    for (int k = 0; k <= n; ++k)
        acc += alpha_pow(Rat(k + 1) * s2->at(n, k + 1) + s2->at(n, k), k);
    return acc;
}

Poly corollary5(const DegParams& p, int n) {
    const Rat mu = p.lambda / Rat(p.m);
    const Rat inv_m = Rat(1) / Rat(p.m);
    Poly acc(Var::Alpha);
    for (int k = 0; k <= n; ++k) {
        Rat c = rat_binom(n, k) * deg_falling_eval(Rat(p.r), n - k, p.lambda) * Rat(p.m).pow(k);
        acc += bell_at_scaled_alpha(deg_bell_poly(k, mu), inv_m) * c;
    }
    return acc;
}

Poly theorem6(const DegParams& p, int n) {
    const auto w = deg_r_whitney2_row(p, n);
    const Rat inv_m = Rat(1) / Rat(p.m);
    Poly acc(Var::Alpha);
    for (int j = 0; j <= n; ++j) {
        Rat inner(0);
        for (int k = j; k <= n; ++k)
            inner += w[static_cast<std::size_t>(k)] * Rat(p.m).pow(k) * stirling1(k, j);
        acc += bell_at_scaled_alpha(bell_poly(j), inv_m) * inner;
    }
    return acc;
}

Poly theorem7(const DegParams& p, int n) {
    const Rat mu = p.lambda / Rat(p.m);
    const auto s2 = stirling_table(StirlingKind::S2deg, mu, std::max(n, 16));
    const Rat shift = Rat(p.r - 1);
    Poly acc(Var::Alpha);
    for (int j = 0; j <= n; ++j) {
        Rat w(0);
        for (int k = j; k <= n; ++k)
            for (int l = j; l <= k; ++l)
                w += rat_binom(n, k) * rat_binom(k, l) * deg_falling_eval(shift, n - k, p.lambda) *
                     deg_falling_eval(Rat(1), k - l, p.lambda) * Rat(p.m).pow(l - j) * s2->at(l, j);
        acc += alpha_pow(w, j);
    }
    return acc;
}

Poly theorem8(const DegParams& p, int n) { return shifted_bell_sum(p, n, Rat(p.r)); }

Poly theorem9(const DegParams& p, int n) {
    const Rat mu = p.lambda / Rat(p.m);
    const auto s2 = stirling_table(StirlingKind::S2deg, mu, std::max(n, 16));
    Poly acc(Var::Alpha);
    for (int k = 0; k <= n; ++k) {
        Poly ck = charlier_poly(k).at_x(Rat(0));
        if (k % 2 != 0) ck = -ck;
        acc += ck * s2->at(n, k);
    }
    return acc;
}

// C_k(x0; -alpha/m) as a polynomial in alpha.
Poly charlier_negated_scaled(int k, const Rat& x0, int m) {
    return charlier_poly(k).at_x(x0).compose(Poly::linear(Rat(0), Rat(-1, m), Var::Alpha));
}

Poly theorem10(const DegParams& p, int n) {
    const Rat mu = p.lambda / Rat(p.m);
    const auto s2 = stirling_table(StirlingKind::S2deg, mu, std::max(n, 16));
    Poly acc(Var::Alpha);
    for (int k = 0; k <= n; ++k)
        acc += charlier_negated_scaled(k, Rat(1), p.m) * (Rat(p.m).pow(n) * s2->at(n, k));
    return acc;
}

Poly theorem10_general(const DegParams& p, int n) {
    const Rat mu = p.lambda / Rat(p.m);
    const auto s2 = stirling_table(StirlingKind::S2deg, mu, std::max(n, 16));
    const Rat shift = Rat(p.r - p.m);
    Poly acc(Var::Alpha);
    for (int j = 0; j <= n; ++j) {
        Rat inner(0);
        for (int k = j; k <= n; ++k)
            inner += rat_binom(n, k) * deg_falling_eval(shift, n - k, p.lambda) * s2->at(k, j) *
                     Rat(p.m).pow(k);
        acc += charlier_negated_scaled(j, Rat(1), p.m) * inner;
    }
    return acc;
}

Poly theorem11(const DegParams& p, int n) {
    const Rat mu = p.lambda / Rat(p.m);
    const auto s2 = stirling_table(StirlingKind::S2deg, mu, std::max(n, 16));
    const Rat x0 = Rat(p.r) / Rat(p.m);
    Poly acc(Var::Alpha);
    for (int k = 0; k <= n; ++k) acc += charlier_negated_scaled(k, x0, p.m) * s2->at(n, k);
    return acc * Rat(p.m).pow(n);
}

} // namespace

Poly thm_rhs(TheoremId id, const DegParams& params, int n) {
    if (n < 0) throw DomainError("thm_rhs: n must be nonnegative");
    switch (id) {
    case TheoremId::T2: return theorem2(params, n);
    case TheoremId::C3: return corollary3(DegParams(params.lambda, 1, params.r), n);
    case TheoremId::C5: return corollary5(params, n);
    case TheoremId::T6: return theorem6(params, n);
    case TheoremId::T7: return theorem7(params, n);
    case TheoremId::T8: return theorem8(params, n);
    case TheoremId::T9: return theorem9(params, n);
    case TheoremId::T10: return theorem10(params, n);
    case TheoremId::T10R: return theorem10_general(params, n);
    case TheoremId::T11: return theorem11(params, n);
    }
    throw DomainError("thm_rhs: unknown theorem id");
}

} // namespace degen
