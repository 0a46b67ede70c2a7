#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "degen/poly.hpp"
#include "degen/rat.hpp"
#include "degen/stirling.hpp"

namespace degen {

/// W^{(r)}_{m,lambda}(n,k): (mx+r)_{n,lambda} = sum_k W(n,k) m^k (x)_k.
Rat deg_r_whitney2(const DegParams& params, int n, int k);
/// Whole row k = 0..n of deg_r_whitney2.
std::vector<Rat> deg_r_whitney2_row(const DegParams& params, int n);

/// W_{m,lambda}(n,k), the r = 1 case.
Rat deg_whitney2(const DegParams& params, int n, int k);

/// Classical Whitney numbers of the second kind: (mx+1)^n = sum_k W_m(n,k) m^k (x)_k.
BigInt whitney_classical(int m, int n, int k);
/// Classical Whitney numbers of the first kind: m^n (x)_n = sum_k V_m(n,k) (mx+1)^k.
BigInt whitney_first(int m, int n, int k);

enum class WhitneyKind { W_classical, V_classical, W_deg, W_r_deg };

class WhitneyTable {
public:
    WhitneyTable(WhitneyKind kind, DegParams params, std::vector<std::vector<Rat>> rows);

    WhitneyKind kind() const { return kind_; }
    const DegParams& params() const { return params_; }
    int nmax() const { return static_cast<int>(rows_.size()) - 1; }
    Rat at(int n, int k) const;
    const std::vector<Rat>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

private:
    WhitneyKind kind_;
    DegParams params_;
    std::vector<std::vector<Rat>> rows_;
};

/// Classical kinds read only params.m; W_deg ignores params.r.
WhitneyTable whitney_table(WhitneyKind kind, const DegParams& params, int nmax);

/// D_m(n,x) = sum_k W_m(n,k) x^k.
Poly dowling_poly(int m, int n);
/// D_{m,lambda}(n,x), the r = 1 case of deg_r_dowling_poly.
Poly deg_dowling_poly(const DegParams& params, int n);
/// D^{(r)}_{m,lambda}(n,x) = sum_k W^{(r)}_{m,lambda}(n,k) x^k.
Poly deg_r_dowling_poly(const DegParams& params, int n);

/// C_n(x; alpha) with alpha symbolic: the coefficient of x^l is a Poly in alpha.
class CharlierPoly {
public:
    CharlierPoly(int n, std::vector<Poly> coeffs);

    int n() const { return n_; }
    /// coeffs()[l] is the coefficient of x^l, a polynomial in alpha.
    const std::vector<Poly>& coeffs() const { return coeffs_; }

    /// C_n(x0; alpha) as a polynomial in alpha.
    Poly at_x(const Rat& x0) const;
    /// C_n(x; alpha0) as a polynomial in x.
    Poly at_alpha(const Rat& alpha0) const;

private:
    int n_;
    std::vector<Poly> coeffs_;
};

/// C_n(x; alpha) = sum_l ( sum_{k=l}^n binom(n,k) (-1)^{n-k} alpha^{n-k} S1(k,l) ) x^l.
CharlierPoly charlier_poly(int n);
/// Same with alpha fixed, as a polynomial in x.
Poly charlier_poly(int n, const Rat& alpha);

/// Closed-form right-hand sides of the moment identities. T10R is the
/// general-r form of Theorem 10 (shift through (r-m)_{n-k,lambda}).
enum class TheoremId { T2, C3, C5, T6, T7, T8, T9, T10, T10R, T11 };

std::string to_string(TheoremId id);
/// Throws DomainError for an unknown name.
TheoremId parse_theorem_id(std::string_view name);

/// Evaluates the closed form as an exact polynomial in alpha. C3 forces m = 1.
Poly thm_rhs(TheoremId id, const DegParams& params, int n);

/// phi_j(c * alpha) expanded as a polynomial in alpha.
Poly bell_at_scaled_alpha(const Poly& bell_in_x, const Rat& c);

} // namespace degen
