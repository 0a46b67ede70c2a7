#pragma once

#include <memory>
#include <vector>

#include "degen/poly.hpp"
#include "degen/rat.hpp"

namespace degen {

/// Parameters of the degenerate families: step lambda (0 selects the
/// classical limit), group order m >= 1, and shift r >= 0.
struct DegParams {
    DegParams(Rat lambda, int m, int r);

    Rat lambda;
    int m;
    int r;

    friend bool operator==(const DegParams&, const DegParams&) = default;
};

/// (x)_n = x(x-1)...(x-n+1).
Poly falling_poly(int n);

/// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda). Equals x^n at lambda = 0.
Poly deg_falling_poly(int n, const Rat& lambda);

/// Exact value of (x)_{n,lambda} at a rational point.
Rat deg_falling_eval(const Rat& x, int n, const Rat& lambda);

/// Coefficients c_k with p = sum_k c_k (x)_k.
std::vector<Rat> to_falling_basis(const Poly& p);

/// Coefficients c_k with p = sum_k c_k (x)_{k,lambda}.
std::vector<Rat> to_deg_falling_basis(const Poly& p, const Rat& lambda);

enum class StirlingKind { S1, S2, S1deg, S2deg };

/// Lower-triangular table of Stirling-type connection coefficients.
class TriangleTable {
public:
    TriangleTable(StirlingKind kind, Rat lambda, std::vector<std::vector<Rat>> rows);

    StirlingKind kind() const { return kind_; }
    const Rat& lambda() const { return lambda_; }
    int nmax() const { return static_cast<int>(rows_.size()) - 1; }
    /// Zero for k outside 0..n.
    Rat at(int n, int k) const;
    const std::vector<Rat>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

private:
    StirlingKind kind_;
    Rat lambda_;
    std::vector<std::vector<Rat>> rows_;
};

/// Largest nmax stirling_table accepts.
inline constexpr int kMaxTableN = 64;

/// Builds (or returns the memoized) table. Degenerate kinds are defined by
/// basis conversion; classical kinds by the monomial/falling-factorial pair.
std::shared_ptr<const TriangleTable> stirling_table(StirlingKind kind, const Rat& lambda, int nmax);

/// Convenience accessors backed by the memoized tables.
Rat stirling1(int n, int k);
Rat stirling2(int n, int k);
Rat deg_stirling1(int n, int k, const Rat& lambda);
Rat deg_stirling2(int n, int k, const Rat& lambda);

/// phi_n(x) = sum_k S2(n,k) x^k.
Poly bell_poly(int n);

/// phi_{n,lambda}(x) = sum_k S2_lambda(n,k) x^k.
Poly deg_bell_poly(int n, const Rat& lambda);

std::string to_string(StirlingKind kind);

} // namespace degen
