#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "degen/rat.hpp"

namespace degen {

/// Name of a polynomial's indeterminate.
enum class Var { X, Alpha };

std::string to_string(Var v);

/// Dense univariate polynomial with rational coefficients.
///
/// Coefficients are indexed by degree and kept canonical: trailing zeros are
/// stripped, so the zero polynomial has no coefficients and equality is
/// structural.
class Poly {
public:
    explicit Poly(Var var = Var::X) : var_(var) {}
    Poly(Var var, std::vector<Rat> coeffs);

    static Poly constant(const Rat& c, Var var = Var::X);
    static Poly monomial(const Rat& c, int degree, Var var = Var::X);
    /// The indeterminate itself.
    static Poly identity(Var var = Var::X);
    /// c0 + c1 * var.
    static Poly linear(const Rat& c0, const Rat& c1, Var var = Var::X);

    Var var() const { return var_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    /// Zero outside the stored range.
    Rat coeff(int i) const;
    Rat leading() const;

    Rat eval(const Rat& at) const;
    /// Substitutes `inner` for the indeterminate; the result lives in inner's variable.
    Poly compose(const Poly& inner) const;
    Poly derivative() const;
    /// Same coefficients, different indeterminate.
    Poly with_var(Var var) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    Poly operator-() const;

    Poly pow(int exponent) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

private:
    void check_same_var(const Poly& o, const char* op) const;
    void normalize();

    Var var_;
    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace degen
