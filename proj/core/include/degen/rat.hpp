#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degen {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t value); // NOLINT(google-explicit-constructor)
    Rat(const BigInt& value); // NOLINT(google-explicit-constructor)
    Rat(const BigInt& num, const BigInt& den);
    Rat(std::int64_t num, std::int64_t den);

    /// Parses "p", "-p", "p/q" (whitespace around the parts is not allowed).
    static Rat parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Nearest-below double (GMP truncation); used only at the exact/float boundary.
    double to_double() const { return value_.get_d(); }
    std::string str() const;

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const;

    /// Integer power; negative exponents require a nonzero base.
    Rat pow(int exponent) const;
    Rat inverse() const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rat(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Binomial coefficient; zero when k < 0 or k > n.
BigInt binom(long n, long k);

/// n! as a big integer.
BigInt factorial(long n);

} // namespace degen

template <>
struct std::hash<degen::Rat> {
    std::size_t operator()(const degen::Rat& r) const noexcept;
};
