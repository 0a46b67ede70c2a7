#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "degen/error.hpp"
#include "degen/poly.hpp"
#include "degen/rat.hpp"

namespace degen {

/// Coefficient rings a Series may carry.
template <typename C>
concept SeriesCoefficient = std::same_as<C, Rat> || std::same_as<C, Poly>;

namespace ring {

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Poly zero_like(const Poly& p) { return Poly(p.var()); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Poly one_like(const Poly& p) { return Poly::constant(Rat(1), p.var()); }

/// Maps a coefficient of another ring into the ring of `like`.
inline Rat embed(const Rat& c, const Rat&) { return c; }
inline Poly embed(const Rat& c, const Poly& like) { return Poly::constant(c, like.var()); }
inline Poly embed(const Poly& c, const Poly&) { return c; }

inline bool is_zero(const Rat& c) { return c.is_zero(); }
inline bool is_zero(const Poly& c) { return c.is_zero(); }

} // namespace ring

/// Truncated formal power series in t: coefficients of t^0..t^N, all
/// arithmetic exact modulo t^(N+1).
template <SeriesCoefficient C>
class Series {
public:
    /// `coeffs` must be nonempty; its size fixes the order N = size - 1.
    explicit Series(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
    }

    static Series zero(std::size_t order, const C& like) {
        return Series(std::vector<C>(order + 1, ring::zero_like(like)));
    }
    static Series one(std::size_t order, const C& like) {
        auto s = zero(order, like);
        s.coeffs_[0] = ring::one_like(like);
        return s;
    }
    /// The series `t` itself.
    static Series t(std::size_t order, const C& like) {
        auto s = zero(order, like);
        if (order >= 1) s.coeffs_[1] = ring::one_like(like);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& operator[](std::size_t n) const { return coeffs_.at(n); }
    const C& constant_term() const { return coeffs_.front(); }
    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!ring::is_zero(c)) return false;
        return true;
    }

    /// n! * [t^n] for n = 0..N, the exponential-generating-function normalization.
    std::vector<C> egf_values() const {
        std::vector<C> out;
        out.reserve(coeffs_.size());
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            out.push_back(coeffs_[n] * Rat(factorial(static_cast<long>(n))));
        return out;
    }

    Series& operator+=(const Series& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Series& operator*=(const Series& o) {
        check_order(o);
        const std::size_t n = coeffs_.size();
        std::vector<C> out(n, ring::zero_like(coeffs_[0]));
        for (std::size_t i = 0; i < n; ++i) {
            if (ring::is_zero(coeffs_[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (ring::is_zero(o.coeffs_[j])) continue;
                out[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
        coeffs_ = std::move(out);
        return *this;
    }
    Series& operator*=(const Rat& c) {
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }
    friend Series operator*(Series a, const Rat& c) { return a *= c; }
    friend Series operator*(const Rat& c, Series a) { return a *= c; }

    /// Multiplies every coefficient by a ring element.
    Series scaled(const C& c) const {
        Series out = *this;
        for (auto& a : out.coeffs_) a = a * c;
        return out;
    }

    Series pow(int k) const {
        if (k < 0) throw DomainError("series pow: negative exponent");
        Series acc = one(order(), coeffs_[0]);
        for (int i = 0; i < k; ++i) acc *= *this;
        return acc;
    }

    /// Substitutes t -> c*t.
    Series dilated(const Rat& c) const {
        Series out = *this;
        Rat scale(1);
        for (auto& a : out.coeffs_) {
            a *= scale;
            scale *= c;
        }
        return out;
    }

    /// Same series with a different truncation order (dropping or zero-padding).
    Series truncated(std::size_t order) const {
        std::vector<C> cs(order + 1, ring::zero_like(coeffs_[0]));
        for (std::size_t i = 0; i <= order && i < coeffs_.size(); ++i) cs[i] = coeffs_[i];
        return Series(std::move(cs));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    void check_order(const Series& o) const {
        if (o.order() != order())
            throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " +
                                std::to_string(o.order()));
    }

    std::vector<C> coeffs_;
};

using RatSeries = Series<Rat>;
using PolySeries = Series<Poly>;

/// Embeds a rational series into polynomial coefficients over `var`.
inline PolySeries lift(const RatSeries& s, Var var) {
    std::vector<Poly> cs;
    cs.reserve(s.coeffs().size());
    for (const auto& c : s.coeffs()) cs.push_back(Poly::constant(c, var));
    return PolySeries(std::move(cs));
}

template <SeriesCoefficient C>
Series<C> series_mul(const Series<C>& a, const Series<C>& b) {
    return a * b;
}

/// exp(s) = sum_{k=0..N} s^k / k!, by direct expansion. Requires s(0) = 0.
template <SeriesCoefficient C>
Series<C> series_exp(const Series<C>& s) {
    if (!ring::is_zero(s.constant_term()))
        throw NonzeroConstantTerm("series_exp: constant term must be zero");
    const auto& like = s.constant_term();
    Series<C> acc = Series<C>::one(s.order(), like);
    Series<C> power = acc;
    for (std::size_t k = 1; k <= s.order(); ++k) {
        power *= s;
        if (power.is_zero()) break;
        acc += power * Rat(BigInt(1), factorial(static_cast<long>(k)));
    }
    return acc;
}

/// outer(inner(t)) by Horner's scheme. Requires inner(0) = 0; the outer
/// coefficients may be rational or already in inner's ring.
template <SeriesCoefficient O, SeriesCoefficient C>
    requires(std::same_as<O, Rat> || std::same_as<O, C>)
Series<C> series_compose(const Series<O>& outer, const Series<C>& inner) {
    if (!ring::is_zero(inner.constant_term()))
        throw NonzeroConstantTerm("series_compose: inner constant term must be zero");
    if (outer.order() != inner.order())
        throw OrderMismatch("series_compose: orders differ");
    const auto& like = inner.constant_term();
    const std::size_t n = outer.order();
    Series<C> acc = Series<C>::zero(n, like);
    for (std::size_t i = n + 1; i-- > 0;) {
        acc *= inner;
        std::vector<C> cs = acc.coeffs();
        cs[0] += ring::embed(outer[i], like);
        acc = Series<C>(std::move(cs));
    }
    return acc;
}

} // namespace degen
