#include "degen/poly.hpp"

#include <algorithm>
#include <ostream>

#include "degen/error.hpp"

namespace degen {

std::string to_string(Var v) { return v == Var::X ? "x" : "alpha"; }

Poly::Poly(Var var, std::vector<Rat> coeffs) : var_(var), coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Rat& c, Var var) { return Poly(var, {c}); }

Poly Poly::monomial(const Rat& c, int degree, Var var) {
    if (degree < 0) throw DomainError("monomial degree must be nonnegative");
    std::vector<Rat> cs(static_cast<std::size_t>(degree) + 1);
    cs.back() = c;
    return Poly(var, std::move(cs));
}

Poly Poly::identity(Var var) { return Poly(var, {Rat(0), Rat(1)}); }

Poly Poly::linear(const Rat& c0, const Rat& c1, Var var) { return Poly(var, {c0, c1}); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_same_var(const Poly& o, const char* op) const {
    if (var_ != o.var_)
        throw IndeterminateMismatch(std::string("poly ") + op + ": " + to_string(var_) + " vs " +
                                    to_string(o.var_));
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rat Poly::leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

Rat Poly::eval(const Rat& at) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc(inner.var());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += Poly::constant(*it, inner.var());
    }
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rat> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out.push_back(coeffs_[i] * Rat(static_cast<std::int64_t>(i)));
    return Poly(var_, std::move(out));
}

Poly Poly::with_var(Var var) const {
    Poly out = *this;
    out.var_ = var;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_var(o, "+");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_var(o, "-");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    check_same_var(o, "*");
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& a : out.coeffs_) a = -a;
    return out;
}

Poly Poly::pow(int exponent) const {
    if (exponent < 0) throw DomainError("poly pow: negative exponent");
    Poly acc = Poly::constant(Rat(1), var_);
    for (int i = 0; i < exponent; ++i) acc *= *this;
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    const std::string name = to_string(var_);
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rat mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = mag == Rat(1);
        if (i == 0 || !unit) out += mag.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += name;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace degen
