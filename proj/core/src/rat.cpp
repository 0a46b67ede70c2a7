#include "degen/rat.hpp"

#include <functional>
#include <ostream>

#include "degen/error.hpp"

namespace degen {

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!valid_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

} // namespace

Rat::Rat(std::int64_t value) : value_(static_cast<long>(value)) {}

Rat::Rat(const BigInt& value) : value_(value) {}

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat::Rat(std::int64_t num, std::int64_t den)
    : Rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    return Rat(num, den);
}

std::string Rat::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
    value_ += o.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    value_ -= o.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    value_ *= o.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat Rat::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rat(mpq_class(1 / value_));
}

Rat Rat::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of coprime integers stay coprime.
    mpq_class out;
    out.get_num() = num;
    out.get_den() = den;
    return Rat(std::move(out));
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

BigInt binom(long n, long k) {
    if (n < 0) throw DomainError("binom: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial: n must be nonnegative");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

} // namespace degen

std::size_t std::hash<degen::Rat>::operator()(const degen::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
}
