#include "cwpd/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace cwpd::cremona {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 32) || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a supported prime");
    return Field(p);
}

Field Field::parse(std::string_view tag) {
    if (tag == "Q") return rationals();
    if (tag.starts_with("Fp:")) {
        std::uint64_t p = 0;
        auto body = tag.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
    }
    throw std::invalid_argument("unknown field tag '" + std::string(tag) + "'");
}

std::string Field::tag() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

Scalar::Scalar(const Field& field, long value) : field_(field) {
    if (field.is_rationals()) {
        value_ = Rational(value);
    } else {
        const auto p = static_cast<long long>(field.characteristic());
        long long r = value % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint64_t>(r);
    }
}

bool Scalar::is_zero() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<Rational>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<Rational>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw std::logic_error("residue() on a rational scalar");
}

const Rational& Scalar::rational() const {
    if (auto q = std::get_if<Rational>(&value_)) return *q;
    throw std::logic_error("rational() on a prime-field scalar");
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (field_.is_rationals()) return Scalar(Rational(1 / rational()));
    return pow(field_.characteristic() - 2);
}

Scalar Scalar::pow(std::uint64_t e) const {
    if (field_.is_rationals()) return Scalar(cwpd::pow(rational(), static_cast<long>(e)));
    const auto p = field_.characteristic();
    std::uint64_t base = residue(), acc = 1;
    for (; e; e >>= 1) {
        if (e & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
    }
    return Scalar(field_, acc, 0);
}

std::string Scalar::to_string() const {
    if (field_.is_rationals()) return rational().get_str();
    return std::to_string(residue());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    if (a.field_.is_rationals()) return Scalar(Rational(a.rational() + b.rational()));
    const auto p = a.field_.characteristic();
    const auto s = a.residue() + b.residue();
    return Scalar(a.field_, s >= p ? s - p : s, 0);
}

Scalar operator-(const Scalar& a) {
    if (a.field_.is_rationals()) return Scalar(Rational(-a.rational()));
    const auto r = a.residue();
    return Scalar(a.field_, r == 0 ? 0 : a.field_.characteristic() - r, 0);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    if (a.field_.is_rationals()) return Scalar(Rational(a.rational() * b.rational()));
    return Scalar(a.field_, mulmod(a.residue(), b.residue(), a.field_.characteristic()), 0);
}

bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

bool operator<(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    return a.value_ < b.value_;
}

}  // namespace cwpd::cremona
