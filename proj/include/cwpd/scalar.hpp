#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "cwpd/rational.hpp"

namespace cwpd::cremona {

bool is_prime(std::uint64_t p);

/// Q (characteristic 0) or a prime field F_p.
class Field {
   public:
    static Field rationals() { return Field(0); }
    /// Throws std::invalid_argument unless p is a prime below 2^32.
    static Field prime(std::uint64_t p);
    /// "Q" or "Fp:<p>".
    static Field parse(std::string_view tag);

    bool is_rationals() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string tag() const;

    friend bool operator==(const Field&, const Field&) = default;

   private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

/// Element of a Field. Mixing fields in one operation throws.
class Scalar {
   public:
    Scalar(const Field& field, long value);
    explicit Scalar(Rational q) : field_(Field::rationals()), value_(std::move(q)) {}

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    /// Representative in [0, p) for F_p elements.
    std::uint64_t residue() const;
    const Rational& rational() const;

    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;
    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend Scalar operator-(const Scalar& a);
    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order within one field: residues numerically, rationals by value.
    friend bool operator<(const Scalar& a, const Scalar& b);

   private:
    Scalar(const Field& field, std::uint64_t residue, int) : field_(field), value_(residue) {}
    void require_same_field(const Scalar& o) const;

    Field field_;
    std::variant<std::uint64_t, Rational> value_;
};

}  // namespace cwpd::cremona
