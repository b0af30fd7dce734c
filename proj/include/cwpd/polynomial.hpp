#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "cwpd/scalar.hpp"

namespace cwpd::cremona {

/// x^ex y^ey, ordered by (total degree, x-exponent).
struct Monomial {
    std::uint32_t ex = 0;
    std::uint32_t ey = 0;

    std::uint32_t degree() const { return ex + ey; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.ex <=> b.ex;
    }
};

/// Bivariate polynomial over a Field, no zero coefficients stored.
class Polynomial {
   public:
    using Terms = std::map<Monomial, Scalar>;

    explicit Polynomial(Field field) : field_(field) {}

    static Polynomial constant(const Scalar& c);
    static Polynomial x(Field f) { return monomial(f, 1, 0); }
    static Polynomial y(Field f) { return monomial(f, 0, 1); }
    static Polynomial monomial(Field f, std::uint32_t ex, std::uint32_t ey, long coeff = 1);
    /// Parses "3*x^2*y - 1/2*y + 4" (rationals) or residues for F_p.
    static Polynomial parse(Field f, std::string_view text);

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }
    /// -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }
    Scalar coefficient(std::uint32_t ex, std::uint32_t ey) const;

    Polynomial pow(std::uint32_t e) const;
    /// p(gx, gy).
    Polynomial substitute(const Polynomial& gx, const Polynomial& gy) const;

    /// Highest-degree terms first, e.g. "x^2 + 3*x*y - 1/2".
    std::string to_string() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& s, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
    friend bool operator<(const Polynomial& a, const Polynomial& b);

   private:
    void add_term(const Monomial& m, const Scalar& c);

    Field field_;
    Terms terms_;
};

}  // namespace cwpd::cremona
