#pragma once

#include <gmpxx.h>

#include <concepts>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include <string>
#include <string_view>

namespace cwpd {

/// GMP rational that is always kept in lowest terms, including when built
/// from a numerator and a denominator.
class Rational : public mpq_class {
   public:
    Rational() = default;
    Rational(const mpq_class& q) : mpq_class(q) {}
    Rational(mpq_class&& q) : mpq_class(std::move(q)) {}
    template <class T, class U>
    Rational(const __gmp_expr<T, U>& expr) : mpq_class(expr) {}
    template <std::integral I>
    Rational(I v) : mpq_class(widen(v)) {}
    template <std::integral N, std::integral D>
    Rational(N num, D den) : mpq_class(mpz_class(widen(num)), mpz_class(widen(den))) {
        if (den == 0) throw std::domain_error("zero denominator");
        canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) : mpq_class(num, den) {
        if (den == 0) throw std::domain_error("zero denominator");
        canonicalize();
    }

    template <class T>
    Rational& operator=(T&& v) {
        mpq_class::operator=(std::forward<T>(v));
        return *this;
    }

   private:
    template <std::integral I>
    static auto widen(I v) {
        if constexpr (std::is_signed_v<I>)
            return static_cast<long>(v);
        else
            return static_cast<unsigned long>(v);
    }
};

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string format_rational(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, long exponent);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact element a + b*sqrt(2) of Q(sqrt 2).
///
/// Classes scaled by 1/sqrt(2) pair with rational classes into this field,
/// so comparisons that would otherwise need irrational arithmetic stay exact.
class QSqrt2 {
   public:
    QSqrt2() = default;
    QSqrt2(Rational rational, Rational sqrt2_coeff)
        : a_(std::move(rational)), b_(std::move(sqrt2_coeff)) {}

    static QSqrt2 sqrt2() { return {0, 1}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    /// -1, 0 or +1, decided exactly.
    int sign() const;
    double to_double() const;
    std::string to_string() const;

    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) {
        return {Rational(x.a_ + y.a_), Rational(x.b_ + y.b_)};
    }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) {
        return {Rational(x.a_ - y.a_), Rational(x.b_ - y.b_)};
    }
    friend QSqrt2 operator*(const QSqrt2& x, const Rational& t) {
        return {Rational(x.a_ * t), Rational(x.b_ * t)};
    }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return {Rational(x.a_ * y.a_ + 2 * x.b_ * y.b_), Rational(x.a_ * y.b_ + x.b_ * y.a_)};
    }
    friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator<(const QSqrt2& x, const QSqrt2& y) { return (y - x).sign() > 0; }

   private:
    Rational a_{0};
    Rational b_{0};
};

}  // namespace cwpd
