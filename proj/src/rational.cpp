#include "cwpd/rational.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>

namespace cwpd {

std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    static const std::regex shape(R"(-?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(s, shape)) throw std::invalid_argument("malformed rational: '" + s + "'");
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    q.canonicalize();
    return q;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return pow(Rational(1 / base), -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

int QSqrt2::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with 2 b^2.
    const Rational a2 = a_ * a_;
    const Rational b2 = 2 * b_ * b_;
    if (a2 == b2) return 0;  // unreachable for nonzero b: sqrt 2 is irrational
    return a2 > b2 ? sa : sb;
}

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string QSqrt2::to_string() const {
    return format_rational(a_) + " + " + format_rational(b_) + "*sqrt2";
}

}  // namespace cwpd
