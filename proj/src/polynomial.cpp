#include "cwpd/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace cwpd::cremona {

Polynomial Polynomial::constant(const Scalar& c) {
    Polynomial p(c.field());
    p.add_term({0, 0}, c);
    return p;
}

Polynomial Polynomial::monomial(Field f, std::uint32_t ex, std::uint32_t ey, long coeff) {
    Polynomial p(f);
    p.add_term({ex, ey}, Scalar(f, coeff));
    return p;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (!(c.field() == field_)) throw std::invalid_argument("coefficient from a different field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Polynomial::coefficient(std::uint32_t ex, std::uint32_t ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Scalar(field_, 0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("polynomials over different fields");
    Polynomial out(a.field_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term({ma.ex + mb.ex, ma.ey + mb.ey}, ca * cb);
    return out;
}

Polynomial operator*(const Scalar& s, const Polynomial& a) {
    Polynomial out(a.field_);
    for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
    return out;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const auto& s, const auto& t) {
                                            if (s.first != t.first) return s.first < t.first;
                                            return s.second < t.second;
                                        });
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = constant(Scalar(field_, 1));
    Polynomial base = *this;
    for (; e; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::substitute(const Polynomial& gx, const Polynomial& gy) const {
    if (!(gx.field_ == field_) || !(gy.field_ == field_)) throw std::invalid_argument("substitution across fields");
    std::uint32_t max_x = 0, max_y = 0;
    for (const auto& [m, c] : terms_) {
        max_x = std::max(max_x, m.ex);
        max_y = std::max(max_y, m.ey);
    }
    std::vector<Polynomial> px{constant(Scalar(field_, 1))}, py{constant(Scalar(field_, 1))};
    for (std::uint32_t i = 1; i <= max_x; ++i) px.push_back(px.back() * gx);
    for (std::uint32_t i = 1; i <= max_y; ++i) py.push_back(py.back() * gy);
    Polynomial out(field_);
    for (const auto& [m, c] : terms_) out += c * (px[m.ex] * py[m.ey]);
    return out;
}

namespace {

std::string power_factor(char var, std::uint32_t e) {
    if (e == 0) return {};
    return e == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coeff = c.to_string();
        bool negative = false;
        if (coeff.front() == '-') {
            negative = true;
            coeff.erase(0, 1);
        }
        std::string vars = power_factor('x', m.ex);
        const std::string ypart = power_factor('y', m.ey);
        if (!vars.empty() && !ypart.empty()) vars += "*";
        vars += ypart;

        std::string term;
        if (vars.empty()) term = coeff;
        else if (coeff == "1") term = vars;
        else term = coeff + "*" + vars;

        if (out.empty()) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
    }
    return out;
}

namespace {

class PolyParser {
   public:
    PolyParser(Field f, std::string_view s) : field_(f), s_(s) {}

    Polynomial run() {
        Polynomial out(field_);
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        for (;;) {
            Polynomial t = term();
            out += negative ? Scalar(field_, -1) * t : t;
            skip_ws();
            if (pos_ == s_.size()) break;
            const char op = s_[pos_++];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            negative = op == '-';
        }
        return out;
    }

   private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
    }

    std::string digits() {
        const auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    Polynomial term() {
        skip_ws();
        Scalar coeff(field_, 1);
        Monomial m;
        bool any = false;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = digits();
                if (peek() == '/') {
                    ++pos_;
                    num += "/" + digits();
                }
                coeff = coeff * number(num);
            } else if (c == 'x' || c == 'y') {
                ++pos_;
                std::uint32_t e = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = static_cast<std::uint32_t>(std::stoul(digits()));
                }
                (c == 'x' ? m.ex : m.ey) += e;
            } else {
                fail("expected a coefficient, x or y");
            }
            any = true;
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        if (!any) fail("empty term");
        return coeff * Polynomial::monomial(field_, m.ex, m.ey);
    }

    Scalar number(const std::string& text) const {
        if (field_.is_rationals()) return Scalar(parse_rational(text));
        const auto slash = text.find('/');
        const auto p = static_cast<long long>(field_.characteristic());
        auto residue = [&](const std::string& part) {
            return Scalar(field_, static_cast<long>(std::stoull(part) % static_cast<unsigned long long>(p)));
        };
        if (slash == std::string::npos) return residue(text);
        return residue(text.substr(0, slash)) / residue(text.substr(slash + 1));
    }

    Field field_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(Field f, std::string_view text) { return PolyParser(f, text).run(); }

}  // namespace cwpd::cremona
