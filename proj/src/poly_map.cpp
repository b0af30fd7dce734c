#include "cwpd/poly_map.hpp"

#include <stdexcept>

namespace cwpd::cremona {

PolyMap::PolyMap(Polynomial comp_x, Polynomial comp_y) : x_(std::move(comp_x)), y_(std::move(comp_y)) {
    if (!(x_.field() == y_.field())) throw std::invalid_argument("map components over different fields");
}

PolyMap PolyMap::identity(Field f) { return {Polynomial::x(f), Polynomial::y(f)}; }

PolyMap PolyMap::swap(Field f) { return {Polynomial::y(f), Polynomial::x(f)}; }

PolyMap PolyMap::hn(unsigned n, Field f) {
    return {Polynomial::y(f), Polynomial::monomial(f, 0, n) - Polynomial::x(f)};
}

PolyMap PolyMap::hn_inverse(unsigned n, Field f) {
    return {Polynomial::monomial(f, n, 0) - Polynomial::y(f), Polynomial::x(f)};
}

PolyMap PolyMap::jn(unsigned n, Field f) {
    return {Polynomial::monomial(f, 0, n) - Polynomial::x(f), Polynomial::y(f)};
}

PolyMap PolyMap::affine_diagonal(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    const Field f = a.field();
    return {a * Polynomial::x(f) + Polynomial::constant(b), c * Polynomial::y(f) + Polynomial::constant(d)};
}

std::string PolyMap::to_string() const {
    return "[" + field().tag() + "] " + x_.to_string() + "; " + y_.to_string();
}

PolyMap PolyMap::parse(std::string_view text) {
    const auto open = text.find('[');
    const auto close = text.find(']');
    const auto semi = text.find(';');
    if (open != 0 || close == std::string_view::npos || semi == std::string_view::npos || semi < close)
        throw std::invalid_argument("map must look like '[<field>] <comp_x>; <comp_y>'");
    const Field f = Field::parse(text.substr(1, close - 1));
    return {Polynomial::parse(f, text.substr(close + 1, semi - close - 1)), Polynomial::parse(f, text.substr(semi + 1))};
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
    return {f.comp_x().substitute(g.comp_x(), g.comp_y()), f.comp_y().substitute(g.comp_x(), g.comp_y())};
}

unsigned degree(const PolyMap& f) {
    if (f.comp_x().is_constant() && f.comp_y().is_constant()) throw std::invalid_argument("degree of a constant map");
    return static_cast<unsigned>(std::max(f.comp_x().degree(), f.comp_y().degree()));
}

std::optional<AffineDiagonal> as_affine_diagonal(const PolyMap& f) {
    const auto& px = f.comp_x();
    const auto& py = f.comp_y();
    if (px.degree() > 1 || py.degree() > 1) return std::nullopt;
    if (!px.coefficient(0, 1).is_zero() || !py.coefficient(1, 0).is_zero()) return std::nullopt;
    AffineDiagonal out{px.coefficient(1, 0), px.coefficient(0, 0), py.coefficient(0, 1), py.coefficient(0, 0)};
    if (out.a.is_zero() || out.c.is_zero()) return std::nullopt;
    return out;
}

PolyMap conjugate_by_hn(const PolyMap& f, unsigned n, int direction) {
    if (n < 2) throw std::invalid_argument("conjugate_by_hn needs n >= 2");
    if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
    if (!as_affine_diagonal(f)) throw std::invalid_argument("conjugate_by_hn expects (a x + b, c y + d) with a, c != 0");
    const auto p = f.field().characteristic();
    if (p != 0 && n % p == 0) throw std::invalid_argument("characteristic divides n");
    const PolyMap h = PolyMap::hn(n, f.field());
    const PolyMap h_inv = PolyMap::hn_inverse(n, f.field());
    return direction > 0 ? compose(h, compose(f, h_inv)) : compose(h_inv, compose(f, h));
}

bool preserves_p0(const PolyMap& f) {
    if (degree(f) > 1) throw std::invalid_argument("preserves_p0 needs a map of degree 1");
    return f.comp_y().coefficient(1, 0).is_zero();
}

bool preserves_q0(const PolyMap& f) {
    if (degree(f) > 1) throw std::invalid_argument("preserves_q0 needs a map of degree 1");
    return f.comp_x().coefficient(0, 1).is_zero();
}

}  // namespace cwpd::cremona
