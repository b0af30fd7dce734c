#include "cwpd/hn_action.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace cwpd::cremona {

using pm::Family;

namespace {

void require_n(unsigned n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
}

PointLabel tower_label(Family family, unsigned n, std::uint32_t k) {
    return family == Family::P ? PointLabel::p(n, k) : PointLabel::q(n, k);
}

std::vector<std::pair<PointLabel, unsigned>> tower(unsigned n, Family family) {
    require_n(n);
    std::vector<std::pair<PointLabel, unsigned>> out;
    out.emplace_back(tower_label(family, n, 0), n - 1);
    for (unsigned k = 1; k <= 2 * n - 2; ++k) out.emplace_back(tower_label(family, n, k), 1);
    return out;
}

// One step of h_n (sign = +1) or h_n^{-1} (sign = -1).
PMClass act_once(unsigned n, const PMClass& c, int sign) {
    const Family moving = sign > 0 ? Family::Q : Family::P;
    const Family returning = sign > 0 ? Family::P : Family::Q;
    const std::uint32_t shift = 2 * n - 1;

    PMClass out = scale(exceptional_sum(n, moving), Rational(-c.ell_coeff()));
    out.add_ell(Rational(n * c.ell_coeff()));

    std::map<std::uint32_t, Rational> base_block;
    for (const auto& [label, v] : c.exc()) {
        if (label.family() == Family::Anonymous || label.context_n() != n)
            throw std::invalid_argument("h_" + std::to_string(n) + " does not act on " + label.to_string());
        if (label.family() == moving) {
            out.add_exc(tower_label(moving, n, label.index() + shift), v);
        } else if (label.index() >= shift) {
            out.add_exc(tower_label(returning, n, label.index() - shift), v);
        } else {
            base_block.emplace(label.index(), v);
        }
    }
    if (base_block.empty()) return out;

    // The block must be lambda * e_n^{returning}; then it maps to
    // lambda * ((n^2 - 1) ell - n e_n^{moving}).
    const Rational lambda = base_block.count(0) ? Rational(base_block[0] / (n - 1)) : Rational(0);
    bool proportional = base_block.size() == shift && sgn(lambda) != 0;
    for (std::uint32_t k = 1; proportional && k < shift; ++k) proportional = base_block[k] == lambda;
    if (!proportional)
        throw std::domain_error("class meets the base points of h_" + std::to_string(n) + (sign > 0 ? "" : "^-1") +
                                " outside a multiple of their sum");
    out.add_ell(Rational(lambda * (n * n - 1)));
    out += scale(exceptional_sum(n, moving), Rational(-lambda * n));
    return out;
}

}  // namespace

std::vector<std::pair<PointLabel, unsigned>> base_points(unsigned n) { return tower(n, Family::P); }

std::vector<std::pair<PointLabel, unsigned>> inverse_base_points(unsigned n) { return tower(n, Family::Q); }

PMClass exceptional_sum(unsigned n, Family family) {
    if (family == Family::Anonymous) throw std::invalid_argument("no exceptional sum for anonymous labels");
    PMClass out;
    for (const auto& [label, m] : tower(n, family)) out.add_exc(label, Rational(m));
    return out;
}

PointLabel orbit_label(unsigned n, const PointLabel& label, long i) {
    require_n(n);
    if (label.family() == Family::Anonymous) throw std::invalid_argument("anonymous labels have no h_n orbit");
    if (label.context_n() != n)
        throw std::invalid_argument(label.to_string() + " belongs to n=" + std::to_string(label.context_n()));
    const long step = label.family() == Family::Q ? i : -i;
    const long index = static_cast<long>(label.index()) + step * static_cast<long>(2 * n - 1);
    if (index < 0)
        throw std::domain_error("h_" + std::to_string(n) + "^" + std::to_string(i) + " of " + label.to_string() +
                                " is not an orbit label");
    return tower_label(label.family(), n, static_cast<std::uint32_t>(index));
}

PMClass hn_act(unsigned n, const PMClass& c, long power) {
    require_n(n);
    PMClass out = c;
    const int sign = power >= 0 ? 1 : -1;
    for (long k = 0; k < std::labs(power); ++k) out = act_once(n, out, sign);
    return out;
}

Rational AxisData::w_self_intersection() const { return Rational(pm::intersect(w_scaled, w_scaled) / 2); }

QSqrt2 AxisData::w_dot(const PMClass& c) const { return {0, Rational(pm::intersect(w_scaled, c) / 2)}; }

pm::RealClass AxisData::w_real() const { return pm::to_real(w_scaled) * (1.0 / std::sqrt(2.0)); }

AxisData axis_classes(unsigned n, unsigned depth) {
    require_n(n);
    if (depth < 1) throw std::invalid_argument("axis depth must be at least 1");
    AxisData a;
    a.n = n;
    a.depth = depth;
    PMClass q_part, p_part;
    Rational weight(1, n);
    for (unsigned i = 0; i <= depth; ++i) {
        for (const auto& [label, m] : inverse_base_points(n))
            q_part.add_exc(orbit_label(n, label, i), Rational(m * weight));
        for (const auto& [label, m] : base_points(n))
            p_part.add_exc(orbit_label(n, label, -static_cast<long>(i)), Rational(m * weight));
        weight /= n;
    }
    a.b_plus = PMClass::ell() - q_part;
    a.b_minus = PMClass::ell() - p_part;
    a.r_n = q_part + p_part;
    a.w_scaled = PMClass::ell(2) - a.r_n;
    a.tail_norm_sq = 2 * cwpd::pow(Rational(n), -2 * static_cast<long>(depth) - 2);
    return a;
}

PMClass diagonal_act(const PolyMap& f, unsigned n, const PMClass& c) {
    const auto coeffs = as_affine_diagonal(f);
    if (!coeffs || !coeffs->b.is_zero() || !coeffs->d.is_zero())
        throw std::invalid_argument("diagonal_act expects (a x, c y)");
    if (!(coeffs->a.pow(n) == coeffs->c) || !(coeffs->c.pow(n) == coeffs->a))
        throw std::invalid_argument("diagonal map does not normalize the h_n towers");
    // h_n (a x, c y) h_n^{-1} = (c x, a y) is again linear, so the map permutes
    // the base points of every h_n^i; the towers are chains, hence fixed pointwise.
    for (const auto& entry : c.exc())
        if (entry.first.family() == Family::Anonymous || entry.first.context_n() != n)
            throw std::invalid_argument("diagonal_act only tracks h_n tower labels");
    return c;
}

}  // namespace cwpd::cremona
