#include "cwpd/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cwpd::hyperbolic {

using pm::intersect;

double hyperbolicity_delta() { return std::log(1.0 + std::sqrt(2.0)); }

HPoint HPoint::from_class(RealClass c, double tol) {
    const double norm = intersect(c, c);
    if (!(std::abs(norm - 1.0) <= tol))
        throw std::invalid_argument("not on the hyperboloid: self-intersection " + std::to_string(norm));
    if (!(c.ell_coeff() > 0)) throw std::invalid_argument("not on the future sheet: ell-coefficient <= 0");
    return HPoint(std::move(c));
}

HPoint HPoint::normalized(const RealClass& c) {
    const double norm = intersect(c, c);
    if (!(norm > 0) || !(c.ell_coeff() > 0)) throw std::invalid_argument("class is not future timelike");
    return HPoint(c * (1.0 / std::sqrt(norm)));
}

HPoint HPoint::base() { return HPoint(RealClass::ell(1.0)); }

HPoint HPoint::from_spatial(std::span<const double> spatial) {
    double sq = 0;
    RealClass c;
    for (std::size_t i = 0; i < spatial.size(); ++i) {
        sq += spatial[i] * spatial[i];
        c.add_exc(pm::PointLabel::anonymous(static_cast<std::uint32_t>(i)), spatial[i]);
    }
    c.add_ell(std::sqrt(1.0 + sq));
    return HPoint(std::move(c));
}

double distance(const HPoint& x, const HPoint& y) {
    const double b = intersect(x.vector(), y.vector());
    if (b < 1.0 - 1e-9) throw std::invalid_argument("pairing below 1: " + std::to_string(b));
    return std::acosh(std::max(b, 1.0));
}

HPoint geodesic_point(const HPoint& x, const HPoint& y, double t) {
    const double d = distance(x, y);
    if (d == 0.0) throw std::invalid_argument("geodesic_point needs distinct points");
    // Unit spacelike tangent at x pointing to y.
    RealClass u = (y.vector() - std::cosh(d) * x.vector()) * (1.0 / std::sinh(d));
    return HPoint(std::cosh(t) * x.vector() + std::sinh(t) * u);
}

GeodesicSpec GeodesicSpec::from_endpoints(RealClass plus, RealClass minus, double tol) {
    for (const RealClass* b : {&plus, &minus}) {
        const double e = b->ell_coeff();
        if (!(e > 0)) throw std::invalid_argument("ideal endpoint needs positive ell-coefficient");
        if (std::abs(intersect(*b, *b)) > tol * e * e) throw std::invalid_argument("ideal endpoint is not null");
    }
    const double pairing = intersect(plus, minus);
    if (!(pairing > 0)) throw std::invalid_argument("ideal endpoints coincide");
    minus *= 1.0 / pairing;
    return GeodesicSpec(std::move(plus), std::move(minus));
}

HPoint GeodesicSpec::point_at(double s) const {
    const double k = 1.0 / std::sqrt(2.0);
    return HPoint(std::exp(s) * k * plus_ + std::exp(-s) * k * minus_);
}

double GeodesicSpec::coordinate_of(const HPoint& x) const {
    return 0.5 * std::log(intersect(x.vector(), minus_) / intersect(x.vector(), plus_));
}

HPoint project_to_geodesic(const HPoint& x, const GeodesicSpec& g) {
    const double xp = intersect(x.vector(), g.plus());
    const double xm = intersect(x.vector(), g.minus());
    if (!(xp > 0) || !(xm > 0)) throw std::invalid_argument("non-positive pairing with an ideal endpoint");
    return HPoint((xm * g.plus() + xp * g.minus()) * (1.0 / std::sqrt(2.0 * xp * xm)));
}

double quad_fourth_side(double d_dc, double d_cb) {
    if (d_dc < 0 || d_cb < 0) throw std::invalid_argument("quadrilateral sides must be non-negative");
    const double arg = std::tanh(d_dc) * std::cosh(d_cb);
    if (arg >= 1.0) throw std::domain_error("no such quadrilateral: tanh(DC) cosh(CB) >= 1");
    return std::atanh(arg);
}

Tube::Tube(double lo, double hi, double end_radius) : lo_(lo), hi_(hi), end_radius_(end_radius) {
    if (!(hi > lo)) throw std::invalid_argument("tube needs lo < hi");
    if (!(end_radius >= 0)) throw std::invalid_argument("tube radius must be non-negative");
}

double tube_radius(const Tube& t, double z) {
    if (z < t.lo() || z > t.hi()) throw std::invalid_argument("point outside the tube span");
    if (t.end_radius() == 0) return 0;
    return std::atanh(std::tanh(t.end_radius()) * std::cosh(z - t.midpoint()) / std::cosh(t.half_length()));
}

bool tube_traverses(const Tube& outer, const Tube& inner) {
    if (!(outer.lo() <= inner.lo() && inner.hi() <= outer.hi()))
        throw std::invalid_argument("inner tube is not nested in the outer tube");
    const double bound = inner.end_radius() + kRadiusTolerance;
    return tube_radius(outer, inner.lo()) <= bound && tube_radius(outer, inner.hi()) <= bound;
}

double traversal_offset(double eps, double eta, double d_wz) {
    if (!(eps > 0) || !(eta > 0) || !(d_wz >= 0))
        throw std::invalid_argument("traversal_offset needs eps > 0, eta > 0, d_wz >= 0");
    const double arg = std::tanh(eps) * std::cosh(d_wz) / std::tanh(eta);
    if (arg < 1.0)
        throw std::domain_error("radius at d_wz already below eta; offset would be 0");
    return std::acosh(arg);
}

WpdExponents wpd_exponents(double eps, double eta, double length, double z, double z_prime, double w) {
    if (!(eps >= 0) || !(eta > 0) || !(length > 0) || !(z < z_prime))
        throw std::invalid_argument("wpd_exponents needs eps >= 0, eta > 0, L > 0, z < z'");
    const Tube inner(z - eps, z_prime + eps, eta / 3.0);
    const double mid = inner.midpoint();
    const double d_wz = inner.half_length();
    // Tubes of radius <= eta/3 are traversed by anything that contains them.
    const double half = (eps <= eta / 3.0) ? d_wz : traversal_offset(eps, eta / 3.0, d_wz);

    // Least N with w - N L + eps <= mid - half, least M with w + M L - eps >= mid + half.
    auto least = [length](double gap) {
        if (gap <= 0) return 0u;
        auto k = static_cast<unsigned>(std::ceil(gap / length));
        while (k > 0 && (k - 1) * length >= gap) --k;
        while (k * length < gap) ++k;
        return k;
    };
    WpdExponents out;
    out.n_back = least((w + eps) - (mid - half));
    out.m_forward = least((mid + half) - (w - eps));
    out.required_half_length = half;
    out.inner = inner;
    for (;;) {
        const double lo = w - out.n_back * length + eps;
        const double hi = w + out.m_forward * length - eps;
        if (lo <= inner.lo() && inner.hi() <= hi) {
            out.outer = Tube(lo, hi, eps);
            if (tube_traverses(out.outer, inner)) return out;
        }
        // Only reached through rounding at the boundary.
        ++out.n_back;
        ++out.m_forward;
    }
}

}  // namespace cwpd::hyperbolic
