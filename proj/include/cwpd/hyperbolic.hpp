#pragma once

// Hyperboloid-model geometry on unit timelike classes, cosh d(x,y) = x.y,
// together with the one-dimensional bookkeeping of geodesic tubes along a
// fixed reference geodesic.

#include <span>

#include "cwpd/pm_lattice.hpp"

namespace cwpd::hyperbolic {

using pm::RealClass;

inline constexpr double kUnitTolerance = 1e-12;
/// Slack used when comparing tube radii that agree in exact arithmetic.
inline constexpr double kRadiusTolerance = 1e-12;

/// Gromov hyperbolicity constant log(1 + sqrt 2) shared by every H^n.
double hyperbolicity_delta();

class GeodesicSpec;

class HPoint {
   public:
    /// Accepts c when |c.c - 1| <= tol and c.ell > 0.
    static HPoint from_class(RealClass c, double tol = kUnitTolerance);
    /// Rescales a future timelike class onto the hyperboloid.
    static HPoint normalized(const RealClass& c);
    /// The line class ell.
    static HPoint base();
    /// Point ell*sqrt(1+|s|^2) + sum s_i a_i over anonymous directions a_0, a_1, ...
    /// A two-entry span gives the Minkowski model of H^2.
    static HPoint from_spatial(std::span<const double> spatial);

    const RealClass& vector() const { return v_; }

   private:
    explicit HPoint(RealClass v) : v_(std::move(v)) {}
    friend HPoint geodesic_point(const HPoint&, const HPoint&, double);
    friend class GeodesicSpec;
    friend HPoint project_to_geodesic(const HPoint&, const GeodesicSpec&);

    RealClass v_;
};

/// argcosh(x.y). Throws std::invalid_argument if x.y < 1 beyond tolerance.
double distance(const HPoint& x, const HPoint& y);

/// Unit-speed geodesic from x towards y, evaluated at arclength t.
HPoint geodesic_point(const HPoint& x, const HPoint& y, double t);

/// Geodesic given by its two ideal endpoints, normalized so plus.minus = 1.
class GeodesicSpec {
   public:
    /// Both endpoints must be null up to tol (relative to ell-coefficient^2)
    /// with positive ell-coefficient; minus is rescaled so plus.minus = 1.
    static GeodesicSpec from_endpoints(RealClass plus, RealClass minus, double tol = 1e-10);

    const RealClass& plus() const { return plus_; }
    const RealClass& minus() const { return minus_; }

    /// (e^s b+ + e^-s b-)/sqrt 2; s increases towards b+.
    HPoint point_at(double s) const;
    /// Arclength coordinate of a point lying on the geodesic.
    double coordinate_of(const HPoint& x) const;

   private:
    GeodesicSpec(RealClass plus, RealClass minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}
    RealClass plus_;
    RealClass minus_;
};

/// Closest point of g to x: ((x.b-) b+ + (x.b+) b-) / sqrt(2 (x.b+)(x.b-)).
HPoint project_to_geodesic(const HPoint& x, const GeodesicSpec& g);

/// Side AB of a quadrilateral ADCB with right angles at B, C, D:
/// tanh AB = tanh DC cosh CB. Throws std::domain_error when infeasible.
double quad_fourth_side(double d_dc, double d_cb);

/// Tube around the reference geodesic between arclength coordinates lo < hi,
/// with disks of radius end_radius orthogonal to the geodesic at both ends.
class Tube {
   public:
    Tube(double lo, double hi, double end_radius);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double end_radius() const { return end_radius_; }
    double midpoint() const { return 0.5 * (lo_ + hi_); }
    double half_length() const { return 0.5 * (hi_ - lo_); }

   private:
    double lo_;
    double hi_;
    double end_radius_;
};

/// tanh r(z) = tanh(end_radius) cosh(z - mid) / cosh(half_length).
double tube_radius(const Tube& t, double z);

/// outer traverses inner when its radius at both ends of inner is at most
/// inner.end_radius. Requires outer.lo <= inner.lo < inner.hi <= outer.hi.
bool tube_traverses(const Tube& outer, const Tube& inner);

/// Half-length d(w,x) of the symmetric tube of end radius eps whose radius
/// is exactly eta at distance d_wz from its midpoint:
///   argcosh(tanh(eps) cosh(d_wz) / tanh(eta)).
/// Throws std::domain_error when the argument is below 1, i.e. when eta
/// already exceeds the radius there and no offset is needed.
double traversal_offset(double eps, double eta, double d_wz);

struct WpdExponents {
    unsigned n_back = 0;     // N: outer tube starts at w - N*L + eps
    unsigned m_forward = 0;  // M: outer tube ends at w + M*L - eps
    double required_half_length = 0;  // half-length about the inner midpoint that suffices
    Tube outer{0, 1, 0};
    Tube inner{0, 1, 0};
};

/// Exponents N, M such that the tube of radius eps between w - N L + eps and
/// w + M L - eps traverses the tube of radius eta/3 between z - eps and
/// z' + eps. Each of N and M is the least integer that reaches the
/// sufficient half-length about the inner midpoint, so both are monotone in
/// eta; the result is re-checked with tube_traverses.
WpdExponents wpd_exponents(double eps, double eta, double length, double z, double z_prime, double w);

}  // namespace cwpd::hyperbolic
