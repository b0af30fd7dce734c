#pragma once

// Action of h_n: (x, y) -> (y, y^n - x) on Picard-Manin classes.
//
// Base points of h_n form a tower p_0 (multiplicity n-1), p_1, ..., p_{2n-2}
// over [1:0:0]; those of h_n^{-1} are the swapped tower q_0, ..., q_{2n-2}
// over [0:1:0]. h_n sends e_{q_k} to e_{q_{k+2n-1}}, h_n^{-1} sends e_{p_k}
// to e_{p_{k+2n-1}}, and on the line class
//   h_n(ell) = n ell - e_n^-,   h_n^{-1}(ell) = n ell - e_n^+,
// where e_n^+ = (n-1) e_{p_0} + e_{p_1} + ... + e_{p_{2n-2}} and e_n^- is the
// same sum over the q's.

#include <cstdint>
#include <utility>
#include <vector>

#include "cwpd/pm_lattice.hpp"
#include "cwpd/poly_map.hpp"

namespace cwpd::cremona {

using pm::PMClass;
using pm::PointLabel;

/// Base points of h_n: [(p_0, n-1), (p_1, 1), ..., (p_{2n-2}, 1)].
std::vector<std::pair<PointLabel, unsigned>> base_points(unsigned n);
/// Base points of h_n^{-1}, obtained by the swap: the q tower.
std::vector<std::pair<PointLabel, unsigned>> inverse_base_points(unsigned n);

/// e_n^+ (family P) or e_n^- (family Q).
PMClass exceptional_sum(unsigned n, pm::Family family);

/// Label of h_n^i(e_label): q_k -> q_{k + i(2n-1)}, p_k -> p_{k - i(2n-1)}.
/// Throws std::domain_error when the shifted index would be negative, and
/// std::invalid_argument for anonymous labels or a label built for another n.
PointLabel orbit_label(unsigned n, const PointLabel& label, long i);

/// h_n^power acting on c. The action is known on ell, on q labels forward,
/// on p labels backward, and on the base-point blocks only through the sums:
/// h_n(e_n^+) = (n^2-1) ell - n e_n^-, which follows from
/// h_n(h_n^{-1}(ell)) = ell. A class whose p_0..p_{2n-2} coefficients (for
/// forward steps; q's for backward steps) are not a multiple of e_n^+ is
/// outside the domain and throws std::domain_error.
PMClass hn_act(unsigned n, const PMClass& c, long power);

/// Truncated axis data of h_n: terms i = 0..depth of
///   r_n = sum_i (h_n^i(e_n^-) + h_n^{-i}(e_n^+)) / n^{i+1},
/// b_n^+ = ell - (q-part of r_n), b_n^- = ell - (p-part of r_n), and
/// w_n = sqrt2 ell - r_n / sqrt2 held as w_scaled = 2 ell - r_n with an
/// implicit factor 1/sqrt 2.
struct AxisData {
    unsigned n = 0;
    unsigned depth = 0;
    PMClass b_plus;
    PMClass b_minus;
    PMClass r_n;
    PMClass w_scaled;
    /// ||r_n - truncation||^2 = 2 n^(-2 depth - 2).
    Rational tail_norm_sq;

    /// w_n . w_n = (w_scaled . w_scaled) / 2.
    Rational w_self_intersection() const;
    /// w_n . c = ((w_scaled . c) / 2) * sqrt 2.
    QSqrt2 w_dot(const PMClass& c) const;
    /// w_n as a real class.
    pm::RealClass w_real() const;
};

AxisData axis_classes(unsigned n, unsigned depth);

/// Action of a diagonal map (a x, c y) fixing the towers, i.e. with
/// c = a^n and a = c^n: such a map fixes ell and every p_k, q_k.
/// Throws std::invalid_argument for other maps.
PMClass diagonal_act(const PolyMap& f, unsigned n, const PMClass& c);

}  // namespace cwpd::cremona
