#pragma once

// Re-derivation of the quantitative steps showing that the Cremona group
// acts discretely along the axis of h_n: the admissible tolerance window,
// the degree bound for maps that almost fix w_n, the exclusion of degrees
// 2 and 3, and the finite set of linear maps that survive, checked against
// an exhaustive search over a prime field.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cwpd/hn_action.hpp"
#include "cwpd/poly_map.hpp"
#include "cwpd/rational.hpp"

namespace cwpd::wpd {

using cremona::AxisData;
using cremona::Field;
using cremona::PolyMap;

/// Numeric comparison slack for verdicts that are equalities in exact arithmetic.
inline constexpr double kVerdictTolerance = 1e-12;

struct InequalityCheck {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    double slack = 0;  // rhs - lhs
    bool holds = false;
};

struct StarWindow {
    unsigned n = 0;
    double eps_max = 0;
    double chosen_eps = 0;
    std::vector<InequalityCheck> checks;

    bool holds() const;
};

/// argcosh(sqrt2 + 1/(n sqrt2)) - argcosh(sqrt2).
double eps_max(unsigned n);

/// Window for n; chosen_eps defaults to eps_max. Throws std::invalid_argument
/// if an override lies outside (0, eps_max].
StarWindow epsilon_window(unsigned n, std::optional<double> eps = std::nullopt);

struct SanityConstants {
    double window_sum;  // argcosh(sqrt2) + argcosh(5/(2 sqrt2))
    double acosh4;
};
SanityConstants window_sanity_constants();

/// cosh(2 argcosh(sqrt2) + eps): bound on the degree of any map moving w_n by
/// at most eps. Throws std::invalid_argument for eps outside the window.
double degree_bound(unsigned n, double eps);

/// Multiplicities of the base points of a map of degree 2 or 3.
std::vector<unsigned> noether_multiplicities(unsigned deg);

/// Least value of (sum m_i e_i) . r_n over injective placements of the base
/// points of a degree-deg map onto the terms of r_n. Every exceptional class
/// meets at most one (pairwise orthogonal) term, so the greedy pairing of
/// sorted multiplicities with sorted coefficients is optimal.
Rational worst_case_intersection(unsigned n, unsigned deg, const AxisData& axis);

struct ExclusionVerdict {
    unsigned deg = 0;
    Rational worst_case;
    QSqrt2 lower_bound;      // f(ell).w_n >= deg sqrt2 + worst_case / sqrt2
    double threshold = 0;    // cosh(argcosh(sqrt2) + eps)
    double margin = 0;       // argcosh(lower_bound) - argcosh(sqrt2) - eps
    bool excluded = false;
};

ExclusionVerdict exclusion_check(unsigned n, unsigned deg, double eps, const AxisData& axis);

/// The n^2-1 maps (a x, a^n y), a in mu_{n^2-1}(F_p), sorted.
/// Throws std::invalid_argument when p | n or (n^2-1) does not divide p-1.
std::vector<PolyMap> fix_set_symbolic(unsigned n, const Field& field);

/// Root-of-unity form of the same set over Q: (z^k x, z^{nk} y), z a
/// primitive (n^2-1)-th root of unity.
struct RootOfUnityMap {
    unsigned order = 0;
    unsigned a_exp = 0;
    unsigned c_exp = 0;
    std::string to_string() const;
};
std::vector<RootOfUnityMap> fix_set_root_exponents(unsigned n);

/// Exhaustive search over (a x + b, c y + d), a, c != 0, in F_p, keeping the
/// maps whose conjugates by h_n^{+-1} (and by h_2^{+-2} when n = 2) have
/// degree 1 and fix p0 and q0. Sorted; independent of worker count.
std::vector<PolyMap> fix_set_bruteforce(unsigned n, std::uint64_t p, unsigned workers = 0);

struct AxisChecks {
    Rational w_self_intersection;
    Rational expected_w_self_intersection;
    Rational b_cross;
    double distance_ell_w = 0;
    Rational cosh_translation;           // w_n . h_n(w_n)
    Rational expected_cosh_translation;  // (n + 1/n)/2
    Rational tail_norm_sq;               // squared tolerance on the translation
    bool w_self_ok = false;
    bool b_cross_ok = false;
    bool distance_ok = false;
    bool translation_ok = false;
};

AxisChecks check_axis(const AxisData& axis);

struct MonotonicityCheck {
    std::size_t members_checked = 0;
    double max_displacement = 0;
    bool holds = false;
};

/// Every member of Fix_eps{h^2 w, h^-2 w} also lies in Fix_eps{h w, h^-1 w}
/// and in Fix_eps{w}.
MonotonicityCheck check_fix_monotonicity(const AxisData& axis, double eps, const std::vector<PolyMap>& members);

struct OracleResult {
    std::size_t count = 0;
    bool matches = false;
};

struct CertReport {
    unsigned n = 0;
    unsigned depth = 0;
    std::string field;
    StarWindow star;
    double degree_bound = 0;
    bool degree_bound_ok = false;
    Rational deg3_bound;
    Rational deg2_bound;
    bool bounds_exact = false;
    ExclusionVerdict exclusion3;
    ExclusionVerdict exclusion2;
    AxisChecks axis;
    std::vector<std::string> fix_set;
    std::size_t expected_cardinality = 0;
    std::optional<OracleResult> oracle;
    MonotonicityCheck monotonicity;
    bool passed = false;
};

struct CertifyOptions {
    std::optional<double> eps;
    bool run_oracle = true;
    unsigned workers = 0;
};

/// Full pipeline. prime == nullopt selects Q with root-of-unity exponents.
/// Throws std::invalid_argument for invalid parameters, including a
/// characteristic dividing n.
CertReport certify(unsigned n, unsigned depth, std::optional<std::uint64_t> prime, const CertifyOptions& opts = {});

/// Recomputes every verdict from the stored numbers.
bool is_self_consistent(const CertReport& r);

nlohmann::ordered_json to_json(const CertReport& r);

}  // namespace cwpd::wpd
