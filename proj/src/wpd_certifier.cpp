#include "cwpd/wpd_certifier.hpp"

#include "cwpd/format.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

namespace cwpd::wpd {

using cremona::hn_act;
using cremona::Scalar;
using pm::intersect;
using pm::PMClass;

namespace {

const double kAcoshSqrt2 = std::acosh(std::sqrt(2.0));

void require_n(unsigned n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
}

// sqrt2 + 1/(n sqrt2) = (1 + 1/(2n)) sqrt2.
QSqrt2 window_edge(unsigned n) { return {0, Rational(1) + Rational(1, 2 * n)}; }

}  // namespace

bool StarWindow::holds() const {
    return eps_max > 0 && chosen_eps > 0 && chosen_eps <= eps_max &&
           std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.holds; });
}

double eps_max(unsigned n) {
    require_n(n);
    return std::acosh(window_edge(n).to_double()) - kAcoshSqrt2;
}

StarWindow epsilon_window(unsigned n, std::optional<double> eps) {
    StarWindow w;
    w.n = n;
    w.eps_max = eps_max(n);
    w.chosen_eps = eps.value_or(w.eps_max);
    if (!(w.chosen_eps > 0) || w.chosen_eps > w.eps_max)
        throw std::invalid_argument("eps must lie in (0, " + std::to_string(w.eps_max) + "] for n=" + std::to_string(n));

    const double edge = std::acosh(window_edge(n).to_double());
    const double three_over_sqrt2 = std::acosh(QSqrt2(0, Rational(3, 2)).to_double());
    const double e = w.chosen_eps;

    // At eps = eps_max the first inequality is an equality; it is checked as <=.
    InequalityCheck first{"argcosh(sqrt2) + eps <= argcosh(sqrt2 + 1/(n sqrt2))", kAcoshSqrt2 + e, edge, 0, false};
    first.slack = first.rhs - first.lhs;
    first.holds = first.slack >= -kVerdictTolerance;

    InequalityCheck second{"argcosh(sqrt2 + 1/(n sqrt2)) < argcosh(3/sqrt2)", edge, three_over_sqrt2, 0, false};
    second.slack = second.rhs - second.lhs;
    // argcosh is increasing, so the exact comparison of the arguments decides it.
    second.holds = window_edge(n) < QSqrt2(0, Rational(3, 2)) && second.slack > 0;

    InequalityCheck third{"2 argcosh(sqrt2) + eps < argcosh(4)", 2 * kAcoshSqrt2 + e, std::acosh(4.0), 0, false};
    third.slack = third.rhs - third.lhs;
    third.holds = third.slack > 0;

    w.checks = {first, second, third};
    return w;
}

SanityConstants window_sanity_constants() {
    return {kAcoshSqrt2 + std::acosh(QSqrt2(0, Rational(5, 4)).to_double()), std::acosh(4.0)};
}

double degree_bound(unsigned n, double eps) {
    if (!(eps > 0) || eps > eps_max(n)) throw std::invalid_argument("eps outside the admissible window");
    return std::cosh(2 * kAcoshSqrt2 + eps);
}

std::vector<unsigned> noether_multiplicities(unsigned deg) {
    if (deg == 2) return {1, 1, 1};
    if (deg == 3) return {2, 1, 1, 1, 1};
    throw std::invalid_argument("only degrees 2 and 3 are excluded");
}

Rational worst_case_intersection(unsigned n, unsigned deg, const AxisData& axis) {
    require_n(n);
    if (axis.n != n) throw std::invalid_argument("axis data built for another n");
    auto mult = noether_multiplicities(deg);
    if (axis.depth < 2) throw std::invalid_argument("axis must be truncated at depth >= 2");

    std::vector<Rational> coeffs;
    coeffs.reserve(axis.r_n.exc().size());
    for (const auto& entry : axis.r_n.exc()) coeffs.push_back(entry.second);
    if (coeffs.size() < mult.size()) throw std::invalid_argument("axis truncation too short for the placement");
    std::sort(coeffs.begin(), coeffs.end(), std::greater<>());
    std::sort(mult.begin(), mult.end(), std::greater<>());

    // e_i . r_n = -coeff of the term e_i lands on.
    Rational acc = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) acc -= mult[i] * coeffs[i];
    return acc;
}

ExclusionVerdict exclusion_check(unsigned n, unsigned deg, double eps, const AxisData& axis) {
    ExclusionVerdict v;
    v.deg = deg;
    v.worst_case = worst_case_intersection(n, deg, axis);
    v.lower_bound = QSqrt2(0, Rational(deg + v.worst_case / 2));
    v.threshold = std::cosh(kAcoshSqrt2 + eps);
    v.margin = std::acosh(v.lower_bound.to_double()) - kAcoshSqrt2 - eps;
    v.excluded = v.margin >= -kVerdictTolerance;
    return v;
}

namespace {

void require_char_not_dividing(unsigned n, std::uint64_t p) {
    if (p != 0 && n % p == 0) throw std::invalid_argument("characteristic divides n");
}

std::uint64_t primitive_root(std::uint64_t p) {
    std::vector<std::uint64_t> factors;
    std::uint64_t m = p - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    const Field f = Field::prime(p);
    for (std::uint64_t g = 2; g < p; ++g) {
        const Scalar s(f, static_cast<long>(g));
        if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t q) { return !s.pow((p - 1) / q).is_one(); }))
            return g;
    }
    return 1;  // p = 2
}

}  // namespace

std::vector<PolyMap> fix_set_symbolic(unsigned n, const Field& field) {
    require_n(n);
    if (field.is_rationals())
        throw std::invalid_argument("Q lacks the (n^2-1)-th roots of unity; use fix_set_root_exponents");
    const auto p = field.characteristic();
    require_char_not_dividing(n, p);
    const std::uint64_t order = n * n - 1;
    if ((p - 1) % order != 0)
        throw std::invalid_argument("F_" + std::to_string(p) + " has no primitive root of unity of order " +
                                    std::to_string(order));
    const Scalar zeta = Scalar(field, static_cast<long>(primitive_root(p))).pow((p - 1) / order);
    const Scalar zero(field, 0);
    std::vector<PolyMap> out;
    Scalar a(field, 1);
    for (std::uint64_t k = 0; k < order; ++k, a = a * zeta) out.push_back(PolyMap::affine_diagonal(a, zero, a.pow(n), zero));
    std::sort(out.begin(), out.end());
    return out;
}

std::string RootOfUnityMap::to_string() const {
    auto power = [](unsigned e, const char* var) {
        if (e == 0) return std::string(var);
        return "z^" + std::to_string(e) + "*" + var;
    };
    return "(" + power(a_exp, "x") + ", " + power(c_exp, "y") + "), z^" + std::to_string(order) + " = 1";
}

std::vector<RootOfUnityMap> fix_set_root_exponents(unsigned n) {
    require_n(n);
    const unsigned order = n * n - 1;
    std::vector<RootOfUnityMap> out;
    for (unsigned k = 0; k < order; ++k) out.push_back({order, k, (n * k) % order});
    return out;
}

std::vector<PolyMap> fix_set_bruteforce(unsigned n, std::uint64_t p, unsigned workers) {
    require_n(n);
    const Field field = Field::prime(p);
    require_char_not_dividing(n, p);
    if ((p - 1) * (p - 1) * p * p > 20'000'000) throw std::invalid_argument("search space over F_p too large");

    const PolyMap h = PolyMap::hn(n, field);
    const PolyMap h_inv = PolyMap::hn_inverse(n, field);
    auto survives = [&](const PolyMap& f) {
        PolyMap conj[2] = {cremona::conjugate_by_hn(f, n, 1), PolyMap(f)};
        if (degree(conj[0]) != 1) return false;
        conj[1] = cremona::conjugate_by_hn(f, n, -1);
        if (degree(conj[1]) != 1) return false;
        for (const auto& g : conj)
            if (!cremona::preserves_p0(g) || !cremona::preserves_q0(g)) return false;
        if (n == 2) {
            if (degree(compose(h, compose(conj[0], h_inv))) != 1) return false;
            if (degree(compose(h_inv, compose(conj[1], h))) != 1) return false;
        }
        return true;
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, p - 1));
    std::vector<std::vector<PolyMap>> found(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t a = 1 + w; a < p; a += workers)
                for (std::uint64_t c = 1; c < p; ++c)
                    for (std::uint64_t b = 0; b < p; ++b)
                        for (std::uint64_t d = 0; d < p; ++d) {
                            auto f = PolyMap::affine_diagonal(
                                Scalar(field, static_cast<long>(a)), Scalar(field, static_cast<long>(b)),
                                Scalar(field, static_cast<long>(c)), Scalar(field, static_cast<long>(d)));
                            if (survives(f)) found[w].push_back(std::move(f));
                        }
        });
    }
    for (auto& t : pool) t.join();
    std::vector<PolyMap> out;
    for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

AxisChecks check_axis(const AxisData& axis) {
    const unsigned n = axis.n;
    AxisChecks c;
    c.w_self_intersection = axis.w_self_intersection();
    c.expected_w_self_intersection = 1 + cwpd::pow(Rational(n), -2 * static_cast<long>(axis.depth) - 2);
    c.w_self_ok = c.w_self_intersection == c.expected_w_self_intersection;
    c.b_cross = intersect(axis.b_plus, axis.b_minus);
    c.b_cross_ok = c.b_cross == 1;
    c.distance_ell_w = std::acosh(axis.w_dot(PMClass::ell()).to_double());
    c.distance_ok = std::abs(c.distance_ell_w - kAcoshSqrt2) <= 1e-9;
    // w_n . h_n(w_n) = (w_scaled . h_n(w_scaled)) / 2
    c.cosh_translation = intersect(axis.w_scaled, hn_act(n, axis.w_scaled, 1)) / 2;
    c.expected_cosh_translation = (Rational(n) + Rational(1, n)) / 2;
    c.tail_norm_sq = axis.tail_norm_sq;
    const Rational diff = c.cosh_translation - c.expected_cosh_translation;
    c.translation_ok = diff * diff <= c.tail_norm_sq;
    return c;
}

MonotonicityCheck check_fix_monotonicity(const AxisData& axis, double eps, const std::vector<PolyMap>& members) {
    const unsigned n = axis.n;
    const PMClass& w = axis.w_scaled;
    const std::vector<std::vector<PMClass>> nested = {
        {hn_act(n, w, 2), hn_act(n, w, -2)},
        {hn_act(n, w, 1), hn_act(n, w, -1)},
        {w},
    };
    const double tolerance = std::sqrt(axis.tail_norm_sq.get_d());

    MonotonicityCheck out;
    out.holds = true;
    for (const auto& f : members) {
        bool outer_member = true;
        for (const auto& set : nested) {
            double worst = 0;
            for (const auto& x : set) {
                const PMClass fx = cremona::diagonal_act(f, n, x);
                const double cosh_d = Rational(intersect(x, fx) / intersect(x, x)).get_d();
                worst = std::max(worst, std::acosh(std::max(cosh_d, 1.0)));
            }
            out.max_displacement = std::max(out.max_displacement, worst);
            const bool member = worst <= eps + tolerance;
            if (outer_member && !member) out.holds = false;
            outer_member = member;
        }
        ++out.members_checked;
    }
    return out;
}

CertReport certify(unsigned n, unsigned depth, std::optional<std::uint64_t> prime, const CertifyOptions& opts) {
    require_n(n);
    if (depth < 2) throw std::invalid_argument("depth must be at least 2");
    const Field field = prime ? Field::prime(*prime) : Field::rationals();
    require_char_not_dividing(n, field.characteristic());

    CertReport r;
    r.n = n;
    r.depth = depth;
    r.field = field.tag();
    r.star = epsilon_window(n, opts.eps);
    const double eps = r.star.chosen_eps;
    r.degree_bound = degree_bound(n, eps);
    r.degree_bound_ok = r.degree_bound < 4;

    const AxisData axis = cremona::axis_classes(n, depth);
    r.axis = check_axis(axis);
    r.exclusion3 = exclusion_check(n, 3, eps, axis);
    r.exclusion2 = exclusion_check(n, 2, eps, axis);
    r.deg3_bound = r.exclusion3.worst_case;
    r.deg2_bound = r.exclusion2.worst_case;
    r.bounds_exact = r.deg3_bound == -3 && r.deg2_bound == Rational(-2) + Rational(1, n);

    r.expected_cardinality = n * n - 1;
    std::vector<PolyMap> members;
    if (field.is_rationals()) {
        for (const auto& m : fix_set_root_exponents(n)) r.fix_set.push_back(m.to_string());
        // Rational points of the set: a = 1, and a = -1 when n is odd.
        const Scalar one(field, 1), zero(field, 0), minus_one(field, -1);
        members.push_back(PolyMap::affine_diagonal(one, zero, one, zero));
        if (n % 2 == 1) members.push_back(PolyMap::affine_diagonal(minus_one, zero, minus_one, zero));
    } else {
        members = fix_set_symbolic(n, field);
        for (const auto& m : members) r.fix_set.push_back(m.to_string());
        if (opts.run_oracle) {
            const auto brute = fix_set_bruteforce(n, field.characteristic(), opts.workers);
            r.oracle = OracleResult{brute.size(), brute == members};
            members = brute;
        }
    }
    r.monotonicity = check_fix_monotonicity(axis, eps, members);
    r.passed = is_self_consistent(r) && r.star.holds() && r.degree_bound_ok && r.bounds_exact &&
               r.exclusion3.excluded && r.exclusion2.excluded && r.axis.w_self_ok && r.axis.b_cross_ok &&
               r.axis.distance_ok && r.axis.translation_ok && r.fix_set.size() == r.expected_cardinality &&
               (!r.oracle || r.oracle->matches) && r.monotonicity.holds;
    return r;
}

bool is_self_consistent(const CertReport& r) {
    for (const auto& c : r.star.checks)
        if (std::abs((c.rhs - c.lhs) - c.slack) > 0) return false;
    if ((r.degree_bound < 4) != r.degree_bound_ok) return false;
    if (r.deg3_bound != r.exclusion3.worst_case || r.deg2_bound != r.exclusion2.worst_case) return false;
    if (r.bounds_exact != (r.deg3_bound == -3 && r.deg2_bound == Rational(-2) + Rational(1, r.n))) return false;
    for (const auto* e : {&r.exclusion3, &r.exclusion2}) {
        if (e->lower_bound != QSqrt2(0, Rational(e->deg + e->worst_case / 2))) return false;
        if (e->excluded != (e->margin >= -kVerdictTolerance)) return false;
    }
    const auto& a = r.axis;
    if (a.w_self_ok != (a.w_self_intersection == a.expected_w_self_intersection)) return false;
    if (a.b_cross_ok != (a.b_cross == 1)) return false;
    const Rational diff = a.cosh_translation - a.expected_cosh_translation;
    if (a.translation_ok != (diff * diff <= a.tail_norm_sq)) return false;
    return true;
}

namespace {

nlohmann::ordered_json qsqrt2_json(const QSqrt2& v) {
    return {{"rational", format_rational(v.rational_part())},
            {"sqrt2", format_rational(v.sqrt2_part())},
            {"approx", format_real(v.to_double())}};
}

nlohmann::ordered_json exclusion_json(const ExclusionVerdict& v) {
    return {{"degree", v.deg},
            {"worst_case_intersection", format_rational(v.worst_case)},
            {"lower_bound", qsqrt2_json(v.lower_bound)},
            {"threshold", format_real(v.threshold)},
            {"margin", format_real(v.margin)},
            {"excluded", v.excluded}};
}

}  // namespace

nlohmann::ordered_json to_json(const CertReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["depth"] = r.depth;
    j["field"] = r.field;
    nlohmann::ordered_json star;
    star["eps_max"] = format_real(r.star.eps_max);
    star["chosen_eps"] = format_real(r.star.chosen_eps);
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.star.checks)
        checks.push_back({{"inequality", c.name},
                          {"lhs", format_real(c.lhs)},
                          {"rhs", format_real(c.rhs)},
                          {"slack", format_real(c.slack)},
                          {"holds", c.holds}});
    star["checks"] = std::move(checks);
    star["holds"] = r.star.holds();
    j["star_window"] = std::move(star);
    j["degree_bound"] = {{"value", format_real(r.degree_bound)}, {"below_4", r.degree_bound_ok}};
    j["worst_case"] = {{"deg3", format_rational(r.deg3_bound)},
                       {"deg2", format_rational(r.deg2_bound)},
                       {"closed_forms_match", r.bounds_exact}};
    j["exclusion"] = {exclusion_json(r.exclusion3), exclusion_json(r.exclusion2)};
    const auto& a = r.axis;
    j["axis"] = {{"w_self_intersection", format_rational(a.w_self_intersection)},
                 {"expected_w_self_intersection", format_rational(a.expected_w_self_intersection)},
                 {"w_self_ok", a.w_self_ok},
                 {"b_plus_dot_b_minus", format_rational(a.b_cross)},
                 {"b_cross_ok", a.b_cross_ok},
                 {"distance_ell_w", format_real(a.distance_ell_w)},
                 {"distance_ok", a.distance_ok},
                 {"cosh_translation", format_rational(a.cosh_translation)},
                 {"expected_cosh_translation", format_rational(a.expected_cosh_translation)},
                 {"tail_norm_sq", format_rational(a.tail_norm_sq)},
                 {"translation_ok", a.translation_ok}};
    j["fix_set"] = r.fix_set;
    j["fix_cardinality"] = r.fix_set.size();
    j["expected_cardinality"] = r.expected_cardinality;
    if (r.oracle)
        j["oracle"] = {{"count", r.oracle->count}, {"matches_symbolic", r.oracle->matches}};
    else
        j["oracle"] = nullptr;
    j["fix_monotonicity"] = {{"members_checked", r.monotonicity.members_checked},
                             {"max_displacement", format_real(r.monotonicity.max_displacement)},
                             {"holds", r.monotonicity.holds}};
    j["passed"] = r.passed;
    return j;
}

}  // namespace cwpd::wpd
