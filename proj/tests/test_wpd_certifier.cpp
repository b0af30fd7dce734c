#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "cwpd/wpd_certifier.hpp"

using namespace cwpd::wpd;
using cwpd::QSqrt2;
using cwpd::Rational;
using cwpd::cremona::Scalar;

namespace {

// Least (sum m_i e_i) . r_n over all injective placements, by exhaustion.
Rational exhaustive_worst_case(const AxisData& axis, std::vector<unsigned> mult) {
    std::vector<Rational> pairing;
    for (const auto& [label, coeff] : axis.r_n.exc()) {
        (void)coeff;
        pairing.push_back(cwpd::pm::intersect(cwpd::pm::PMClass::exceptional(label), axis.r_n));
    }
    const std::size_t m = pairing.size();
    Rational best = 0;
    bool first = true;
    std::vector<bool> used(m, false);
    std::sort(mult.begin(), mult.end(), std::greater<>());
    std::function<void(std::size_t, std::size_t, Rational)> place = [&](std::size_t i, std::size_t prev,
                                                                         Rational acc) {
        if (i == mult.size()) {
            if (first || acc < best) best = acc;
            first = false;
            return;
        }
        // equal multiplicities are placed in increasing slot order
        const std::size_t start = i > 0 && mult[i] == mult[i - 1] ? prev + 1 : 0;
        for (std::size_t s = start; s < m; ++s) {
            if (used[s]) continue;
            used[s] = true;
            place(i + 1, s, acc + mult[i] * pairing[s]);
            used[s] = false;
        }
    };
    place(0, 0, 0);
    return best;
}

}  // namespace

TEST(Window, SmallestCase) {
    const auto w = epsilon_window(2);
    const double expected = std::acosh(std::sqrt(2.0) + 1 / (2 * std::sqrt(2.0))) - std::acosh(std::sqrt(2.0));
    EXPECT_NEAR(w.eps_max, expected, 1e-15);
    EXPECT_GT(w.eps_max, 0);
    EXPECT_EQ(w.chosen_eps, w.eps_max);
    EXPECT_TRUE(w.holds());
    ASSERT_EQ(w.checks.size(), 3u);
}

TEST(Window, SanityConstants) {
    const auto s = window_sanity_constants();
    EXPECT_NEAR(s.window_sum, 2.052, 5e-4);
    EXPECT_NEAR(s.acosh4, 2.063, 5e-4);
    EXPECT_LT(s.window_sum, s.acosh4);
}

TEST(Window, ConsistentAndShrinkingUpToHundred) {
    double prev = 1e9;
    for (unsigned n = 2; n <= 100; ++n) {
        const auto w = epsilon_window(n);
        EXPECT_GT(w.eps_max, 0) << n;
        EXPECT_LT(w.eps_max, prev) << n;
        EXPECT_TRUE(w.holds()) << n;
        for (const auto& c : w.checks) EXPECT_NEAR(c.slack, c.rhs - c.lhs, 0) << c.name;
        prev = w.eps_max;
    }
}

TEST(Window, OverrideValidation) {
    EXPECT_TRUE(epsilon_window(3, 0.01).holds());
    EXPECT_THROW(epsilon_window(3, 0.0), std::invalid_argument);
    EXPECT_THROW(epsilon_window(3, eps_max(3) * 1.01), std::invalid_argument);
    EXPECT_THROW(epsilon_window(1), std::invalid_argument);
}

TEST(DegreeBound, LimitAndRange) {
    EXPECT_NEAR(degree_bound(2, 1e-12), 3.0, 1e-9);
    const double b = degree_bound(2, eps_max(2));
    EXPECT_GT(b, 3);
    EXPECT_LT(b, 4);
    for (unsigned n = 2; n <= 100; ++n) EXPECT_LT(degree_bound(n, eps_max(n)), 4.0);
    EXPECT_THROW(degree_bound(2, 1.0), std::invalid_argument);
}

TEST(WorstCase, ClosedForms) {
    for (unsigned n = 2; n <= 10; ++n) {
        const auto axis = cwpd::cremona::axis_classes(n, 3);
        EXPECT_EQ(worst_case_intersection(n, 3, axis), -3);
        EXPECT_EQ(worst_case_intersection(n, 2, axis), Rational(-2) + Rational(1, n));
    }
    EXPECT_EQ(worst_case_intersection(2, 2, cwpd::cremona::axis_classes(2, 2)), Rational(-3, 2));
}

TEST(WorstCase, GreedyMatchesExhaustivePlacement) {
    for (unsigned n : {2u, 3u}) {
        const auto axis = cwpd::cremona::axis_classes(n, 2);
        EXPECT_EQ(exhaustive_worst_case(axis, {1, 1, 1}), worst_case_intersection(n, 2, axis));
        EXPECT_EQ(exhaustive_worst_case(axis, {2, 1, 1, 1, 1}), worst_case_intersection(n, 3, axis));
    }
}

TEST(WorstCase, Errors) {
    const auto axis = cwpd::cremona::axis_classes(2, 3);
    EXPECT_THROW(worst_case_intersection(2, 4, axis), std::invalid_argument);
    EXPECT_THROW(worst_case_intersection(3, 3, axis), std::invalid_argument);
    EXPECT_THROW(worst_case_intersection(2, 3, cwpd::cremona::axis_classes(2, 1)), std::invalid_argument);
}

TEST(Exclusion, BothDegrees) {
    for (unsigned n = 2; n <= 12; ++n) {
        const auto axis = cwpd::cremona::axis_classes(n, 4);
        const double e = eps_max(n);
        const auto v3 = exclusion_check(n, 3, e, axis);
        EXPECT_EQ(v3.lower_bound, QSqrt2(0, Rational(3, 2)));
        EXPECT_TRUE(v3.excluded);
        EXPECT_GT(v3.margin, 0.1);
        const auto v2 = exclusion_check(n, 2, e, axis);
        EXPECT_EQ(v2.lower_bound, QSqrt2(0, Rational(1) + Rational(1, 2 * n)));
        EXPECT_TRUE(v2.excluded);
        EXPECT_NEAR(v2.margin, 0.0, 1e-12);
        EXPECT_TRUE(exclusion_check(n, 2, e / 2, axis).excluded);
    }
}

TEST(Exclusion, TightAtWindowEdge) {
    const auto axis = cwpd::cremona::axis_classes(2, 4);
    EXPECT_FALSE(exclusion_check(2, 2, eps_max(2) + 1e-6, axis).excluded);
    EXPECT_TRUE(exclusion_check(2, 3, eps_max(2) + 1e-6, axis).excluded);
}

TEST(FixSet, SymbolicExamples) {
    const auto f7 = Field::prime(7);
    const auto s = fix_set_symbolic(2, f7);
    ASSERT_EQ(s.size(), 3u);
    std::vector<std::uint64_t> as;
    for (const auto& m : s) {
        const auto c = cwpd::cremona::as_affine_diagonal(m);
        ASSERT_TRUE(c);
        EXPECT_TRUE(c->b.is_zero() && c->d.is_zero());
        EXPECT_EQ(c->c, c->a.pow(2));
        as.push_back(c->a.residue());
    }
    std::sort(as.begin(), as.end());
    EXPECT_EQ(as, (std::vector<std::uint64_t>{1, 2, 4}));
    EXPECT_EQ(fix_set_symbolic(3, Field::prime(17)).size(), 8u);
    EXPECT_EQ(s.front(), PolyMap::identity(f7));
    EXPECT_THROW(fix_set_symbolic(2, Field::prime(5)), std::invalid_argument);
    EXPECT_THROW(fix_set_symbolic(2, Field::prime(2)), std::invalid_argument);
    EXPECT_THROW(fix_set_symbolic(2, Field::rationals()), std::invalid_argument);
}

TEST(FixSet, RootExponentsOverQ) {
    for (unsigned n = 2; n <= 6; ++n) {
        const auto roots = fix_set_root_exponents(n);
        ASSERT_EQ(roots.size(), n * n - 1);
        for (const auto& r : roots) {
            // c = a^n and a = c^n in the exponent group Z/(n^2-1)
            EXPECT_EQ(r.c_exp, (n * r.a_exp) % r.order);
            EXPECT_EQ(r.a_exp, (n * r.c_exp) % r.order);
        }
    }
    EXPECT_EQ(fix_set_root_exponents(2)[0].to_string(), "(x, y), z^3 = 1");
}

TEST(FixSet, BruteForceMatchesSymbolic) {
    for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 7}, {2, 13}, {3, 17}})
        EXPECT_EQ(fix_set_bruteforce(n, p), fix_set_symbolic(n, Field::prime(p))) << n << " " << p;
}

TEST(FixSet, BruteForceWithoutRootsOfUnity) {
    const auto f = fix_set_bruteforce(2, 5);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0], PolyMap::identity(Field::prime(5)));
    EXPECT_THROW(fix_set_bruteforce(2, 2), std::invalid_argument);
    EXPECT_THROW(fix_set_bruteforce(2, 1009), std::invalid_argument);
}

TEST(FixSet, WorkerCountDoesNotChangeResult) {
    const auto ref = fix_set_bruteforce(2, 13, 1);
    for (unsigned w : {2u, 3u, 8u, 0u}) EXPECT_EQ(fix_set_bruteforce(2, 13, w), ref);
}

TEST(AxisChecks, AllHold) {
    for (unsigned n : {2u, 3u, 5u}) {
        const auto c = check_axis(cwpd::cremona::axis_classes(n, 20));
        EXPECT_TRUE(c.w_self_ok && c.b_cross_ok && c.distance_ok && c.translation_ok) << n;
    }
}

TEST(Monotonicity, FixMembersNestAlongOrbit) {
    const auto axis = cwpd::cremona::axis_classes(3, 10);
    const auto members = fix_set_bruteforce(3, 17);
    const auto m = check_fix_monotonicity(axis, eps_max(3), members);
    EXPECT_EQ(m.members_checked, 8u);
    EXPECT_TRUE(m.holds);
    EXPECT_EQ(m.max_displacement, 0.0);
}

TEST(Certify, ReportedExamples) {
    const auto r27 = certify(2, 20, 7);
    EXPECT_TRUE(r27.passed);
    EXPECT_EQ(r27.fix_set.size(), 3u);
    ASSERT_TRUE(r27.oracle);
    EXPECT_TRUE(r27.oracle->matches);

    const auto r317 = certify(3, 20, 17);
    EXPECT_TRUE(r317.passed);
    EXPECT_EQ(r317.fix_set.size(), 8u);

    try {
        certify(2, 20, 2);
        FAIL() << "expected refusal";
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "characteristic divides n");
    }
}

TEST(Certify, RationalMode) {
    for (unsigned n = 2; n <= 7; ++n) {
        const auto r = certify(n, 12, std::nullopt);
        EXPECT_TRUE(r.passed) << n;
        EXPECT_EQ(r.fix_set.size(), n * n - 1);
        EXPECT_FALSE(r.oracle);
        EXPECT_EQ(r.monotonicity.members_checked, n % 2 ? 2u : 1u);
    }
}

TEST(Certify, SelfConsistencyDetectsTampering) {
    auto r = certify(2, 20, 13);
    EXPECT_TRUE(is_self_consistent(r));
    auto t = r;
    t.exclusion2.margin = -1;
    EXPECT_FALSE(is_self_consistent(t));
    t = r;
    t.deg2_bound = -2;
    EXPECT_FALSE(is_self_consistent(t));
    t = r;
    t.axis.cosh_translation += 1;
    EXPECT_FALSE(is_self_consistent(t));
}

TEST(Certify, JsonCarriesIntermediates) {
    const auto j = to_json(certify(2, 20, 7));
    EXPECT_EQ(j["worst_case"]["deg2"], "-3/2");
    EXPECT_EQ(j["axis"]["b_plus_dot_b_minus"], "1/1");
    EXPECT_EQ(j["fix_cardinality"], 3);
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["star_window"]["checks"].size(), 3u);
    EXPECT_EQ(j.dump(), to_json(certify(2, 20, 7, {std::nullopt, true, 3})).dump());
}
