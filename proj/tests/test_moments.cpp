#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

#include "sylvester/exactnum/decimal.hpp"
#include "sylvester/exactnum/special.hpp"
#include "sylvester/moments.hpp"

using namespace sylvester;
using namespace sylvester::moments;

namespace {

PiPolynomial q(long n, long d)
{
    return PiPolynomial(ratio(n, d));
}

PiPolynomial pi_term(long n, long d, int h)
{
    return PiPolynomial::monomial(ratio(n, d), h);
}

// Adaptive Gauss-Kronrod over [a0,a1] x [b0,b1].
template <class F>
double integrate2d(F f, double a0, double a1, double b0, double b1)
{
    using boost::math::quadrature::gauss_kronrod;
    auto inner = [&](double b) {
        return gauss_kronrod<double, 31>::integrate([&](double a) { return f(a, b); }, a0, a1, 15, 1e-13);
    };
    return gauss_kronrod<double, 31>::integrate(inner, b0, b1, 15, 1e-13);
}

// Miles' ball formulas in floating point through lgamma.
double log_kappa(double d)
{
    return 0.5 * d * std::log(M_PI) - std::lgamma(1.0 + 0.5 * d);
}

double miles_float(int d, int k, bool fixed_origin)
{
    double s = -k * std::lgamma(d + 1.0);
    s += (fixed_origin ? d : d + 1) * (log_kappa(d + k) - log_kappa(d));
    if (!fixed_origin)
        s += log_kappa(d * (d + k + 1.0)) - log_kappa((d + 1.0) * (d + k));
    for (int i = 1; i <= k; ++i)
        s += std::log(i) + log_kappa(i) - std::log(d + i) - log_kappa(d + i);
    return std::exp(s);
}

struct TableRow {
    long k;
    PiPolynomial midpoint, triangle;
    Rational ratio_value;
    double ratio_decimal;
};

const TableRow kTable1[] = {
    {3, q(1, 375), q(31, 9000), ratio(24, 31), 0.774194},
    {4, q(13, 21600), q(1, 900), ratio(13, 24), 0.541667},
    {5, q(151, 987840), q(1063, 2469600), ratio(755, 2126), 0.355127},
    {6, q(1, 23520), q(403, 2116800), ratio(90, 403), 0.223325},
    {7, q(83, 6531840), q(211, 2268000), ratio(2075, 15192), 0.136585},
    {8, q(73, 18144000), q(13, 264600), ratio(511, 6240), 0.081891},
    {9, q(1433, 1073318400), q(2593, 93915360), ratio(10031, 207440), 0.0483562},
    {10, q(647, 1405071360), q(697, 42688800), ratio(22645, 802944), 0.0282025},
};

}  // namespace

TEST_CASE("interval moments")
{
    CHECK(interval_moment(0, Rational(5)) == PiPolynomial(1L));
    CHECK(interval_moment(1, Rational(1)) == q(1, 3));
    CHECK(interval_moment(2, Rational(1)) == q(1, 6));
    CHECK(interval_moment(3, Rational(2)) == q(4, 5));
    CHECK_THROWS_AS(interval_moment(1, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(interval_moment(1, ratio(-1, 2)), std::domain_error);
    CHECK_THROWS_AS(interval_moment(-1, Rational(1)), std::domain_error);

    // quadrature of |x - y|^k over the unit square, inner integral split at the kink
    using boost::math::quadrature::gauss_kronrod;
    for (int k = 0; k <= 6; ++k) {
        auto inner = [k](double y) {
            auto f = [k, y](double x) { return std::pow(std::abs(x - y), k); };
            return gauss_kronrod<double, 31>::integrate(f, 0, y, 15, 1e-13) +
                   gauss_kronrod<double, 31>::integrate(f, y, 1, 15, 1e-13);
        };
        double oracle = gauss_kronrod<double, 31>::integrate(inner, 0, 1, 15, 1e-13);
        CHECK(to_double(interval_moment(k, Rational(1))) == doctest::Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("Miles ball moments")
{
    CHECK(ball_moment(1, 1) == q(2, 3));
    // 35/(48 pi^2) is the area-normalised value; the unit disk itself gives 35/(48 pi)
    CHECK(ball_moment(2, 1) == pi_term(35, 48, -2));
    CHECK(ball_moment(1, 3) == q(4, 5));
    CHECK(ball_moment(5, 0) == PiPolynomial(1L));
    CHECK_THROWS_AS(ball_moment(0, 1), std::domain_error);
    CHECK_THROWS_AS(ball_moment(2, -1), std::domain_error);

    CHECK(ball_fixed_moment(3, 1) == pi_term(9, 1024, 2));
    CHECK(ball_fixed_moment(1, 1) == q(1, 2));
    CHECK(ball_fixed_moment(2, 1) == pi_term(4, 9, -2));
    CHECK_THROWS_AS(ball_fixed_moment(-1, 1), std::domain_error);

    for (int d = 1; d <= 6; ++d) {
        for (int k = 0; k <= 5; ++k) {
            CHECK(to_double(ball_moment(d, k)) == doctest::Approx(miles_float(d, k, false)).epsilon(1e-10));
            CHECK(to_double(ball_fixed_moment(d, k)) == doctest::Approx(miles_float(d, k, true)).epsilon(1e-10));
        }
    }
    for (long k = 0; k <= 20; ++k)
        CHECK(ball_moment(1, k) == interval_moment(k, Rational(2)));
}

TEST_CASE("half-ball with the centre of its base fixed")
{
    CHECK(halfball_fixed_moment(3, 1) == pi_term(9, 1024, 2));
    CHECK(halfball_fixed_moment(2, 1) == pi_term(4, 9, -2));
    for (long d = 1; d <= 10; ++d) {
        CHECK(halfball_fixed_moment(d, 0) == PiPolynomial(1L));
        for (long k = 0; k <= 10; ++k)
            CHECK(halfball_fixed_moment(d, k) == ball_fixed_moment(d, k));
    }
    // d = 1: E|X|^k for X uniform on [0, 1]
    for (long k = 0; k <= 10; ++k)
        CHECK(halfball_fixed_moment(1, k) == q(1, k + 1));
}

TEST_CASE("triangle moments reproduce the table")
{
    CHECK(triangle_moment(0) == PiPolynomial(1L));
    CHECK(triangle_moment(1) == q(1, 12));
    CHECK(triangle_moment(2) == q(1, 72));
    CHECK(triangle_midpoint_moment(0) == PiPolynomial(1L));
    CHECK(triangle_midpoint_moment(1) == q(5, 54));
    CHECK(triangle_midpoint_moment(2) == q(1, 72));
    CHECK(triangle_midpoint_moment(2) == triangle_moment(2));
    CHECK_THROWS_AS(triangle_moment(-1), std::domain_error);

    for (const auto& row : kTable1) {
        CAPTURE(row.k);
        CHECK(triangle_midpoint_moment(row.k) == row.midpoint);
        CHECK(triangle_moment(row.k) == row.triangle);
        CHECK(tx_over_t_ratio(row.k) == row.ratio_value);
        CHECK(tx_over_t_ratio(row.k) < 1);
        CHECK(row.ratio_value.get_d() == doctest::Approx(row.ratio_decimal).epsilon(1e-5));
    }
    CHECK(tx_over_t_ratio(2) == 1);
    CHECK(tx_over_t_ratio(1) == ratio(10, 9));
    for (long k = 0; k <= 30; ++k)
        CHECK(tx_over_t_ratio(k) == tx_over_t_ratio_closed_form(k));
}

TEST_CASE("line-integral pieces of the midpoint moment")
{
    CHECK(help_integral_I0(1) == q(1, 18));
    CHECK(help_integral_I0(0) == q(1, 4));
    CHECK(help_integral_I0(2) == q(1, 72));
    CHECK(help_integral_I12(1) == q(1, 24));
    CHECK(help_integral_I12(0) == q(1, 4));
    CHECK(help_integral_I12(2) == q(1, 96));

    for (int k = 0; k <= 8; ++k) {
        CAPTURE(k);
        double scale = std::pow(0.5, k);
        double i0 = scale * integrate2d([k](double a, double b) { return std::pow(a + b - 2 * a * b, k) * a * b; },
                                        0, 1, 0, 1);
        auto piece = [k](double a, double b) { return std::pow(std::abs(b - 2 * a * b), k) * a * b; };
        double i12 = scale * (integrate2d(piece, 0, 0.5, 0, 1) + integrate2d(piece, 0.5, 1, 0, 1));
        CHECK(to_double(help_integral_I0(k)) == doctest::Approx(i0).epsilon(1e-8));
        CHECK(to_double(help_integral_I12(k)) == doctest::Approx(i12).epsilon(1e-8));
    }

    CHECK(theorem3_consistency(3) == q(1, 375));
    CHECK(theorem3_consistency(1) == q(5, 54));
    CHECK(theorem3_consistency(0) == PiPolynomial(1L));
    for (long k = 0; k <= 20; ++k)
        CHECK(theorem3_consistency(k) == triangle_midpoint_moment(k));
}

TEST_CASE("q ratio")
{
    CHECK(q_ratio(3, 4) < 1);
    CHECK(q_ratio(3, 3) > 1);
    CHECK(q_ratio(2, 11) < 1);
    CHECK(q_ratio(2, 10) > 1);
    CHECK(q_ratio(2, 1) == ratio(16, 9));
    CHECK_THROWS_AS(q_ratio(1, 3), std::domain_error);
    CHECK_THROWS_AS(q_ratio(2, 0), std::domain_error);

    for (long k = 1; k <= 100; ++k) {
        Rational step2 = q_ratio(2, k + 1) / q_ratio(2, k);
        Rational step3 = q_ratio(3, k + 1) / q_ratio(3, k);
        CHECK(step2 == ratio(4 * (k + 4) * (2 * k + 7) * (2 * k + 8), (3 * k + 7) * (3 * k + 8) * (3 * k + 9)));
        Rational expected3 = Rational(Integer(4 * (k + 5)) * (3 * k + 13) * (3 * k + 14) * (3 * k + 15)) /
                             Rational(Integer(4 * k + 13) * (4 * k + 14) * (4 * k + 15) * (4 * k + 16));
        CHECK(step3 == expected3);
        if (k >= 4)
            CHECK(step2 < 1);
        if (k >= 2)
            CHECK(step3 < 1);
    }
    CHECK(q_ratio(2, 4) / q_ratio(2, 3) > 1);
}

TEST_CASE("exact ratio bound for half-balls")
{
    CHECK(exact_ratio_bound(3, 2) == PiPolynomial(1L));
    CHECK(exact_ratio_bound(1, 1) == q(3, 2));
    // 2^3 kappa_3/kappa_6 * kappa_24/kappa_21 = 64 * 21!! / (12! * 2^11)
    CHECK(exact_ratio_bound(3, 3) == q(29393, 32768));
    CHECK(compare(exact_ratio_bound(3, 3), PiPolynomial(1L)) == std::strong_ordering::less);
    CHECK_THROWS_AS(exact_ratio_bound(3, 0), std::domain_error);

    for (int d = 1; d <= 5; ++d) {
        for (int k = 1; k <= 6; ++k) {
            double expected = std::exp(k * std::log(2.0) + log_kappa(d) - log_kappa(d + k) +
                                       log_kappa((d + 1.0) * (d + k)) - log_kappa(d * (d + k + 1.0)));
            CHECK(to_double(exact_ratio_bound(d, k)) == doctest::Approx(expected).epsilon(1e-10));
            // the exact bound is never weaker than sqrt(q)
            if (d >= 2) {
                PiPolynomial b = exact_ratio_bound(d, k);
                CHECK(compare(b * b, PiPolynomial(q_ratio(d, k))) != std::strong_ordering::greater);
            }
        }
    }
}

TEST_CASE("tetrahedron constant")
{
    PiPolynomial v = tetrahedron_moment_k1();
    REQUIRE(v.terms().size() == 2);
    CHECK(v.terms().begin()->first == 0);
    CHECK(v.terms().rbegin()->first == 4);
    CHECK(to_decimal(v, 4).text == "0.01739");
    CHECK(to_decimal(v, 6).text == "0.0173982");
}

TEST_CASE("query validation and dispatch")
{
    MomentQuery query;
    query.body = BodyKind::triangle;
    query.fixed = FixedKind::edge_midpoint;
    query.d = 2;
    query.k = 4;
    CHECK(exact_moment(query) == q(13, 21600));

    query.d = 3;
    CHECK_THROWS_AS(query.validate(), std::invalid_argument);

    MomentQuery interval{1, 1, BodyKind::interval, FixedKind::none, Rational(1)};
    CHECK(exact_moment(interval) == q(1, 3));
    interval.fixed = FixedKind::origin;
    CHECK_THROWS_AS(exact_moment(interval), std::invalid_argument);

    MomentQuery half{3, 1, BodyKind::halfball, FixedKind::origin, Rational(1)};
    CHECK(exact_moment(half) == pi_term(9, 1024, 2));
    half.fixed = FixedKind::none;
    CHECK_FALSE(exact_moment(half).has_value());

    MomentQuery tetra{3, 1, BodyKind::tetrahedron, FixedKind::facet_centroid, Rational(1)};
    CHECK_FALSE(exact_moment(tetra).has_value());
    tetra.fixed = FixedKind::none;
    CHECK(exact_moment(tetra) == tetrahedron_moment_k1());

    MomentQuery bad{2, 1, BodyKind::ball, FixedKind::edge_midpoint, Rational(1)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    CHECK(parse_body_kind("halfball") == BodyKind::halfball);
    CHECK(parse_fixed_kind("facet-centroid") == FixedKind::facet_centroid);
    CHECK_FALSE(parse_body_kind("cube").has_value());
}

TEST_CASE("volume scaling")
{
    // triangle (0,0), (1,0), (0,1) has area 1/2
    CHECK(scale_to_volume(triangle_moment(1), ratio(1, 2), 1) == q(1, 24));
    CHECK(scale_to_volume(triangle_moment(0), Rational(7), 0) == PiPolynomial(1L));
}

TEST_CASE("plane counterexample report")
{
    auto r4 = plane_counterexample_report(4);
    CHECK(r4.family == CounterexampleFamily::triangle_edge_midpoint);
    CHECK(r4.ratio == ratio(13, 24));
    CHECK(r4.counterexample);

    auto r2 = plane_counterexample_report(2);
    CHECK(r2.family == CounterexampleFamily::none);
    CHECK(r2.ratio == 1);
    CHECK_FALSE(r2.counterexample);

    auto r1 = plane_counterexample_report(1);
    CHECK_FALSE(r1.counterexample);
    CHECK(r1.ratio == ratio(10, 9));

    auto r11 = plane_counterexample_report(11);
    CHECK(r11.family == CounterexampleFamily::halfdisk_centre);
    CHECK(r11.ratio == q_ratio(2, 11));
    CHECK(r11.counterexample);

    for (long k = 3; k <= 40; ++k)
        CHECK(plane_counterexample_report(k).counterexample);
    CHECK_THROWS_AS(plane_counterexample_report(0), std::domain_error);
}
