#include "sylvester/moments.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "sylvester/exactnum/special.hpp"

namespace sylvester::moments {
namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::domain_error(what);
}

Rational power(const Rational& base, long exponent)
{
    Rational r(1);
    for (long i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

Rational two_power(long exponent)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(1) / Rational(p) : Rational(p);
}

// sum_{l=1}^{k+1} C(k+2, l)^{-1}
Rational inverse_binomial_sum_midpoint(long k)
{
    Rational s(0);
    for (long l = 1; l <= k + 1; ++l)
        s += Rational(1) / Rational(binomial(static_cast<unsigned>(k + 2), static_cast<unsigned>(l)));
    return s;
}

// sum_{i=0}^{k} C(k, i)^{-2}
Rational inverse_binomial_square_sum(long k)
{
    Rational s(0);
    for (long i = 0; i <= k; ++i) {
        Integer c = binomial(static_cast<unsigned>(k), static_cast<unsigned>(i));
        s += Rational(1) / Rational(c * c);
    }
    return s;
}

// omega_1 ... omega_k / (omega_{d+1} ... omega_{d+k})
PiPolynomial omega_ratio(long d, long k)
{
    PiPolynomial num(1L), den(1L);
    for (long i = 1; i <= k; ++i) {
        num *= omega(i);
        den *= omega(d + i);
    }
    return num / den;
}

Rational rational_part(const PiPolynomial& p)
{
    auto r = p.as_rational();
    if (!r)
        throw std::logic_error("expected a rational value, got " + p.to_string());
    return *r;
}

constexpr std::array<std::string_view, 5> kBodyNames{"interval", "ball", "halfball", "triangle", "tetrahedron"};
constexpr std::array<std::string_view, 4> kFixedNames{"none", "origin", "edge_midpoint", "facet_centroid"};

}  // namespace

std::string_view to_string(BodyKind kind)
{
    return kBodyNames[static_cast<size_t>(kind)];
}

std::string_view to_string(FixedKind kind)
{
    return kFixedNames[static_cast<size_t>(kind)];
}

std::optional<BodyKind> parse_body_kind(std::string_view name)
{
    for (size_t i = 0; i < kBodyNames.size(); ++i)
        if (kBodyNames[i] == name)
            return static_cast<BodyKind>(i);
    return std::nullopt;
}

std::optional<FixedKind> parse_fixed_kind(std::string_view name)
{
    for (size_t i = 0; i < kFixedNames.size(); ++i)
        if (kFixedNames[i] == name)
            return static_cast<FixedKind>(i);
    if (name == "midpoint" || name == "edge-midpoint")
        return FixedKind::edge_midpoint;
    if (name == "centroid" || name == "facet-centroid")
        return FixedKind::facet_centroid;
    return std::nullopt;
}

void MomentQuery::validate() const
{
    auto fail = [this](const std::string& why) {
        throw std::invalid_argument(std::string(to_string(body)) + "/" + std::string(to_string(fixed)) + ": " + why);
    };
    if (k < 0)
        fail("moment order must be nonnegative");
    if (d < 1)
        fail("dimension must be positive");
    switch (body) {
    case BodyKind::interval:
        if (d != 1)
            fail("interval queries require d = 1");
        if (length <= 0)
            fail("interval length must be positive");
        break;
    case BodyKind::triangle:
        if (d != 2)
            fail("triangle queries require d = 2");
        break;
    case BodyKind::tetrahedron:
        if (d != 3)
            fail("tetrahedron queries require d = 3");
        break;
    case BodyKind::ball:
    case BodyKind::halfball:
        break;
    }
    switch (fixed) {
    case FixedKind::none:
        break;
    case FixedKind::origin:
        if (body != BodyKind::ball && body != BodyKind::halfball)
            fail("origin is only a fixed vertex for ball and halfball");
        break;
    case FixedKind::edge_midpoint:
        if (body != BodyKind::triangle)
            fail("edge_midpoint is only defined for triangle");
        break;
    case FixedKind::facet_centroid:
        if (body != BodyKind::tetrahedron)
            fail("facet_centroid is only defined for tetrahedron");
        break;
    }
}

PiPolynomial interval_moment(long k, const Rational& length)
{
    require(k >= 0, "interval_moment: k must be nonnegative");
    require(length > 0, "interval_moment: length must be positive");
    return Rational(2 * power(length, k) / Rational((k + 1) * (k + 2)));
}

PiPolynomial ball_moment(long d, long k)
{
    require(d >= 1 && k >= 0, "ball_moment: need d >= 1 and k >= 0");
    Rational fact_pow = power(Rational(factorial(static_cast<unsigned>(d))), k);
    PiPolynomial kappa_ratio = kappa(d + k) / kappa(d);
    return kappa_ratio.pow(static_cast<unsigned>(d + 1)) * kappa(d * (d + k + 1)) /
           kappa((d + 1) * (d + k)) * omega_ratio(d, k) / PiPolynomial(fact_pow);
}

PiPolynomial ball_fixed_moment(long d, long k)
{
    require(d >= 1 && k >= 0, "ball_fixed_moment: need d >= 1 and k >= 0");
    Rational fact_pow = power(Rational(factorial(static_cast<unsigned>(d))), k);
    PiPolynomial kappa_ratio = kappa(d + k) / kappa(d);
    return kappa_ratio.pow(static_cast<unsigned>(d)) * omega_ratio(d, k) / PiPolynomial(fact_pow);
}

PiPolynomial halfball_fixed_moment(long d, long k)
{
    require(d >= 1 && k >= 0, "halfball_fixed_moment: need d >= 1 and k >= 0");
    return ball_fixed_moment(d, k);
}

PiPolynomial triangle_moment(long k)
{
    require(k >= 0, "triangle_moment: k must be nonnegative");
    Rational k1(k + 1), k2(k + 2);
    Rational prefactor = Rational(12) / (k1 * k1 * k1 * k2 * k2 * k2 * Rational(k + 3) * Rational(2 * k + 5));
    return Rational(prefactor * (6 * k1 * k1 + k2 * k2 * inverse_binomial_square_sum(k)));
}

PiPolynomial triangle_midpoint_moment(long k)
{
    require(k >= 0, "triangle_midpoint_moment: k must be nonnegative");
    Rational k2(k + 2);
    Rational prefactor = two_power(3 - k) / (Rational(k + 1) * k2 * k2 * Rational(k + 3));
    return Rational(prefactor * (inverse_binomial_sum_midpoint(k) + 1));
}

PiPolynomial help_integral_I0(long k)
{
    require(k >= 0, "help_integral_I0: k must be nonnegative");
    return Rational(inverse_binomial_sum_midpoint(k) / (two_power(k) * Rational((k + 1) * (k + 2))));
}

PiPolynomial help_integral_I12(long k)
{
    require(k >= 0, "help_integral_I12: k must be nonnegative");
    return Rational(Rational(1) / (two_power(k + 1) * Rational((k + 1) * (k + 2))));
}

PiPolynomial theorem3_consistency(long k)
{
    require(k >= 0, "theorem3_consistency: k must be nonnegative");
    PiPolynomial lines = help_integral_I0(k) + PiPolynomial(2L) * help_integral_I12(k);
    // Moment for the reference triangle of area 1/2.
    PiPolynomial half_area = PiPolynomial(Rational(two_power(3 - k) / Rational((k + 2) * (k + 3)))) * lines;
    return scale_to_volume(half_area, Rational(2), k);
}

Rational q_ratio(long d, long k)
{
    require(d >= 2 && k >= 1, "q_ratio: need d >= 2 and k >= 1");
    Integer num(1), den(1);
    long top = d * (d + k + 1);
    for (long i = 1; i <= k; ++i) {
        num *= 4 * (d + 1 + i);
        den *= top + i;
    }
    return make_rational(num, den);
}

PiPolynomial exact_ratio_bound(long d, long k)
{
    require(d >= 1 && k >= 1, "exact_ratio_bound: need d >= 1 and k >= 1");
    return PiPolynomial(Rational(two_power(k))) * kappa(d) / kappa(d + k) * kappa((d + 1) * (d + k)) /
           kappa(d * (d + k + 1));
}

Rational tx_over_t_ratio(long k)
{
    require(k >= 0, "tx_over_t_ratio: k must be nonnegative");
    return rational_part(triangle_midpoint_moment(k)) / rational_part(triangle_moment(k));
}

Rational tx_over_t_ratio_closed_form(long k)
{
    require(k >= 0, "tx_over_t_ratio_closed_form: k must be nonnegative");
    Rational k1(k + 1), k2(k + 2);
    Rational lead = k1 * k1 * k2 * Rational(2 * k + 5) / (3 * two_power(k - 1));
    return lead * (inverse_binomial_sum_midpoint(k) + 1) / (6 * k1 * k1 + k2 * k2 * inverse_binomial_square_sum(k));
}

PiPolynomial tetrahedron_moment_k1()
{
    return PiPolynomial(ratio(13, 720)) - PiPolynomial::monomial(ratio(1, 15015), 4);
}

PiPolynomial scale_to_volume(const PiPolynomial& unit_moment, const Rational& volume, long k)
{
    require(volume > 0 && k >= 0, "scale_to_volume: need positive volume and k >= 0");
    return unit_moment * PiPolynomial(power(volume, k));
}

std::optional<PiPolynomial> exact_moment(const MomentQuery& q)
{
    q.validate();
    switch (q.body) {
    case BodyKind::interval:
        if (q.fixed == FixedKind::none)
            return interval_moment(q.k, q.length);
        break;
    case BodyKind::ball:
        if (q.fixed == FixedKind::none)
            return ball_moment(q.d, q.k);
        return ball_fixed_moment(q.d, q.k);
    case BodyKind::halfball:
        if (q.fixed == FixedKind::origin)
            return halfball_fixed_moment(q.d, q.k);
        break;
    case BodyKind::triangle:
        if (q.fixed == FixedKind::none)
            return triangle_moment(q.k);
        return triangle_midpoint_moment(q.k);
    case BodyKind::tetrahedron:
        if (q.fixed == FixedKind::none && q.k == 0)
            return PiPolynomial(1L);
        if (q.fixed == FixedKind::none && q.k == 1)
            return tetrahedron_moment_k1();
        break;
    }
    return std::nullopt;
}

std::string supported_exact_combinations()
{
    return "interval/none (d=1, any k, --l), ball/none, ball/origin, halfball/origin (any d >= 1, k >= 0), "
           "triangle/none, triangle/edge_midpoint (d=2, any k), tetrahedron/none (d=3, k <= 1)";
}

std::string_view to_string(CounterexampleFamily family)
{
    switch (family) {
    case CounterexampleFamily::triangle_edge_midpoint:
        return "triangle_edge_midpoint";
    case CounterexampleFamily::halfdisk_centre:
        return "halfdisk_centre";
    case CounterexampleFamily::none:
        break;
    }
    return "none";
}

PlaneReport plane_counterexample_report(long k)
{
    require(k >= 1, "plane_counterexample_report: k must be positive");
    PlaneReport r;
    r.k = k;
    if (k <= 2) {
        r.ratio = tx_over_t_ratio(k);
        r.note = "no counterexample from these families: triangle midpoint ratio is >= 1";
        return r;
    }
    if (k <= 10) {
        r.family = CounterexampleFamily::triangle_edge_midpoint;
        r.ratio = tx_over_t_ratio(k);
        r.counterexample = r.ratio < 1;
        r.note = "E V_{T,x}^k / E V_T^k < 1 for a triangle T and an edge midpoint x";
        return r;
    }
    // q(2, .) decreases from k = 4 on, so q(2, k) <= q(2, 11) < 1.
    r.family = CounterexampleFamily::halfdisk_centre;
    r.ratio = q_ratio(2, k);
    r.counterexample = r.ratio < 1;
    r.note = "sqrt(q(2,k)) < 1 bounds E V_{B+,o}^k / E V_{B+}^k for the half-disk";
    return r;
}

}  // namespace sylvester::moments
