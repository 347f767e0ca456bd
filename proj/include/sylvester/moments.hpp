#pragma once

// Closed-form moments E V^k of random simplex volumes.
//
// Triangle and tetrahedron results are for bodies of unit volume; use
// scale_to_volume() to obtain the moment for a body of another volume.

#include <optional>
#include <string>
#include <string_view>

#include "sylvester/exactnum/pi_polynomial.hpp"

namespace sylvester::moments {

enum class BodyKind { interval, ball, halfball, triangle, tetrahedron };
enum class FixedKind { none, origin, edge_midpoint, facet_centroid };

std::string_view to_string(BodyKind kind);
std::string_view to_string(FixedKind kind);
std::optional<BodyKind> parse_body_kind(std::string_view name);
std::optional<FixedKind> parse_fixed_kind(std::string_view name);

/// One (body, fixed vertex, d, k) combination.
struct MomentQuery {
    long d = 0;
    long k = 0;
    BodyKind body = BodyKind::ball;
    FixedKind fixed = FixedKind::none;
    /// Interval length; only meaningful for BodyKind::interval.
    Rational length = 1;

    /// Throws std::invalid_argument if the dimension does not fit the body
    /// or the fixed vertex is not defined for it.
    void validate() const;
};

/// 2 l^k / ((k+1)(k+2)): distance moments of two points in an interval.
PiPolynomial interval_moment(long k, const Rational& length);

/// Miles' formula for d+1 uniform points in the unit d-ball.
PiPolynomial ball_moment(long d, long k);

/// Miles' formula with one vertex at the centre of the unit d-ball.
PiPolynomial ball_fixed_moment(long d, long k);

/// Unit half-ball with one vertex at the centre of its flat face.
/// Reflecting points through the face shows this equals ball_fixed_moment.
PiPolynomial halfball_fixed_moment(long d, long k);

/// Reed-Alagar moments for a triangle of area one.
PiPolynomial triangle_moment(long k);

/// Unit-area triangle with one vertex fixed at the midpoint of an edge.
PiPolynomial triangle_midpoint_moment(long k);

/// Contribution of lines cutting off the vertex opposite the fixed
/// midpoint, for the reference triangle (0,0), (1,0), (0,1).
PiPolynomial help_integral_I0(long k);

/// Contribution of lines cutting off either endpoint of the midpoint's edge
/// (both contributions are equal).
PiPolynomial help_integral_I12(long k);

/// triangle_midpoint_moment rebuilt from the line-integral decomposition
/// I0 + 2 I12 over the area-1/2 reference triangle, rescaled to unit area.
PiPolynomial theorem3_consistency(long k);

/// 4^k (d+2)...(d+k+1) / ((d(d+k+1)+1)...(d(d+k+1)+k)).
/// Its square root bounds E V_{B+,o}^k / E V_{B+}^k from above.
Rational q_ratio(long d, long k);

/// 2^k (kappa_d / kappa_{d+k}) (kappa_{(d+1)(d+k)} / kappa_{d(d+k+1)}),
/// the sharper upper bound for E V_{B+,o}^k / E V_{B+}^k.
PiPolynomial exact_ratio_bound(long d, long k);

/// E V_{T,x}^k / E V_T^k for an edge midpoint x.
Rational tx_over_t_ratio(long k);

/// Same ratio through the single closed-form expression for it; must agree
/// with tx_over_t_ratio.
Rational tx_over_t_ratio_closed_form(long k);

/// E V_T for a tetrahedron of unit volume: 13/720 - pi^2/15015.
PiPolynomial tetrahedron_moment_k1();

/// Moment of a body of the given volume from its unit-volume moment.
PiPolynomial scale_to_volume(const PiPolynomial& unit_moment, const Rational& volume, long k);

/// Exact value for a query, if a closed form is known. Throws
/// std::invalid_argument for invalid queries.
std::optional<PiPolynomial> exact_moment(const MomentQuery& query);

/// Human-readable list of the combinations exact_moment() can evaluate.
std::string supported_exact_combinations();

enum class CounterexampleFamily { none, triangle_edge_midpoint, halfdisk_centre };

/// Which construction certifies non-monotonicity of the k-th moment in the
/// plane.
struct PlaneReport {
    long k = 0;
    CounterexampleFamily family = CounterexampleFamily::none;
    /// Triangle family: exact E V_{T,x}^k / E V_T^k. Half-disk family: q(2,k).
    Rational ratio;
    bool counterexample = false;
    std::string note;
};

PlaneReport plane_counterexample_report(long k);

std::string_view to_string(CounterexampleFamily family);

}  // namespace sylvester::moments
