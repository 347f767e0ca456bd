#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sylvester/exactnum/pi_polynomial.hpp"
#include "sylvester/montecarlo/philox.hpp"

namespace sylvester::mc {

using Point = std::vector<double>;

/// [0, length] on the real line.
struct Interval {
    double length;
};

/// Unit ball centred at the origin.
struct Ball {
    int dim;
};

/// Unit ball intersected with {x_1 >= 0}; the origin is the centre of its
/// flat face.
struct HalfBall {
    int dim;
};

/// Convex hull of dim + 1 affinely independent vertices.
struct Simplex {
    int dim;
    std::vector<double> vertices;  // (dim + 1) rows of dim coordinates
};

class Body {
public:
    using Shape = std::variant<Interval, Ball, HalfBall, Simplex>;

    /// Throws std::invalid_argument for non-positive length or dimension,
    /// or for degenerate simplices.
    static Body interval(double length);
    static Body ball(int dim);
    static Body halfball(int dim);
    static Body simplex(const std::vector<Point>& vertices);

    /// Standard simplex conv(0, e_1, ..., e_d) scaled to unit volume.
    static Body unit_simplex(int dim);

    const Shape& shape() const { return shape_; }
    int dim() const;
    double volume() const;
    /// Exact volume for balls and half-balls.
    std::optional<PiPolynomial> exact_volume() const;

    /// Closed-set membership with absolute slack tol.
    bool contains(std::span<const double> p, double tol = 1e-12) const;

    /// Simplex vertex i; throws std::logic_error for other bodies.
    Point vertex(int i) const;
    /// Centroid of the face of a simplex opposite vertex i (for a triangle,
    /// the midpoint of an edge).
    Point face_centroid(int opposite) const;

    /// One uniform point written to out (size dim()).
    void sample(PhiloxStream& rng, std::span<double> out) const;

    nlohmann::json to_json() const;

private:
    explicit Body(Shape shape) : shape_(std::move(shape)) {}

    Shape shape_;
};

/// Uniform point in body.
Point sample_uniform(const Body& body, PhiloxStream& rng);

/// Optional distinguished vertex of the random simplex.
class FixedPointSpec {
public:
    static FixedPointSpec none() { return FixedPointSpec(); }
    /// Throws std::invalid_argument unless point lies in the closed body.
    static FixedPointSpec at(const Body& body, Point point);

    bool has_point() const { return point_.has_value(); }
    const Point& point() const { return *point_; }

    /// Throws std::invalid_argument if the point does not fit body.
    void validate_for(const Body& body) const;

    nlohmann::json to_json() const;

private:
    std::optional<Point> point_;
};

/// |det(x_1 - x_0, ..., x_d - x_0)| / d! for dim + 1 points stored
/// row-major. Throws std::invalid_argument on a size mismatch.
double simplex_volume(std::span<const double> points, int dim);
double simplex_volume(const std::vector<Point>& points);

/// Same, destroying `points` and without allocating; used in hot loops.
double simplex_volume_in_place(std::span<double> points, int dim);

}  // namespace sylvester::mc
