#include "sylvester/montecarlo/body.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sylvester/exactnum/special.hpp"

namespace sylvester::mc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double factorial_double(int n)
{
    double f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

void check_dim(int dim)
{
    if (dim < 1)
        throw std::invalid_argument("dimension must be positive, got " + std::to_string(dim));
}

// Uniform point in the unit ball: isotropic direction times U^(1/d).
void sample_ball(PhiloxStream& rng, std::span<double> out)
{
    double norm2 = 0;
    do {
        norm2 = 0;
        for (double& x : out) {
            x = rng.normal();
            norm2 += x * x;
        }
    } while (norm2 == 0);
    double u = rng.uniform();
    double radius = out.size() == 1 ? u
                  : out.size() == 2 ? std::sqrt(u)
                  : out.size() == 3 ? std::cbrt(u)
                                    : std::pow(u, 1.0 / static_cast<double>(out.size()));
    double scale = radius / std::sqrt(norm2);
    for (double& x : out)
        x *= scale;
}

// Solves for barycentric coordinates of p; returns false if singular.
bool barycentric(const Simplex& s, std::span<const double> p, std::vector<double>& lambda)
{
    const int d = s.dim;
    std::vector<double> m(static_cast<size_t>(d * (d + 1)));
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c)
            m[r * (d + 1) + c] = s.vertices[(c + 1) * d + r] - s.vertices[r];
        m[r * (d + 1) + d] = p[r] - s.vertices[r];
    }
    for (int col = 0; col < d; ++col) {
        int pivot = col;
        for (int r = col + 1; r < d; ++r)
            if (std::abs(m[r * (d + 1) + col]) > std::abs(m[pivot * (d + 1) + col]))
                pivot = r;
        if (m[pivot * (d + 1) + col] == 0)
            return false;
        for (int c = 0; c <= d; ++c)
            std::swap(m[col * (d + 1) + c], m[pivot * (d + 1) + c]);
        for (int r = 0; r < d; ++r) {
            if (r == col)
                continue;
            double f = m[r * (d + 1) + col] / m[col * (d + 1) + col];
            for (int c = col; c <= d; ++c)
                m[r * (d + 1) + c] -= f * m[col * (d + 1) + c];
        }
    }
    lambda.assign(static_cast<size_t>(d + 1), 0.0);
    double rest = 1;
    for (int i = 0; i < d; ++i) {
        lambda[i + 1] = m[i * (d + 1) + d] / m[i * (d + 1) + i];
        rest -= lambda[i + 1];
    }
    lambda[0] = rest;
    return true;
}

}  // namespace

Body Body::interval(double length)
{
    if (!(length > 0) || !std::isfinite(length))
        throw std::invalid_argument("interval length must be positive and finite");
    return Body(Interval{length});
}

Body Body::ball(int dim)
{
    check_dim(dim);
    return Body(Ball{dim});
}

Body Body::halfball(int dim)
{
    check_dim(dim);
    return Body(HalfBall{dim});
}

Body Body::simplex(const std::vector<Point>& vertices)
{
    if (vertices.size() < 2)
        throw std::invalid_argument("a simplex needs at least two vertices");
    const int dim = static_cast<int>(vertices.size()) - 1;
    Simplex s{dim, {}};
    s.vertices.reserve(vertices.size() * static_cast<size_t>(dim));
    double scale = 0;
    for (const auto& v : vertices) {
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("simplex with " + std::to_string(vertices.size()) + " vertices needs points in R^" +
                                        std::to_string(dim));
        for (size_t j = 0; j < v.size(); ++j) {
            s.vertices.push_back(v[j]);
            scale = std::max(scale, std::abs(v[j] - vertices[0][j]));
        }
    }
    double vol = simplex_volume(s.vertices, dim);
    if (!(vol > 1e-12 * std::pow(scale, dim) / factorial_double(dim)))
        throw std::invalid_argument("simplex vertices are affinely dependent");
    return Body(std::move(s));
}

Body Body::unit_simplex(int dim)
{
    check_dim(dim);
    double side = std::pow(factorial_double(dim), 1.0 / dim);
    std::vector<Point> vertices(static_cast<size_t>(dim + 1), Point(static_cast<size_t>(dim), 0.0));
    for (int i = 0; i < dim; ++i)
        vertices[i + 1][i] = side;
    return simplex(vertices);
}

int Body::dim() const
{
    return std::visit(Overloaded{[](const Interval&) { return 1; }, [](const Ball& b) { return b.dim; },
                                 [](const HalfBall& b) { return b.dim; }, [](const Simplex& s) { return s.dim; }},
                      shape_);
}

std::optional<PiPolynomial> Body::exact_volume() const
{
    if (auto* b = std::get_if<Ball>(&shape_))
        return kappa(b->dim);
    if (auto* h = std::get_if<HalfBall>(&shape_))
        return kappa(h->dim) * PiPolynomial(ratio(1, 2));
    return std::nullopt;
}

double Body::volume() const
{
    return std::visit(Overloaded{[](const Interval& i) { return i.length; },
                                 [](const Ball& b) {
                                     return std::exp(0.5 * b.dim * std::log(M_PI) - std::lgamma(1.0 + 0.5 * b.dim));
                                 },
                                 [](const HalfBall& h) {
                                     return 0.5 * std::exp(0.5 * h.dim * std::log(M_PI) - std::lgamma(1.0 + 0.5 * h.dim));
                                 },
                                 [](const Simplex& s) { return simplex_volume(s.vertices, s.dim); }},
                      shape_);
}

bool Body::contains(std::span<const double> p, double tol) const
{
    if (static_cast<int>(p.size()) != dim())
        return false;
    auto norm2 = [&p] {
        double s = 0;
        for (double x : p)
            s += x * x;
        return s;
    };
    return std::visit(Overloaded{[&](const Interval& i) { return p[0] >= -tol && p[0] <= i.length + tol; },
                                 [&](const Ball&) { return std::sqrt(norm2()) <= 1 + tol; },
                                 [&](const HalfBall&) { return p[0] >= -tol && std::sqrt(norm2()) <= 1 + tol; },
                                 [&](const Simplex& s) {
                                     std::vector<double> lambda;
                                     if (!barycentric(s, p, lambda))
                                         return false;
                                     for (double l : lambda)
                                         if (l < -tol)
                                             return false;
                                     return true;
                                 }},
                      shape_);
}

Point Body::vertex(int i) const
{
    auto* s = std::get_if<Simplex>(&shape_);
    if (!s)
        throw std::logic_error("vertex() is only defined for simplices");
    if (i < 0 || i > s->dim)
        throw std::out_of_range("simplex vertex index " + std::to_string(i));
    auto first = s->vertices.begin() + static_cast<std::ptrdiff_t>(i) * s->dim;
    return Point(first, first + s->dim);
}

Point Body::face_centroid(int opposite) const
{
    const int d = dim();
    vertex(opposite);  // validates
    Point c(static_cast<size_t>(d), 0.0);
    for (int i = 0; i <= d; ++i) {
        if (i == opposite)
            continue;
        Point v = vertex(i);
        for (int j = 0; j < d; ++j)
            c[j] += v[j] / d;
    }
    return c;
}

void Body::sample(PhiloxStream& rng, std::span<double> out) const
{
    std::visit(Overloaded{[&](const Interval& i) { out[0] = i.length * rng.uniform(); },
                          [&](const Ball&) { sample_ball(rng, out); },
                          [&](const HalfBall&) {
                              sample_ball(rng, out);
                              out[0] = std::abs(out[0]);
                          },
                          [&](const Simplex& s) {
                              // normalised exponential spacings are uniform barycentric weights
                              const int d = s.dim;
                              double total = 0;
                              for (double& x : out)
                                  x = 0;
                              for (int i = 0; i <= d; ++i) {
                                  double w = rng.exponential();
                                  total += w;
                                  for (int j = 0; j < d; ++j)
                                      out[j] += w * s.vertices[i * d + j];
                              }
                              for (double& x : out)
                                  x /= total;
                          }},
               shape_);
}

nlohmann::json Body::to_json() const
{
    return std::visit(Overloaded{[](const Interval& i) -> nlohmann::json { return {{"kind", "interval"}, {"length", i.length}}; },
                                 [](const Ball& b) -> nlohmann::json { return {{"kind", "ball"}, {"d", b.dim}}; },
                                 [](const HalfBall& h) -> nlohmann::json { return {{"kind", "halfball"}, {"d", h.dim}}; },
                                 [](const Simplex& s) -> nlohmann::json {
                                     auto vs = nlohmann::json::array();
                                     for (int i = 0; i <= s.dim; ++i)
                                         vs.push_back(std::vector<double>(s.vertices.begin() + i * s.dim,
                                                                          s.vertices.begin() + (i + 1) * s.dim));
                                     return {{"kind", "simplex"}, {"d", s.dim}, {"vertices", vs}};
                                 }},
                      shape_);
}

Point sample_uniform(const Body& body, PhiloxStream& rng)
{
    Point p(static_cast<size_t>(body.dim()));
    body.sample(rng, p);
    return p;
}

FixedPointSpec FixedPointSpec::at(const Body& body, Point point)
{
    FixedPointSpec spec;
    spec.point_ = std::move(point);
    spec.validate_for(body);
    return spec;
}

void FixedPointSpec::validate_for(const Body& body) const
{
    if (!point_)
        return;
    if (static_cast<int>(point_->size()) != body.dim())
        throw std::invalid_argument("fixed point has dimension " + std::to_string(point_->size()) +
                                    ", body has dimension " + std::to_string(body.dim()));
    if (!body.contains(*point_, 1e-9))
        throw std::invalid_argument("fixed point lies outside the body");
}

nlohmann::json FixedPointSpec::to_json() const
{
    if (!point_)
        return nullptr;
    return *point_;
}

double simplex_volume_in_place(std::span<double> points, int dim)
{
    const int d = dim;
    // rows 1..d become x_i - x_0
    for (int i = 1; i <= d; ++i)
        for (int j = 0; j < d; ++j)
            points[i * d + j] -= points[j];
    double* m = points.data() + d;
    double det = 1;
    for (int col = 0; col < d; ++col) {
        int pivot = col;
        for (int r = col + 1; r < d; ++r)
            if (std::abs(m[r * d + col]) > std::abs(m[pivot * d + col]))
                pivot = r;
        double pv = m[pivot * d + col];
        if (pv == 0)
            return 0;
        if (pivot != col)
            for (int c = col; c < d; ++c)
                std::swap(m[col * d + c], m[pivot * d + c]);
        det *= pv;
        for (int r = col + 1; r < d; ++r) {
            double f = m[r * d + col] / pv;
            for (int c = col + 1; c < d; ++c)
                m[r * d + c] -= f * m[col * d + c];
        }
    }
    return std::abs(det) / factorial_double(d);
}

double simplex_volume(std::span<const double> points, int dim)
{
    if (dim < 1 || points.size() != static_cast<size_t>((dim + 1) * dim))
        throw std::invalid_argument("simplex_volume: expected " + std::to_string(dim + 1) + " points in R^" +
                                    std::to_string(dim));
    std::vector<double> copy(points.begin(), points.end());
    return simplex_volume_in_place(copy, dim);
}

double simplex_volume(const std::vector<Point>& points)
{
    if (points.empty())
        throw std::invalid_argument("simplex_volume: no points");
    const int dim = static_cast<int>(points.size()) - 1;
    std::vector<double> flat;
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("simplex_volume: " + std::to_string(points.size()) +
                                        " points must lie in R^" + std::to_string(dim));
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return simplex_volume(flat, dim);
}

}  // namespace sylvester::mc
