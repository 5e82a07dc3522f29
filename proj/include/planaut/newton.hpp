#ifndef PLANAUT_NEWTON_HPP
#define PLANAUT_NEWTON_HPP

#include "planaut/errors.hpp"
#include "planaut/polymap.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace planaut::newton {

using LatticePoint = Exponent;

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

/// (b - a) x (c - a); positive for a left turn.
inline Rational cross(const Point& a, const Point& b, const Point& c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Convex polygon with exact rational vertices, counter-clockwise from the
/// lexicographically smallest vertex, no three consecutive vertices
/// collinear. A single point or a segment (two vertices, smaller first) are
/// valid degenerate polygons.
class Polygon {
public:
    /// Convex hull of `points` by monotone chain; collinear points dropped.
    static Polygon hull(std::vector<Point> points)
    {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        Polygon poly;
        if (points.size() <= 1) {
            poly.v_ = std::move(points);
            return poly;
        }
        std::vector<Point> h(2 * points.size());
        std::size_t k = 0;
        for (const auto& p : points) {
            while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
            h[k++] = p;
        }
        for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
            while (k >= lower && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
            h[k++] = points[i];
        }
        h.resize(k - 1);
        poly.v_ = std::move(h);
        return poly;
    }

    const std::vector<Point>& vertices() const { return v_; }

    /// Closed-polygon membership by exact half-plane tests.
    bool contains(const Point& p) const
    {
        if (v_.empty()) return false;
        if (v_.size() == 1) return p == v_[0];
        if (v_.size() == 2) {
            if (cross(v_[0], v_[1], p) != 0) return false;
            return !(p < v_[0]) && !(v_[1] < p);
        }
        for (std::size_t k = 0; k < v_.size(); ++k)
            if (cross(v_[k], v_[(k + 1) % v_.size()], p) < 0) return false;
        return true;
    }

    /// Strict convexity and counter-clockwise orientation, checked exactly.
    bool is_canonical() const
    {
        if (v_.size() <= 1) return true;
        if (!std::all_of(v_.begin() + 1, v_.end(), [&](const Point& p) { return v_[0] < p; })) return false;
        if (v_.size() == 2) return true;
        for (std::size_t k = 0; k < v_.size(); ++k)
            if (cross(v_[k], v_[(k + 1) % v_.size()], v_[(k + 2) % v_.size()]) <= 0) return false;
        return true;
    }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point> v_;
};

inline std::string to_string(const Polygon& poly)
{
    std::string out;
    for (const auto& p : poly.vertices()) {
        if (!out.empty()) out += ' ';
        out += "(" + p.x.get_str() + "," + p.y.get_str() + ")";
    }
    return out;
}

/// Exponents with non-zero coefficient, in lexicographic (i, j) order.
inline std::vector<LatticePoint> support(const BiPoly& p)
{
    std::vector<LatticePoint> s;
    s.reserve(p.size());
    for (const auto& t : p.terms()) s.push_back(t.exp);
    std::sort(s.begin(), s.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    return s;
}

/// Convex hull of the support together with the origin.
inline Polygon newton_polygon(const BiPoly& p)
{
    std::vector<Point> pts{{0, 0}};
    for (const auto& e : support(p)) pts.push_back({e.i, e.j});
    return Polygon::hull(std::move(pts));
}

class NonPositiveFactor : public Error {
public:
    NonPositiveFactor() : Error("polygon scale factor must be positive") {}
};

inline Polygon scale_polygon(const Polygon& poly, const Rational& factor)
{
    if (factor <= 0) throw NonPositiveFactor();
    std::vector<Point> pts;
    pts.reserve(poly.vertices().size());
    for (const auto& p : poly.vertices()) pts.push_back({p.x * factor, p.y * factor});
    return Polygon::hull(std::move(pts));
}

inline bool polygon_equal(const Polygon& a, const Polygon& b) { return a == b; }

enum class SimilarityFailure { DegreeTooLow, JacobianNotConstant };

inline const char* to_string(SimilarityFailure r)
{
    return r == SimilarityFailure::DegreeTooLow ? "DegreeTooLow" : "JacobianNotConstant";
}

class HypothesisViolated : public HypothesisError {
public:
    explicit HypothesisViolated(SimilarityFailure r)
        : HypothesisError(std::string("similarity hypothesis violated: ") + newton::to_string(r)), reason(r)
    {
    }
    SimilarityFailure reason;
};

struct SimilarityReport {
    Polygon nf;
    Polygon ng;
    Rational factor;  // deg g / deg f
    bool similar = false;
    BiPoly jacobian;
};

/// Checks N_g == (deg g / deg f) N_f for a Jacobian pair with both degrees
/// above one. The degree hypothesis is checked before the Jacobian.
inline SimilarityReport similarity_check(const BiPoly& f, const BiPoly& g)
{
    if (f.total_degree() <= 1 || g.total_degree() <= 1) throw HypothesisViolated(SimilarityFailure::DegreeTooLow);
    SimilarityReport r;
    r.jacobian = jacobian_det({f, g});
    if (!r.jacobian.is_constant() || r.jacobian.is_zero())
        throw HypothesisViolated(SimilarityFailure::JacobianNotConstant);
    r.nf = newton_polygon(f);
    r.ng = newton_polygon(g);
    r.factor = Rational(g.total_degree().value(), f.total_degree().value());
    r.factor.canonicalize();
    r.similar = polygon_equal(r.ng, scale_polygon(r.nf, r.factor));
    return r;
}

}  // namespace planaut::newton

#endif
