#ifndef PLANAUT_POLYMAP_HPP
#define PLANAUT_POLYMAP_HPP

#include "planaut/bipoly.hpp"
#include "planaut/unipoly.hpp"

#include <string>
#include <utility>

namespace planaut {

/// H = (first, second) : plane -> plane.
struct PolyMap {
    BiPoly first;
    BiPoly second;

    static PolyMap identity() { return {BiPoly::x(), BiPoly::y()}; }

    std::pair<Rational, Rational> operator()(const Rational& x, const Rational& y) const
    {
        return {first(x, y), second(x, y)};
    }

    friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

/// gamma(t) = (p(t), q(t)), a polynomial curve in the plane.
struct Parametrization {
    UniPoly p;
    UniPoly q;

    friend bool operator==(const Parametrization&, const Parametrization&) = default;
};

inline std::string to_string(const PolyMap& h) { return "(" + to_string(h.first) + ", " + to_string(h.second) + ")"; }

inline std::string to_string(const Parametrization& g)
{
    return "(" + to_string(g.p) + ", " + to_string(g.q) + ")";
}

/// Jac(f, g) = f_x g_y - f_y g_x.
inline BiPoly jacobian_det(const PolyMap& h)
{
    return h.first.partial(Var::X) * h.second.partial(Var::Y) - h.first.partial(Var::Y) * h.second.partial(Var::X);
}

/// outer(inner(x, y)).
inline PolyMap compose_map(const PolyMap& outer, const PolyMap& inner)
{
    return {outer.first.substitute(inner.first, inner.second), outer.second.substitute(inner.first, inner.second)};
}

/// H(gamma(t)).
inline Parametrization apply_map(const PolyMap& h, const Parametrization& g)
{
    return {h.first.substitute(g.p, g.q), h.second.substitute(g.p, g.q)};
}

/// H(t, 0) as a curve.
inline Parametrization restrict_to_axis(const PolyMap& h)
{
    return apply_map(h, {UniPoly::x(), UniPoly()});
}

/// A non-zero constant Jacobian determinant, if any.
inline bool has_unit_jacobian(const PolyMap& h)
{
    const BiPoly j = jacobian_det(h);
    return j.is_constant() && !j.is_zero();
}

}  // namespace planaut

#endif
