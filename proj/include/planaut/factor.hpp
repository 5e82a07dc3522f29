#ifndef PLANAUT_FACTOR_HPP
#define PLANAUT_FACTOR_HPP

#include "planaut/polymap.hpp"

#include <array>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace planaut {

/// (x, y) -> matrix * (x, y) + translation, with det(matrix) != 0.
struct AffineFactor {
    std::array<std::array<Rational, 2>, 2> matrix{{{1, 0}, {0, 1}}};
    std::array<Rational, 2> translation{0, 0};

    static AffineFactor identity() { return {}; }
    static AffineFactor swap() { return {{{{0, 1}, {1, 0}}}, {0, 0}}; }

    static AffineFactor make(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                             const Rational& tx = 0, const Rational& ty = 0)
    {
        AffineFactor f{{{{a, b}, {c, d}}}, {tx, ty}};
        if (f.determinant() == 0) throw std::domain_error("singular affine factor");
        return f;
    }

    Rational determinant() const { return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]; }

    bool is_identity() const { return *this == AffineFactor{}; }

    AffineFactor inverse() const
    {
        const Rational det = determinant();
        assert(det != 0);
        AffineFactor r;
        r.matrix = {{{matrix[1][1] / det, -matrix[0][1] / det}, {-matrix[1][0] / det, matrix[0][0] / det}}};
        r.translation = {-(r.matrix[0][0] * translation[0] + r.matrix[0][1] * translation[1]),
                         -(r.matrix[1][0] * translation[0] + r.matrix[1][1] * translation[1])};
        return r;
    }

    /// this o other, again affine.
    AffineFactor after(const AffineFactor& other) const
    {
        AffineFactor r;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j)
                r.matrix[i][j] = matrix[i][0] * other.matrix[0][j] + matrix[i][1] * other.matrix[1][j];
            r.translation[i] =
                matrix[i][0] * other.translation[0] + matrix[i][1] * other.translation[1] + translation[i];
        }
        return r;
    }

    friend bool operator==(const AffineFactor&, const AffineFactor&) = default;
};

enum class Axis { First, Second };

/// Axis::Second: (x, y) -> (x, y + shift(x)).
/// Axis::First:  (x, y) -> (x + shift(y), y).
struct ElementaryFactor {
    Axis axis = Axis::Second;
    UniPoly shift;

    ElementaryFactor inverse() const { return {axis, -shift}; }

    friend bool operator==(const ElementaryFactor&, const ElementaryFactor&) = default;
};

using Factor = std::variant<AffineFactor, ElementaryFactor>;

/// factors[0] o factors[1] o ... o factors[n-1]; the last factor is applied
/// first. The empty list is the identity.
struct Factorization {
    std::vector<Factor> factors;

    bool empty() const { return factors.empty(); }
    std::size_t size() const { return factors.size(); }

    /// this o other.
    Factorization then_after(const Factorization& other) const
    {
        Factorization r = *this;
        r.factors.insert(r.factors.end(), other.factors.begin(), other.factors.end());
        return r;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

template <class P>
P eval_uni(const UniPoly& u, const P& at)
{
    const auto& c = u.coefficients();
    P acc(Rational(0));
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * at;
        acc = acc + P(*it);
    }
    return acc;
}

template <class P>
P affine_combo(const Rational& a, const P& u, const Rational& b, const P& v, const Rational& t)
{
    return u.scaled(a) + v.scaled(b) + P(t);
}

}  // namespace detail

/// factor(a, b) for a pair of ring elements (components of a map or curve).
template <class P>
std::pair<P, P> apply_factor(const Factor& factor, const P& a, const P& b)
{
    if (const auto* af = std::get_if<AffineFactor>(&factor)) {
        const auto& m = af->matrix;
        return {detail::affine_combo(m[0][0], a, m[0][1], b, af->translation[0]),
                detail::affine_combo(m[1][0], a, m[1][1], b, af->translation[1])};
    }
    const auto& ef = std::get<ElementaryFactor>(factor);
    if (ef.axis == Axis::Second) return {a, b + detail::eval_uni(ef.shift, a)};
    return {a + detail::eval_uni(ef.shift, b), b};
}

inline PolyMap apply_factor(const Factor& factor, const PolyMap& h)
{
    auto [f, g] = apply_factor<BiPoly>(factor, h.first, h.second);
    return {std::move(f), std::move(g)};
}

inline Parametrization apply_factor(const Factor& factor, const Parametrization& c)
{
    auto [p, q] = apply_factor<UniPoly>(factor, c.p, c.q);
    return {std::move(p), std::move(q)};
}

/// F o h, applying one factor at a time from the innermost outwards.
template <class T>
T apply_factorization(const Factorization& fac, T value)
{
    for (auto it = fac.factors.rbegin(); it != fac.factors.rend(); ++it) value = apply_factor(*it, value);
    return value;
}

inline PolyMap to_map(const Factor& factor) { return apply_factor(factor, PolyMap::identity()); }

/// Composition of all factors; the empty list gives the identity.
inline PolyMap factorization_to_map(const Factorization& fac)
{
    return apply_factorization(fac, PolyMap::identity());
}

/// Reversed list of per-factor inverses.
inline Factorization factorization_inverse(const Factorization& fac)
{
    Factorization r;
    r.factors.reserve(fac.size());
    for (auto it = fac.factors.rbegin(); it != fac.factors.rend(); ++it)
        r.factors.push_back(std::visit([](const auto& f) -> Factor { return f.inverse(); }, *it));
    return r;
}

inline Rational factor_jacobian(const Factor& factor)
{
    if (const auto* af = std::get_if<AffineFactor>(&factor)) return af->determinant();
    return 1;
}

}  // namespace planaut

#endif
