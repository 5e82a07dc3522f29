#ifndef PLANAUT_RESULTANT_HPP
#define PLANAUT_RESULTANT_HPP

#include "planaut/bipoly.hpp"
#include "planaut/errors.hpp"

#include <cassert>
#include <utility>
#include <vector>

namespace planaut {

/// Coefficients of p as a polynomial in y over Q[x], index = power of y.
inline std::vector<UniPoly> coefficients_in_y(const BiPoly& p)
{
    std::vector<std::vector<Rational>> dense;
    for (const auto& t : p.terms()) {
        if (dense.size() <= t.exp.j) dense.resize(t.exp.j + 1);
        auto& row = dense[t.exp.j];
        if (row.size() <= t.exp.i) row.resize(t.exp.i + 1);
        row[t.exp.i] = t.coeff;
    }
    std::vector<UniPoly> out;
    out.reserve(dense.size());
    for (auto& row : dense) out.emplace_back(std::move(row));
    return out;
}

/// Sylvester matrix of p and q with respect to y, rows of p first. Each row
/// lists coefficients from the highest power of y down.
inline std::vector<std::vector<UniPoly>> sylvester_matrix_y(const BiPoly& p, const BiPoly& q)
{
    const auto pc = coefficients_in_y(p);
    const auto qc = coefficients_in_y(q);
    if (pc.size() < 2 || qc.size() < 2) throw DegenerateResultant();
    const std::size_t m = pc.size() - 1, n = qc.size() - 1, size = m + n;
    std::vector<std::vector<UniPoly>> s(size, std::vector<UniPoly>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = pc[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = qc[n - k];
    return s;
}

/// Determinant over Q[x] by fraction-free (Bareiss) elimination.
inline UniPoly determinant(std::vector<std::vector<UniPoly>> a)
{
    const std::size_t n = a.size();
    if (n == 0) return UniPoly(Rational(1));
    bool negate = false;
    UniPoly prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                UniPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto [quo, rem] = num.divmod(prev);
                assert(rem.is_zero());
                a[i][j] = std::move(quo);
            }
            a[i][k] = UniPoly();
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Res_y(p, q) as a polynomial in x: determinant of sylvester_matrix_y(p, q).
/// With this row order Res_y(y - x, y + x) = 2x.
inline UniPoly resultant_y(const BiPoly& p, const BiPoly& q)
{
    return determinant(sylvester_matrix_y(p, q));
}

namespace detail {

inline UniPoly content_y(const std::vector<UniPoly>& a)
{
    UniPoly c;
    for (const auto& k : a) c = gcd(c, k);
    return c;
}

inline std::vector<UniPoly> primitive_part_y(std::vector<UniPoly> a)
{
    const UniPoly c = content_y(a);
    if (c.is_zero()) return a;
    for (auto& k : a) k = k.divmod(c).first;
    return a;
}

inline void trim_y(std::vector<UniPoly>& a)
{
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Pseudo-remainder of a by b in Q[x][y]; b non-zero.
inline std::vector<UniPoly> pseudo_remainder_y(std::vector<UniPoly> a, const std::vector<UniPoly>& b)
{
    const UniPoly& lb = b.back();
    while (a.size() >= b.size()) {
        const UniPoly la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& k : a) k = k * lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
        trim_y(a);
    }
    return a;
}

}  // namespace detail

/// gcd in Q[x, y] by the primitive remainder sequence in y over Q[x],
/// normalized so the leading coefficient (in y, then in x) is 1.
inline BiPoly gcd_bivariate(const BiPoly& p, const BiPoly& q)
{
    auto a = coefficients_in_y(p), b = coefficients_in_y(q);
    if (a.size() < b.size()) std::swap(a, b);
    if (a.empty()) return {};
    UniPoly content = detail::content_y(a);
    if (!b.empty()) {
        content = gcd(content, detail::content_y(b));
        a = detail::primitive_part_y(std::move(a));
        b = detail::primitive_part_y(std::move(b));
        while (!b.empty()) {
            auto r = detail::pseudo_remainder_y(a, b);
            a = std::move(b);
            b = detail::primitive_part_y(std::move(r));
        }
    } else {
        a = detail::primitive_part_y(std::move(a));
    }
    const Rational norm = 1 / a.back().leading_coefficient();
    BiPoly out;
    for (std::size_t j = 0; j < a.size(); ++j)
        out += BiPoly::from_uni((a[j] * content).scaled(norm), Var::X) * BiPoly::monomial(1, 0, static_cast<unsigned>(j));
    return out;
}

/// Monic gcd of two univariate polynomials; gcd(0, 0) = 0.
inline UniPoly gcd_univariate(const UniPoly& p, const UniPoly& q) { return gcd(p, q); }

}  // namespace planaut

#endif
