#ifndef PLANAUT_TAME_HPP
#define PLANAUT_TAME_HPP

#include "planaut/errors.hpp"
#include "planaut/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

namespace planaut::tame {

enum class FailureReason { JacobianNotConstant, ReductionFailed };

inline const char* to_string(FailureReason r)
{
    return r == FailureReason::JacobianNotConstant ? "JacobianNotConstant" : "ReductionFailed";
}

/// Negative outcome of automorphism recognition. On a constant-Jacobian
/// input, ReductionFailed would exhibit a Keller map that is not tame, i.e.
/// a counterexample to the two-dimensional Jacobian conjecture.
struct NotAutomorphism {
    FailureReason reason;
    PolyMap residual;
};

using Decision = std::variant<Factorization, NotAutomorphism>;

namespace detail {

struct LinearForm {
    Rational a, b, c;  // a x + b y + c
};

inline LinearForm linear_form(const BiPoly& p)
{
    return {p.coeff(1, 0), p.coeff(0, 1), p.constant_term()};
}

/// Splits h(v) into its affine part h0 + h1 v and the remainder.
struct SplitShift {
    Rational h0, h1;
    UniPoly rest;
};

inline SplitShift split_shift(const UniPoly& h)
{
    SplitShift s{h.coeff(0), h.coeff(1), h};
    s.rest -= UniPoly(std::vector<Rational>{s.h0, s.h1});
    return s;
}

}  // namespace detail

/// Factorization of a constant-Jacobian map with a component of degree at
/// most one: an affine chart makes that component a coordinate, after which
/// the Jacobian condition forces the other component into the form
/// alpha * u + h(v). Result has at most one affine and one elementary factor.
inline Factorization invert_low_degree(const PolyMap& h)
{
    const BiPoly jac = jacobian_det(h);
    if (!jac.is_constant() || jac.is_zero()) throw PreconditionViolated("JacobianNotConstant");
    const Degree df = h.first.total_degree(), dg = h.second.total_degree();
    if (df > 1 && dg > 1) throw PreconditionViolated("DegreeTooHigh: min(deg f, deg g) <= 1 required");
    if (df <= 0 || dg <= 0) throw std::logic_error("unreachable: a constant component has zero Jacobian");

    const bool second_linear = dg == 1;
    const auto lf = detail::linear_form(second_linear ? h.second : h.first);

    // Chart A with the linear component as one coordinate; the other
    // coordinate is x or y, whichever keeps A invertible.
    AffineFactor chart;
    if (second_linear) {
        chart = lf.b != 0 ? AffineFactor::make(1, 0, lf.a, lf.b, 0, lf.c) : AffineFactor::make(0, 1, lf.a, lf.b, 0, lf.c);
    } else {
        chart = lf.a != 0 ? AffineFactor::make(lf.a, lf.b, 0, 1, lf.c, 0) : AffineFactor::make(lf.a, lf.b, 1, 0, lf.c, 0);
    }
    const PolyMap chart_inv = to_map(chart.inverse());
    const BiPoly other = (second_linear ? h.first : h.second).substitute(chart_inv.first, chart_inv.second);

    // other(u, v) = alpha * (free coordinate) + shift(linear coordinate).
    const Var free_var = second_linear ? Var::X : Var::Y;
    Rational alpha = 0;
    std::vector<Rational> shift_c;
    for (const auto& t : other.terms()) {
        const unsigned fe = free_var == Var::X ? t.exp.i : t.exp.j;
        const unsigned le = free_var == Var::X ? t.exp.j : t.exp.i;
        if (fe == 1 && le == 0) {
            alpha = t.coeff;
        } else if (fe == 0) {
            if (shift_c.size() <= le) shift_c.resize(le + 1);
            shift_c[le] = t.coeff;
        } else {
            throw std::logic_error("unreachable: constant Jacobian forces a triangular normal form");
        }
    }
    if (alpha == 0) throw std::logic_error("unreachable: constant Jacobian forces alpha != 0");
    const auto split = detail::split_shift(UniPoly(std::move(shift_c)));

    const AffineFactor normalize = second_linear ? AffineFactor::make(alpha, split.h1, 0, 1, split.h0, 0)
                                                 : AffineFactor::make(1, 0, split.h1, alpha, 0, split.h0);
    const AffineFactor affine = normalize.after(chart);

    Factorization out;
    if (!split.rest.is_zero())
        out.factors.emplace_back(ElementaryFactor{second_linear ? Axis::First : Axis::Second, split.rest});
    if (!affine.is_identity()) out.factors.emplace_back(affine);
    if (factorization_to_map(out) != h) throw std::logic_error("invert_low_degree: factorization does not recompose");
    return out;
}

/// Decides membership in the automorphism group by degree reduction:
/// repeatedly cancel the leading form of the higher-degree component against
/// a power of the other one (second reduced by first on ties) until a
/// component has degree at most one.
inline Decision decide_automorphism(const PolyMap& h)
{
    const BiPoly jac = jacobian_det(h);
    if (!jac.is_constant() || jac.is_zero()) return NotAutomorphism{FailureReason::JacobianNotConstant, h};

    PolyMap residual = h;
    std::vector<Factor> steps;  // applied to the residual in order
    while (residual.first.total_degree() > 1 && residual.second.total_degree() > 1) {
        const int df = residual.first.total_degree().value();
        const int dg = residual.second.total_degree().value();
        const bool reduce_first = df > dg;
        const BiPoly& high = reduce_first ? residual.first : residual.second;
        const BiPoly& low = reduce_first ? residual.second : residual.first;
        const int dh = std::max(df, dg), dl = std::min(df, dg);
        if (dh % dl != 0) return NotAutomorphism{FailureReason::ReductionFailed, residual};
        const unsigned d = static_cast<unsigned>(dh / dl);

        const BiPoly lead_high = high.leading_form();
        const BiPoly lead_pow = low.leading_form().pow(d);
        const auto& probe = lead_high.terms().back();
        const Rational denom = lead_pow.coeff(probe.exp.i, probe.exp.j);
        if (denom == 0) return NotAutomorphism{FailureReason::ReductionFailed, residual};
        const Rational lambda = probe.coeff / denom;
        if (lead_pow.scaled(lambda) != lead_high) return NotAutomorphism{FailureReason::ReductionFailed, residual};

        const Factor step = ElementaryFactor{reduce_first ? Axis::First : Axis::Second, UniPoly::monomial(-lambda, d)};
        residual = apply_factor(step, residual);
        steps.push_back(step);
        const int after = std::max(residual.first.total_degree(), Degree(0)).value() +
                          std::max(residual.second.total_degree(), Degree(0)).value();
        if (after >= df + dg) throw std::logic_error("decide_automorphism: degree sum did not decrease");
    }

    // h = step_1^-1 o ... o step_n^-1 o residual
    Factorization out;
    for (const auto& s : steps) out.factors.push_back(std::get<ElementaryFactor>(s).inverse());
    out = out.then_after(invert_low_degree(residual));
    if (factorization_to_map(out) != h) throw std::logic_error("decide_automorphism: factorization does not recompose");
    return out;
}

/// Seeded random tame automorphism: `num_factors` elementary factors on
/// alternating axes, each shift of degree 1..max_shift_degree with integer
/// coefficients in [-coeff_bound, coeff_bound] and non-zero leading
/// coefficient. Before each elementary factor an invertible integer affine
/// factor is inserted with probability 1/4.
inline Factorization random_tame(std::uint64_t seed, unsigned num_factors, unsigned max_shift_degree,
                                 unsigned coeff_bound)
{
    if (max_shift_degree < 1) throw std::invalid_argument("random_tame: max_shift_degree must be >= 1");
    std::mt19937_64 rng(seed);
    const long bound = std::max<long>(coeff_bound, 1);
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::uniform_int_distribution<long> small(-2, 2);
    std::uniform_int_distribution<unsigned> degree(1, max_shift_degree);
    std::bernoulli_distribution with_affine(0.25);

    Factorization out;
    Axis axis = std::bernoulli_distribution(0.5)(rng) ? Axis::First : Axis::Second;
    for (unsigned k = 0; k < num_factors; ++k) {
        if (with_affine(rng)) {
            AffineFactor a;
            do {
                a.matrix = {{{small(rng), small(rng)}, {small(rng), small(rng)}}};
            } while (a.determinant() == 0);
            a.translation = {small(rng), small(rng)};
            out.factors.emplace_back(a);
        }
        const unsigned d = degree(rng);
        std::vector<Rational> c(d + 1);
        for (auto& v : c) v = coeff(rng);
        while (c[d] == 0) c[d] = coeff(rng);
        out.factors.emplace_back(ElementaryFactor{axis, UniPoly(std::move(c))});
        axis = axis == Axis::First ? Axis::Second : Axis::First;
    }
    return out;
}

}  // namespace planaut::tame

#endif
