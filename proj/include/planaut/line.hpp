#ifndef PLANAUT_LINE_HPP
#define PLANAUT_LINE_HPP

#include "planaut/errors.hpp"
#include "planaut/factor.hpp"

namespace planaut {

/// The locus a*x + b*y + c = 0. Validity ((a, b) != (0, 0)) is checked by
/// the operations that consume a line, not on construction.
struct Line {
    Rational a;
    Rational b;
    Rational c;

    bool valid() const { return a != 0 || b != 0; }

    friend bool operator==(const Line&, const Line&) = default;
};

struct LineRestriction {
    Parametrization gamma;  // H(sigma(t))
    AffineFactor chart;     // L with L(t, 0) = sigma(t)
};

/// Affine automorphism L sending the axis {y = 0} onto `l`, with
/// L(t, 0) = sigma(t) where sigma(t) = (t, -(a t + c)/b) if b != 0 and
/// sigma(t) = (-c/a, t) otherwise.
inline AffineFactor line_chart(const Line& l)
{
    if (!l.valid()) throw InvalidLine();
    if (l.b != 0) return AffineFactor::make(1, 0, -l.a / l.b, 1, 0, -l.c / l.b);
    return AffineFactor::make(0, 1, 1, 0, -l.c / l.a, 0);
}

inline LineRestriction restrict_to_line(const PolyMap& h, const Line& l)
{
    AffineFactor chart = line_chart(l);
    const Parametrization sigma = apply_factor(Factor(chart), Parametrization{UniPoly::x(), UniPoly()});
    return {apply_map(h, sigma), std::move(chart)};
}

}  // namespace planaut

#endif
