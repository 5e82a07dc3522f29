#ifndef PLANAUT_EMBEDDING_HPP
#define PLANAUT_EMBEDDING_HPP

#include "planaut/errors.hpp"
#include "planaut/factor.hpp"
#include "planaut/resultant.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace planaut::embedding {

/// D_p(x, y) = (p(x) - p(y)) / (x - y). D of a constant is 0.
inline BiPoly difference_quotient(const UniPoly& p)
{
    std::vector<BiPoly::Term> terms;
    const auto& c = p.coefficients();
    for (unsigned k = 1; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        for (unsigned a = 0; a < k; ++a) terms.push_back({{a, k - 1 - a}, c[k]});
    }
    return BiPoly::from_terms(std::move(terms));
}

/// Boolean outcome with the polynomial that explains a negative answer.
struct Verdict {
    bool holds = false;
    std::optional<BiPoly> witness;  // present iff !holds
};

struct EmbeddingReport {
    bool injective = false;
    bool immersion = false;
    std::optional<BiPoly> witness;  // present iff !(injective && immersion)

    bool is_embedding() const { return injective && immersion; }
};

namespace detail {

/// One leading-term cancellation step on a curve: the higher-degree
/// component loses its top term against a power of the other (second
/// reduced by first on ties). Returns nullopt when the degrees do not divide.
inline std::optional<ElementaryFactor> reduction_step(const Parametrization& g)
{
    const int dp = g.p.degree().value(), dq = g.q.degree().value();
    const bool reduce_p = dp > dq;
    const UniPoly& high = reduce_p ? g.p : g.q;
    const UniPoly& low = reduce_p ? g.q : g.p;
    const int dh = std::max(dp, dq), dl = std::min(dp, dq);
    if (dh % dl != 0) return std::nullopt;
    const unsigned d = static_cast<unsigned>(dh / dl);
    Rational lambda = high.leading_coefficient();
    for (unsigned k = 0; k < d; ++k) lambda /= low.leading_coefficient();
    return ElementaryFactor{reduce_p ? Axis::First : Axis::Second, UniPoly::monomial(-lambda, d)};
}

/// Applies reduction steps while both components have degree >= 2 and the
/// degrees divide. Every step is a plane automorphism, so it preserves the
/// ideal (D_p, D_q) and the gcd of the derivatives; the injectivity and
/// immersion tests may run on the reduced curve.
inline Parametrization reduce_curve(Parametrization g)
{
    while (g.p.degree() >= 2 && g.q.degree() >= 2) {
        const auto step = reduction_step(g);
        if (!step) break;
        g = apply_factor(Factor(*step), g);
    }
    return g;
}

inline Verdict injective_reduced(const Parametrization& g)
{
    const BiPoly dp = difference_quotient(g.p), dq = difference_quotient(g.q);
    if (g.p.is_constant() && g.q.is_constant()) return {false, BiPoly()};
    if (g.p.is_constant() || g.q.is_constant()) {
        const UniPoly& other = g.p.is_constant() ? g.q : g.p;
        if (other.degree() == 1) return {true, std::nullopt};
        return {false, g.p.is_constant() ? dq : dp};
    }
    if (g.p.degree() == 1 || g.q.degree() == 1) return {true, std::nullopt};

    const bool p_high = g.p.degree() >= g.q.degree();
    const UniPoly r = resultant_y(p_high ? dp : dq, p_high ? dq : dp);
    if (r.is_zero()) return {false, gcd_bivariate(dp, dq)};
    if (r.is_constant()) return {true, std::nullopt};
    return {false, BiPoly::from_uni(r)};
}

inline Verdict immersion_reduced(const Parametrization& g)
{
    const UniPoly d = gcd_univariate(g.p.derivative(), g.q.derivative());
    if (d.is_constant() && !d.is_zero()) return {true, std::nullopt};
    return {false, BiPoly::from_uni(d)};
}

}  // namespace detail

/// Injectivity of t -> (p(t), q(t)) over the algebraic closure: D_p and D_q
/// have no common zero. After ideal-preserving reduction, a component of
/// degree one decides it directly; otherwise Res_y(D_high, D_low) must be a
/// non-zero constant. Both D's have constant leading coefficient in y, so the
/// resultant vanishes at x0 exactly when a common zero lies over x0. The
/// witness is the resultant, or the common factor when the resultant is 0.
inline Verdict is_injective_param(const Parametrization& g) { return detail::injective_reduced(detail::reduce_curve(g)); }

/// gcd(p', q') is a non-zero constant; witness is the gcd otherwise.
inline Verdict is_immersion(const Parametrization& g) { return detail::immersion_reduced(detail::reduce_curve(g)); }

inline EmbeddingReport is_embedding(const Parametrization& g)
{
    const Parametrization reduced = detail::reduce_curve(g);
    const Verdict inj = detail::injective_reduced(reduced);
    const Verdict imm = detail::immersion_reduced(reduced);
    EmbeddingReport r{inj.holds, imm.holds, std::nullopt};
    if (!imm.holds)
        r.witness = imm.witness;
    else if (!inj.holds)
        r.witness = inj.witness;
    return r;
}

class NotAnEmbedding : public HypothesisError {
public:
    explicit NotAnEmbedding(EmbeddingReport r)
        : HypothesisError(std::string("curve is not an embedding of the line") +
                          (r.injective ? "" : " (not injective)") + (r.immersion ? "" : " (not an immersion)")),
          report(std::move(r))
    {
    }
    EmbeddingReport report;
};

/// Rectification stalled on a curve that passed is_embedding. The
/// Abhyankar-Moh theorem rules this out, so it signals a defect here.
class AbhyankarMohViolation : public CertificateFailure {
public:
    explicit AbhyankarMohViolation(const std::string& what)
        : CertificateFailure("Abhyankar-Moh reduction failed on a verified embedding (implementation bug): " + what)
    {
    }
};

/// Returns Phi with Phi(gamma(t)) = (t, 0), built from elementary and affine
/// factors by leading-term cancellation.
inline Factorization rectify(const Parametrization& gamma)
{
    EmbeddingReport report = is_embedding(gamma);
    if (!report.is_embedding()) throw NotAnEmbedding(std::move(report));

    std::vector<Factor> applied;  // in application order
    Parametrization cur = gamma;
    auto push = [&](Factor f) {
        cur = apply_factor(f, cur);
        applied.push_back(std::move(f));
    };

    while (true) {
        const Degree dp = cur.p.degree(), dq = cur.q.degree();
        if (dp == 1) {
            const Rational a = cur.p.coeff(1), b = cur.p.coeff(0);
            const AffineFactor normalize = AffineFactor::make(1 / a, 0, 0, 1, -b / a, 0);
            if (!normalize.is_identity()) push(normalize);
            if (!cur.q.is_zero()) push(ElementaryFactor{Axis::Second, -cur.q});
            break;
        }
        if (dq == 1) {
            push(AffineFactor::swap());
            continue;
        }
        if (dp < 1 || dq < 1) throw AbhyankarMohViolation("a component became constant: " + to_string(cur));
        const auto step = detail::reduction_step(cur);
        if (!step) throw AbhyankarMohViolation("degrees do not divide: " + to_string(cur));
        const int before = dp.value() + dq.value();
        push(*step);
        const int after = std::max(cur.p.degree(), Degree(0)).value() + std::max(cur.q.degree(), Degree(0)).value();
        if (after >= before) throw AbhyankarMohViolation("degree sum did not decrease");
    }

    Factorization phi;
    phi.factors.assign(applied.rbegin(), applied.rend());
    const Parametrization axis{UniPoly::x(), UniPoly()};
    if (apply_factorization(phi, gamma) != axis) throw AbhyankarMohViolation("Phi(gamma) != (t, 0)");
    return phi;
}

}  // namespace planaut::embedding

#endif
