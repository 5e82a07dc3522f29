#ifndef PLANAUT_KELLER_HPP
#define PLANAUT_KELLER_HPP

#include "planaut/embedding.hpp"
#include "planaut/errors.hpp"
#include "planaut/line.hpp"
#include "planaut/newton.hpp"
#include "planaut/tame.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace planaut::keller {

struct KellerReport {
    BiPoly jacobian;
    bool is_keller = false;
};

/// Jac H and whether it is a non-zero constant.
inline KellerReport is_keller(const PolyMap& h)
{
    KellerReport r{jacobian_det(h), false};
    r.is_keller = r.jacobian.is_constant() && !r.jacobian.is_zero();
    return r;
}

// Certificate records, one per pipeline stage.
namespace step {
struct JacobianConstant {
    Rational value;
};
struct LineRestriction {
    Parametrization gamma;
    AffineFactor chart;  // L, with L(t, 0) on the line
};
struct EmbeddingVerified {
    embedding::EmbeddingReport report;
};
struct Rectified {
    Factorization phi;  // Phi(gamma(t)) = (t, 0)
    Factorization h1;   // H1 = Phi^-1, H1(t, 0) = gamma(t)
};
struct AxisFixed {
    PolyMap g;  // G = Phi o H o L = H1^-1 o H o L
};
struct DegreeCollapse {
    int min_degree;
};
struct Inverted {
    Factorization factorization;  // of H
    PolyMap inverse;
};
struct FinalCheck {
    bool identity_verified;
};
}  // namespace step

using Step = std::variant<step::JacobianConstant, step::LineRestriction, step::EmbeddingVerified, step::Rectified,
                          step::AxisFixed, step::DegreeCollapse, step::Inverted, step::FinalCheck>;

inline const char* step_name(const Step& s)
{
    static constexpr const char* names[] = {"JacobianConstant", "LineRestriction", "EmbeddingVerified",
                                            "Rectified",        "AxisFixed",       "DegreeCollapse",
                                            "Inverted",         "FinalCheck"};
    return names[s.index()];
}

struct Certificate {
    PolyMap map;
    std::optional<Line> line;
    std::vector<Step> steps;

    template <class S>
    const S* find() const
    {
        for (const auto& s : steps)
            if (const auto* p = std::get_if<S>(&s)) return p;
        return nullptr;
    }
};

class JacobianNotConstant : public HypothesisError {
public:
    explicit JacobianNotConstant(BiPoly j)
        : HypothesisError("Jacobian is not a non-zero constant: " + to_string(j)), jacobian(std::move(j))
    {
    }
    BiPoly jacobian;
};

class NotInjectiveOnLine : public HypothesisError {
public:
    explicit NotInjectiveOnLine(BiPoly w)
        : HypothesisError("restriction to the line is not injective; witness " + to_string(w)), witness(std::move(w))
    {
    }
    BiPoly witness;
};

/// Both components of a constant-Jacobian map fixing the axis had degree
/// above one. Under verified hypotheses this contradicts polygon similarity;
/// it means a bug here or a counterexample to a published theorem.
class TheoremViolationWitness : public CertificateFailure {
public:
    TheoremViolationWitness(newton::Polygon f, newton::Polygon g, const std::string& detail)
        : CertificateFailure("polygon argument reached its contradiction: " + detail + "; N_f = " +
                             newton::to_string(f) + ", N_g = " + newton::to_string(g)),
          nf(std::move(f)), ng(std::move(g))
    {
    }
    newton::Polygon nf, ng;
};

struct FixedAxisResult {
    Factorization factorization;
    Certificate certificate;
};

/// Inverts a Keller map with H(x, 0) = (x, 0). Such a map always has a
/// component of degree at most one; if both degrees exceed one, the polygon
/// argument is replayed step by step and reported as TheoremViolationWitness.
inline FixedAxisResult fixed_axis_invert(const PolyMap& h)
{
    const KellerReport k = is_keller(h);
    if (!k.is_keller) throw PreconditionViolated("JacobianNotConstant");
    const Parametrization axis = restrict_to_axis(h);
    if (axis.p != UniPoly::x()) throw PreconditionViolated("f(x,0) = x fails: f(x,0) = " + to_string(axis.p));
    if (!axis.q.is_zero()) throw PreconditionViolated("g(x,0) = 0 fails: g(x,0) = " + to_string(axis.q));

    const Degree df = h.first.total_degree(), dg = h.second.total_degree();
    if (df > 1 && dg > 1) {
        const newton::Polygon nf = newton::newton_polygon(h.first);
        const newton::Polygon ng = newton::newton_polygon(h.second);
        if (!nf.contains({1, 0})) throw TheoremViolationWitness(nf, ng, "(1,0) not in N_f despite f(x,0) = x");
        const auto sim = newton::similarity_check(h.first, h.second);
        if (!sim.similar) throw TheoremViolationWitness(nf, ng, "N_g is not (deg g / deg f) N_f");
        const newton::Point forced{sim.factor, 0};
        if (!ng.contains(forced)) throw TheoremViolationWitness(nf, ng, "scaled point missing from N_g");
        throw TheoremViolationWitness(nf, ng,
                                      "(" + sim.factor.get_str() + ",0) in N_g forces an x^i term in g, but g(x,0) = 0");
    }

    FixedAxisResult r;
    r.factorization = tame::invert_low_degree(h);
    r.certificate.map = h;
    r.certificate.steps.emplace_back(step::JacobianConstant{k.jacobian.constant_term()});
    r.certificate.steps.emplace_back(step::AxisFixed{h});
    r.certificate.steps.emplace_back(step::DegreeCollapse{std::min(df, dg).value()});
    const PolyMap inverse = factorization_to_map(factorization_inverse(r.factorization));
    r.certificate.steps.emplace_back(step::Inverted{r.factorization, inverse});
    r.certificate.steps.emplace_back(step::FinalCheck{compose_map(inverse, h) == PolyMap::identity()});
    return r;
}

struct ProveOptions {
    /// Test hook: run the injectivity check before the Jacobian check, so
    /// NotInjectiveOnLine can be exercised on maps that are not Keller.
    bool injectivity_before_jacobian = false;
};

struct ProveResult {
    PolyMap inverse;
    Factorization factorization;  // of H
    Certificate certificate;
};

/// From "H is Keller and injective on the line l" to an explicit inverse:
/// restrict H o L to the axis, rectify the resulting embedding with Phi,
/// invert the axis-fixing map G = Phi o H o L, and assemble
/// H = Phi^-1 o G o L^-1. Both H^-1 o H and H o H^-1 are verified
/// symbolically before returning.
inline ProveResult prove_line(const PolyMap& h, const Line& l, const ProveOptions& opts = {})
{
    Certificate cert;
    cert.map = h;
    cert.line = l;

    KellerReport k;
    auto check_jacobian = [&] {
        k = is_keller(h);
        if (!k.is_keller) throw JacobianNotConstant(k.jacobian);
    };
    if (!opts.injectivity_before_jacobian) check_jacobian();

    const LineRestriction restriction = restrict_to_line(h, l);
    const embedding::Verdict injective = embedding::is_injective_param(restriction.gamma);
    if (!injective.holds) throw NotInjectiveOnLine(injective.witness.value_or(BiPoly()));
    const embedding::EmbeddingReport report = embedding::is_embedding(restriction.gamma);
    if (opts.injectivity_before_jacobian) check_jacobian();
    // Injectivity in the D-criterion sense already excludes singular points.
    if (!report.immersion) throw CertificateFailure("injective restriction with vanishing derivative");

    cert.steps.emplace_back(step::JacobianConstant{k.jacobian.constant_term()});
    cert.steps.emplace_back(step::LineRestriction{restriction.gamma, restriction.chart});
    cert.steps.emplace_back(step::EmbeddingVerified{report});

    const Factorization phi = embedding::rectify(restriction.gamma);
    const Factorization h1 = factorization_inverse(phi);
    cert.steps.emplace_back(step::Rectified{phi, h1});

    // Phi o H first: the rectifier undoes the outer factors of H, so this
    // stays small, while H o L with a rational chart can be very large.
    const PolyMap g = compose_map(apply_factorization(phi, h), to_map(restriction.chart));
    if (restrict_to_axis(g) != Parametrization{UniPoly::x(), UniPoly()})
        throw CertificateFailure("G(t, 0) != (t, 0) after rectification");
    cert.steps.emplace_back(step::AxisFixed{g});

    const FixedAxisResult fixed = fixed_axis_invert(g);
    cert.steps.emplace_back(step::DegreeCollapse{std::min(g.first.total_degree(), g.second.total_degree()).value()});

    ProveResult out;
    out.factorization = h1.then_after(fixed.factorization).then_after(Factorization{{restriction.chart.inverse()}});
    const Factorization inverse_factors = factorization_inverse(out.factorization);
    out.inverse = factorization_to_map(inverse_factors);
    cert.steps.emplace_back(step::Inverted{out.factorization, out.inverse});

    const bool recomposes = factorization_to_map(out.factorization) == h;
    const bool left = apply_factorization(inverse_factors, h) == PolyMap::identity();
    const bool right = apply_factorization(out.factorization, out.inverse) == PolyMap::identity();
    if (!(recomposes && left && right)) throw CertificateFailure("final identity check failed");
    cert.steps.emplace_back(step::FinalCheck{true});
    out.certificate = std::move(cert);
    return out;
}

/// Re-checks a certificate by composition only: the recorded factorization
/// must rebuild the map, the recorded inverse must invert it on both sides,
/// and the intermediate curve and maps must match their definitions.
inline bool verify_certificate(const Certificate& cert)
{
    const auto* jc = cert.find<step::JacobianConstant>();
    const auto* lr = cert.find<step::LineRestriction>();
    const auto* rect = cert.find<step::Rectified>();
    const auto* fixed = cert.find<step::AxisFixed>();
    const auto* inv = cert.find<step::Inverted>();
    const auto* fin = cert.find<step::FinalCheck>();
    if (!jc || !inv || !fin || !fin->identity_verified) return false;
    if (jacobian_det(cert.map) != BiPoly(jc->value) || jc->value == 0) return false;
    if (factorization_to_map(inv->factorization) != cert.map) return false;
    if (apply_factorization(factorization_inverse(inv->factorization), cert.map) != PolyMap::identity()) return false;
    if (apply_factorization(inv->factorization, inv->inverse) != PolyMap::identity()) return false;
    if (lr) {
        if (cert.line && line_chart(*cert.line) != lr->chart) return false;
        const Parametrization sigma = apply_factor(Factor(lr->chart), Parametrization{UniPoly::x(), UniPoly()});
        if (apply_map(cert.map, sigma) != lr->gamma) return false;
    }
    if (rect && lr) {
        if (apply_factorization(rect->phi, lr->gamma) != Parametrization{UniPoly::x(), UniPoly()}) return false;
        if (apply_factorization(rect->h1, Parametrization{UniPoly::x(), UniPoly()}) != lr->gamma) return false;
    }
    if (fixed && rect && lr) {
        if (compose_map(apply_factorization(rect->phi, cert.map), to_map(lr->chart)) != fixed->g) return false;
    }
    return true;
}

}  // namespace planaut::keller

#endif
