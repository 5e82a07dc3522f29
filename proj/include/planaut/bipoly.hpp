#ifndef PLANAUT_BIPOLY_HPP
#define PLANAUT_BIPOLY_HPP

#include "planaut/degree.hpp"
#include "planaut/detail/kronecker.hpp"
#include "planaut/detail/render.hpp"
#include "planaut/rational.hpp"
#include "planaut/unipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace planaut {

/// Exponent pair (i, j) of the monomial x^i y^j.
struct Exponent {
    unsigned i = 0;
    unsigned j = 0;

    unsigned total() const { return i + j; }
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded-lex term order: total degree ascending, then x-exponent descending
/// within one degree (x^2, x*y, y^2). This is the canonical storage and
/// printing order.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.i > b.i;
    }
};

enum class Var { X, Y };

/// Sparse bivariate polynomial over Q. Terms are kept sorted by GrlexLess
/// with no zero coefficients; the zero polynomial has no terms.
class BiPoly {
public:
    struct Term {
        Exponent exp;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    BiPoly() = default;

    BiPoly(const Rational& constant)  // NOLINT: constants convert implicitly
    {
        if (constant != 0) terms_.push_back({{0, 0}, constant});
    }

    BiPoly(long constant) : BiPoly(Rational(constant)) {}  // NOLINT

    static BiPoly monomial(const Rational& coeff, unsigned i, unsigned j)
    {
        BiPoly p;
        if (coeff != 0) p.terms_.push_back({{i, j}, coeff});
        return p;
    }

    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly y() { return monomial(1, 0, 1); }

    /// Builds from arbitrary terms: like exponents are merged, zeros dropped.
    static BiPoly from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return GrlexLess{}(a.exp, b.exp); });
        BiPoly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
                p.terms_.back().coeff += t.coeff;
            else
                p.terms_.push_back(std::move(t));
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        }
        return p;
    }

    /// p(x) or p(y) viewed as a bivariate polynomial.
    static BiPoly from_uni(const UniPoly& p, Var var = Var::X)
    {
        BiPoly r;
        const auto& c = p.coefficients();
        for (unsigned e = 0; e < c.size(); ++e) {
            if (c[e] == 0) continue;
            r.terms_.push_back({var == Var::X ? Exponent{e, 0} : Exponent{0, e}, c[e]});
        }
        return r;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.total() == 0); }

    /// Constant term (coefficient of x^0 y^0).
    Rational constant_term() const
    {
        return !terms_.empty() && terms_[0].exp.total() == 0 ? terms_[0].coeff : Rational(0);
    }

    Rational coeff(unsigned i, unsigned j) const
    {
        const Exponent e{i, j};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exponent& k) { return GrlexLess{}(t.exp, k); });
        return it != terms_.end() && it->exp == e ? it->coeff : Rational(0);
    }

    Degree total_degree() const { return terms_.empty() ? NEG_INF : Degree(static_cast<int>(terms_.back().exp.total())); }

    Degree degree_in(Var v) const
    {
        if (terms_.empty()) return NEG_INF;
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, v == Var::X ? t.exp.i : t.exp.j);
        return Degree(static_cast<int>(d));
    }

    /// Top graded-homogeneous part.
    BiPoly leading_form() const
    {
        BiPoly r;
        if (terms_.empty()) return r;
        const unsigned top = terms_.back().exp.total();
        for (const auto& t : terms_)
            if (t.exp.total() == top) r.terms_.push_back(t);
        return r;
    }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly operator-() const
    {
        BiPoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) { return merge(a, b, false); }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return merge(a, b, true); }
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) { return multiply(a, b); }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly scaled(const Rational& s) const
    {
        if (s == 0) return {};
        BiPoly r = *this;
        for (auto& t : r.terms_) t.coeff *= s;
        return r;
    }

    BiPoly pow(unsigned e) const
    {
        BiPoly result(1), base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return result;
    }

    BiPoly partial(Var v) const
    {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            const unsigned e = v == Var::X ? t.exp.i : t.exp.j;
            if (e == 0) continue;
            Exponent ne = t.exp;
            (v == Var::X ? ne.i : ne.j) -= 1;
            out.push_back({ne, t.coeff * e});
        }
        // Lowering one exponent keeps grlex order among the surviving terms.
        BiPoly r;
        r.terms_ = std::move(out);
        return r;
    }

    Rational operator()(const Rational& x, const Rational& y) const
    {
        return substitute<Rational>(x, y);
    }

    /// this(fx, fy) for any commutative ring element type P constructible
    /// from a Rational (Rational, UniPoly, BiPoly). Powers of fy are cached
    /// and x is eliminated by Horner, so the number of P-multiplications is
    /// deg_x + deg_y rather than the number of terms.
    template <class P>
    P substitute(const P& fx, const P& fy) const
    {
        if constexpr (std::is_same_v<P, UniPoly>) return substitute_uni(fx, fy);
        if (terms_.empty()) return P(Rational(0));
        unsigned max_i = 0, max_j = 0;
        for (const auto& t : terms_) {
            max_i = std::max(max_i, t.exp.i);
            max_j = std::max(max_j, t.exp.j);
        }
        std::vector<P> ypow;
        ypow.reserve(max_j + 1);
        ypow.push_back(P(Rational(1)));
        for (unsigned j = 1; j <= max_j; ++j) ypow.push_back(ypow.back() * fy);

        std::vector<std::vector<const Term*>> by_i(max_i + 1);
        for (const auto& t : terms_) by_i[t.exp.i].push_back(&t);

        P acc(Rational(0));
        for (unsigned k = max_i + 1; k-- > 0;) {
            if (k != max_i) acc = acc * fx;
            for (const Term* t : by_i[k]) acc = acc + scale_elem(ypow[t->exp.j], t->coeff);
        }
        return acc;
    }

    /// The polynomial as an element of Q[x]; requires no y in the support.
    UniPoly to_uni(Var var = Var::X) const
    {
        std::vector<Rational> c;
        for (const auto& t : terms_) {
            const unsigned other = var == Var::X ? t.exp.j : t.exp.i;
            if (other != 0) throw std::domain_error("polynomial is not univariate in the requested variable");
            const unsigned e = var == Var::X ? t.exp.i : t.exp.j;
            if (c.size() <= e) c.resize(e + 1);
            c[e] = t.coeff;
        }
        return UniPoly(std::move(c));
    }

    bool is_univariate_in(Var var) const
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [var](const Term& t) { return (var == Var::X ? t.exp.j : t.exp.i) == 0; });
    }

private:
    using ZPoly = std::vector<Integer>;

    static ZPoly zmul(const ZPoly& a, const ZPoly& b)
    {
        if (a.empty() || b.empty()) return {};
        ZPoly r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
        return r;
    }

    static Integer integer_image(const UniPoly& p, ZPoly& out)
    {
        Integer l = 1;
        for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        out.clear();
        for (const auto& c : p.coefficients()) out.push_back(c.get_num() * (l / c.get_den()));
        return l;
    }

    static Integer power(const Integer& base, unsigned e)
    {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
        return r;
    }

    // Same Horner scheme as substitute, over Z: with fx = X/dx, fy = Y/dy and
    // common coefficient denominator D, the result times D dx^I dy^J is
    // sum C_ij dx^(I-i) dy^(J-j) X^i Y^j, computed with mpz_addmul only.
    UniPoly substitute_uni(const UniPoly& fx, const UniPoly& fy) const
    {
        if (terms_.empty()) return UniPoly();
        unsigned max_i = 0, max_j = 0;
        for (const auto& t : terms_) {
            max_i = std::max(max_i, t.exp.i);
            max_j = std::max(max_j, t.exp.j);
        }
        ZPoly xs, ys, coeffs;
        const Integer dx = integer_image(fx, xs), dy = integer_image(fy, ys);
        const Integer denom_c = integer_image(*this, coeffs);

        std::vector<ZPoly> ypow(max_j + 1);
        ypow[0] = {Integer(1)};
        for (unsigned j = 1; j <= max_j; ++j) ypow[j] = zmul(ypow[j - 1], ys);
        if (dy != 1)
            for (unsigned j = 0; j < max_j; ++j) {
                const Integer s = power(dy, max_j - j);
                for (auto& c : ypow[j]) c *= s;
            }

        std::vector<std::vector<std::size_t>> by_i(max_i + 1);
        for (std::size_t k = 0; k < terms_.size(); ++k) by_i[terms_[k].exp.i].push_back(k);

        ZPoly acc;
        for (unsigned i = max_i + 1; i-- > 0;) {
            if (i != max_i) acc = zmul(acc, xs);
            ZPoly inner;
            for (std::size_t k : by_i[i]) {
                const ZPoly& yp = ypow[terms_[k].exp.j];
                if (inner.size() < yp.size()) inner.resize(yp.size());
                for (std::size_t e = 0; e < yp.size(); ++e)
                    mpz_addmul(inner[e].get_mpz_t(), coeffs[k].get_mpz_t(), yp[e].get_mpz_t());
            }
            if (inner.empty()) continue;
            if (dx != 1 && i != max_i) {
                const Integer s = power(dx, max_i - i);
                for (auto& c : inner) c *= s;
            }
            if (acc.size() < inner.size()) acc.resize(inner.size());
            for (std::size_t e = 0; e < inner.size(); ++e) acc[e] += inner[e];
        }

        const Integer denom = denom_c * power(dx, max_i) * power(dy, max_j);
        std::vector<Rational> out;
        out.reserve(acc.size());
        for (auto& c : acc) out.push_back(make_rational(c, denom));
        return UniPoly(std::move(out));
    }

    template <class P>
    static P scale_elem(const P& p, const Rational& c)
    {
        if constexpr (std::is_same_v<P, Rational>)
            return p * c;
        else
            return p.scaled(c);
    }

    static BiPoly merge(const BiPoly& a, const BiPoly& b, bool subtract)
    {
        BiPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        const GrlexLess less;
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && less(ia->exp, ib->exp))) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || less(ib->exp, ia->exp)) {
                r.terms_.push_back({ib->exp, subtract ? Rational(-ib->coeff) : ib->coeff});
                ++ib;
            } else {
                Rational c = subtract ? Rational(ia->coeff - ib->coeff) : Rational(ia->coeff + ib->coeff);
                if (c != 0) r.terms_.push_back({ia->exp, std::move(c)});
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    // Clears denominators so the convolution runs over Z with mpz_addmul.
    static Integer integer_image(const BiPoly& p, std::vector<Integer>& out)
    {
        Integer l = 1;
        for (const auto& t : p.terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
        out.clear();
        out.reserve(p.terms_.size());
        for (const auto& t : p.terms_) out.push_back(t.coeff.get_num() * (l / t.coeff.get_den()));
        return l;
    }

    static BiPoly multiply(const BiPoly& a, const BiPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> ca, cb;
        const Integer la = integer_image(a, ca);
        const Integer lb = integer_image(b, cb);
        const Integer denom = la * lb;

        unsigned ai = 0, aj = 0, bi = 0, bj = 0;
        for (const auto& t : a.terms_) ai = std::max(ai, t.exp.i), aj = std::max(aj, t.exp.j);
        for (const auto& t : b.terms_) bi = std::max(bi, t.exp.i), bj = std::max(bj, t.exp.j);
        const std::uint64_t rows = ai + bi + 1, cols = aj + bj + 1;
        const std::uint64_t box = rows * cols;
        const std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * b.size();

        auto emit = [&denom](std::vector<Term>& out, unsigned i, unsigned j, const Integer& v) {
            if (v == 0) return;
            Rational c(v, denom);
            c.canonicalize();
            out.push_back({{i, j}, std::move(c)});
        };

        BiPoly r;
        const bool dense = box <= (std::uint64_t{1} << 23) && box <= 8 * pairs + 64;
        std::size_t limbs = 0;
        if (dense && pairs >= kKroneckerPairs) {
            limbs = detail::kronecker_limbs(ca, cb);
            if (box * limbs > kKroneckerMaxLimbs) limbs = 0;
        }
        if (dense) {
            std::vector<Integer> acc;
            if (limbs) {
                auto slots_of = [cols](const BiPoly& p) {
                    std::vector<std::uint64_t> s;
                    s.reserve(p.size());
                    for (const auto& t : p.terms_) s.push_back(t.exp.i * cols + t.exp.j);
                    return s;
                };
                const auto sa = slots_of(a), sb = slots_of(b);
                const Integer pa = detail::kronecker_pack(ca, sa, *std::max_element(sa.begin(), sa.end()) + 1, limbs);
                const Integer pb = detail::kronecker_pack(cb, sb, *std::max_element(sb.begin(), sb.end()) + 1, limbs);
                acc = detail::kronecker_unpack(pa * pb, box, limbs);
            } else {
                acc.resize(box);
                for (std::size_t s = 0; s < a.size(); ++s) {
                    const Exponent ea = a.terms_[s].exp;
                    for (std::size_t t = 0; t < b.size(); ++t) {
                        const Exponent eb = b.terms_[t].exp;
                        Integer& slot = acc[(ea.i + eb.i) * cols + (ea.j + eb.j)];
                        mpz_addmul(slot.get_mpz_t(), ca[s].get_mpz_t(), cb[t].get_mpz_t());
                    }
                }
            }
            // Walk the box in grlex order so no sort is needed.
            const unsigned top = static_cast<unsigned>(rows + cols - 2);
            for (unsigned d = 0; d <= top; ++d) {
                const unsigned hi = std::min<unsigned>(d, static_cast<unsigned>(rows - 1));
                const unsigned lo = d > cols - 1 ? d - static_cast<unsigned>(cols - 1) : 0;
                for (unsigned i = hi + 1; i-- > lo;) emit(r.terms_, i, d - i, acc[i * cols + (d - i)]);
            }
            return r;
        }

        std::unordered_map<std::uint64_t, Integer> acc;
        acc.reserve(std::min<std::uint64_t>(pairs, box));
        for (std::size_t s = 0; s < a.size(); ++s) {
            const Exponent ea = a.terms_[s].exp;
            for (std::size_t t = 0; t < b.size(); ++t) {
                const Exponent eb = b.terms_[t].exp;
                const std::uint64_t key = (std::uint64_t{ea.i + eb.i} << 32) | (ea.j + eb.j);
                Integer& slot = acc[key];
                mpz_addmul(slot.get_mpz_t(), ca[s].get_mpz_t(), cb[t].get_mpz_t());
            }
        }
        r.terms_.reserve(acc.size());
        for (const auto& [key, v] : acc) emit(r.terms_, static_cast<unsigned>(key >> 32), static_cast<unsigned>(key & 0xffffffffu), v);
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return GrlexLess{}(x.exp, y.exp); });
        return r;
    }

    // Products with at least this many term pairs go through one big-integer
    // multiplication instead of the schoolbook loop.
    static constexpr std::uint64_t kKroneckerPairs = 2048;
    static constexpr std::uint64_t kKroneckerMaxLimbs = std::uint64_t{1} << 27;

    std::vector<Term> terms_;
};

inline BiPoly operator*(const Rational& s, const BiPoly& p) { return p.scaled(s); }

inline std::string to_string(const BiPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string mono;
        detail::append_power(mono, 'x', t.exp.i);
        detail::append_power(mono, 'y', t.exp.j);
        detail::append_term(out, t.coeff, mono, first);
        first = false;
    }
    return out;
}

/// Partial derivative, the exact formal one.
inline BiPoly partial_derivative(const BiPoly& p, Var v) { return p.partial(v); }

inline Degree total_degree(const BiPoly& p) { return p.total_degree(); }

}  // namespace planaut

#endif
