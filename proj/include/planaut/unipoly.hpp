#ifndef PLANAUT_UNIPOLY_HPP
#define PLANAUT_UNIPOLY_HPP

#include "planaut/degree.hpp"
#include "planaut/detail/render.hpp"
#include "planaut/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planaut {

/// Univariate polynomial over the rationals. Coefficients are held densely,
/// index = exponent; the top stored coefficient is never zero, so the zero
/// polynomial is the empty vector.
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    UniPoly(const Rational& constant)  // NOLINT: constants convert implicitly
    {
        if (constant != 0) c_.push_back(constant);
    }

    static UniPoly monomial(const Rational& coeff, unsigned exponent)
    {
        if (coeff == 0) return {};
        std::vector<Rational> c(exponent + 1);
        c[exponent] = coeff;
        return UniPoly(std::move(c));
    }

    static UniPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Degree degree() const { return c_.empty() ? NEG_INF : Degree(static_cast<int>(c_.size()) - 1); }

    /// Coefficient of x^e; zero past the degree.
    Rational coeff(unsigned e) const { return e < c_.size() ? c_[e] : Rational(0); }

    const Rational& leading_coefficient() const
    {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    /// Dense coefficient view, index = exponent.
    const std::vector<Rational>& coefficients() const { return c_; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly operator-() const
    {
        UniPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }

    UniPoly scaled(const Rational& s) const
    {
        if (s == 0) return {};
        UniPoly r = *this;
        for (auto& a : r.c_) a *= s;
        return r;
    }

    UniPoly derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return UniPoly(std::move(r));
    }

    Rational operator()(const Rational& t) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// this(inner(x)), by Horner.
    UniPoly compose(const UniPoly& inner) const
    {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UniPoly(*it);
        return acc;
    }

    UniPoly monic() const
    {
        if (is_zero()) return {};
        return scaled(1 / leading_coefficient());
    }

    UniPoly pow(unsigned e) const
    {
        UniPoly result(Rational(1)), base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return result;
    }

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const
    {
        if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> rem = c_;
        const std::size_t dn = divisor.c_.size();
        if (rem.size() < dn) return {UniPoly(), *this};
        std::vector<Rational> quo(rem.size() - dn + 1);
        const Rational inv_lc = 1 / divisor.c_.back();
        for (std::size_t k = rem.size(); k-- >= dn;) {
            const Rational q = rem[k] * inv_lc;
            quo[k - dn + 1] = q;
            if (q == 0) continue;
            for (std::size_t j = 0; j < dn; ++j) rem[k - dn + 1 + j] -= q * divisor.c_[j];
        }
        rem.resize(dn - 1);
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    bool divides(const UniPoly& other) const { return other.divmod(*this).second.is_zero(); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Canonical rendering in the variable `var`, ascending degree, e.g. "1 + 2*x - x^3".
inline std::string to_string(const UniPoly& p, char var = 'x')
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        std::string mono;
        detail::append_power(mono, var, static_cast<unsigned>(e));
        detail::append_term(out, c[e], mono, first);
        first = false;
    }
    return out;
}

}  // namespace planaut

#endif
