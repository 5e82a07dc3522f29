#ifndef PLANAUT_RATIONAL_HPP
#define PLANAUT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace planaut {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized; all helpers below return
/// canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

class DenominatorZero : public std::domain_error {
public:
    DenominatorZero() : std::domain_error("rational with zero denominator") {}
};

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw DenominatorZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

/// "n" or "n/d", parsed exactly.
inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text, 10));
    return make_rational(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace planaut

#endif
