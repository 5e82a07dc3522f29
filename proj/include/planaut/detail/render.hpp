#ifndef PLANAUT_DETAIL_RENDER_HPP
#define PLANAUT_DETAIL_RENDER_HPP

#include "planaut/rational.hpp"

#include <string>

namespace planaut::detail {

inline void append_power(std::string& out, char var, unsigned e)
{
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) {
        out += '^';
        out += std::to_string(e);
    }
}

/// Appends one term in canonical form. Negative coefficients after the first
/// term become a binary minus; the first term carries a bare leading '-'.
inline void append_term(std::string& out, const Rational& coeff, const std::string& monomial, bool first)
{
    const bool negative = coeff < 0;
    if (first)
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    const Rational mag = abs(coeff);
    if (monomial.empty()) {
        out += mag.get_str();
    } else {
        if (mag != 1) {
            out += mag.get_str();
            out += '*';
        }
        out += monomial;
    }
}

}  // namespace planaut::detail

#endif
