#ifndef PLANAUT_DEGREE_HPP
#define PLANAUT_DEGREE_HPP

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace planaut {

/// Total or partial degree of a polynomial. The zero polynomial has degree
/// NEG_INF, which orders below every integer. There is deliberately no
/// arithmetic on Degree; callers unwrap with value() after ruling out NEG_INF.
class Degree {
public:
    constexpr Degree(int d) : d_(d)  // NOLINT: implicit on purpose
    {
        if (d < 0) throw std::invalid_argument("negative degree");
    }

    static constexpr Degree neg_inf() { return Degree(Tag{}); }

    constexpr bool is_neg_inf() const { return d_ == kNegInf; }

    constexpr int value() const
    {
        if (is_neg_inf()) throw std::logic_error("deg(0) has no integer value");
        return d_;
    }

    constexpr auto operator<=>(const Degree&) const = default;

    std::string str() const { return is_neg_inf() ? "-inf" : std::to_string(d_); }

private:
    struct Tag {};
    static constexpr int kNegInf = std::numeric_limits<int>::min();
    constexpr explicit Degree(Tag) : d_(kNegInf) {}
    int d_;
};

inline constexpr Degree NEG_INF = Degree::neg_inf();

}  // namespace planaut

#endif
