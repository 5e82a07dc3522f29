// Shared test helpers: seeded generators and implementation-independent
// oracles. Nothing here calls the library routine it is used to check.
#ifndef PLANAUT_TESTS_SUPPORT_HPP
#define PLANAUT_TESTS_SUPPORT_HPP

#include "planaut/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace planaut::oracle {

using TermMap = std::map<std::pair<unsigned, unsigned>, Rational>;

inline TermMap term_map(const BiPoly& p)
{
    TermMap m;
    for (const auto& t : p.terms()) m[{t.exp.i, t.exp.j}] = t.coeff;
    return m;
}

inline BiPoly from_term_map(const TermMap& m)
{
    std::vector<BiPoly::Term> terms;
    for (const auto& [e, c] : m) terms.push_back({{e.first, e.second}, c});
    return BiPoly::from_terms(std::move(terms));
}

/// Schoolbook convolution over ordered term maps.
inline TermMap naive_mul(const TermMap& a, const TermMap& b)
{
    TermMap r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

inline TermMap naive_pow(const TermMap& a, unsigned e)
{
    TermMap r{{{0, 0}, Rational(1)}};
    for (unsigned k = 0; k < e; ++k) r = naive_mul(r, a);
    return r;
}

inline TermMap naive_add(TermMap a, const TermMap& b, const Rational& s = 1)
{
    for (const auto& [e, c] : b) a[e] += s * c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
}

inline TermMap naive_dx(const TermMap& a)
{
    TermMap r;
    for (const auto& [e, c] : a)
        if (e.first > 0) r[{e.first - 1, e.second}] += c * e.first;
    return r;
}

/// Direct substitution: sum of c * fx^i * fy^j, each power by naive_pow.
inline TermMap naive_substitute(const TermMap& p, const TermMap& fx, const TermMap& fy)
{
    TermMap r;
    for (const auto& [e, c] : p) r = naive_add(r, naive_mul(naive_pow(fx, e.first), naive_pow(fy, e.second)), c);
    return r;
}

/// Leibniz-formula determinant; exponential, for small matrices only.
template <class T>
T leibniz_det(const std::vector<std::vector<T>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total{};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        T prod = T(Rational(1));
        for (std::size_t i = 0; i < n; ++i) prod = prod * m[i][perm[i]];
        total = inversions % 2 ? total - prod : total + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Rational random_rational(std::mt19937_64& rng, int bound, bool integral = false)
{
    std::uniform_int_distribution<int> num(-bound, bound), den(1, integral ? 1 : 3);
    return make_rational(num(rng), den(rng));
}

inline BiPoly random_bipoly(std::mt19937_64& rng, unsigned max_degree, unsigned max_terms, int bound = 4)
{
    std::uniform_int_distribution<unsigned> deg(0, max_degree), count(0, max_terms);
    std::vector<BiPoly::Term> terms;
    const unsigned n = count(rng);
    for (unsigned k = 0; k < n; ++k) {
        const unsigned d = deg(rng);
        const unsigned i = std::uniform_int_distribution<unsigned>(0, d)(rng);
        terms.push_back({{i, d - i}, random_rational(rng, bound)});
    }
    return BiPoly::from_terms(std::move(terms));
}

inline UniPoly random_unipoly(std::mt19937_64& rng, unsigned max_degree, int bound = 4)
{
    const unsigned d = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
    std::vector<Rational> c(d + 1);
    for (auto& a : c) a = random_rational(rng, bound);
    return UniPoly(std::move(c));
}

inline PolyMap random_polymap(std::mt19937_64& rng, unsigned max_degree, unsigned max_terms)
{
    return {random_bipoly(rng, max_degree, max_terms), random_bipoly(rng, max_degree, max_terms)};
}

}  // namespace planaut::oracle

#endif
