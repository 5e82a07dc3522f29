#ifndef PLANAUT_DETAIL_KRONECKER_HPP
#define PLANAUT_DETAIL_KRONECKER_HPP

#include "planaut/rational.hpp"

#include <gmp.h>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace planaut::detail {

/// Integer-coefficient product by Kronecker substitution: both operands are
/// packed into one big integer each (slot s = i * cols + j, `limbs` limbs per
/// slot, signed digits), multiplied once by GMP, and unpacked with balanced
/// digits. `out` receives rows * cols slot values.
struct KroneckerLayout {
    std::uint64_t cols;
    std::uint64_t slots;
    std::size_t limbs;
};

inline std::size_t bit_length(const Integer& z) { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

/// Limbs per slot so that |product coefficient| < 2^(64*limbs - 1).
inline std::size_t kronecker_limbs(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    std::size_t ba = 0, bb = 0;
    for (const auto& z : a) ba = std::max(ba, bit_length(z));
    for (const auto& z : b) bb = std::max(bb, bit_length(z));
    std::size_t n = std::min(a.size(), b.size()), bn = 0;
    while (n) ++bn, n >>= 1;
    const std::size_t bits = ba + bb + bn + 2;
    return (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
}

inline Integer kronecker_pack(const std::vector<Integer>& coeffs, const std::vector<std::uint64_t>& slot,
                              std::uint64_t slots, std::size_t limbs)
{
    std::vector<mp_limb_t> pos(slots * limbs, 0), neg(slots * limbs, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const int sign = sgn(coeffs[k]);
        if (sign == 0) continue;
        auto& dst = sign > 0 ? pos : neg;
        std::size_t count = 0;
        mpz_export(dst.data() + slot[k] * limbs, &count, -1, sizeof(mp_limb_t), 0, 0, coeffs[k].get_mpz_t());
        assert(count <= limbs);
    }
    Integer p, n;
    mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
    mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
    return p - n;
}

inline std::vector<Integer> kronecker_unpack(const Integer& product, std::uint64_t slots, std::size_t limbs)
{
    const int sign = sgn(product);
    std::vector<mp_limb_t> digits(slots * limbs + 1, 0);
    if (sign != 0) {
        const Integer mag = abs(product);
        std::size_t count = 0;
        assert(mpz_size(mag.get_mpz_t()) <= digits.size());
        mpz_export(digits.data(), &count, -1, sizeof(mp_limb_t), 0, 0, mag.get_mpz_t());
    }
    std::vector<Integer> out(slots);
    const std::size_t bits = limbs * GMP_NUMB_BITS;
    Integer v;
    bool carry = false;
    for (std::uint64_t s = 0; s < slots; ++s) {
        const mp_limb_t* d = digits.data() + s * limbs;
        const bool nonzero = std::any_of(d, d + limbs, [](mp_limb_t l) { return l != 0; });
        if (!nonzero && !carry) continue;
        mpz_import(v.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, d);
        if (carry) v += 1;
        // Balanced digit: values at or above 2^(bits-1) are negative.
        if (mpz_sizeinbase(v.get_mpz_t(), 2) >= bits) {
            Integer full;
            mpz_setbit(full.get_mpz_t(), bits);
            v -= full;
            carry = true;
        } else {
            carry = false;
        }
        out[s] = sign < 0 ? Integer(-v) : v;
    }
    assert(!carry);
    return out;
}

}  // namespace planaut::detail

#endif
