#include "qsr/oracle.hpp"

#include <cassert>
#include <stdexcept>

namespace qsr::oracle {

namespace {

DigitString digits_from_magnitude(const BigInt& n, std::uint32_t scale) {
    if (n == 0) return DigitString::zero();
    DigitString d;
    const std::int32_t top = static_cast<std::int32_t>(boost::multiprecision::msb(n));
    d.lo = std::min<std::int32_t>(-static_cast<std::int32_t>(scale), 0);
    d.hi = std::max<std::int32_t>(top - static_cast<std::int32_t>(scale), 0);
    d.bits.assign(static_cast<std::size_t>(d.hi - d.lo + 1), 0);
    for (std::int32_t i = 0; i <= top; ++i)
        if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i)))
            d.bits[static_cast<std::size_t>(i - static_cast<std::int32_t>(scale) - d.lo)] = 1;
    return d.canonicalized();
}

}  // namespace

StringState state_of(const DyadicComplex& value, LatticeSite site) {
    RealComponent re{value.re_num < 0 ? Sign::minus : Sign::plus,
                     digits_from_magnitude(abs(value.re_num), value.scale)};
    RealComponent im{value.im_num < 0 ? Sign::minus : Sign::plus,
                     digits_from_magnitude(abs(value.im_num), value.scale)};
    return make_state(re, im, site);
}

DigitString brute_ell_inverse(const DyadicComplex& c, int ell, int width_cap) {
    if (!c.is_real() || c.re_num <= 0)
        throw std::domain_error("brute_ell_inverse: input must be a positive real dyadic");
    if (ell < 1) throw std::domain_error("brute_ell_inverse: ell must be >= 1");

    // Candidates are the multiples x = q * 2^-L with L = ell + width_cap.
    // The double inequality 1 - 2^-ell <= x*c <= 1 becomes an integer
    // window for q.
    const int L = ell + width_cap;
    const BigInt& c_num = c.re_num;
    const BigInt hi_num = BigInt(1) << (L + c.scale);
    const BigInt lo_num = ((BigInt(1) << ell) - 1) << (L + static_cast<int>(c.scale) - ell);

    BigInt q_min = lo_num / c_num;
    if (q_min * c_num < lo_num) q_min += 1;  // ceil
    BigInt q_max = hi_num / c_num;           // floor

    const DyadicComplex one = DyadicComplex::integer(1);
    const DyadicComplex floor_v = one - DyadicComplex::from_parts(1, 0, static_cast<std::uint32_t>(ell));

    bool found = false;
    BigInt best_q = 0;
    unsigned best_lsb = 0;
    for (BigInt q = q_min; q <= q_max; ++q) {
        if (q <= 0) continue;
        DyadicComplex x = DyadicComplex::from_parts(q, 0, static_cast<std::uint32_t>(L));
        DyadicComplex product = x * c;
        if (compare_real(product, one) > 0 || compare_real(product, floor_v) < 0) continue;
        unsigned lsb = boost::multiprecision::lsb(q);
        if (!found || lsb > best_lsb) {
            found = true;
            best_q = q;
            best_lsb = lsb;
        } else {
            // Two admissible values can never share the maximal lowest set
            // digit: between any two same-lsb multiples lies one with a
            // higher lsb, and the window is an interval.
            assert(lsb != best_lsb);
        }
    }
    if (!found)
        throw std::runtime_error("brute_ell_inverse: no admissible digit string within the width cap");
    return digits_from_magnitude(best_q, static_cast<std::uint32_t>(L));
}

}  // namespace qsr::oracle
