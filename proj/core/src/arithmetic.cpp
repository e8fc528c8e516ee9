#include "qsr/arithmetic.hpp"

#include <algorithm>
#include <cassert>

namespace qsr {

bool eq_A(const RealComponent& a, const RealComponent& b) {
    return canonicalize(a) == canonicalize(b);
}

bool eq_A(const StringState& a, const StringState& b) {
    return eq_A(a.re, b.re) && eq_A(a.im, b.im);
}

namespace {

// -1, 0, 1 as |a| <, ==, > |b|; digit-level, most-significant first.
int magnitude_cmp(const DigitString& a, const DigitString& b) {
    bool az = !a.any(), bz = !b.any();
    if (az || bz) return az && bz ? 0 : (az ? -1 : 1);
    std::int32_t ha = a.highest_set(), hb = b.highest_set();
    if (ha != hb) return ha < hb ? -1 : 1;
    for (std::int32_t e = ha; e >= std::min(a.lo, b.lo); --e) {
        int da = a.bit(e), db = b.bit(e);
        if (da != db) return da < db ? -1 : 1;
    }
    return 0;
}

// Signed value comparison of canonical components.
int value_cmp(const RealComponent& a, const RealComponent& b) {
    bool an = a.sign == Sign::minus, bn = b.sign == Sign::minus;
    if (an != bn) return an ? -1 : 1;
    int m = magnitude_cmp(a.digits, b.digits);
    return an ? -m : m;
}

}  // namespace

bool leq_A_real(const RealComponent& a, const RealComponent& b) {
    return value_cmp(canonicalize(a), canonicalize(b)) <= 0;
}

bool lt_A_real(const RealComponent& a, const RealComponent& b) {
    return value_cmp(canonicalize(a), canonicalize(b)) < 0;
}

std::optional<bool> leq_A_complex(const StringState& a, const StringState& b) {
    StringState ca = canonicalize(a), cb = canonicalize(b);
    int cr = value_cmp(ca.re, cb.re);
    int ci = value_cmp(ca.im, cb.im);
    if (cr <= 0 && ci <= 0) return true;
    if (cr >= 0 && ci >= 0) return false;
    return std::nullopt;
}

namespace {

// Mutable digit buffer with unbounded interval; avoids repeated
// reallocation while carries and borrows ripple.
struct DigitBuf {
    std::int32_t lo, hi;
    std::vector<std::uint8_t> bits;

    explicit DigitBuf(const DigitString& d) : lo(d.lo), hi(d.hi), bits(d.bits) {}
    DigitBuf(std::int32_t l, std::int32_t h)
        : lo(l), hi(h), bits(static_cast<std::size_t>(h - l + 1), 0) {}

    int bit(std::int32_t e) const {
        if (e < lo || e > hi) return 0;
        return bits[static_cast<std::size_t>(e - lo)];
    }
    void ensure(std::int32_t e) {
        if (e < lo) {
            bits.insert(bits.begin(), static_cast<std::size_t>(lo - e), 0);
            lo = e;
        } else if (e > hi) {
            bits.insert(bits.end(), static_cast<std::size_t>(e - hi), 0);
            hi = e;
        }
    }
    void set(std::int32_t e, int v) {
        ensure(e);
        bits[static_cast<std::size_t>(e - lo)] = static_cast<std::uint8_t>(v);
    }
    DigitString finish() const {
        DigitString d;
        d.lo = std::min<std::int32_t>(lo, 0);
        d.hi = std::max<std::int32_t>(hi, 0);
        d.bits.assign(static_cast<std::size_t>(d.hi - d.lo + 1), 0);
        for (std::int32_t e = lo; e <= hi; ++e)
            d.bits[static_cast<std::size_t>(e - d.lo)] = static_cast<std::uint8_t>(bit(e));
        return d.canonicalized();
    }
};

void ripple_add(DigitBuf& buf, std::int32_t e) {
    std::int32_t j = e;
    buf.ensure(j);
    while (buf.bit(j) == 1) {
        buf.set(j, 0);
        ++j;
    }
    buf.set(j, 1);
}

// Borrow ripple; false when the magnitude is smaller than 2^e.
bool ripple_sub(DigitBuf& buf, std::int32_t e) {
    std::int32_t j = e;
    while (j <= buf.hi && buf.bit(j) == 0) ++j;
    if (j > buf.hi) return false;
    buf.set(j, 0);
    for (std::int32_t k = j - 1; k >= e; --k) buf.set(k, 1);
    return true;
}

DigitString add_magnitudes(const DigitString& a, const DigitString& b) {
    DigitBuf buf(a);
    for (std::int32_t e = b.lo; e <= b.hi; ++e)
        if (b.bit(e)) ripple_add(buf, e);
    return buf.finish();
}

// Requires |a| >= |b|.
DigitString sub_magnitudes(const DigitString& a, const DigitString& b) {
    DigitBuf buf(a);
    for (std::int32_t e = b.lo; e <= b.hi; ++e)
        if (b.bit(e)) {
            bool ok = ripple_sub(buf, e);
            assert(ok && "sub_magnitudes underflow");
            (void)ok;
        }
    return buf.finish();
}

DigitString shift_digits(const DigitString& d, std::int32_t k) {
    if (!d.any()) return DigitString::zero();
    DigitString out;
    out.lo = std::min<std::int32_t>(d.lo + k, 0);
    out.hi = std::max<std::int32_t>(d.hi + k, 0);
    out.bits.assign(static_cast<std::size_t>(out.hi - out.lo + 1), 0);
    for (std::int32_t e = d.lo; e <= d.hi; ++e)
        if (d.bit(e)) out.bits[static_cast<std::size_t>(e + k - out.lo)] = 1;
    return out.canonicalized();
}

// Shift-and-add product of digit magnitudes: for every set digit of the
// multiplier, the multiplicand shifted to that exponent is accumulated.
DigitString mul_magnitudes(const DigitString& a, const DigitString& b) {
    DigitString acc = DigitString::zero();
    for (std::int32_t e = a.hi; e >= a.lo; --e)
        if (a.bit(e)) acc = add_magnitudes(acc, shift_digits(b, e));
    return acc;
}

// Signed component addition: equal signs add magnitudes; opposite signs
// subtract the smaller magnitude from the larger, the larger keeps its sign.
RealComponent add_components(const RealComponent& a0, const RealComponent& b0) {
    RealComponent a = canonicalize(a0), b = canonicalize(b0);
    if (a.sign == b.sign)
        return canonicalize(RealComponent{a.sign, add_magnitudes(a.digits, b.digits)});
    int m = magnitude_cmp(a.digits, b.digits);
    if (m == 0) return RealComponent{};
    const RealComponent& big = m > 0 ? a : b;
    const RealComponent& small = m > 0 ? b : a;
    return canonicalize(RealComponent{big.sign, sub_magnitudes(big.digits, small.digits)});
}

// Sign-rule product.  `invert_sign` flips the usual rule; it implements the
// imaginary-times-imaginary contribution to the real part (i*i = -1).
RealComponent mul_components(const RealComponent& a0, const RealComponent& b0, bool invert_sign = false) {
    RealComponent a = canonicalize(a0), b = canonicalize(b0);
    Sign s = a.sign == b.sign ? Sign::plus : Sign::minus;
    if (invert_sign) s = flipped(s);
    return canonicalize(RealComponent{s, mul_magnitudes(a.digits, b.digits)});
}

}  // namespace

RealComponent succ(const RealComponent& c, std::int32_t e) {
    DigitBuf buf(c.digits);
    ripple_add(buf, e);
    RealComponent out{c.sign, buf.finish()};
    return canonicalize(out);
}

RealComponent pred(const RealComponent& c, std::int32_t e) {
    DigitBuf buf(c.digits);
    if (!ripple_sub(buf, e))
        throw std::domain_error("pred: magnitude smaller than 2^e");
    return canonicalize(RealComponent{c.sign, buf.finish()});
}

StringState negate(const StringState& s, Part which) {
    StringState out = s;
    if (which == Part::real || which == Part::both) out.re.sign = flipped(out.re.sign);
    if (which == Part::imaginary || which == Part::both) out.im.sign = flipped(out.im.sign);
    return canonicalize(out);
}

RealComponent negated(const RealComponent& c) {
    return canonicalize(RealComponent{flipped(c.sign), c.digits});
}

RealComponent abs_A(const RealComponent& c) {
    return canonicalize(RealComponent{Sign::plus, c.digits});
}

StringState shift(const StringState& s, std::int32_t k) {
    StringState out = s;
    out.re.digits = shift_digits(s.re.digits, k);
    out.im.digits = shift_digits(s.im.digits, k);
    return canonicalize(out);
}

RealComponent add_A(const RealComponent& a, const RealComponent& b) {
    return add_components(a, b);
}

RealComponent sub_A(const RealComponent& a, const RealComponent& b) {
    return add_components(a, negated(b));
}

RealComponent mul_A(const RealComponent& a, const RealComponent& b) {
    return mul_components(a, b);
}

StringState add_A(const StringState& a, const StringState& b) {
    return StringState{add_components(a.re, b.re), add_components(a.im, b.im), a.site};
}

StringState sub_A(const StringState& a, const StringState& b) {
    return add_A(a, negate(b, Part::both));
}

StringState mul_A(const StringState& a, const StringState& b) {
    // (re_a + i im_a)(re_b + i im_b), assembled from four component
    // products; the imaginary-by-imaginary product enters the real part
    // with inverted sign rule.
    RealComponent re = add_components(mul_components(a.re, b.re),
                                      mul_components(a.im, b.im, /*invert_sign=*/true));
    RealComponent im = add_components(mul_components(a.re, b.im),
                                      mul_components(a.im, b.re));
    return StringState{re, im, a.site};
}

RealComponent ell_inverse(const RealComponent& c0, Accuracy acc) {
    RealComponent c = canonicalize(c0);
    if (c.is_zero() || c.sign == Sign::minus)
        throw std::domain_error("ell_inverse: input must be a positive nonzero state");

    const DyadicComplex value_c = eigenvalue(c);
    const DyadicComplex one = DyadicComplex::integer(1);
    // Band floor 1 - 2^-ell.
    const DyadicComplex floor_v =
        one - DyadicComplex::from_parts(1, 0, static_cast<std::uint32_t>(acc.ell));

    // Greedy long division, most significant digit first.  After every set
    // digit the prefix is the largest multiple of 2^e with prefix*c <= 1,
    // so the first prefix inside the band is the admissible state whose
    // lowest set digit is highest.
    DigitBuf quotient(0, 0);
    DyadicComplex x = DyadicComplex::integer(0);
    std::int32_t e = -c.digits.highest_set();
    while (true) {
        DyadicComplex candidate =
            x + (e >= 0 ? DyadicComplex::from_parts(BigInt(1) << e, 0, 0)
                        : DyadicComplex::from_parts(1, 0, static_cast<std::uint32_t>(-e)));
        DyadicComplex product = candidate * value_c;
        if (compare_real(product, one) <= 0) {
            x = candidate;
            quotient.set(e, 1);
            if (compare_real(floor_v, product) <= 0) break;
        }
        --e;
    }
    return canonicalize(RealComponent{Sign::plus, quotient.finish()});
}

StringState ell_inverse_complex(const StringState& b0, Accuracy acc) {
    StringState b = canonicalize(b0);
    if (b.re.is_zero() && b.im.is_zero())
        throw std::domain_error("ell_inverse_complex: zero state");

    if (b.im.is_zero()) {
        // Purely real divisor: the inverse of the magnitude, carrying the sign.
        RealComponent inv = ell_inverse(abs_A(b.re), acc);
        inv.sign = b.re.sign;
        return StringState{canonicalize(inv), RealComponent{}, b.site};
    }
    // General divisor: ell inverse of the positive real state re^2 + im^2,
    // multiplied by the conjugate.
    RealComponent norm_sq = add_components(mul_components(b.re, b.re),
                                           mul_components(b.im, b.im, /*invert_sign=*/false));
    RealComponent inv = ell_inverse(norm_sq, acc);
    StringState inv_state{inv, RealComponent{}, b.site};
    return mul_A(inv_state, negate(b, Part::imaginary));
}

StringState div_A(const StringState& a, const StringState& b, Accuracy acc) {
    StringState cb = canonicalize(b);
    if (cb.re.is_zero() && cb.im.is_zero())
        throw std::domain_error("div_A: division by the zero state");
    return mul_A(ell_inverse_complex(cb, acc), a);
}

}  // namespace qsr
