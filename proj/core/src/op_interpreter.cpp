#include "qsr/op_interpreter.hpp"

#include <stdexcept>

namespace qsr::opspec {

DigitString pad_to(const DigitString& d, std::int32_t e) {
    if (e >= d.lo && e <= d.hi) return d;
    DigitString out;
    out.lo = std::min(d.lo, e);
    out.hi = std::max(d.hi, e);
    out.bits.assign(static_cast<std::size_t>(out.hi - out.lo + 1), 0);
    for (std::int32_t k = d.lo; k <= d.hi; ++k)
        out.bits[static_cast<std::size_t>(k - out.lo)] = static_cast<std::uint8_t>(d.bit(k));
    return out;
}

namespace {

void set_bit(DigitString& d, std::int32_t e, int v) {
    d.bits[static_cast<std::size_t>(e - d.lo)] = static_cast<std::uint8_t>(v);
}

// One recursion step of the successor.  Cases, in order:
//   digit 0 at e            -> flip to 1
//   digit 1, e+1 unoccupied -> clear e, create a 1 qubit one site up
//   digit 1, e+1 occupied   -> clear e, recurse at e+1
DigitString succ_rec(DigitString d, std::int32_t e) {
    if (d.bit(e) == 0) {
        set_bit(d, e, 1);
        return d;
    }
    set_bit(d, e, 0);
    if (e + 1 > d.hi) {
        DigitString grown = pad_to(d, e + 1);
        set_bit(grown, e + 1, 1);
        return grown;
    }
    return succ_rec(std::move(d), e + 1);
}

// Adjoint recursion.  Cases, in order:
//   digit 1 at e                         -> flip to 0
//   digit 0, e+1 holds the top set digit -> set e, annihilate the top qubit
//   digit 0, e+1 occupied                -> set e, recurse at e+1
DigitString pred_rec(DigitString d, std::int32_t e) {
    if (d.bit(e) == 1) {
        set_bit(d, e, 0);
        return d;
    }
    if (e + 1 > d.hi) throw std::domain_error("pred_at: no digit to borrow from");
    set_bit(d, e, 1);
    if (d.bit(e + 1) == 1 && e + 1 == d.hi) {
        // Annihilating the top 1 shrinks the string by one site.
        DigitString out;
        out.lo = d.lo;
        out.hi = d.hi - 1;
        out.bits.assign(d.bits.begin(), d.bits.end() - 1);
        return out;
    }
    return pred_rec(std::move(d), e + 1);
}

}  // namespace

DigitString succ_at(const DigitString& d, std::int32_t e) {
    return succ_rec(pad_to(d, e), e);
}

DigitString pred_at(const DigitString& d, std::int32_t e) {
    DigitString padded = pad_to(d, e);
    if (!padded.any()) throw std::domain_error("pred_at: zero string");
    if (padded.highest_set() < e) throw std::domain_error("pred_at: magnitude smaller than 2^e");
    return pred_rec(padded, e);
}

DigitString add_magnitudes(const DigitString& acc, const DigitString& addend) {
    DigitString out = acc;
    for (std::int32_t e = addend.hi; e >= addend.lo; --e)
        if (addend.bit(e)) out = succ_at(out, e);
    return out;
}

DigitString sub_magnitudes(const DigitString& acc, const DigitString& subtrahend) {
    DigitString out = acc;
    for (std::int32_t e = subtrahend.hi; e >= subtrahend.lo; --e)
        if (subtrahend.bit(e)) out = pred_at(out, e);
    return out;
}

}  // namespace qsr::opspec
