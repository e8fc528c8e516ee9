#include "qsr/states.hpp"

#include <algorithm>
#include <cassert>

namespace qsr {

DigitString DigitString::power_of_two(std::int32_t e) {
    DigitString d;
    d.lo = std::min<std::int32_t>(e, 0);
    d.hi = std::max<std::int32_t>(e, 0);
    d.bits.assign(static_cast<std::size_t>(d.hi - d.lo + 1), 0);
    d.bits[static_cast<std::size_t>(e - d.lo)] = 1;
    return d;
}

DigitString DigitString::from_msb(std::int32_t hi, const std::vector<std::uint8_t>& msb_first) {
    DigitString d;
    d.hi = hi;
    d.lo = hi - static_cast<std::int32_t>(msb_first.size()) + 1;
    d.bits.assign(msb_first.rbegin(), msb_first.rend());
    return d.canonicalized();
}

bool DigitString::any() const {
    return std::any_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; });
}

std::int32_t DigitString::highest_set() const {
    for (std::int32_t e = hi; e >= lo; --e)
        if (bit(e)) return e;
    assert(false && "highest_set on zero string");
    return 0;
}

std::int32_t DigitString::lowest_set() const {
    for (std::int32_t e = lo; e <= hi; ++e)
        if (bit(e)) return e;
    assert(false && "lowest_set on zero string");
    return 0;
}

bool DigitString::well_formed() const {
    if (lo > 0 || hi < 0) return false;
    if (bits.size() != static_cast<std::size_t>(hi - lo + 1)) return false;
    return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b <= 1; });
}

bool DigitString::is_canonical() const {
    if (!well_formed()) return false;
    return (hi == 0 || bit(hi) == 1) && (lo == 0 || bit(lo) == 1);
}

DigitString DigitString::canonicalized() const {
    assert(well_formed());
    if (!any()) return zero();
    std::int32_t new_hi = std::max<std::int32_t>(highest_set(), 0);
    std::int32_t new_lo = std::min<std::int32_t>(lowest_set(), 0);
    DigitString out;
    out.lo = new_lo;
    out.hi = new_hi;
    out.bits.resize(static_cast<std::size_t>(new_hi - new_lo + 1));
    for (std::int32_t e = new_lo; e <= new_hi; ++e)
        out.bits[static_cast<std::size_t>(e - new_lo)] = static_cast<std::uint8_t>(bit(e));
    return out;
}

RealComponent canonicalize(const RealComponent& c) {
    RealComponent out;
    out.digits = c.digits.canonicalized();
    out.sign = out.digits.any() ? c.sign : Sign::plus;
    return out;
}

StringState canonicalize(const StringState& s) {
    return StringState{canonicalize(s.re), canonicalize(s.im), s.site};
}

namespace {

// Numerator of the component magnitude at the given scale: sum bit(e)*2^(e+scale).
BigInt magnitude_num(const DigitString& d, std::uint32_t scale) {
    BigInt n = 0;
    for (std::int32_t e = d.hi; e >= d.lo; --e) {
        n <<= 1;
        if (d.bit(e)) n += 1;
    }
    std::int32_t shift = d.lo + static_cast<std::int32_t>(scale);
    assert(shift >= 0);
    n <<= shift;
    return n;
}

}  // namespace

DyadicComplex eigenvalue(const RealComponent& c) {
    std::uint32_t scale = c.digits.lo < 0 ? static_cast<std::uint32_t>(-c.digits.lo) : 0;
    BigInt num = magnitude_num(c.digits, scale);
    if (c.sign == Sign::minus) num = -num;
    return DyadicComplex::from_parts(std::move(num), 0, scale);
}

DyadicComplex eigenvalue(const StringState& s) {
    std::int32_t lo = std::min(s.re.digits.lo, s.im.digits.lo);
    std::uint32_t scale = lo < 0 ? static_cast<std::uint32_t>(-lo) : 0;
    BigInt re = magnitude_num(s.re.digits, scale);
    BigInt im = magnitude_num(s.im.digits, scale);
    if (s.re.sign == Sign::minus) re = -re;
    if (s.im.sign == Sign::minus) im = -im;
    return DyadicComplex::from_parts(std::move(re), std::move(im), scale);
}

StringState translate(const StringState& s, LatticeSite new_site) {
    StringState out = s;
    out.site = new_site;
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos{0};
    std::size_t base{0};  // offset of `text` within the original input

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base + pos); }
};

RealComponent parse_real(Cursor& c) {
    std::vector<std::uint8_t> int_part;
    while (!c.done() && (c.peek() == '0' || c.peek() == '1')) {
        int_part.push_back(static_cast<std::uint8_t>(c.peek() - '0'));
        ++c.pos;
    }
    if (int_part.empty()) {
        if (c.done()) c.fail("expected binary digits");
        c.fail(std::string("unexpected character '") + c.peek() + "' (binary digit expected)");
    }
    if (c.done()) c.fail("missing sign character");
    char sc = c.peek();
    if (sc != '+' && sc != '-') c.fail(std::string("unexpected character '") + sc + "' (sign expected)");
    ++c.pos;
    std::vector<std::uint8_t> frac_part;
    while (!c.done() && (c.peek() == '0' || c.peek() == '1')) {
        frac_part.push_back(static_cast<std::uint8_t>(c.peek() - '0'));
        ++c.pos;
    }

    DigitString d;
    d.hi = static_cast<std::int32_t>(int_part.size()) - 1;
    d.lo = -static_cast<std::int32_t>(frac_part.size());
    d.bits.assign(static_cast<std::size_t>(d.hi - d.lo + 1), 0);
    for (std::size_t i = 0; i < int_part.size(); ++i) {
        std::int32_t e = d.hi - static_cast<std::int32_t>(i);
        d.bits[static_cast<std::size_t>(e - d.lo)] = int_part[i];
    }
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
        std::int32_t e = -1 - static_cast<std::int32_t>(i);
        d.bits[static_cast<std::size_t>(e - d.lo)] = frac_part[i];
    }
    return canonicalize(RealComponent{sc == '+' ? Sign::plus : Sign::minus, d});
}

}  // namespace

StringState parse_compact(std::string_view text, LatticeSite site) {
    Cursor c{text, 0, 0};
    if (text.empty()) c.fail("empty input");
    RealComponent re = parse_real(c);
    RealComponent im{};
    if (!c.done() && c.peek() == ';') {
        ++c.pos;
        im = parse_real(c);
    }
    if (!c.done()) c.fail(std::string("unexpected character '") + c.peek() + "'");
    return StringState{re, im, site};
}

std::string format_compact(const RealComponent& c) {
    RealComponent canon = canonicalize(c);
    std::string out;
    for (std::int32_t e = canon.digits.hi; e >= 0; --e)
        out += static_cast<char>('0' + canon.digits.bit(e));
    out += sign_char(canon.sign);
    for (std::int32_t e = -1; e >= canon.digits.lo; --e)
        out += static_cast<char>('0' + canon.digits.bit(e));
    return out;
}

std::string format_compact(const StringState& s) {
    StringState canon = canonicalize(s);
    std::string out = format_compact(canon.re);
    if (!canon.im.is_zero()) out += ";" + format_compact(canon.im);
    return out;
}

namespace {

int component_cmp(const RealComponent& a, const RealComponent& b) {
    if (a.sign != b.sign) return a.sign == Sign::plus ? -1 : 1;
    if (a.digits.lo != b.digits.lo) return a.digits.lo < b.digits.lo ? -1 : 1;
    if (a.digits.hi != b.digits.hi) return a.digits.hi < b.digits.hi ? -1 : 1;
    if (a.digits.bits != b.digits.bits) return a.digits.bits < b.digits.bits ? -1 : 1;
    return 0;
}

}  // namespace

bool state_less(const StringState& a, const StringState& b) {
    int c = component_cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return component_cmp(a.im, b.im) < 0;
}

StringState make_state(RealComponent re, RealComponent im, LatticeSite site) {
    return canonicalize(StringState{std::move(re), std::move(im), site});
}

StringState real_state(Sign sign, DigitString digits, LatticeSite site) {
    return make_state(RealComponent{sign, std::move(digits)}, RealComponent{}, site);
}

StringState zero_state(LatticeSite site) {
    return StringState{RealComponent{}, RealComponent{}, site};
}

StringState one_state(LatticeSite site) {
    return real_state(Sign::plus, DigitString::power_of_two(0), site);
}

StringState imaginary_unit_state(LatticeSite site) {
    return make_state(RealComponent{}, RealComponent{Sign::plus, DigitString::power_of_two(0)}, site);
}

StringState pow2_state(std::int32_t e, LatticeSite site) {
    return real_state(Sign::plus, DigitString::power_of_two(e), site);
}

RealComponent pow2_component(std::int32_t e) {
    return RealComponent{Sign::plus, DigitString::power_of_two(e)};
}

}  // namespace qsr
