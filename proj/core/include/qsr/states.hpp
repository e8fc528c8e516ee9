#pragma once

#include "qsr/dyadic.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsr {

enum class Sign : std::uint8_t { plus, minus };

inline Sign flipped(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
inline int sign_factor(Sign s) { return s == Sign::plus ? 1 : -1; }

/// A finite 0/1 digit map over a contiguous exponent interval [lo, hi].
///
/// Exponents are relative to the binal point: the digit at exponent e
/// contributes 2^e, and the interval always contains exponent 0.  A string
/// is canonical when it carries no leading or trailing zeros beyond what is
/// needed to reach exponent 0; the canonical zero is the single digit 0 at
/// exponent 0.
struct DigitString {
    std::int32_t lo{0};
    std::int32_t hi{0};
    std::vector<std::uint8_t> bits{0};  // bits[e - lo] is the digit at exponent e

    static DigitString zero() { return DigitString{}; }
    static DigitString power_of_two(std::int32_t e);

    /// Digits given most-significant first, as in the written notation.
    static DigitString from_msb(std::int32_t hi, const std::vector<std::uint8_t>& msb_first);

    int bit(std::int32_t e) const {
        if (e < lo || e > hi) return 0;
        return bits[static_cast<std::size_t>(e - lo)];
    }
    bool any() const;
    std::int32_t highest_set() const;  // requires any()
    std::int32_t lowest_set() const;   // requires any()
    std::size_t width() const { return bits.size(); }
    bool well_formed() const;
    bool is_canonical() const;
    DigitString canonicalized() const;

    bool operator==(const DigitString&) const = default;
};

/// One signed digit string: either the real or the imaginary half of a
/// string state.  An all-zero digit map represents zero regardless of the
/// stored sign; canonicalization settles the sign of zero to plus.
struct RealComponent {
    Sign sign{Sign::plus};
    DigitString digits{};

    bool is_zero() const { return !digits.any(); }
    bool operator==(const RealComponent&) const = default;
};

/// Lattice placement of the sign qubits.  m is the binal column and h the
/// row label; h only keeps copies distinguishable, no distance between
/// sites is ever computed.
struct LatticeSite {
    std::int64_t m{0};
    std::int64_t h{0};
    bool operator==(const LatticeSite&) const = default;
};

/// A complex rational string state: paired real and imaginary components
/// sharing one lattice site.
struct StringState {
    RealComponent re{};
    RealComponent im{};
    LatticeSite site{};
    bool operator==(const StringState&) const = default;
};

RealComponent canonicalize(const RealComponent& c);
StringState canonicalize(const StringState& s);

/// The exact complex value encoded by the state:
/// sign(re)*sum bits_re(e)*2^e + i*sign(im)*sum bits_im(e)*2^e.
DyadicComplex eigenvalue(const StringState& s);
DyadicComplex eigenvalue(const RealComponent& c);

/// Same digits and signs at a new site.
StringState translate(const StringState& s, LatticeSite new_site);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
};

/// Compact notation: the sign character sits at the binal point.
///
///   REAL    := BITS SIGN BITS?          BITS := [01]+     SIGN := '+' | '-'
///   COMPLEX := REAL (';' REAL)?
///
/// "110+1" is +110.1 (6.5), "10-1" is -10.1 (-2.5); a missing second REAL
/// means a zero imaginary part.  The result is canonical.
StringState parse_compact(std::string_view text, LatticeSite site = {});

/// Canonical inverse of parse_compact.  Zero components print as "0+";
/// a zero imaginary part is omitted entirely.
std::string format_compact(const StringState& s);
std::string format_compact(const RealComponent& c);

/// Strict total order on canonical states ignoring the site; used as the
/// container key everywhere superposition terms are stored or merged.
bool state_less(const StringState& a, const StringState& b);

// Common constructions.
StringState make_state(RealComponent re, RealComponent im, LatticeSite site = {});
StringState real_state(Sign sign, DigitString digits, LatticeSite site = {});
StringState zero_state(LatticeSite site = {});
StringState one_state(LatticeSite site = {});
StringState imaginary_unit_state(LatticeSite site = {});
StringState pow2_state(std::int32_t e, LatticeSite site = {});
RealComponent pow2_component(std::int32_t e);

}  // namespace qsr
