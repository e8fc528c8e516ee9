#pragma once

#include "qsr/states.hpp"

#include <optional>

namespace qsr {

/// Division accuracy: the result is guaranteed within 2^-ell.
struct Accuracy {
    int ell;
    explicit Accuracy(int l) : ell(l) {
        if (l < 1) throw std::invalid_argument("Accuracy: ell must be >= 1");
    }
};

enum class Part { real, imaginary, both };

/// Arithmetic equality: identical signs and digit maps after
/// canonicalization, componentwise, independent of sites.  +0 and -0
/// compare equal.
bool eq_A(const StringState& a, const StringState& b);
bool eq_A(const RealComponent& a, const RealComponent& b);

/// Total order on real components, consistent with the encoded value.
/// Implemented by aligned most-significant-digit comparison.
bool leq_A_real(const RealComponent& a, const RealComponent& b);
bool lt_A_real(const RealComponent& a, const RealComponent& b);

/// Componentwise partial order on complex states: some(true/false) when the
/// real and imaginary comparisons agree, nullopt when they conflict.
std::optional<bool> leq_A_complex(const StringState& a, const StringState& b);

/// Successor / predecessor at exponent e: adds (subtracts) 2^e to the digit
/// magnitude with carry (borrow) ripple; the sign is left untouched.  pred
/// throws std::domain_error when the magnitude is smaller than 2^e — the
/// signed-addition cases route around that, it is never a reachable state
/// there.
RealComponent succ(const RealComponent& c, std::int32_t e);
RealComponent pred(const RealComponent& c, std::int32_t e);

StringState negate(const StringState& s, Part which);
RealComponent negated(const RealComponent& c);
RealComponent abs_A(const RealComponent& c);

/// Multiplies the encoded value by 2^k (both components).
StringState shift(const StringState& s, std::int32_t k);

StringState add_A(const StringState& a, const StringState& b);
StringState sub_A(const StringState& a, const StringState& b);
StringState mul_A(const StringState& a, const StringState& b);

RealComponent add_A(const RealComponent& a, const RealComponent& b);
RealComponent sub_A(const RealComponent& a, const RealComponent& b);
RealComponent mul_A(const RealComponent& a, const RealComponent& b);

/// The accuracy-ell inverse of a positive real component: the unique x with
///
///     1 - 2^-ell  <=  x * c  <=  1
///
/// whose lowest set digit has the greatest exponent among all such x.
/// Computed by greedy binary long division, stopping at the first prefix
/// inside the band.  Throws std::domain_error for zero or negative input.
RealComponent ell_inverse(const RealComponent& c, Accuracy acc);

/// Accuracy-ell inverse of a nonzero complex state.  A purely real divisor
/// takes the direct route through ell_inverse of its magnitude; otherwise
/// the inverse is ell_inverse(re^2 + im^2) times the conjugate.
StringState ell_inverse_complex(const StringState& b, Accuracy acc);

/// a / b to accuracy ell: mul_A(ell_inverse_complex(b, acc), a).
/// Throws std::domain_error when b is the zero state.
StringState div_A(const StringState& a, const StringState& b, Accuracy acc);

}  // namespace qsr
