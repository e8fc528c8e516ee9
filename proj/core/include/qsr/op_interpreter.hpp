#pragma once

#include "qsr/states.hpp"

namespace qsr::opspec {

/// Small-step interpreter of the digit-level operator constructions: the
/// padding operator extends a string with 0 qubits toward a target
/// exponent, the successor adds 2^e with a recursive carry, its adjoint
/// subtracts 2^e with a recursive borrow, and magnitude addition is the
/// composition of padded successors over the set digits of the addend.
/// Deliberately slow and literal; the fast paths in arithmetic.cpp are
/// differential-tested against it.

/// Padding: extends the interval so exponent e is occupied (by a 0 qubit
/// when previously absent).  No-op when e is already inside [lo, hi].
DigitString pad_to(const DigitString& d, std::int32_t e);

/// Successor at exponent e; e must be inside the (padded) interval.
DigitString succ_at(const DigitString& d, std::int32_t e);

/// Adjoint successor at exponent e.  Throws std::domain_error when the
/// string holds no set digit at or above e.
DigitString pred_at(const DigitString& d, std::int32_t e);

/// Magnitude addition: successors applied at every set digit of `addend`,
/// most significant first, each preceded by padding.
DigitString add_magnitudes(const DigitString& acc, const DigitString& addend);

/// Magnitude subtraction by adjoint successors; requires acc >= addend.
DigitString sub_magnitudes(const DigitString& acc, const DigitString& subtrahend);

}  // namespace qsr::opspec
