#pragma once

#include "qsr/states.hpp"

namespace qsr::oracle {

/// Named aliases over the exact dyadic arithmetic; the reference semantics
/// every state-level operation is validated against.
inline DyadicComplex add(const DyadicComplex& a, const DyadicComplex& b) { return a + b; }
inline DyadicComplex sub(const DyadicComplex& a, const DyadicComplex& b) { return a - b; }
inline DyadicComplex mul(const DyadicComplex& a, const DyadicComplex& b) { return a * b; }

/// Canonical string state with the given exact value (inverse of eigenvalue).
StringState state_of(const DyadicComplex& value, LatticeSite site = {});

/// Exhaustive reference for the accuracy-ell inverse of a positive real
/// dyadic c: enumerates every digit string over exponents down to
/// -(ell + width_cap), keeps those with c*x inside [1 - 2^-ell, 1], and
/// selects the one whose lowest set digit is highest.  Throws
/// std::domain_error for non-positive c and std::runtime_error when no
/// admissible string exists within the cap.
DigitString brute_ell_inverse(const DyadicComplex& c, int ell, int width_cap);

}  // namespace qsr::oracle
