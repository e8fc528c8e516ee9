#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qsr {

using BigInt = boost::multiprecision::cpp_int;

/// Exact complex rational with a power-of-two denominator:
///
///     value = (re_num + i*im_num) / 2^scale
///
/// Canonical form keeps the scale minimal (scale == 0, or at least one
/// numerator odd).  Every string state evaluates to exactly one of these,
/// so this type doubles as the classical reference arithmetic for the
/// whole project.
struct DyadicComplex {
    BigInt re_num{0};
    BigInt im_num{0};
    std::uint32_t scale{0};

    static DyadicComplex from_parts(BigInt re, BigInt im, std::uint32_t scale);
    static DyadicComplex integer(long long re, long long im = 0);

    bool is_zero() const { return re_num == 0 && im_num == 0; }
    bool is_real() const { return im_num == 0; }

    DyadicComplex conjugate() const;
    DyadicComplex real_part() const;
    DyadicComplex imag_part() const;   // as a real value (the coefficient of i)
    DyadicComplex abs_components() const;

    double re_double() const;
    double im_double() const;
};

DyadicComplex operator+(const DyadicComplex& a, const DyadicComplex& b);
DyadicComplex operator-(const DyadicComplex& a, const DyadicComplex& b);
DyadicComplex operator*(const DyadicComplex& a, const DyadicComplex& b);
DyadicComplex operator-(const DyadicComplex& a);

bool operator==(const DyadicComplex& a, const DyadicComplex& b);
inline bool operator!=(const DyadicComplex& a, const DyadicComplex& b) { return !(a == b); }

/// Three-way comparison of the real parts (imaginary parts ignored):
/// negative, zero or positive as re(a) <, ==, > re(b).
int compare_real(const DyadicComplex& a, const DyadicComplex& b);

/// Exact decimal rendering, e.g. "16.25", "-0.0078125", "3".
std::string to_decimal_string(const DyadicComplex& v);

/// Decimal rendering of the complex value, e.g. "6.5+1i", "-2.5i", "0".
std::string to_decimal_string_complex(const DyadicComplex& v);

}  // namespace qsr
