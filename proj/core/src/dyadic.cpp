#include "qsr/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qsr {

namespace {

DyadicComplex canonical(BigInt re, BigInt im, std::uint32_t scale) {
    while (scale > 0 && (re & 1) == 0 && (im & 1) == 0) {
        re >>= 1;
        im >>= 1;
        --scale;
    }
    if (re == 0 && im == 0) scale = 0;
    return DyadicComplex{std::move(re), std::move(im), scale};
}

// Numerators of a and b brought to the common scale max(a.scale, b.scale).
struct Aligned {
    BigInt a_re, a_im, b_re, b_im;
    std::uint32_t scale;
};

Aligned align(const DyadicComplex& a, const DyadicComplex& b) {
    Aligned out;
    out.scale = std::max(a.scale, b.scale);
    const unsigned da = out.scale - a.scale;
    const unsigned db = out.scale - b.scale;
    out.a_re = a.re_num << da;
    out.a_im = a.im_num << da;
    out.b_re = b.re_num << db;
    out.b_im = b.im_num << db;
    return out;
}

}  // namespace

DyadicComplex DyadicComplex::from_parts(BigInt re, BigInt im, std::uint32_t scale) {
    return canonical(std::move(re), std::move(im), scale);
}

DyadicComplex DyadicComplex::integer(long long re, long long im) {
    return DyadicComplex{BigInt(re), BigInt(im), 0};
}

DyadicComplex DyadicComplex::conjugate() const {
    return DyadicComplex{re_num, -im_num, scale};
}

DyadicComplex DyadicComplex::real_part() const {
    return canonical(re_num, 0, scale);
}

DyadicComplex DyadicComplex::imag_part() const {
    return canonical(im_num, 0, scale);
}

DyadicComplex DyadicComplex::abs_components() const {
    return DyadicComplex{abs(re_num), abs(im_num), scale};
}

double DyadicComplex::re_double() const {
    return static_cast<double>(re_num) / std::ldexp(1.0, static_cast<int>(scale));
}

double DyadicComplex::im_double() const {
    return static_cast<double>(im_num) / std::ldexp(1.0, static_cast<int>(scale));
}

DyadicComplex operator+(const DyadicComplex& a, const DyadicComplex& b) {
    Aligned x = align(a, b);
    return canonical(x.a_re + x.b_re, x.a_im + x.b_im, x.scale);
}

DyadicComplex operator-(const DyadicComplex& a, const DyadicComplex& b) {
    Aligned x = align(a, b);
    return canonical(x.a_re - x.b_re, x.a_im - x.b_im, x.scale);
}

DyadicComplex operator*(const DyadicComplex& a, const DyadicComplex& b) {
    // (x + iy)(u + iv) = (xu - yv) + i(xv + yu), denominators multiply.
    BigInt re = a.re_num * b.re_num - a.im_num * b.im_num;
    BigInt im = a.re_num * b.im_num + a.im_num * b.re_num;
    return canonical(std::move(re), std::move(im), a.scale + b.scale);
}

DyadicComplex operator-(const DyadicComplex& a) {
    return DyadicComplex{-a.re_num, -a.im_num, a.scale};
}

bool operator==(const DyadicComplex& a, const DyadicComplex& b) {
    Aligned x = align(a, b);
    return x.a_re == x.b_re && x.a_im == x.b_im;
}

int compare_real(const DyadicComplex& a, const DyadicComplex& b) {
    Aligned x = align(a, b);
    if (x.a_re < x.b_re) return -1;
    if (x.a_re > x.b_re) return 1;
    return 0;
}

namespace {

std::string real_decimal(const BigInt& num, std::uint32_t scale) {
    BigInt n = num;
    std::string sign;
    if (n < 0) {
        sign = "-";
        n = -n;
    }
    BigInt ipart = n >> scale;
    BigInt mask = (BigInt(1) << scale) - 1;
    BigInt frac = n & mask;
    std::string out = sign + ipart.str();
    if (frac != 0) {
        // frac / 2^scale has an exact decimal expansion of <= scale digits:
        // frac * 5^scale zero-padded to scale digits.
        BigInt five = 1;
        for (std::uint32_t i = 0; i < scale; ++i) five *= 5;
        std::string digits = BigInt(frac * five).str();
        if (digits.size() < scale) digits.insert(0, scale - digits.size(), '0');
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

}  // namespace

std::string to_decimal_string(const DyadicComplex& v) {
    return real_decimal(v.re_num, v.scale);
}

std::string to_decimal_string_complex(const DyadicComplex& v) {
    if (v.im_num == 0) return real_decimal(v.re_num, v.scale);
    std::string im = real_decimal(v.im_num, v.scale) + "i";
    if (v.re_num == 0) return im;
    std::string re = real_decimal(v.re_num, v.scale);
    return v.im_num > 0 ? re + "+" + im : re + im;
}

}  // namespace qsr
