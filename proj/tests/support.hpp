#pragma once

#include "qsr/arithmetic.hpp"
#include "qsr/oracle.hpp"

#include <random>

namespace qsr::test {

inline StringState st(const char* compact) { return parse_compact(compact); }

inline DyadicComplex dy(long long re, long long im = 0, std::uint32_t scale = 0) {
    return DyadicComplex::from_parts(re, im, scale);
}

inline DigitString random_digits(std::mt19937_64& rng, int max_width) {
    std::uniform_int_distribution<int> width_dist(1, max_width);
    const int w = width_dist(rng);
    std::uniform_int_distribution<int> lo_dist(-(w - 1), 0);
    DigitString d;
    d.lo = lo_dist(rng);
    d.hi = d.lo + w - 1;
    d.bits.resize(static_cast<std::size_t>(w));
    std::uniform_int_distribution<int> bit(0, 1);
    for (auto& b : d.bits) b = static_cast<std::uint8_t>(bit(rng));
    return d;
}

inline RealComponent random_component(std::mt19937_64& rng, int max_width) {
    std::uniform_int_distribution<int> bit(0, 1);
    return canonicalize(
        RealComponent{bit(rng) ? Sign::plus : Sign::minus, random_digits(rng, max_width)});
}

inline StringState random_state(std::mt19937_64& rng, int max_width) {
    return make_state(random_component(rng, max_width), random_component(rng, max_width));
}

}  // namespace qsr::test
