#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <set>
#include <vector>

using namespace qsr;
using qsr::test::dy;
using qsr::test::st;

namespace {

bool in_band(const DyadicComplex& product, int ell) {
    const DyadicComplex one = DyadicComplex::integer(1);
    const DyadicComplex floor_v = one - dy(1, 0, static_cast<std::uint32_t>(ell));
    return compare_real(floor_v, product) <= 0 && compare_real(product, one) <= 0;
}

// All positive real components of digit width <= max_width, deduplicated.
std::vector<RealComponent> positive_components_up_to_width(int max_width) {
    std::vector<RealComponent> out;
    std::set<std::string> seen;
    for (int width = 1; width <= max_width; ++width) {
        for (int lo = -(width - 1); lo <= 0; ++lo) {
            for (unsigned mask = 1; mask < (1u << width); ++mask) {
                DigitString d;
                d.lo = lo;
                d.hi = lo + width - 1;
                d.bits.resize(static_cast<std::size_t>(width));
                for (int i = 0; i < width; ++i) d.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1;
                RealComponent c = canonicalize(RealComponent{Sign::plus, d});
                if (static_cast<int>(c.digits.width()) > max_width) continue;
                if (seen.insert(format_compact(c)).second) out.push_back(c);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("the worked inverse of five at accuracy seven") {
    RealComponent inv = ell_inverse(st("101+").re, Accuracy(7));
    CHECK(format_compact(inv) == "0+00110011");
    CHECK(inv.digits.lowest_set() == -8);

    // The narrower candidate {-3,-4,-7} falls below the band...
    StringState narrower = st("0+0011001");
    CHECK_FALSE(in_band(eigenvalue(narrower) * dy(5), 7));
    // ...and the wider candidate {-3,-4,-7,-9,-10,-11} is admissible but
    // loses on the lowest-set-digit rule.
    StringState wider = st("0+00110010111");
    CHECK(in_band(eigenvalue(wider) * dy(5), 7));
    CHECK(wider.re.digits.lowest_set() < inv.digits.lowest_set());
    CHECK_FALSE(eq_A(wider.re, inv));
}

TEST_CASE("inverse of one and of powers of two is exact") {
    for (int ell : {1, 4, 9, 16}) {
        CHECK(eq_A(ell_inverse(st("1+").re, Accuracy(ell)), st("1+").re));
        CHECK(eq_A(ell_inverse(st("10+").re, Accuracy(ell)), st("0+1").re));
        CHECK(eq_A(ell_inverse(st("0+01").re, Accuracy(ell)), st("100+").re));
    }
}

TEST_CASE("inverse rejects zero and negative inputs") {
    CHECK_THROWS_AS(ell_inverse(st("0+").re, Accuracy(3)), std::domain_error);
    CHECK_THROWS_AS(ell_inverse(st("101-").re, Accuracy(3)), std::domain_error);
    CHECK_THROWS_AS(Accuracy(0), std::invalid_argument);
}

TEST_CASE("inverse band contract for widths <= 6 up to accuracy 16") {
    for (const RealComponent& c : positive_components_up_to_width(6)) {
        const DyadicComplex vc = eigenvalue(c);
        for (int ell = 1; ell <= 16; ++ell) {
            RealComponent inv = ell_inverse(c, Accuracy(ell));
            CHECK(in_band(eigenvalue(inv) * vc, ell));
        }
    }
}

TEST_CASE("greedy inverse matches the exhaustive search on small widths") {
    for (const RealComponent& c : positive_components_up_to_width(4)) {
        for (int ell = 1; ell <= 8; ++ell) {
            DigitString brute = oracle::brute_ell_inverse(eigenvalue(c), ell, 6);
            CHECK(ell_inverse(c, Accuracy(ell)).digits == brute);
        }
    }
}

TEST_CASE("division on the documented examples") {
    CHECK(eq_A(div_A(one_state(), st("101+"), Accuracy(7)), st("0+00110011")));
    CHECK(eq_A(div_A(st("110+1"), one_state(), Accuracy(5)), st("110+1")));
    // 1 / i = -i exactly through the conjugate route.
    CHECK(eq_A(div_A(one_state(), imaginary_unit_state(), Accuracy(8)),
               negate(imaginary_unit_state(), Part::imaginary)));
    CHECK_THROWS_AS(div_A(one_state(), zero_state(), Accuracy(3)), std::domain_error);
    CHECK_THROWS_AS(div_A(one_state(), st("0-"), Accuracy(3)), std::domain_error);
}

TEST_CASE("complex inverse satisfies the band on the squared magnitude") {
    std::mt19937_64 rng(43);
    int tested = 0;
    while (tested < 300) {
        StringState b = qsr::test::random_state(rng, 8);
        if (eq_A(b, zero_state())) continue;
        ++tested;
        for (int ell : {1, 3, 7}) {
            StringState inv = ell_inverse_complex(b, Accuracy(ell));
            DyadicComplex product = eigenvalue(mul_A(b, inv));
            CHECK(product.im_num == 0);
            CHECK(in_band(product, ell));
        }
    }
}

TEST_CASE("negative real divisors invert with the sign carried") {
    StringState minus_five = st("101-");
    StringState inv = ell_inverse_complex(minus_five, Accuracy(7));
    CHECK(inv.re.sign == Sign::minus);
    CHECK(in_band(eigenvalue(mul_A(minus_five, inv)), 7));
}
