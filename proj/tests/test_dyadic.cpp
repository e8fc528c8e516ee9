#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qsr;
using qsr::test::dy;

TEST_CASE("canonical form keeps the scale minimal") {
    DyadicComplex v = DyadicComplex::from_parts(8, 4, 3);  // (8 + 4i)/8
    CHECK(v.scale == 1);
    CHECK(v.re_num == 2);
    CHECK(v.im_num == 1);
    CHECK(dy(0, 0, 7).scale == 0);
}

TEST_CASE("reference arithmetic matches hand values") {
    // 6.5 * 2.5 = 16.25
    CHECK(dy(13, 0, 1) * dy(5, 0, 1) == dy(65, 0, 2));
    CHECK(dy(13, 0, 1) + dy(0) == dy(13, 0, 1));
    // i^2 = -1
    CHECK(dy(0, 1) * dy(0, 1) == dy(-1));
}

TEST_CASE("algebraic identities hold exactly on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-5000, 5000);
    std::uniform_int_distribution<int> scale(0, 10);
    for (int i = 0; i < 2000; ++i) {
        DyadicComplex a = dy(num(rng), num(rng), static_cast<std::uint32_t>(scale(rng)));
        DyadicComplex b = dy(num(rng), num(rng), static_cast<std::uint32_t>(scale(rng)));
        DyadicComplex c = dy(num(rng), num(rng), static_cast<std::uint32_t>(scale(rng)));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - b == a + (-b));
    }
}

TEST_CASE("decimal rendering is exact") {
    CHECK(to_decimal_string(dy(65, 0, 2)) == "16.25");
    CHECK(to_decimal_string(dy(-1, 0, 7)) == "-0.0078125");
    CHECK(to_decimal_string(dy(3)) == "3");
    CHECK(to_decimal_string_complex(dy(13, 2, 1)) == "6.5+1i");
    CHECK(to_decimal_string_complex(dy(0, -5, 1)) == "-2.5i");
    CHECK(to_decimal_string_complex(dy(0)) == "0");
}

TEST_CASE("state_of inverts eigenvalue") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        StringState s = qsr::test::random_state(rng, 12);
        CHECK(eigenvalue(oracle::state_of(eigenvalue(s))) == eigenvalue(s));
    }
}

TEST_CASE("brute accuracy-inverse search") {
    // 1/5 at accuracy 7: digits at -3,-4,-7,-8.
    DigitString d = oracle::brute_ell_inverse(dy(5), 7, 6);
    CHECK(d == parse_compact("0+00110011").re.digits);

    // Exact powers of two invert exactly.
    CHECK(oracle::brute_ell_inverse(dy(1), 5, 4) == parse_compact("1+").re.digits);
    CHECK(oracle::brute_ell_inverse(dy(2), 4, 4) == parse_compact("0+1").re.digits);

    CHECK_THROWS_AS(oracle::brute_ell_inverse(dy(0), 3, 4), std::domain_error);
    CHECK_THROWS_AS(oracle::brute_ell_inverse(dy(-3), 3, 4), std::domain_error);
    // c too large for the cap: no admissible string.
    CHECK_THROWS_AS(oracle::brute_ell_inverse(dy(1000), 3, 2), std::runtime_error);
}
