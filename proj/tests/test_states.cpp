#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsr/json_io.hpp"
#include "support.hpp"

#include <map>

using namespace qsr;
using qsr::test::dy;
using qsr::test::st;

TEST_CASE("canonicalize trims padding and fixes the zero form") {
    // A unit with extra mapped zeros above the binal point.
    DigitString d;
    d.lo = 0;
    d.hi = 2;
    d.bits = {1, 0, 0};
    StringState s = StringState{RealComponent{Sign::plus, d}, RealComponent{}, {}};
    StringState c = canonicalize(s);
    CHECK(c.re.digits.hi == 0);
    CHECK(c.re.digits == DigitString::power_of_two(0));
    CHECK(canonicalize(c) == c);

    // All-zero over [-3, 2] collapses to the single digit at exponent 0.
    DigitString z;
    z.lo = -3;
    z.hi = 2;
    z.bits.assign(6, 0);
    StringState zs = canonicalize(StringState{RealComponent{Sign::minus, z}, RealComponent{}, {}});
    CHECK(zs.re.digits == DigitString::zero());
    CHECK(zs.re.sign == Sign::plus);  // zero settles to +

    // Interior zeros survive; value 5 with two trailing zero qubits.
    DigitString five;
    five.lo = -2;
    five.hi = 2;
    five.bits = {0, 0, 1, 0, 1};
    StringState fs = canonicalize(StringState{RealComponent{Sign::plus, five}, RealComponent{}, {}});
    CHECK(eigenvalue(fs) == dy(5));
    CHECK(fs.re.digits.lo == 0);
    CHECK(fs.re.digits.hi == 2);
}

TEST_CASE("canonicalize is idempotent and value-preserving (exhaustive width <= 8)") {
    for (int width = 1; width <= 8; ++width) {
        for (int lo = -(width - 1); lo <= 0; ++lo) {
            for (unsigned mask = 0; mask < (1u << width); ++mask) {
                DigitString d;
                d.lo = lo;
                d.hi = lo + width - 1;
                d.bits.resize(static_cast<std::size_t>(width));
                for (int i = 0; i < width; ++i) d.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1;
                RealComponent c{Sign::plus, d};
                RealComponent canon = canonicalize(c);
                REQUIRE(canon.digits.is_canonical());
                REQUIRE(eigenvalue(canon) == eigenvalue(c));
                REQUIRE(canonicalize(canon) == canon);
            }
        }
    }
}

TEST_CASE("eigenvalue evaluates positionally") {
    CHECK(eigenvalue(st("101+")) == dy(5));
    CHECK(eigenvalue(st("110-1;1+")) == dy(-13, 2, 1));  // -6.5 + 1i
    CHECK(eigenvalue(st("0-")) == dy(0));                // minus-zero is still zero
    CHECK(eigenvalue(st("0+0101;11-")) == dy(5, -48, 4));
}

TEST_CASE("eigenvalue is injective on canonical states") {
    std::mt19937_64 rng(3);
    std::map<std::string, StringState> seen;
    for (int i = 0; i < 4000; ++i) {
        StringState s = qsr::test::random_state(rng, 10);
        std::string key = to_decimal_string_complex(eigenvalue(s));
        auto [it, inserted] = seen.emplace(key, s);
        if (!inserted) REQUIRE(it->second == s);
    }
}

TEST_CASE("compact notation parses the documented examples") {
    CHECK(eigenvalue(st("110+1")) == dy(13, 0, 1));
    CHECK(eigenvalue(st("1+")) == dy(1));
    StringState s = st("0+00110011;10-1");
    CHECK(eigenvalue(s).re_num == 51);
    CHECK(eigenvalue(s).scale == 8);
    CHECK(eigenvalue(s).im_num == -640);  // -2.5 at scale 8
}

TEST_CASE("compact notation round-trips") {
    CHECK(format_compact(st("1+")) == "1+");
    CHECK(format_compact(st("110-1")) == "110-1");
    CHECK(format_compact(st("0-")) == "0+");
    CHECK(format_compact(st("0+00110011;10-1")) == "0+00110011;10-1");
    CHECK(format_compact(st("0001+0100")) == "1+01");  // canonical text

    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        StringState s = qsr::test::random_state(rng, 12);
        CHECK(parse_compact(format_compact(s)) == translate(s, {}));
    }
}

TEST_CASE("parse errors carry a position") {
    auto pos_of = [](const char* text) {
        try {
            parse_compact(text);
        } catch (const ParseError& e) {
            return static_cast<int>(e.position);
        }
        return -1;
    };
    CHECK(pos_of("") == 0);
    CHECK(pos_of("102+") == 2);    // non-binary digit
    CHECK(pos_of("11") == 2);      // missing sign
    CHECK(pos_of("+1") == 0);      // missing integer digits
    CHECK(pos_of("1+;") == 3);     // empty imaginary part
    CHECK(pos_of("1+1x") == 3);    // trailing junk
}

TEST_CASE("translate moves the site and nothing else") {
    StringState five = st("101+");
    StringState moved = translate(five, {0, 7});
    CHECK(moved.site == LatticeSite{0, 7});
    CHECK(eq_A(moved, five));
    CHECK(eigenvalue(moved) == eigenvalue(five));

    CHECK(eq_A(translate(zero_state(), {3, -2}), zero_state()));

    StringState x = st("0-0101");  // -0.3125
    CHECK(eigenvalue(translate(x, {3, 1})) == eigenvalue(x));
}

TEST_CASE("state JSON record round-trips") {
    StringState s = translate(st("110+1;10-1"), {2, -4});
    StringState back = state_from_json(to_json(s));
    CHECK(back == s);

    CHECK_THROWS(state_from_json(R"({"re":{"sign":"x","lo":0,"hi":0,"bits":"1"},)"
                                 R"("im":{"sign":"+","lo":0,"hi":0,"bits":"0"},)"
                                 R"("site":{"m":0,"h":0}})"));
    CHECK_THROWS(state_from_json(R"({"re":{"sign":"+","lo":1,"hi":2,"bits":"10"},)"
                                 R"("im":{"sign":"+","lo":0,"hi":0,"bits":"0"},)"
                                 R"("site":{"m":0,"h":0}})"));
}
