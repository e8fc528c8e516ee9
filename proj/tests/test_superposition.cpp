#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsr/json_io.hpp"
#include "qsr/superposition.hpp"
#include "support.hpp"

#include <cmath>
#include <limits>

using namespace qsr;
using qsr::test::st;

namespace {

const double kInv2 = std::sqrt(0.5);

Superposition half_half(const StringState& a, const StringState& b) {
    return Superposition({Term{a, {kInv2, 0.0}}, Term{b, {kInv2, 0.0}}}, a.site);
}

}  // namespace

TEST_CASE("construction canonicalizes, merges and validates") {
    // Arithmetically identical encodings merge into one term (amplitudes add).
    StringState padded = parse_compact("0001+00");
    Superposition merged({Term{one_state(), {0.5, 0.0}}, Term{padded, {0.5, 0.0}}}, {});
    CHECK(merged.size() == 1);
    CHECK(merged.terms()[0].amp == Amplitude{1.0, 0.0});
    CHECK(std::abs(merged.norm_sq() - 1.0) < 1e-12);

    CHECK_THROWS_AS(Superposition({Term{one_state(), {0.5, 0.0}}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(
        Superposition({Term{one_state(), {std::numeric_limits<double>::quiet_NaN(), 0.0}}}, {}),
        std::invalid_argument);
}

TEST_CASE("probability of arithmetic equality") {
    Superposition one = Superposition::basis(one_state());
    CHECK(prob_eq_A(one, one) == 1.0);
    CHECK(prob_eq_A(one, Superposition::basis(st("10+"))) == 0.0);

    Superposition mixed = half_half(one_state(), zero_state());
    CHECK(prob_eq_A(mixed, one) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(prob_eq_A(mixed, one) == prob_eq_A(one, mixed));

    // Equality probability 1 iff every massive pair agrees.
    Superposition mixed2 = half_half(translate(one_state(), {0, 3}), translate(zero_state(), {0, 3}));
    CHECK(prob_eq_A(mixed, mixed2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("probability of a gapped order relation") {
    Superposition zero = Superposition::basis(zero_state());
    Superposition one = Superposition::basis(one_state());
    CHECK(prob_lt_gap(zero, one, Accuracy(1)) == 1.0);
    CHECK(prob_lt_gap(one, one, Accuracy(4)) == 0.0);

    Superposition mixed = half_half(zero_state(), one_state());
    CHECK(prob_lt_gap(mixed, one, Accuracy(2)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gap probability is nondecreasing as the gap shrinks") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 200; ++i) {
        StringState a = qsr::test::random_state(rng, 6);
        StringState b = qsr::test::random_state(rng, 6);
        if (eq_A(a, b)) continue;
        Superposition psi = half_half(a, b);
        Superposition phi = Superposition::basis(qsr::test::random_state(rng, 6));
        double prev = 0.0;
        for (int ell = 1; ell <= 8; ++ell) {
            double p = prob_lt_gap(psi, phi, Accuracy(ell));
            CHECK(p >= prev - 1e-15);
            prev = p;
        }
    }
}

TEST_CASE("entangled application expands term pairs with joint amplitudes") {
    Superposition one = Superposition::basis(one_state());
    auto triples = apply_op_entangled(OpKind::add, one, one);
    REQUIRE(triples.size() == 1);
    CHECK(eq_A(triples[0].result, st("10+")));
    CHECK(triples[0].amp == Amplitude{1.0, 0.0});

    Superposition mixed = half_half(zero_state(), one_state());
    auto two = apply_op_entangled(OpKind::add, mixed, one);
    REQUIRE(two.size() == 2);
    double total = 0.0;
    for (const auto& t : two) total += std::norm(t.amp);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eq_A(two[0].result, one_state()));
    CHECK(eq_A(two[1].result, st("10+")));
}

TEST_CASE("no independent duplication of superposed inputs") {
    // Adding a superposition to itself keeps the inputs correlated in the
    // triple list: the cross pairs are present, the terms are never cloned
    // into a single doubled branch.
    Superposition mixed = half_half(zero_state(), one_state());
    auto triples = apply_op_entangled(OpKind::add, mixed, mixed);
    REQUIRE(triples.size() == 4);
    int cross = 0;
    for (const auto& t : triples)
        if (!eq_A(t.lhs, t.rhs)) ++cross;
    CHECK(cross == 2);
}

TEST_CASE("tracing the result register") {
    Superposition one = Superposition::basis(one_state());
    Superposition mixed = half_half(zero_state(), one_state());
    Mixture m = trace_result(apply_op_entangled(OpKind::add, mixed, one));
    REQUIRE(m.outcomes.size() == 2);
    CHECK(m.probability_sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& o : m.outcomes) CHECK(o.probability == doctest::Approx(0.5).epsilon(1e-12));

    Mixture single = trace_result(apply_op_entangled(OpKind::mul, one, one));
    REQUIRE(single.outcomes.size() == 1);
    CHECK(single.outcomes[0].probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("equal results add probabilities, not amplitudes") {
    // Opposite-phase branches would cancel under amplitude addition; the
    // traced mixture must keep their full probability mass.
    Superposition psi({Term{zero_state(), {kInv2, 0.0}}, Term{one_state(), {-kInv2, 0.0}}}, {});
    Superposition phi = half_half(zero_state(), one_state());
    Mixture m = trace_result(apply_op_entangled(OpKind::add, psi, phi));
    double mass_one = 0.0;
    for (const auto& o : m.outcomes)
        if (eq_A(o.state, one_state())) mass_one = o.probability;
    CHECK(mass_one == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("basis-state inputs reduce to plain arithmetic") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 300; ++i) {
        StringState a = qsr::test::random_state(rng, 8);
        StringState b = qsr::test::random_state(rng, 8);
        for (OpKind op : {OpKind::add, OpKind::sub, OpKind::mul}) {
            Mixture m = trace_result(
                apply_op_entangled(op, Superposition::basis(a), Superposition::basis(b)));
            REQUIRE(m.outcomes.size() == 1);
            StringState direct = op == OpKind::add   ? add_A(a, b)
                                 : op == OpKind::sub ? sub_A(a, b)
                                                     : mul_A(a, b);
            CHECK(eq_A(m.outcomes[0].state, direct));
        }
    }
}

TEST_CASE("division over superpositions flags zero divisor terms") {
    Superposition divisor = half_half(zero_state(), one_state());
    CHECK_THROWS_AS(
        apply_op_entangled(OpKind::div_ell, Superposition::basis(one_state()), divisor, Accuracy(3)),
        std::domain_error);
    CHECK_THROWS_AS(apply_op_entangled(OpKind::div_ell, Superposition::basis(one_state()),
                                       Superposition::basis(one_state())),
                    std::invalid_argument);
}

TEST_CASE("superposition JSON record round-trips") {
    Superposition mixed = half_half(st("110+1;1-"), st("0-01"));
    Superposition back = superposition_from_json(to_json(mixed));
    REQUIRE(back.size() == mixed.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.terms()[i].state == mixed.terms()[i].state);
        CHECK(back.terms()[i].amp == mixed.terms()[i].amp);
    }
}
