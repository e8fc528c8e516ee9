#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "demos.hpp"
#include "expr.hpp"
#include "support.hpp"

using namespace qsr;
using qsr::test::dy;
using qsr::test::st;

TEST_CASE("expression evaluation") {
    CHECK(format_compact(cli::eval_expression("110+1 * 10+1")) == "10000+01");
    CHECK(format_compact(cli::eval_expression("1+ /:7 101+")) == "0+00110011");
    CHECK(format_compact(cli::eval_expression("1+ - 1+")) == "0+");
    CHECK(format_compact(cli::eval_expression("1+;1+ * 1+;1-")) == "10+");  // (1+i)(1-i) = 2
}

TEST_CASE("precedence and parentheses") {
    // 1 + 1 * 10 = 11 with * binding tighter.
    CHECK(eigenvalue(cli::eval_expression("1+ + 1+ * 10+")) == dy(3));
    CHECK(eigenvalue(cli::eval_expression("( 1+ + 1+ ) * 10+")) == dy(4));
    CHECK(eigenvalue(cli::eval_expression("10+ /:4 10+")) == dy(1));
    // Left association of subtraction.
    CHECK(eigenvalue(cli::eval_expression("111+ - 10+ - 1+")) == dy(4));
}

TEST_CASE("expression errors carry positions") {
    auto pos_of = [](const char* text) {
        try {
            cli::eval_expression(text);
        } catch (const ParseError& e) {
            return static_cast<int>(e.position);
        }
        return -1;
    };
    CHECK(pos_of("") == 0);
    CHECK(pos_of("1+ *") == 4);          // missing right operand
    CHECK(pos_of("1+ 1+") == 3);         // two literals in a row
    CHECK(pos_of("1+ /: 1+") == 3);      // accuracy digits missing
    CHECK(pos_of("1+ * 10x2+") == 7);    // bad literal, inner offset preserved
    CHECK(pos_of("( 1+ + 1+") == 9);     // unclosed paren
    CHECK_THROWS_AS(cli::eval_expression("1+ /:0 1+"), ParseError);
}

TEST_CASE("division by an arithmetic zero reports a domain error") {
    CHECK_THROWS_AS(cli::eval_expression("1+ /:3 0+"), std::domain_error);
}

TEST_CASE("demos hold their claims") {
    const Horizon hz{6, 24, 6};
    for (const char* name : {"exam1", "bell", "x2-minus-1"}) {
        cli::DemoReport r = cli::run_demo(name, hz);
        CHECK(r.ok);
    }
    CHECK_THROWS_AS(cli::run_demo("nope", hz), std::invalid_argument);
}
