#include <cmath>
#include <numbers>

#include "doctest.h"
#include "expr.hpp"

using twcli::eval_expr;
using twcli::ExprError;

TEST_CASE("expression grammar") {
    CHECK(eval_expr("1.5") == 1.5);
    CHECK(eval_expr(" 2 + 3*4 ") == 14.0);
    CHECK(eval_expr("(2+3)*4") == 20.0);
    CHECK(eval_expr("-2*-3") == 6.0);
    CHECK(eval_expr("20/3") == doctest::Approx(20.0 / 3.0));
    CHECK(eval_expr("1e-3") == 1e-3);
    CHECK(eval_expr("sqrt(4.6)*pi") == doctest::Approx(std::sqrt(4.6) * std::numbers::pi));
    CHECK(eval_expr("10/3-6/5") == doctest::Approx(10.0 / 3.0 - 1.2));
    CHECK(eval_expr("+pi/2") == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("expression errors") {
    CHECK_THROWS_AS(eval_expr(""), ExprError);
    CHECK_THROWS_AS(eval_expr("2+"), ExprError);
    CHECK_THROWS_AS(eval_expr("(1"), ExprError);
    CHECK_THROWS_AS(eval_expr("1/0"), ExprError);
    CHECK_THROWS_AS(eval_expr("sqrt(-1)"), ExprError);
    CHECK_THROWS_AS(eval_expr("e"), ExprError);
    CHECK_THROWS_AS(eval_expr("2 3"), ExprError);
}
