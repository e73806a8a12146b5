#pragma once

#include <stdexcept>
#include <string_view>

namespace twcli {

struct ExprError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numbers, pi, sqrt(...), + - * /, parentheses and unary signs.
double eval_expr(std::string_view text);

}  // namespace twcli
