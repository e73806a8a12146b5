#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace twcli {
namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : src_(s) {}

    double parse() {
        double v = sum();
        skip();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return v;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ExprError("bad expression '" + std::string(src_) + "': " + what);
    }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double sum() {
        double v = product();
        for (;;) {
            if (eat('+')) v += product();
            else if (eat('-')) v -= product();
            else return v;
        }
    }

    double product() {
        double v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                double d = unary();
                if (d == 0.0) fail("division by zero");
                v /= d;
            } else return v;
        }
    }

    double unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return atom();
    }

    double atom() {
        skip();
        if (eat('(')) {
            double v = sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            auto word = src_.substr(start, pos_ - start);
            if (word == "pi") return std::numbers::pi;
            if (word == "sqrt") {
                if (!eat('(')) fail("sqrt needs '('");
                double v = sum();
                if (!eat(')')) fail("missing ')'");
                if (v < 0.0) fail("sqrt of a negative number");
                return std::sqrt(v);
            }
            fail("unknown name '" + std::string(word) + "'");
        }
        double v = 0.0;
        auto first = src_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, src_.data() + src_.size(), v);
        if (ec != std::errc() || ptr == first) fail("expected a number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }
};

}  // namespace

double eval_expr(std::string_view text) {
    double v = Parser(text).parse();
    if (!std::isfinite(v)) throw ExprError("bad expression '" + std::string(text) + "': not finite");
    return v;
}

}  // namespace twcli
