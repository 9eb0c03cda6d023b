#include "ratprime/parser.hpp"

#include <cctype>
#include <string>

#include "ratprime/errors.hpp"

namespace ratprime {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
public:
    Parser(std::string_view source, const Field& field) : src_(source), field_(field) {}

    RatFun parse() {
        RatFun value = expr();
        skip_space();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFun expr() {
        const bool negate = accept('-');
        RatFun value = term();
        if (negate) value = -value;
        for (;;) {
            if (accept('+')) {
                value = value + term();
            } else if (accept('-')) {
                value = value - term();
            } else {
                return value;
            }
        }
    }

    RatFun term() {
        RatFun value = factor();
        for (;;) {
            if (accept('*')) {
                value = value * factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                RatFun divisor = factor();
                if (divisor.is_zero()) throw DivisionByZero("division by the zero polynomial at position " + std::to_string(at));
                value = value / divisor;
            } else {
                return value;
            }
        }
    }

    RatFun factor() {
        RatFun value = base();
        if (accept('^')) {
            skip_space();
            const std::string digits = read_digits();
            if (digits.empty()) fail("expected a natural exponent");
            if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) fail("exponent too large");
            value = value.pow(std::stoul(digits));
        }
        return value;
    }

    RatFun base() {
        skip_space();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (c == 'x') {
            ++pos_;
            return RatFun(Poly::x(field_));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const mpz_class literal(read_digits());
            return RatFun(Poly::constant(field_.from_integer(literal)));
        }
        if (c == '(') {
            ++pos_;
            RatFun inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    Field field_;
    std::size_t pos_ = 0;
};

} // namespace

RatFun parse_expression(std::string_view source, const Field& field) { return Parser(source, field).parse(); }

Field parse_field(std::string_view text) {
    if (text == "Q") return Field::rationals();
    if (text.size() >= 2 && text[0] == 'F') {
        const std::string digits(text.substr(1));
        if (digits.size() <= 10 && digits.find_first_not_of("0123456789") == std::string::npos) {
            return Field::prime(std::stoull(digits));
        }
    }
    throw PreconditionError("field must be Q or F<p>, got '" + std::string(text) + "'");
}

} // namespace ratprime
