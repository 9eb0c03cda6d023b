#include <doctest.h>

#include "ratprime/errors.hpp"
#include "ratprime/report.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("parsing") {
    const RatFun f = parse_expression("(x+1)^4/x^3", QQ);
    CHECK(f.numerator() == Poly::from_ints(QQ, {1, 4, 6, 4, 1}));
    CHECK(f.denominator() == Poly::monomial(QQ.one(), 3));
    CHECK(parse_expression("x", QQ) == RatFun(Poly::x(QQ)));
    CHECK(parse_expression(" ( x ^ 2 ) * 3 - 1", QQ).numerator() == Poly::from_ints(QQ, {-1, 0, 3}));
    CHECK(parse_expression("(x^4+1)^3*(x^4+x^2+2)/(x^2+1)^4", QQ).degree() == 16);
    CHECK(parse_expression("7*x+8", Field::prime(5)).numerator() == Poly::from_ints(Field::prime(5), {3, 2}));
    CHECK(parse_expression("-x^2+1", QQ).numerator() == Poly::from_ints(QQ, {1, 0, -1}));
    CHECK(parse_expression("123456789012345678901234567890*x", QQ).numerator().leading().to_string() ==
          "123456789012345678901234567890");
}

TEST_CASE("parse errors carry a position") {
    auto position_of = [](const std::string& text) -> long {
        try {
            parse_expression(text, QQ);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("x^+1") == 2);
    CHECK(position_of("2x") == 1);
    CHECK(position_of("(x+1") == 4);
    CHECK(position_of("x+") == 2);
    CHECK(position_of("y") == 0);
    CHECK(position_of("") == 0);
    CHECK(position_of("x^99999") >= 0);
    CHECK_THROWS_AS(parse_expression("1/(x-x)", QQ), DivisionByZero);
    CHECK_THROWS_AS(parse_expression("1/5", Field::prime(5)), DivisionByZero);
}

TEST_CASE("fields") {
    CHECK(parse_field("Q") == QQ);
    CHECK(parse_field("F5") == Field::prime(5));
    CHECK_THROWS_AS(parse_field("F4"), PreconditionError);
    CHECK_THROWS_AS(parse_field("R"), PreconditionError);
}

TEST_CASE("print and parse round trip") {
    Rng rng(71);
    for (const Field& field : {QQ, Field::prime(7)}) {
        for (int i = 0; i < 100; ++i) {
            RatFun f = rng.ratfun(field, static_cast<std::size_t>(rng.integer(0, 5)), static_cast<std::size_t>(rng.integer(0, 4)), 30);
            if (field.is_rationals() && i % 2 == 0) f = f * RatFun(Poly::constant(QQ.from_rational(mpq_class(3, 7))));
            CHECK(parse_expression(f.to_string(), field) == f);
        }
    }
    CHECK(parse_expression(R("-x").to_string(), QQ) == R("-x"));
    CHECK(parse_expression(R("-1/(x^2+1)").to_string(), QQ) == R("-1/(x^2+1)"));
}

TEST_CASE("reports") {
    const RatFun f = R("(x+1)^4/x^3");
    const auto j = analyze_report("(x+1)^4/x^3", f, analyze_detailed(f, std::nullopt), std::nullopt);
    CHECK(j["command"] == "analyze");
    CHECK(j["critical_values"]["ell"] == 3);
    CHECK(j["critical_values"]["simple_count"] == 1);
    CHECK(j["verdict"]["kind"] == "Unknown");
    CHECK(j["oracle"]["status"] == "unused");
    CHECK(j["timing_ms"].is_null());
    for (const auto& c : j["critical_values"]["coefficients"]) CHECK(c.is_string());
    CHECK(parse_expression(j["input"].get<std::string>(), QQ) == f);
    CHECK(parse_expression(j["canonical"].get<std::string>(), QQ) == f);

    // same keys whatever the verdict
    const RatFun g = R("x^9/(x^2+1)");
    const auto k = analyze_report("x^9/(x^2+1)", g, analyze_detailed(g, std::nullopt), 1.5);
    std::vector<std::string> keys_j, keys_k;
    for (auto it = j.begin(); it != j.end(); ++it) keys_j.push_back(it.key());
    for (auto it = k.begin(); it != k.end(); ++it) keys_k.push_back(it.key());
    CHECK(keys_j == keys_k);
    CHECK(j["verdict"].size() == k["verdict"].size());
    CHECK(k["verdict"]["p"] == 7);

    const auto fq = fq_report("x^2", reduce_ring(P("x^2", Field::prime(3))), std::nullopt);
    CHECK(fq["class"] == "ZeroDivisor");
    CHECK(fq["witness"]["psi"] == "x^2+2*x");

    const auto err = error_report("analyze", "parse", "bad", 3);
    CHECK(err["error"]["position"] == 3);
    CHECK(render_text(err).find("bad") != std::string::npos);
    CHECK(render_text(j).find("ell") != std::string::npos);
}
