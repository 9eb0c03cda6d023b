#include <doctest.h>

#include "ratprime/errors.hpp"
#include "ratprime/number_theory.hpp"
#include "ratprime/resultant.hpp"
#include "support.hpp"

using namespace testing;

namespace {

FieldElement q(long n, long d = 1) { return QQ.from_rational(mpq_class(n, d)); }

Poly random_nonconstant(Rng& rng, const Field& field, std::size_t lo = 1, std::size_t hi = 5) {
    return rng.poly_between(field, lo, hi);
}

TPoly closed_form_factorization(const Poly& g, const Poly& h, TPoly& outer, TPoly& inner) {
    const Field& field = g.field();
    const Poly f = poly_compose(g, h);
    const long long n = static_cast<long long>(f.deg());
    const long long dg = static_cast<long long>(g.deg());
    const long long dh = static_cast<long long>(h.deg());
    const long long dgp = static_cast<long long>(g.derivative().deg());
    const long long e = n * (n - 1) / 2 - n * (dg - 1) / 2 + n * dgp * (dh - 1);
    FieldElement a = (e % 2 == 0 ? field.one() : -field.one()) * g.leading().pow(static_cast<std::uint64_t>(dh)) *
                     h.leading().pow(static_cast<std::uint64_t>(n * dgp)) / f.leading();
    outer = disc_in_t(g);
    inner = resultant_in_t(XTPoly::minus_t_times(f, Poly::constant(field.one())), XTPoly::from_x(h.derivative()));
    return a * (outer.pow(static_cast<std::size_t>(dh)) * inner);
}

} // namespace

TEST_CASE("sylvester resultant examples") {
    CHECK(sylvester_resultant(P("x-2"), P("x-5")) == q(-3));
    CHECK(sylvester_resultant(P("x^2-1"), P("x-1")) == q(0));
    CHECK(sylvester_resultant(P("x^2+1"), P("x")) == q(1));
    CHECK(sylvester_resultant(P("x^2+1"), P("3")) == q(9));
    CHECK_THROWS_AS(sylvester_resultant(P("2"), P("3")), PreconditionError);
    CHECK_THROWS_AS(sylvester_resultant(P("x"), Poly(QQ)), PreconditionError);
}

TEST_CASE("resultant agrees with cofactor expansion") {
    Rng rng(31);
    for (const Field& field : {QQ, Field::prime(7)}) {
        for (int i = 0; i < 40; ++i) {
            const Poly f = random_nonconstant(rng, field, 1, 4);
            const Poly g = random_nonconstant(rng, field, 1, 4);
            CHECK(sylvester_resultant(f, g) == cofactor_resultant(f, g));
        }
    }
}

TEST_CASE("resultant properties") {
    Rng rng(32);
    for (int i = 0; i < 100; ++i) {
        const Poly f = random_nonconstant(rng, QQ);
        const Poly g = random_nonconstant(rng, QQ);
        const Poly h = random_nonconstant(rng, QQ);
        const FieldElement sign = ((f.deg() * g.deg()) % 2 == 0) ? q(1) : q(-1);
        CHECK(sylvester_resultant(f, g) == sign * sylvester_resultant(g, f));
        CHECK(sylvester_resultant(f, g * h) == sylvester_resultant(f, g) * sylvester_resultant(f, h));

        const Poly shared = rng.poly_between(QQ, 1, 2);
        CHECK(sylvester_resultant(f * shared, g * shared).is_zero());
        CHECK(sylvester_resultant(f, g).is_zero() == !poly_gcd(f, g).is_constant());

        std::vector<FieldElement> roots;
        for (long j = 0, m = rng.integer(1, 5); j < m; ++j) roots.push_back(q(rng.integer(-4, 4), rng.integer(1, 3)));
        const FieldElement lead = rng.nonzero(QQ);
        CHECK(sylvester_resultant(from_roots(lead, roots), g) == root_product_resultant(lead, roots, g));

        const FieldElement c = rng.nonzero(QQ, 9);
        CHECK(sylvester_resultant(f, c * g) == c.pow(f.deg()) * sylvester_resultant(f, g));
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(P("x^2-4")) == q(16));
    CHECK(discriminant(P("(x-1)^2")) == q(0));
    CHECK(discriminant(P("x^3-3*x")) == q(108));
    CHECK_THROWS_AS(discriminant(P("7")), PreconditionError);

    Rng rng(33);
    for (int i = 0; i < 50; ++i) {
        const FieldElement a = rng.nonzero(QQ), b = rng.element(QQ), c = rng.element(QQ), d = rng.element(QQ);
        CHECK(discriminant(Poly(QQ, {c, b, a})) == b * b - q(4) * a * c);
        // general cubic a x^3 + b x^2 + c x + d
        const FieldElement expected = b * b * c * c - q(4) * a * c * c * c - q(4) * b * b * b * d - q(27) * a * a * d * d +
                                      q(18) * a * b * c * d;
        CHECK(discriminant(Poly(QQ, {d, c, b, a})) == expected);
    }
}

TEST_CASE("discriminant in t") {
    CHECK(disc_in_t(P("x^2")) == T("4*t"));
    CHECK(disc_in_t(P("x^4+x")) == T("-256*t^3-27"));
    const auto quartic = critical_values(disc_in_t(P("x^4")));
    REQUIRE(quartic.squarefree.parts.size() == 1);
    CHECK(quartic.squarefree.parts[0].factor == T("t"));
    CHECK(quartic.squarefree.parts[0].multiplicity == 3);
    CHECK_THROWS_AS(disc_in_t(P("x")), PreconditionError);
    CHECK_THROWS_AS(disc_in_t(P("x^5+1", Field::prime(5))), DegenerateDerivative);

    // substituting t = c gives the discriminant of f - c
    Rng rng(34);
    for (int i = 0; i < 30; ++i) {
        const Poly f = rng.poly_between(QQ, 2, 5);
        const TPoly dt = disc_in_t(f);
        for (long c = -2; c <= 2; ++c) CHECK(dt(q(c)) == discriminant(f - P(std::to_string(c))));
    }
}

TEST_CASE("resultant in t for rational functions") {
    const TPoly r = rat_resultant_in_t(R("(x+1)^4/x^3"));
    CHECK(r == T("t^3*(256-27*t)"));

    const TPoly s = rat_resultant_in_t(R("(x^2+1)/x"));
    CHECK((s == T("4-t^2") || s == T("t^2-4")));

    // polynomials: Res(f - t, f') = (-1)^(n(n-1)/2) a_n D[f - t]
    Rng rng(35);
    for (int i = 0; i < 30; ++i) {
        const Poly f = rng.poly_between(QQ, 2, 5);
        const std::size_t n = f.deg();
        const FieldElement sign = ((n * (n - 1) / 2) % 2 == 0) ? q(1) : q(-1);
        CHECK(rat_resultant_in_t(RatFun(f)) == sign * f.leading() * disc_in_t(f));
    }
    CHECK_THROWS_AS(rat_resultant_in_t(R("x^5/(x^5+1)", Field::prime(5))), DegenerateDerivative);
}

TEST_CASE("critical values are roots of the resultant") {
    Rng rng(36);
    for (int i = 0; i < 40; ++i) {
        // f - b vanishes to order two at a
        const FieldElement a = q(rng.integer(-3, 3));
        const FieldElement b = q(rng.integer(-3, 3));
        const Poly u = rng.poly_between(QQ, 0, 2);
        const Poly v = rng.poly_between(QQ, 0, 2);
        if (v(a).is_zero() || u(a).is_zero()) continue;
        const Poly sq = Poly(QQ, {-a, q(1)}).pow(2);
        const RatFun f = RatFun::reduce(sq * u + Poly::constant(b) * v, v);
        if (f.is_constant() || f.degree() < 2) continue;
        CHECK(valency(f, a) >= 2);
        CHECK(rat_resultant_in_t(f)(b).is_zero());
    }
    for (int i = 0; i < 40; ++i) {
        const RatFun f = rng.ratfun(QQ, static_cast<std::size_t>(rng.integer(1, 4)), static_cast<std::size_t>(rng.integer(1, 4)));
        if (f.degree() < 2) continue;
        const TPoly r = rat_resultant_in_t(f);
        const Poly m = rat_derivative(f).numerator();
        for (long c = -3; c <= 3; ++c) {
            const Poly fibre = f.numerator() - q(c) * f.denominator();
            if (fibre.is_zero() || fibre.deg() != f.degree()) continue;
            CHECK(r(q(c)).is_zero() == !poly_gcd(fibre, m).is_constant());
        }
    }
}

TEST_CASE("critical value report") {
    const auto a = critical_values(T("t^3*(256-27*t)"));
    CHECK(a.simple_count == 1);
    CHECK(a.nonzero_simple_count == 1);
    CHECK(a.zero_multiplicity == 3);

    const auto b = critical_values(T("-256*t^3-27"));
    CHECK(b.simple_count == 3);
    CHECK(b.nonzero_simple_count == 3);
    CHECK(b.zero_multiplicity == 0);

    const auto c = critical_values(T("4*t"));
    CHECK(c.simple_count == 1);
    CHECK(c.nonzero_simple_count == 0);
    CHECK(c.zero_multiplicity == 1);

    CHECK_THROWS_AS(critical_values(Poly(QQ)), PreconditionError);
}

TEST_CASE("discriminant of a composite factors") {
    for (const auto& [g, h] : {std::pair{"x^2", "x^2"}, std::pair{"x^2+x", "x^2"}, std::pair{"x^3", "x^2"}}) {
        const CompositeDiscriminant fac = factor_composite_discriminant(P(g), P(h));
        TPoly outer, inner;
        CHECK(disc_in_t(poly_compose(P(g), P(h))) == closed_form_factorization(P(g), P(h), outer, inner));
        CHECK(fac.outer_disc == outer);
        CHECK(fac.inner_res == inner);
        CHECK(fac.inner_res.deg() == fac.k - 1);
    }

    Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        const Poly g = rng.poly_between(QQ, 2, 4);
        const Poly h = rng.poly_between(QQ, 2, 4);
        TPoly outer, inner;
        CHECK(disc_in_t(poly_compose(g, h)) == closed_form_factorization(g, h, outer, inner));
        const CompositeDiscriminant fac = factor_composite_discriminant(g, h);
        CHECK(fac.inner_res.deg() == h.deg() - 1);
    }
    for (std::uint64_t p : {5ULL, 7ULL}) {
        const Field field = Field::prime(p);
        for (int i = 0; i < 40; ++i) {
            const Poly g = rng.poly_between(field, 2, 4);
            const Poly h = rng.poly_between(field, 2, 4);
            if (g.derivative().is_zero() || h.derivative().is_zero()) continue;
            if (poly_compose(g, h).derivative().is_zero()) continue;
            TPoly outer, inner;
            CHECK(disc_in_t(poly_compose(g, h)) == closed_form_factorization(g, h, outer, inner));
            CHECK_NOTHROW(factor_composite_discriminant(g, h));
        }
    }
    CHECK_THROWS_AS(factor_composite_discriminant(P("x"), P("x^2")), PreconditionError);
}

TEST_CASE("order of t in the rational resultant") {
    const auto ex = rat_structure_check(R("(x+1)/x^4"), R("(x^2+1)/(x^4+1)"));
    CHECK_FALSE(ex.side_condition);
    CHECK(ex.consistent);
    CHECK(ex.ell == critical_values(ex.resultant).zero_multiplicity);

    const auto small = rat_structure_check(R("x^2"), R("(x^2+1)/x"));
    CHECK(small.consistent);
    CHECK(small.ell == critical_values(rat_resultant_in_t(R("((x^2+1)/x)^2"))).zero_multiplicity);

    const auto poly = rat_structure_check(R("x^2+x"), R("x^3+1"));
    CHECK(poly.ell == critical_values(disc_in_t(P("(x^3+1)^2+x^3+1"))).zero_multiplicity);

    Rng rng(38);
    for (int i = 0; i < 30; ++i) {
        const RatFun g = rng.ratfun(QQ, static_cast<std::size_t>(rng.integer(0, 2)), static_cast<std::size_t>(rng.integer(0, 2)));
        const RatFun h = rng.ratfun(QQ, static_cast<std::size_t>(rng.integer(0, 2)), static_cast<std::size_t>(rng.integer(0, 2)));
        if (g.degree() < 2 || h.degree() < 2) continue;
        CHECK(rat_structure_check(g, h).consistent);
    }
}

TEST_CASE("greatest proper divisor") {
    CHECK(greatest_proper_divisor(16) == 8);
    CHECK(greatest_proper_divisor(7) == 1);
    CHECK(greatest_proper_divisor(9) == 3);
    CHECK(smallest_prime_factor(91) == 7);
    CHECK_THROWS_AS(greatest_proper_divisor(1), PreconditionError);
}
