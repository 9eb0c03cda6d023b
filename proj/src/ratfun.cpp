#include "ratprime/ratfun.hpp"

#include <utility>
#include <vector>

#include "ratprime/errors.hpp"

namespace ratprime {

RatFun::RatFun(Poly polynomial) : num_(std::move(polynomial)), den_(Poly::constant(num_.field().one())) {}

RatFun RatFun::reduce(const Poly& numerator, const Poly& denominator) {
    if (numerator.field() != denominator.field()) throw FieldMismatch();
    if (denominator.is_zero()) throw DivisionByZero("zero denominator");
    const Field& field = numerator.field();
    if (numerator.is_zero()) return RatFun(Poly(field), Poly::constant(field.one()));
    const Poly g = poly_gcd(numerator, denominator);
    Poly num = exact_quotient(numerator, g);
    Poly den = exact_quotient(denominator, g);
    const FieldElement scale = den.leading().inverse();
    return RatFun(num * scale, den * scale);
}

std::size_t RatFun::degree() const {
    if (is_zero()) throw PreconditionError("degree of the zero function");
    return std::max(num_.deg(), den_.deg());
}

long RatFun::ord_infinity() const {
    if (is_zero()) throw PreconditionError("order at infinity of the zero function");
    return static_cast<long>(den_.deg()) - static_cast<long>(num_.deg());
}

FieldElement RatFun::operator()(const FieldElement& at) const {
    const FieldElement d = den_(at);
    if (d.is_zero()) throw DivisionByZero("evaluation at a pole");
    return num_(at) / d;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun::reduce(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero function");
    return RatFun::reduce(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::pow(std::size_t exponent) const { return RatFun(num_.pow(exponent), den_.pow(exponent)); }

std::string RatFun::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    auto wrap = [](const Poly& p) {
        std::string s = p.to_string();
        const bool atomic = p.coefficients().size() == 1 || (p.coefficients().size() == 2 && p.coeff(0).is_zero() &&
                                                             p.leading().is_one());
        return atomic && s.find('/') == std::string::npos && s.find('*') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

RatFun rat_derivative(const RatFun& f) {
    const Poly& n = f.numerator();
    const Poly& d = f.denominator();
    return RatFun::reduce(n.derivative() * d - n * d.derivative(), d * d);
}

RatFun rat_compose(const RatFun& g, const RatFun& h) {
    if (g.field() != h.field()) throw FieldMismatch();
    if (h.is_constant()) throw PreconditionError("inner function of a composition must be nonconstant");
    if (g.is_constant()) return g;

    const std::size_t m = g.degree();
    const Poly& h1 = h.numerator();
    const Poly& h2 = h.denominator();
    std::vector<Poly> pow1{Poly::constant(h.field().one())};
    std::vector<Poly> pow2{Poly::constant(h.field().one())};
    for (std::size_t i = 1; i <= m; ++i) {
        pow1.push_back(pow1.back() * h1);
        pow2.push_back(pow2.back() * h2);
    }
    // Homogenize g1 and g2 to degree m so both share the factor h2^m.
    auto homogenized = [&](const Poly& p) {
        Poly acc(h.field());
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
            if (p.coeff(i).is_zero()) continue;
            acc += p.coeff(i) * (pow1[i] * pow2[m - i]);
        }
        return acc;
    };
    Poly num = homogenized(g.numerator());
    Poly den = homogenized(g.denominator());
    if (den.is_zero()) throw InternalError("composition produced a zero denominator");
    return RatFun::reduce(num, den);
}

std::size_t valency(const RatFun& f, const FieldElement& a) {
    if (f.denominator()(a).is_zero()) throw PreconditionError("valency requested at a pole");
    if (f.is_constant()) throw PreconditionError("valency of a constant is undefined");
    const Poly vanishing = f.numerator() - f(a) * f.denominator();
    const Poly shifted = vanishing.taylor_shift(a);
    for (std::size_t i = 1;; ++i) {
        if (!shifted.coeff(i).is_zero()) return i;
    }
}

MobiusUnit::MobiusUnit(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if ((a_ * d_ - b_ * c_).is_zero()) throw PreconditionError("singular Mobius transformation");
}

MobiusUnit MobiusUnit::from(const RatFun& f) {
    if (f.is_zero() || f.degree() != 1) throw PreconditionError("a unit must have degree exactly one");
    const Poly& n = f.numerator();
    const Poly& d = f.denominator();
    return MobiusUnit(n.coeff(1), n.coeff(0), d.coeff(1), d.coeff(0));
}

MobiusUnit MobiusUnit::reciprocal_shift(const FieldElement& a) {
    const Field& k = a.field();
    return MobiusUnit(k.zero(), k.one(), k.one(), -a);
}

MobiusUnit MobiusUnit::inverse() const { return MobiusUnit(d_, -b_, -c_, a_); }

RatFun MobiusUnit::as_ratfun() const {
    const Field& k = a_.field();
    return RatFun::reduce(Poly(k, {b_, a_}), Poly(k, {d_, c_}));
}

FactorPair normalize_right_factor(const RatFun& g, const RatFun& h) {
    if (h.is_constant()) throw PreconditionError("right factor must be nonconstant");
    if (h.ord_infinity() < 0) return {g, h};
    const DivMod qr = poly_divmod(h.numerator(), h.denominator());
    const FieldElement a = qr.quotient.coeff(0);
    const MobiusUnit mu = MobiusUnit::reciprocal_shift(a);
    return {rat_compose(g, mu.inverse().as_ratfun()), rat_compose(mu.as_ratfun(), h)};
}

FactorPair canonical_factor_pair(const RatFun& g, const RatFun& h) {
    FactorPair pair = normalize_right_factor(g, h);
    const Poly& h1 = pair.inner.numerator();
    const Poly& h2 = pair.inner.denominator();
    const FieldElement alpha = h1.leading();
    const FieldElement beta = h1.coeff(h2.deg()) / alpha;
    if (alpha.is_one() && beta.is_zero()) return pair;
    // H' = H / alpha - beta, G' = G(alpha*y + alpha*beta).
    const Field& k = alpha.field();
    const RatFun affine(Poly(k, {alpha * beta, alpha}));
    const RatFun shifted_inner = RatFun::reduce(h1 * alpha.inverse() - beta * h2, h2);
    return {rat_compose(pair.outer, affine), shifted_inner};
}

} // namespace ratprime
