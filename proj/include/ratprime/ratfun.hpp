#pragma once

#include <cstddef>
#include <string>

#include "ratprime/poly.hpp"

namespace ratprime {

/// A rational function f1/f2 in lowest terms with f2 monic. The zero function
/// is 0/1; degree and order at infinity reject it.
class RatFun {
public:
    /// The zero function over Q.
    RatFun() : num_(Field::rationals()), den_(Poly::constant(Field::rationals().one())) {}
    /// A polynomial viewed as a rational function.
    RatFun(Poly polynomial);  // NOLINT(google-explicit-constructor)

    /// Cancels the gcd and scales the denominator monic.
    static RatFun reduce(const Poly& numerator, const Poly& denominator);

    const Field& field() const noexcept { return num_.field(); }
    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    /// max(deg f1, deg f2).
    std::size_t degree() const;
    /// deg f2 - deg f1.
    long ord_infinity() const;

    /// Throws DivisionByZero at a pole.
    FieldElement operator()(const FieldElement& at) const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun pow(std::size_t exponent) const;

    friend bool operator==(const RatFun&, const RatFun&) = default;

    /// Parseable text, e.g. "(x^4+1)/(x^2+1)" or "x^2+1".
    std::string to_string() const;

private:
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

RatFun rat_derivative(const RatFun& f);
/// g(h(x)); h must be nonconstant.
RatFun rat_compose(const RatFun& g, const RatFun& h);

/// Order of vanishing of f(x + a) - f(a) at 0; a must not be a pole.
std::size_t valency(const RatFun& f, const FieldElement& a);

/// A degree-one rational function (a*x + b)/(c*x + d), the units under
/// composition.
class MobiusUnit {
public:
    /// Throws PreconditionError when ad - bc = 0.
    MobiusUnit(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
    /// Throws PreconditionError unless f has degree exactly one.
    static MobiusUnit from(const RatFun& f);
    /// 1/(x - a).
    static MobiusUnit reciprocal_shift(const FieldElement& a);

    MobiusUnit inverse() const;
    RatFun as_ratfun() const;

private:
    FieldElement a_, b_, c_, d_;
};

struct FactorPair {
    RatFun outer;
    RatFun inner;
};

/// Rewrites g o h as G o H with ord_infinity(H) < 0 using the unit
/// mu(x) = 1/(x - a), where h1 = a*h2 + r. Pairs whose inner factor already
/// has negative order at infinity are returned unchanged.
FactorPair normalize_right_factor(const RatFun& g, const RatFun& h);

/// normalize_right_factor followed by an affine change making the inner
/// numerator monic with a zero coefficient at x^(deg of inner denominator).
/// Each decomposition class has exactly one such representative.
FactorPair canonical_factor_pair(const RatFun& g, const RatFun& h);

} // namespace ratprime
