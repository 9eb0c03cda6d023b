#include "ratprime/poly.hpp"

#include <algorithm>
#include <utility>

#include "ratprime/errors.hpp"

namespace ratprime {

std::size_t Degree::value() const {
    if (is_minus_infinity()) throw PreconditionError("degree of the zero polynomial");
    return static_cast<std::size_t>(value_);
}

Poly::Poly(Field field, std::vector<FieldElement> coefficients) : field_(field), coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_) {
        if (c.field() != field_) throw FieldMismatch();
    }
    trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::x(const Field& field) { return monomial(field.one(), 1); }

Poly Poly::monomial(const FieldElement& c, std::size_t power) {
    std::vector<FieldElement> coeffs(power + 1, c.field().zero());
    coeffs[power] = c;
    return Poly(c.field(), std::move(coeffs));
}

Poly Poly::from_ints(const Field& field, std::initializer_list<long> ascending) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(ascending.size());
    for (long c : ascending) coeffs.push_back(field.from_int(c));
    return Poly(field, std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_same_field(const Poly& other) const {
    if (field_ != other.field_) throw FieldMismatch();
}

Degree Poly::degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
}

std::size_t Poly::deg() const { return degree().value(); }

FieldElement Poly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : field_.zero();
}

const FieldElement& Poly::leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FieldElement Poly::operator()(const FieldElement& at) const {
    if (at.field() != field_) throw FieldMismatch();
    FieldElement acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(field_);
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.push_back(coeffs_[i] * field_.from_int(static_cast<long>(i)));
    }
    return Poly(field_, std::move(out));
}

Poly Poly::hasse_derivative(std::size_t order) const {
    if (order >= coeffs_.size()) return Poly(field_);
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size() - order);
    mpz_class binom;
    for (std::size_t n = order; n < coeffs_.size(); ++n) {
        mpz_bin_uiui(binom.get_mpz_t(), n, order);
        out.push_back(coeffs_[n] * field_.from_integer(binom));
    }
    return Poly(field_, std::move(out));
}

Poly Poly::taylor_shift(const FieldElement& shift) const {
    if (shift.field() != field_) throw FieldMismatch();
    // Horner in the ring: ((a_n)(x+s) + a_{n-1})(x+s) + ...
    const Poly linear(field_, {shift, field_.one()});
    Poly acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * linear + constant(*it);
    }
    return acc;
}

Poly Poly::monic() const {
    if (coeffs_.empty()) return *this;
    return *this * leading().inverse();
}

Poly Poly::pow(std::size_t exponent) const {
    Poly result = constant(field_.one());
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.field_, std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const FieldElement& c) {
    if (c.field() != field_) throw FieldMismatch();
    for (auto& coeff : coeffs_) coeff *= c;
    trim();
    return *this;
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

std::string Poly::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const FieldElement& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool negative = field_.is_rationals() && sgn(c.rational()) < 0;
        FieldElement magnitude = negative ? -c : c;
        if (negative) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        std::string power;
        if (k >= 1) power += var;
        if (k >= 2) power += "^" + std::to_string(k);
        if (k == 0) {
            out += magnitude.to_string();
        } else if (magnitude.is_one()) {
            out += power;
        } else {
            out += magnitude.to_string() + "*" + power;
        }
    }
    return out;
}

DivMod poly_divmod(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw FieldMismatch();
    if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
    const Field& field = f.field();
    if (f.is_zero() || f.deg() < g.deg()) return {Poly(field), f};

    std::vector<FieldElement> rem(f.coefficients().begin(), f.coefficients().end());
    const std::size_t dg = g.deg();
    const FieldElement inv_lead = g.leading().inverse();
    std::vector<FieldElement> quot(rem.size() - dg, field.zero());
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k].is_zero()) continue;
        FieldElement q = rem[k] * inv_lead;
        quot[k - dg] = q;
        for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * g.coeff(j);
    }
    rem.resize(dg);
    return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly exact_quotient(const Poly& f, const Poly& g) {
    DivMod qr = poly_divmod(f, g);
    if (!qr.remainder.is_zero()) throw InternalError("exact division left a remainder");
    return std::move(qr.quotient);
}

namespace {

using IntPoly = std::vector<mpz_class>;

void trim_int(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class content(const IntPoly& p) {
    mpz_class c = 0;
    for (const auto& a : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    return c;
}

void make_primitive(IntPoly& p) {
    mpz_class c = content(p);
    if (c == 0 || c == 1) return;
    for (auto& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
}

// Scale a rational polynomial to a primitive integer polynomial.
IntPoly clear_denominators(const Poly& f) {
    mpz_class lcm = 1;
    for (const auto& c : f.coefficients()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    }
    IntPoly out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) {
        mpq_class scaled = c.rational() * lcm;
        out.push_back(scaled.get_num());
    }
    make_primitive(out);
    return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b, over the integers.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        const mpz_class la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& coeff : a) coeff *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim_int(a);
    }
    return a;
}

Poly gcd_rationals(const Poly& f, const Poly& g) {
    IntPoly a = clear_denominators(f);
    IntPoly b = clear_denominators(g);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = pseudo_remainder(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<FieldElement> coeffs;
    coeffs.reserve(a.size());
    for (const auto& c : a) coeffs.push_back(f.field().from_integer(c));
    return Poly(f.field(), std::move(coeffs)).monic();
}

} // namespace

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw FieldMismatch();
    if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd of two zero polynomials");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.field().is_rationals()) return gcd_rationals(f, g);
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly poly_compose(const Poly& g, const Poly& h) {
    if (g.field() != h.field()) throw FieldMismatch();
    Poly acc(g.field());
    const auto coeffs = g.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * h + Poly::constant(*it);
    }
    return acc;
}

std::size_t valency(const Poly& f, const FieldElement& a) {
    if (f.is_constant()) throw PreconditionError("valency of a constant is undefined");
    const Poly shifted = f.taylor_shift(a);
    for (std::size_t i = 1;; ++i) {
        if (!shifted.coeff(i).is_zero()) return i;
    }
}

} // namespace ratprime
