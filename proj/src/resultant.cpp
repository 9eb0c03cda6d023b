#include "ratprime/resultant.hpp"

#include <numeric>
#include <utility>

#include "ratprime/bareiss.hpp"
#include "ratprime/errors.hpp"
#include "ratprime/number_theory.hpp"

namespace ratprime {

namespace {

FieldElement sign_power(const Field& field, long long exponent) {
    return (exponent % 2 == 0) ? field.one() : -field.one();
}

std::size_t order_at_zero(const TPoly& p) {
    std::size_t i = 0;
    while (p.coeff(i).is_zero()) ++i;
    return i;
}

} // namespace

XTPoly::XTPoly(Field field, std::vector<TPoly> coefficients) : field_(field), coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_) {
        if (c.field() != field_) throw FieldMismatch();
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) throw PreconditionError("zero bivariate polynomial");
}

XTPoly XTPoly::from_x(const Poly& f) {
    std::vector<TPoly> coeffs;
    for (const auto& c : f.coefficients()) coeffs.push_back(Poly::constant(c));
    return XTPoly(f.field(), std::move(coeffs));
}

XTPoly XTPoly::minus_t_times(const Poly& numerator, const Poly& denominator) {
    const Field& k = numerator.field();
    const std::size_t size = std::max(numerator.coefficients().size(), denominator.coefficients().size());
    std::vector<TPoly> coeffs;
    coeffs.reserve(size);
    for (std::size_t i = 0; i < size; ++i) coeffs.push_back(TPoly(k, {numerator.coeff(i), -denominator.coeff(i)}));
    return XTPoly(k, std::move(coeffs));
}

FieldElement sylvester_resultant(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw FieldMismatch();
    if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant with the zero polynomial");
    if (f.is_constant() && g.is_constant()) throw PreconditionError("resultant of two constants");
    const Field& k = f.field();
    auto s = sylvester_matrix<FieldElement>(f.coefficients(), g.coefficients(), k.zero());
    return bareiss_determinant(std::move(s), k.one(), k.zero());
}

TPoly resultant_in_t(const XTPoly& f, const XTPoly& g) {
    if (f.field() != g.field()) throw FieldMismatch();
    if (f.degree() == 0 && g.degree() == 0) throw PreconditionError("resultant of two constants in x");
    const Field& k = f.field();
    const TPoly zero(k);
    const TPoly one = Poly::constant(k.one());
    auto s = sylvester_matrix<TPoly>(f.coefficients(), g.coefficients(), zero);
    return bareiss_determinant(std::move(s), one, zero);
}

FieldElement discriminant(const Poly& f) {
    if (f.is_constant()) throw PreconditionError("discriminant of a constant");
    const Poly deriv = f.derivative();
    if (deriv.is_zero()) throw DegenerateDerivative();
    const long long n = static_cast<long long>(f.deg());
    return sign_power(f.field(), n * (n - 1) / 2) / f.leading() * sylvester_resultant(f, deriv);
}

TPoly disc_in_t(const Poly& f) {
    if (f.is_zero() || f.deg() < 2) throw PreconditionError("disc_in_t needs degree at least 2");
    const Poly deriv = f.derivative();
    if (deriv.is_zero()) throw DegenerateDerivative();
    const Field& k = f.field();
    const long long n = static_cast<long long>(f.deg());
    const XTPoly f_minus_t = XTPoly::minus_t_times(f, Poly::constant(k.one()));
    const TPoly res = resultant_in_t(f_minus_t, XTPoly::from_x(deriv));
    return res * (sign_power(k, n * (n - 1) / 2) / f.leading());
}

TPoly rat_resultant_in_t(const RatFun& f) {
    if (f.is_constant()) throw PreconditionError("rat_resultant_in_t needs a nonconstant function");
    const RatFun deriv = rat_derivative(f);
    if (deriv.is_zero()) throw DegenerateDerivative();
    const XTPoly n = XTPoly::minus_t_times(f.numerator(), f.denominator());
    return resultant_in_t(n, XTPoly::from_x(deriv.numerator()));
}

CriticalValueReport critical_values(const TPoly& disc) {
    if (disc.is_zero()) throw PreconditionError("critical values of a zero discriminant");
    CriticalValueReport report{disc, squarefree_decompose(disc), 0, 0, 0};
    const Poly simple = report.squarefree.part_with_multiplicity(1);
    report.simple_count = simple.deg();
    report.zero_multiplicity = order_at_zero(disc);
    report.nonzero_simple_count = report.simple_count - (report.zero_multiplicity == 1 ? 1 : 0);
    return report;
}

CompositeDiscriminant factor_composite_discriminant(const Poly& g, const Poly& h) {
    if (g.field() != h.field()) throw FieldMismatch();
    if (g.is_zero() || h.is_zero() || g.deg() < 2 || h.deg() < 2) {
        throw PreconditionError("factor_composite_discriminant needs deg g >= 2 and deg h >= 2");
    }
    const Poly g_prime = g.derivative();
    const Poly h_prime = h.derivative();
    if (g_prime.is_zero() || h_prime.is_zero()) throw DegenerateDerivative();

    const Field& k = g.field();
    const Poly f = poly_compose(g, h);
    const long long n = static_cast<long long>(f.deg());
    const long long deg_g = static_cast<long long>(g.deg());
    const long long deg_h = static_cast<long long>(h.deg());
    const long long deg_g_prime = static_cast<long long>(g_prime.deg());

    const long long exponent = n * (n - 1) / 2 - n * (deg_g - 1) / 2 + n * deg_g_prime * (deg_h - 1);
    const FieldElement constant = sign_power(k, exponent) * g.leading().pow(static_cast<std::uint64_t>(deg_h)) *
                                  h.leading().pow(static_cast<std::uint64_t>(n * deg_g_prime)) / f.leading();

    CompositeDiscriminant out{constant, disc_in_t(g),
                         resultant_in_t(XTPoly::minus_t_times(f, Poly::constant(k.one())), XTPoly::from_x(h_prime)),
                         static_cast<std::size_t>(deg_h)};
    const TPoly lhs = disc_in_t(f);
    const TPoly rhs = out.constant * (out.outer_disc.pow(out.k) * out.inner_res);
    if (lhs != rhs) throw InternalError("discriminant factorization identity failed for " + g.to_string() + " o " + h.to_string());
    return out;
}

RatStructure rat_structure_check(const RatFun& g, const RatFun& h) {
    if (g.is_zero() || h.is_zero() || g.degree() < 2 || h.degree() < 2) {
        throw PreconditionError("rat_structure_check needs deg g >= 2 and deg h >= 2");
    }
    const RatFun f = rat_compose(g, h);
    RatStructure out;
    out.resultant = rat_resultant_in_t(f);
    out.ell = order_at_zero(out.resultant);
    const long n = static_cast<long>(f.degree());
    const long ord = f.ord_infinity();
    const long d = static_cast<long>(greatest_proper_divisor(static_cast<std::size_t>(n)));
    out.side_condition = std::gcd(n, ord) == 1 && ord > d;
    out.consistent = !out.side_condition || out.ell > 0;
    return out;
}

} // namespace ratprime
