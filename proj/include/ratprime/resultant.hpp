#pragma once

#include <cstddef>
#include <vector>

#include "ratprime/poly.hpp"
#include "ratprime/ratfun.hpp"
#include "ratprime/squarefree.hpp"

namespace ratprime {

/// A polynomial in the auxiliary variable t. Shares Poly's representation;
/// print with to_string('t').
using TPoly = Poly;

/// A polynomial in x whose coefficients are polynomials in t, such as
/// f(x) - t.
class XTPoly {
public:
    /// Trailing zero coefficients are dropped; throws PreconditionError if
    /// nothing remains.
    XTPoly(Field field, std::vector<TPoly> coefficients);
    /// Embeds a polynomial in x with coefficients constant in t.
    static XTPoly from_x(const Poly& f);
    /// numerator(x) - t * denominator(x).
    static XTPoly minus_t_times(const Poly& numerator, const Poly& denominator);

    const Field& field() const noexcept { return field_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<TPoly>& coefficients() const noexcept { return coeffs_; }

private:
    Field field_;
    std::vector<TPoly> coeffs_;
};

/// Determinant of the Sylvester matrix. f and g must be nonzero and not both
/// constant.
FieldElement sylvester_resultant(const Poly& f, const Poly& g);
/// Res_x(F, G) with polynomial entries, computed fraction-free.
TPoly resultant_in_t(const XTPoly& f, const XTPoly& g);

/// (-1)^(n(n-1)/2) / a_n * Res(f, f'). Throws for constant f and
/// DegenerateDerivative when f' = 0.
FieldElement discriminant(const Poly& f);

/// D[f - t]. Requires deg f >= 2; throws DegenerateDerivative when f' = 0.
TPoly disc_in_t(const Poly& f);

/// Res_x(N(x, t), M(x)) where N is the numerator of f(x) - t and M the reduced
/// numerator of f'. Throws DegenerateDerivative when f' = 0.
TPoly rat_resultant_in_t(const RatFun& f);

struct CriticalValueReport {
    TPoly disc_t;
    SquarefreeFactorization squarefree;
    /// Degree of the multiplicity-one part: simple critical values over the
    /// algebraic closure.
    std::size_t simple_count = 0;
    /// simple_count without t = 0.
    std::size_t nonzero_simple_count = 0;
    /// Multiplicity of t = 0 as a root.
    std::size_t zero_multiplicity = 0;
};

CriticalValueReport critical_values(const TPoly& disc);

/// D[(g o h) - t] = constant * A^k * B with A = D[g - t],
/// B = Res_x(g(h(x)) - t, h'(x)), k = deg h.
struct CompositeDiscriminant {
    FieldElement constant;
    TPoly outer_disc;  // A
    TPoly inner_res;   // B
    std::size_t k = 0;
};

/// Computes the factorization with the closed-form constant and verifies the
/// identity exactly; throws InternalError if it fails.
CompositeDiscriminant factor_composite_discriminant(const Poly& g, const Poly& h);

struct RatStructure {
    TPoly resultant;
    std::size_t ell = 0;
    /// gcd(deg f, ord f) = 1 and ord f > d, which forces ell > 0.
    bool side_condition = false;
    bool consistent = true;
};

/// Order of t in rat_resultant_in_t(g o h) and the positivity check on it.
RatStructure rat_structure_check(const RatFun& g, const RatFun& h);

} // namespace ratprime
