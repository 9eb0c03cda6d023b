#include "ratprime/squarefree.hpp"

#include <algorithm>
#include <map>

#include "ratprime/errors.hpp"

namespace ratprime {

namespace {

// f is monic with f' = 0 over F_p, so f(x) = g(x^p) = g(x)^p.
Poly pth_root(const Poly& f) {
    const std::size_t p = f.field().characteristic();
    std::vector<FieldElement> coeffs;
    for (std::size_t i = 0; i * p <= f.deg(); ++i) coeffs.push_back(f.coeff(i * p));
    return Poly(f.field(), std::move(coeffs));
}

// Monic f; accumulates multiplicity * scale -> product of factors.
void decompose_monic(const Poly& f, std::size_t scale, std::map<std::size_t, Poly>& out) {
    if (f.is_constant()) return;
    const Poly one = Poly::constant(f.field().one());
    auto record = [&](const Poly& factor, std::size_t multiplicity) {
        auto [it, inserted] = out.try_emplace(multiplicity * scale, factor);
        if (!inserted) it->second *= factor;
    };

    Poly deriv = f.derivative();
    if (deriv.is_zero()) {
        decompose_monic(pth_root(f), scale * f.field().characteristic(), out);
        return;
    }
    Poly c = poly_gcd(f, deriv);
    Poly w = exact_quotient(f, c);
    std::size_t i = 1;
    while (!w.is_constant()) {
        Poly y = poly_gcd(w, c);
        Poly z = exact_quotient(w, y);
        if (!z.is_constant()) record(z, i);
        ++i;
        w = std::move(y);
        c = exact_quotient(c, w);
    }
    if (!c.is_constant()) {
        // Only reachable in characteristic p: what is left is a p-th power.
        decompose_monic(pth_root(c.monic()), scale * f.field().characteristic(), out);
    }
}

} // namespace

SquarefreeFactorization squarefree_decompose(const Poly& f) {
    if (f.is_zero()) throw PreconditionError("squarefree decomposition of the zero polynomial");
    std::map<std::size_t, Poly> by_multiplicity;
    decompose_monic(f.monic(), 1, by_multiplicity);
    SquarefreeFactorization result{f.leading(), {}};
    for (auto& [multiplicity, factor] : by_multiplicity) {
        result.parts.push_back({factor.monic(), multiplicity});
    }
    return result;
}

Poly SquarefreeFactorization::expand() const {
    Poly acc = Poly::constant(constant);
    for (const auto& part : parts) acc *= part.factor.pow(part.multiplicity);
    return acc;
}

Poly SquarefreeFactorization::part_with_multiplicity(std::size_t multiplicity) const {
    for (const auto& part : parts) {
        if (part.multiplicity == multiplicity) return part.factor;
    }
    return Poly::constant(constant.field().one());
}

} // namespace ratprime
