#pragma once

#include <cstddef>
#include <vector>

#include "ratprime/poly.hpp"

namespace ratprime {

struct SquarefreePart {
    Poly factor;  // monic, squarefree, nonconstant
    std::size_t multiplicity;
};

/// constant * prod factor^multiplicity, one part per distinct multiplicity,
/// parts sorted by multiplicity and pairwise coprime.
struct SquarefreeFactorization {
    FieldElement constant;
    std::vector<SquarefreePart> parts;

    Poly expand() const;
    /// The part with the given multiplicity, or the constant 1.
    Poly part_with_multiplicity(std::size_t multiplicity) const;
};

/// Yun's algorithm, with p-th root extraction in characteristic p.
/// Throws PreconditionError for the zero polynomial.
SquarefreeFactorization squarefree_decompose(const Poly& f);

} // namespace ratprime
