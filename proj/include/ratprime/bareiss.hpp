#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ratprime/field.hpp"
#include "ratprime/poly.hpp"

namespace ratprime {

inline FieldElement exact_divide(const FieldElement& a, const FieldElement& b) { return a / b; }
inline Poly exact_divide(const Poly& a, const Poly& b) { return exact_quotient(a, b); }

template <class R>
concept ExactRingElement = requires(const R& a, const R& b) {
    { a.is_zero() } -> std::convertible_to<bool>;
    { a * b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { exact_divide(a, b) } -> std::convertible_to<R>;
};

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Fraction-free Gaussian elimination. Every intermediate entry is a minor
/// of the input, so all divisions are exact in an integral domain.
template <ExactRingElement R>
R bareiss_determinant(Matrix<R> m, const R& one, const R& zero) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    R previous = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return zero;
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
            }
            m[i][k] = zero;
        }
        previous = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? zero - det : det;
}

/// Sylvester matrix of f (degree n) and g (degree m), coefficients given in
/// ascending order: m shifted rows of f followed by n shifted rows of g.
template <class R>
Matrix<R> sylvester_matrix(std::span<const R> f, std::span<const R> g, const R& zero) {
    const std::size_t n = f.size() - 1;
    const std::size_t m = g.size() - 1;
    Matrix<R> s(n + m, std::vector<R>(n + m, zero));
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t k = 0; k <= n; ++k) s[row][row + k] = f[n - k];
    }
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t k = 0; k <= m; ++k) s[m + row][row + k] = g[m - k];
    }
    return s;
}

} // namespace ratprime
