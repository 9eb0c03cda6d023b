#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ratprime/parser.hpp"
#include "ratprime/poly.hpp"
#include "ratprime/ratfun.hpp"

namespace testing {

using namespace ratprime;

inline const Field QQ = Field::rationals();

inline RatFun R(const std::string& text, const Field& field = QQ) { return parse_expression(text, field); }

inline Poly P(const std::string& text, const Field& field = QQ) {
    const RatFun f = parse_expression(text, field);
    return f.numerator() * f.denominator().leading().inverse();
}

inline Poly T(const std::string& text, const Field& field = QQ) {
    std::string s = text;
    for (char& c : s) {
        if (c == 't') c = 'x';
    }
    return P(s, field);
}

// Seeded generators; every property suite is reproducible.
class Rng {
public:
    explicit Rng(std::uint32_t seed) : engine_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

    FieldElement element(const Field& field, long bound = 5) {
        if (field.is_prime_field()) return field.from_int(integer(0, static_cast<long>(field.characteristic()) - 1));
        return field.from_int(integer(-bound, bound));
    }

    FieldElement nonzero(const Field& field, long bound = 5) {
        for (;;) {
            FieldElement e = element(field, bound);
            if (!e.is_zero()) return e;
        }
    }

    Poly poly(const Field& field, std::size_t degree, long bound = 5) {
        std::vector<FieldElement> c;
        for (std::size_t i = 0; i < degree; ++i) c.push_back(element(field, bound));
        c.push_back(nonzero(field, bound));
        return Poly(field, c);
    }

    Poly poly_between(const Field& field, std::size_t lo, std::size_t hi, long bound = 5) {
        return poly(field, static_cast<std::size_t>(integer(static_cast<long>(lo), static_cast<long>(hi))), bound);
    }

    // A reduced rational function with the given component degrees.
    RatFun ratfun(const Field& field, std::size_t num_deg, std::size_t den_deg, long bound = 5) {
        for (;;) {
            const Poly n = poly(field, num_deg, bound);
            const Poly d = poly(field, den_deg, bound);
            if (poly_gcd(n, d).is_constant()) return RatFun::reduce(n, d);
        }
    }

    std::mt19937& engine() { return engine_; }

private:
    std::mt19937 engine_;
};

// Cofactor expansion along the first row. Only for small matrices.
inline FieldElement leibniz_det(const std::vector<std::vector<FieldElement>>& m, const Field& field) {
    const std::size_t n = m.size();
    if (n == 0) return field.one();
    if (n == 1) return m[0][0];
    FieldElement total = field.zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<FieldElement>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<FieldElement> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[i][c]);
            }
            minor.push_back(row);
        }
        const FieldElement term = m[0][j] * leibniz_det(minor, field);
        total = (j % 2 == 0) ? total + term : total - term;
    }
    return total;
}

// Resultant from its defining Sylvester layout, evaluated by cofactors.
inline FieldElement cofactor_resultant(const Poly& f, const Poly& g) {
    const Field& field = f.field();
    const std::size_t n = f.deg();
    const std::size_t m = g.deg();
    const std::size_t size = n + m;
    std::vector<std::vector<FieldElement>> rows(size, std::vector<FieldElement>(size, field.zero()));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i <= n; ++i) rows[r][r + i] = f.coeff(n - i);
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) rows[m + r][r + i] = g.coeff(m - i);
    }
    return leibniz_det(rows, field);
}

// a_n^deg g * prod g(root) for f = a_n * prod (x - root).
inline FieldElement root_product_resultant(const FieldElement& lead, const std::vector<FieldElement>& roots,
                                           const Poly& g) {
    FieldElement acc = lead.pow(g.deg());
    for (const auto& r : roots) acc *= g(r);
    return acc;
}

inline Poly from_roots(const FieldElement& lead, const std::vector<FieldElement>& roots) {
    const Field& field = lead.field();
    Poly acc = Poly::constant(lead);
    for (const auto& r : roots) acc *= Poly(field, {-r, field.one()});
    return acc;
}

// Every (g, h) with deg g * deg h = deg f, deg g, deg h >= 2, over a small
// F_p, compared against f by composition. No normalization, no digit test.
inline bool brute_force_composite(const Poly& f) {
    const Field& field = f.field();
    const std::uint64_t p = field.characteristic();
    const std::size_t n = f.deg();
    auto all_polys = [&](std::size_t degree) {
        std::vector<Poly> out;
        std::size_t count = 1;
        for (std::size_t i = 0; i <= degree; ++i) count *= p;
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::vector<FieldElement> c;
            std::size_t rest = idx;
            for (std::size_t i = 0; i <= degree; ++i) {
                c.push_back(field.from_int(static_cast<long>(rest % p)));
                rest /= p;
            }
            if (c.back().is_zero()) continue;
            out.emplace_back(field, c);
        }
        return out;
    };
    for (std::size_t k = 2; 2 * k <= n; ++k) {
        if (n % k != 0) continue;
        // h monic with h(0) = 0 is enough on the right after a unit, but the
        // left side is enumerated in full.
        for (const Poly& h : all_polys(k)) {
            if (!h.leading().is_one() || !h.coeff(0).is_zero()) continue;
            for (const Poly& g : all_polys(n / k)) {
                if (poly_compose(g, h) == f) return true;
            }
        }
    }
    return false;
}

} // namespace testing
