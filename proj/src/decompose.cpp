#include "ratprime/decompose.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "ratprime/errors.hpp"
#include "ratprime/squarefree.hpp"

namespace ratprime {

namespace {

std::vector<std::size_t> admissible_right_degrees(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t k = 2; 2 * k <= n; ++k) {
        if (n % k == 0) out.push_back(k);
    }
    return out;
}

// Rational search order: most balanced split first, ties to the smaller k.
std::vector<std::size_t> balanced_right_degrees(std::size_t n) {
    std::vector<std::size_t> out = admissible_right_degrees(n);
    auto spread = [n](std::size_t k) { return k > n / k ? k - n / k : n / k - k; };
    std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return spread(a) < spread(b); });
    return out;
}

// Base-p digits of index, least significant first.
std::vector<FieldElement> digits_of(std::size_t index, std::size_t length, const Field& field) {
    const std::size_t p = field.characteristic();
    std::vector<FieldElement> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(field.from_int(static_cast<long>(index % p)));
        index /= p;
    }
    return out;
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (out > cap / base) return cap + 1;
        out *= base;
    }
    return out;
}

// A nonzero vector v with a * v = 0, if one exists.
std::optional<std::vector<FieldElement>> nullspace_vector(std::vector<std::vector<FieldElement>> a, std::size_t cols,
                                                          const Field& field) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    std::size_t free_col = cols;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pivot = row;
        while (pivot < a.size() && a[pivot][col].is_zero()) ++pivot;
        if (pivot == a.size()) {
            if (free_col == cols) free_col = col;
            continue;
        }
        std::swap(a[row], a[pivot]);
        const FieldElement inv = a[row][col].inverse();
        for (auto& entry : a[row]) entry *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const FieldElement factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    if (free_col == cols) return std::nullopt;
    std::vector<FieldElement> v(cols, field.zero());
    v[free_col] = field.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free_col];
    return v;
}

// Monic h of degree k with zero constant term whose m-th power matches the
// top coefficients of monic F. Needs m invertible in the field.
Poly approximate_root(const Poly& f, std::size_t k) {
    const Field& field = f.field();
    const std::size_t n = f.deg();
    const std::size_t m = n / k;
    const Poly monic_f = f.monic();
    const FieldElement inv_m = field.from_int(static_cast<long>(m)).inverse();
    Poly h = Poly::monomial(field.one(), k);
    for (std::size_t j = 1; j < k; ++j) {
        const FieldElement current = h.pow(m).coeff(n - j);
        h += Poly::monomial((monic_f.coeff(n - j) - current) * inv_m, k - j);
    }
    return h;
}

FactorPair canonical(const Poly& g, const Poly& h) { return canonical_factor_pair(RatFun(g), RatFun(h)); }

void merge_status(SearchStatus& into, SearchStatus next) {
    if (next == SearchStatus::BudgetExhausted) into = SearchStatus::BudgetExhausted;
}

} // namespace

void OracleBudget::validate() const {
    if (max_field_size == 0 || max_right_degree == 0 || candidate_cap == 0) {
        throw PreconditionError("oracle budget limits must be positive");
    }
}

std::vector<Poly> h_adic_expansion(const Poly& f, const Poly& h) {
    if (h.is_constant()) throw PreconditionError("h-adic expansion needs a nonconstant h");
    if (f.field() != h.field()) throw FieldMismatch();
    std::vector<Poly> digits;
    Poly rest = f;
    while (!rest.is_zero()) {
        DivMod qr = poly_divmod(rest, h);
        digits.push_back(std::move(qr.remainder));
        rest = std::move(qr.quotient);
    }
    return digits;
}

std::optional<Poly> poly_right_factor_test(const Poly& f, const Poly& h) {
    if (h.is_zero() || h.deg() < 2) throw PreconditionError("right factor must have degree at least 2");
    if (f.is_zero() || f.deg() % h.deg() != 0) throw PreconditionError("deg h must divide deg f");
    std::vector<FieldElement> outer;
    for (const Poly& digit : h_adic_expansion(f, h)) {
        if (!digit.is_constant()) return std::nullopt;
        outer.push_back(digit.coeff(0));
    }
    Poly g(f.field(), std::move(outer));
    if (poly_compose(g, h) != f) throw InternalError("h-adic digits failed to recompose");
    return g;
}

SearchResult<PolyPair> poly_decompose(const Poly& f, const OracleBudget& budget) {
    budget.validate();
    if (f.is_zero() || f.deg() < 2) throw PreconditionError("decomposition needs degree at least 2");
    const Field& field = f.field();
    SearchResult<PolyPair> result;

    for (std::size_t k : admissible_right_degrees(f.deg())) {
        if (k > budget.max_right_degree) {
            result.status = SearchStatus::BudgetExhausted;
            continue;
        }
        if (field.is_rationals()) {
            if (result.candidates >= budget.candidate_cap) return {SearchStatus::BudgetExhausted, std::nullopt, result.candidates};
            ++result.candidates;
            const Poly h = approximate_root(f, k);
            if (auto g = poly_right_factor_test(f, h)) {
                return {SearchStatus::Found, PolyPair{*g, h}, result.candidates};
            }
            continue;
        }
        if (field.characteristic() > budget.max_field_size) {
            return {SearchStatus::BudgetExhausted, std::nullopt, result.candidates};
        }
        const std::size_t count = checked_power(field.characteristic(), k - 1, budget.candidate_cap);
        for (std::size_t index = 0; index < count; ++index) {
            if (result.candidates >= budget.candidate_cap) return {SearchStatus::BudgetExhausted, std::nullopt, result.candidates};
            ++result.candidates;
            std::vector<FieldElement> coeffs = digits_of(index, k - 1, field);
            coeffs.insert(coeffs.begin(), field.zero());
            coeffs.push_back(field.one());
            const Poly h(field, std::move(coeffs));
            if (auto g = poly_right_factor_test(f, h)) {
                return {SearchStatus::Found, PolyPair{*g, h}, result.candidates};
            }
        }
    }
    return result;
}

std::optional<RatFun> solve_left_factor(const RatFun& f, const RatFun& h) {
    if (f.field() != h.field()) throw FieldMismatch();
    if (h.is_constant() || f.is_constant()) throw PreconditionError("solve_left_factor needs nonconstant inputs");
    const std::size_t k = h.degree();
    if (f.degree() % k != 0) return std::nullopt;
    const std::size_t m = f.degree() / k;
    const Field& field = f.field();

    // f1 * Q(h1, h2) - f2 * P(h1, h2) = 0 with P, Q homogenized to degree m.
    std::vector<Poly> basis;
    Poly power1 = Poly::constant(field.one());
    std::vector<Poly> pow2{Poly::constant(field.one())};
    for (std::size_t i = 1; i <= m; ++i) pow2.push_back(pow2.back() * h.denominator());
    for (std::size_t i = 0; i <= m; ++i) {
        basis.push_back(power1 * pow2[m - i]);
        power1 *= h.numerator();
    }
    std::vector<Poly> columns;
    for (const Poly& b : basis) columns.push_back(-(f.denominator() * b));
    for (const Poly& b : basis) columns.push_back(f.numerator() * b);

    std::size_t rows = 0;
    for (const Poly& c : columns) {
        if (!c.is_zero()) rows = std::max(rows, c.deg() + 1);
    }
    std::vector<std::vector<FieldElement>> system(rows, std::vector<FieldElement>(columns.size(), field.zero()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (std::size_t i = 0; i < rows; ++i) system[i][j] = columns[j].coeff(i);
    }
    auto solution = nullspace_vector(std::move(system), columns.size(), field);
    if (!solution) return std::nullopt;

    Poly p(field, std::vector<FieldElement>(solution->begin(), solution->begin() + static_cast<long>(m + 1)));
    Poly q(field, std::vector<FieldElement>(solution->begin() + static_cast<long>(m + 1), solution->end()));
    if (q.is_zero()) return std::nullopt;
    RatFun g = RatFun::reduce(p, q);
    if (g.is_constant() || g.degree() != m || rat_compose(g, h) != f) return std::nullopt;
    return g;
}

SearchResult<FactorPair> rat_decompose(const RatFun& f, std::size_t k, const OracleBudget& budget) {
    budget.validate();
    const Field& field = f.field();
    if (!field.is_prime_field()) throw PreconditionError("rat_decompose enumerates over prime fields only");
    if (f.is_constant()) throw PreconditionError("rat_decompose needs a nonconstant function");
    const std::size_t n = f.degree();
    if (k < 2 || 2 * k > n || n % k != 0) throw PreconditionError("right degree k must divide deg f with 2 <= k <= deg f / 2");

    SearchResult<FactorPair> result;
    const std::size_t p = field.characteristic();
    if (p > budget.max_field_size || k > budget.max_right_degree) {
        result.status = SearchStatus::BudgetExhausted;
        return result;
    }
    for (std::size_t e2 = 0; e2 < k; ++e2) {
        const std::size_t den_count = checked_power(p, e2, budget.candidate_cap);
        const std::size_t num_count = checked_power(p, k - 1, budget.candidate_cap);
        for (std::size_t di = 0; di < den_count; ++di) {
            std::vector<FieldElement> den_coeffs = digits_of(di, e2, field);
            den_coeffs.push_back(field.one());
            const Poly h2(field, std::move(den_coeffs));
            for (std::size_t ni = 0; ni < num_count; ++ni) {
                if (result.candidates >= budget.candidate_cap) {
                    result.status = SearchStatus::BudgetExhausted;
                    return result;
                }
                std::vector<FieldElement> free = digits_of(ni, k - 1, field);
                std::vector<FieldElement> num_coeffs;
                for (std::size_t i = 0, next = 0; i < k; ++i) {
                    num_coeffs.push_back(i == e2 ? field.zero() : free[next++]);
                }
                num_coeffs.push_back(field.one());
                const Poly h1(field, std::move(num_coeffs));
                if (!poly_gcd(h1, h2).is_constant()) continue;
                ++result.candidates;
                const RatFun h = RatFun::reduce(h1, h2);
                if (auto g = solve_left_factor(f, h)) {
                    result.status = SearchStatus::Found;
                    result.witness = canonical_factor_pair(*g, h);
                    return result;
                }
            }
        }
    }
    return result;
}

namespace {

// Refines polys into a pairwise coprime set of monic squarefree pieces.
void add_to_coprime_basis(std::vector<Poly>& basis, const Poly& incoming) {
    std::vector<Poly> work{incoming};
    while (!work.empty()) {
        Poly q = work.back().monic();
        work.pop_back();
        if (q.is_constant()) continue;
        bool split = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Poly g = poly_gcd(q, basis[i]);
            if (g.is_constant()) continue;
            const Poly b = basis[i];
            basis.erase(basis.begin() + static_cast<long>(i));
            work.push_back(g);
            work.push_back(exact_quotient(b, g));
            work.push_back(exact_quotient(q, g));
            split = true;
            break;
        }
        if (!split) basis.push_back(q);
    }
}

} // namespace

SearchResult<FactorPair> rat_decompose_rationals(const RatFun& f, std::size_t k, const OracleBudget& budget) {
    budget.validate();
    const Field& field = f.field();
    if (!field.is_rationals()) throw PreconditionError("rat_decompose_rationals works over Q only");
    if (f.is_constant()) throw PreconditionError("rat_decompose_rationals needs a nonconstant function");
    const std::size_t n = f.degree();
    if (k < 2 || 2 * k > n || n % k != 0) throw PreconditionError("right degree k must divide deg f with 2 <= k <= deg f / 2");

    SearchResult<FactorPair> result;
    result.status = SearchStatus::BudgetExhausted;
    if (k > budget.max_right_degree) return result;

    // Numerators of f - c for c in {infinity, 0, +-1, +-2, +-3}; every fibre
    // of f is a product of fibres h1 - gamma*h2 of the right factor.
    std::vector<Poly> sources{f.denominator(), f.numerator()};
    for (long c : {1L, -1L, 2L, -2L, 3L, -3L}) {
        sources.push_back(f.numerator() - field.from_int(c) * f.denominator());
    }
    std::vector<Poly> basis;
    for (const Poly& s : sources) {
        if (s.is_zero()) continue;
        for (const auto& part : squarefree_decompose(s).parts) add_to_coprime_basis(basis, part.factor);
    }
    std::sort(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) { return a.deg() < b.deg(); });

    // Products of basis pieces of degree at most k, tagged by the pieces used.
    struct Block {
        Poly poly;
        std::vector<bool> uses;
    };
    std::vector<Block> blocks{{Poly::constant(field.one()), std::vector<bool>(basis.size(), false)}};
    std::function<void(std::size_t, Block)> extend = [&](std::size_t start, Block current) {
        for (std::size_t i = start; i < basis.size(); ++i) {
            if (blocks.size() >= budget.candidate_cap) return;
            Block next = current;
            next.uses[i] = true;
            while (next.poly.deg() + basis[i].deg() <= k) {
                next.poly *= basis[i];
                blocks.push_back(next);
                extend(i + 1, next);
            }
        }
    };
    extend(0, blocks.front());

    for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const Block& top = blocks[a];
            const Block& bottom = blocks[b];
            if (top.poly.deg() != k || bottom.poly.deg() > k || (bottom.poly.deg() == k && b <= a)) continue;
            bool disjoint = true;
            for (std::size_t i = 0; i < basis.size() && disjoint; ++i) disjoint = !(top.uses[i] && bottom.uses[i]);
            if (!disjoint) continue;
            if (result.candidates >= budget.candidate_cap) return result;
            ++result.candidates;
            const RatFun h = RatFun::reduce(top.poly, bottom.poly);
            if (auto g = solve_left_factor(f, h)) {
                result.status = SearchStatus::Found;
                result.witness = canonical_factor_pair(*g, h);
                return result;
            }
        }
    }
    return result;
}

SearchResult<FactorPair> decompose(const RatFun& f, const OracleBudget& budget) {
    budget.validate();
    if (f.is_zero() || f.degree() < 2) throw PreconditionError("decomposition needs degree at least 2");
    if (f.is_polynomial()) {
        auto poly = poly_decompose(f.numerator(), budget);
        SearchResult<FactorPair> out{poly.status, std::nullopt, poly.candidates};
        if (poly.witness) out.witness = canonical(poly.witness->outer, poly.witness->inner);
        return out;
    }
    SearchResult<FactorPair> out;
    for (std::size_t k : balanced_right_degrees(f.degree())) {
        OracleBudget remaining = budget;
        if (out.candidates >= budget.candidate_cap) {
            out.status = SearchStatus::BudgetExhausted;
            break;
        }
        remaining.candidate_cap = budget.candidate_cap - out.candidates;
        auto step = f.field().is_rationals() ? rat_decompose_rationals(f, k, remaining) : rat_decompose(f, k, remaining);
        out.candidates += step.candidates;
        if (step.status == SearchStatus::Found) {
            out.status = SearchStatus::Found;
            out.witness = std::move(step.witness);
            return out;
        }
        merge_status(out.status, step.status);
    }
    return out;
}

} // namespace ratprime
