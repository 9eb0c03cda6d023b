#include "ratprime/number_theory.hpp"

#include "ratprime/errors.hpp"

namespace ratprime {

std::size_t smallest_prime_factor(std::size_t n) {
    if (n < 2) throw PreconditionError("smallest prime factor needs n >= 2");
    for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return d;
    }
    return n;
}

std::size_t greatest_proper_divisor(std::size_t n) {
    if (n < 2) throw PreconditionError("greatest proper divisor needs n >= 2");
    return n / smallest_prime_factor(n);
}

} // namespace ratprime
