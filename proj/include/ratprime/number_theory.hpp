#pragma once

#include <cstddef>

namespace ratprime {

/// Smallest prime factor of n >= 2, by trial division.
std::size_t smallest_prime_factor(std::size_t n);

/// Largest divisor of n strictly below n: n / smallest_prime_factor(n).
/// Throws PreconditionError for n < 2.
std::size_t greatest_proper_divisor(std::size_t n);

} // namespace ratprime
