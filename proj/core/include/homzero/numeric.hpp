#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace homzero {

// Exact arithmetic backbone. GMP supplies the representations; mpq_class
// keeps rationals canonical (lowest terms, positive denominator) which the
// rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);

/// True iff q is the square of a rational. q == 0 counts as square.
bool is_square(const Rational& q);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Deterministic primality test for 64-bit range.
bool is_prime(std::uint64_t n);

/// The first `count` primes, ascending.
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace homzero
