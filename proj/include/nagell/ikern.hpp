#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nagell {

// Exact signed integer of unbounded magnitude. Every quantity in the solver
// (d, N, u, v, x, y, k, 2^n) is carried in this type.
using Int = boost::multiprecision::cpp_int;

// floor(sqrt(n)); n must be non-negative.
Int isqrt(const Int& n);

// The exact square root of n, or nullopt when n is not a perfect square
// (negative n is never a square).
std::optional<Int> as_square(const Int& n);

// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
// Throws std::invalid_argument when p is not an odd prime.
int legendre(const Int& a, const Int& p);

// Deterministic trial division.
bool is_prime(const Int& n);

// Sieve of Eratosthenes; ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

Int pow2(unsigned exponent);

// Exponent of the largest power of two dividing n; n must be nonzero.
unsigned two_adic_valuation(const Int& n);

// Non-negative remainder of a modulo m (m > 0).
Int mod_floor(const Int& a, const Int& m);

std::string to_string(const Int& value);

// Parses an optionally signed decimal integer; throws std::invalid_argument
// on anything else.
Int parse_int(const std::string& text);

}  // namespace nagell
