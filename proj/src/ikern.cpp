#include "nagell/ikern.hpp"

#include <cmath>
#include <stdexcept>

namespace nagell {

namespace {

// Exact floor sqrt on 64-bit values: the double estimate is off by at most a
// few units for inputs near 2^64, so correct it in both directions.
std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

}  // namespace

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return Int(isqrt_u64(static_cast<std::uint64_t>(n)));
  }
  return boost::multiprecision::sqrt(n);
}

std::optional<Int> as_square(const Int& n) {
  if (n < 0) return std::nullopt;
  // Squares mod 64 take only 12 of the 64 residues.
  const auto low = static_cast<unsigned>(static_cast<std::uint64_t>(n & 63));
  constexpr std::uint64_t square_residues_mod64 = 0x0202021202030213ULL;
  if (((square_residues_mod64 >> low) & 1U) == 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

int legendre(const Int& a, const Int& p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("legendre: modulus " + to_string(p) +
                                " is not an odd prime");
  }
  const Int residue = mod_floor(a, p);
  if (residue == 0) return 0;
  const Int e = boost::multiprecision::powm(residue, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return is_prime_u64(static_cast<std::uint64_t>(n));
  }
  if ((n & 1) == 0) return false;
  const Int limit = isqrt(n);
  for (Int f = 3; f <= limit; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

Int pow2(unsigned exponent) {
  Int r = 1;
  r <<= exponent;
  return r;
}

unsigned two_adic_valuation(const Int& n) {
  if (n == 0) throw std::domain_error("2-adic valuation of zero");
  return static_cast<unsigned>(boost::multiprecision::lsb(abs(n)));
}

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

std::string to_string(const Int& value) { return value.str(); }

Int parse_int(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  Int value(text.substr(start));
  return text[0] == '-' ? Int(-value) : value;
}

}  // namespace nagell
