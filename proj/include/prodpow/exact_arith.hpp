#ifndef PRODPOW_EXACT_ARITH_HPP
#define PRODPOW_EXACT_ARITH_HPP

// Exact integer primitives shared by every other module.
//
// Divisibility facts the recovery procedures lean on:
//   * Euclid: gcd(a, b) = 1 and a | b*c  implies  a | c.  (A weaker reading,
//     "a*b | c implies a | c", is trivially true and is not what the
//     recursions need.)
//   * a^n | b^n implies a | b.
// Neither is implemented as a routine; both are exercised by the
// precondition checks in coprime_decomp and power_reduction.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace prodpow {

using Nat = mpz_class;

inline constexpr std::uint64_t kDefaultDivisorGuard = 100'000'000;

struct SupportSplit {
    Nat in_part;   // largest divisor of gamma supported on primes of alpha
    Nat out_part;  // gamma / in_part, coprime to alpha
};

Nat gcd(const Nat& a, const Nat& b);
bool divides(const Nat& a, const Nat& b);
Nat pow(const Nat& base, unsigned long exponent);

// Iterated gcd: in <- in*g, rem <- rem/g, g <- gcd(rem, g) until g = 1.
SupportSplit support_part(const Nat& gamma, const Nat& alpha);

std::optional<Nat> nth_root_exact(const Nat& z, unsigned long n);

// Increasing list of divisors by trial division. Throws GuardExceeded when
// z > guard.
std::vector<Nat> divisors(const Nat& z, std::uint64_t guard = kDefaultDivisorGuard);

// Pairwise coprime elements (> 1, sorted) such that every input is a product
// of powers of them. Built from gcds only.
std::vector<Nat> coprime_base(std::span<const Nat> values);

// Largest e with base^e | value (base > 1).
unsigned long valuation(const Nat& value, const Nat& base);

Nat parse_nat(std::string_view text);
std::string to_string(const Nat& value);

// Throws InvalidArgument naming `what` unless value >= 1.
void require_positive(const Nat& value, const char* what);

} // namespace prodpow

#endif
