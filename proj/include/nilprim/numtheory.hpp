#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nilprim::nt {

bool is_prime(std::uint64_t n);

/// Prime factorisation by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// base^exp, throws InvalidArgument on overflow of 63 bits.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Largest e with 2^e | n (n > 0).
int two_adic_valuation(std::uint64_t n);

/// n with all factors of 2 removed.
std::uint64_t odd_part(std::uint64_t n);

/// q = p^k with p prime, or nullopt.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

}  // namespace nilprim::nt
