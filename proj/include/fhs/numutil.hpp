#pragma once

#include <cstdint>
#include <vector>

namespace fhs {

bool is_prime(long long n);

// Distinct prime factors, ascending. Trial division; inputs stay desk-scale.
std::vector<long long> prime_factors(long long n);

// base^exp, saturating at cap + 1 so budget checks never overflow.
long long ipow_capped(long long base, int exp, long long cap);

// Floor division for possibly negative numerators.
long long floor_div(long long num, long long den);

}  // namespace fhs
