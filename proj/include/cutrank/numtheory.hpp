#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Elementary number theory on small integers. Everything here is exact and
// deliberately naive; arguments stay well below 2^31 in this project.

namespace cutrank::nt {

/// Euler totient φ(n). Requires n >= 1.
int totient(int n);

/// Number of positive divisors τ(n). Requires n >= 1.
int divisor_count(int n);

/// All positive divisors of n, ascending. Requires n >= 1.
std::vector<int> divisors(int n);

/// b^e mod m with e >= 0, m >= 1.
long long pow_mod(long long b, long long e, long long m);

/// Multiplicative order of r modulo n. Requires n >= 1 and gcd(r, n) == 1.
int mult_order_mod(int r, int n);

bool is_prime(int n);

/// Prime factorisation as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<int, int>> factorize(int n);

/// Distinct prime divisors, ascending. prime_divisors(1) == {}.
std::vector<int> prime_divisors(int n);

/// Normalise a list of cyclic-factor orders to invariant-factor form:
/// result n1 >= n2 >= ... with n_{i+1} | n_i and the same abelian group
/// C_{a1} x C_{a2} x ... ≅ C_{n1} x C_{n2} x ....  Factors equal to 1 are
/// dropped; an empty result denotes the trivial group.
std::vector<int> invariant_factors(const std::vector<int>& orders);

} // namespace cutrank::nt
