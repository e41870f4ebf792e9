#include "cutrank/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cutrank::nt {

int totient(int n) {
    if (n < 1) throw std::invalid_argument("totient: n must be >= 1");
    int result = n;
    int m = n;
    for (int p = 2; (long long)p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int divisor_count(int n) {
    if (n < 1) throw std::invalid_argument("divisor_count: n must be >= 1");
    int count = 1;
    for (auto [p, e] : factorize(n)) count *= e + 1;
    return count;
}

std::vector<int> divisors(int n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<int> small, large;
    for (int d = 1; (long long)d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long long pow_mod(long long b, long long e, long long m) {
    if (m < 1) throw std::invalid_argument("pow_mod: modulus must be >= 1");
    if (e < 0) throw std::invalid_argument("pow_mod: exponent must be >= 0");
    b %= m;
    if (b < 0) b += m;
    long long result = 1 % m;
    while (e > 0) {
        if (e & 1) result = result * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return result;
}

int mult_order_mod(int r, int n) {
    if (n < 1) throw std::invalid_argument("mult_order_mod: n must be >= 1");
    int rr = ((r % n) + n) % n;
    if (std::gcd(rr, n) != 1) throw std::invalid_argument("mult_order_mod: gcd(r, n) != 1");
    // order divides φ(n); test divisors of φ(n) ascending
    int phi = totient(n);
    for (int d : divisors(phi)) {
        if (pow_mod(rr, d, n) == 1 % n) return d;
    }
    return phi; // unreachable for valid input
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; (long long)p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> factorize(int n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<int, int>> factors;
    for (int p = 2; (long long)p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> primes;
    for (auto [p, e] : factorize(n)) primes.push_back(p);
    return primes;
}

std::vector<int> invariant_factors(const std::vector<int>& orders) {
    // collect, per prime, the multiset of exponents across all factors
    std::map<int, std::vector<int>> exps;
    for (int a : orders) {
        if (a < 1) throw std::invalid_argument("invariant_factors: orders must be >= 1");
        for (auto [p, e] : factorize(a)) exps[p].push_back(e);
    }
    std::size_t width = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.rbegin(), es.rend());
        width = std::max(width, es.size());
    }
    std::vector<int> factors(width, 1);
    for (auto& [p, es] : exps) {
        for (std::size_t k = 0; k < es.size(); ++k) {
            long long v = 1;
            for (int i = 0; i < es[k]; ++i) v *= p;
            factors[k] = (int)(factors[k] * v);
        }
    }
    return factors; // descending divisibility chain by construction
}

} // namespace cutrank::nt
