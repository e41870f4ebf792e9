#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cutrank/numtheory.hpp"

using namespace cutrank;

TEST_CASE("totient and divisor counts") {
    CHECK(nt::totient(1) == 1);
    CHECK(nt::totient(12) == 4);
    CHECK(nt::totient(35) == 24);
    CHECK(nt::totient(90) == 24);
    CHECK(nt::divisor_count(1) == 1);
    CHECK(nt::divisor_count(12) == 6);
    CHECK(nt::divisor_count(7) == 2);
    CHECK(nt::divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("totient brute-force agreement up to 300") {
    for (int n = 1; n <= 300; ++n) {
        int count = 0;
        for (int k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++count;
        CHECK(nt::totient(n) == count);
    }
}

TEST_CASE("multiplicative order") {
    CHECK(nt::mult_order_mod(1, 1) == 1);
    CHECK(nt::mult_order_mod(2, 9) == 6);
    CHECK(nt::mult_order_mod(3, 35) == 12);
    CHECK(nt::mult_order_mod(2, 39) == 12);
    CHECK(nt::mult_order_mod(4, 5) == 2);
    CHECK_THROWS_AS(nt::mult_order_mod(2, 4), std::invalid_argument);
    // brute force cross-check
    for (int n = 2; n <= 60; ++n) {
        for (int r = 1; r < n; ++r) {
            if (std::gcd(r, n) != 1) continue;
            long long v = r % n;
            int o = 1;
            while (v != 1) {
                v = v * r % n;
                ++o;
            }
            CHECK(nt::mult_order_mod(r, n) == o);
        }
    }
}

TEST_CASE("factorisation and primes") {
    CHECK(nt::is_prime(2));
    CHECK(nt::is_prime(13));
    CHECK_FALSE(nt::is_prime(1));
    CHECK_FALSE(nt::is_prime(91));
    CHECK(nt::factorize(360) ==
          std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(nt::prime_divisors(468) == std::vector<int>{2, 3, 13});
}

TEST_CASE("invariant factor normalisation") {
    CHECK(nt::invariant_factors({}) == std::vector<int>{});
    CHECK(nt::invariant_factors({1, 1}) == std::vector<int>{});
    CHECK(nt::invariant_factors({6}) == std::vector<int>{6});
    CHECK(nt::invariant_factors({2, 3}) == std::vector<int>{6});
    CHECK(nt::invariant_factors({4, 6}) == std::vector<int>{12, 2});
    CHECK(nt::invariant_factors({4, 2}) == std::vector<int>{4, 2});
    CHECK(nt::invariant_factors({10, 2}) == std::vector<int>{10, 2});
    CHECK(nt::invariant_factors({2, 2, 3, 9}) == std::vector<int>{18, 6});
    // chain property on arbitrary inputs
    for (int a = 1; a <= 12; ++a) {
        for (int b = 1; b <= 12; ++b) {
            auto f = nt::invariant_factors({a, b});
            long long product = 1;
            for (std::size_t i = 0; i < f.size(); ++i) {
                product *= f[i];
                if (i + 1 < f.size()) CHECK(f[i] % f[i + 1] == 0);
            }
            CHECK(product == (long long)a * b);
        }
    }
}
