#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cutrank {

/**
 * Parameters of the two-generator presentation
 *
 *     < a, b : a^n = 1, b^t = a^l, b a b^-1 = a^r >
 *
 * valid when gcd(r, n) = 1, l divides n, l*r ≡ l (mod n) and the
 * multiplicative order of r modulo n divides t. The group has order n*t and
 * normal-form elements a^i b^j with 0 <= i < n, 0 <= j < t.
 */
struct MetacyclicParams {
    int n = 1;
    int t = 1;
    int l = 1;
    int r = 1;

    auto operator<=>(const MetacyclicParams&) const = default;
};

/// Names of the violated constraints; empty when the tuple is valid.
std::vector<std::string> param_violations(int n, int t, int l, int r);

/// Validated parameter tuple; throws std::invalid_argument naming every
/// violated constraint otherwise.
MetacyclicParams validate_params(int n, int t, int l, int r);

inline bool params_valid(int n, int t, int l, int r) {
    return param_violations(n, t, l, r).empty();
}

std::string to_string(const MetacyclicParams& p);

} // namespace cutrank
