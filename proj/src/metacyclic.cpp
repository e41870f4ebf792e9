#include "cutrank/metacyclic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cutrank/numtheory.hpp"

namespace cutrank {

std::vector<std::string> param_violations(int n, int t, int l, int r) {
    std::vector<std::string> violations;
    if (n < 1) violations.push_back("n >= 1");
    if (t < 1) violations.push_back("t >= 1");
    if (l < 1) violations.push_back("l >= 1");
    if (r < 1) violations.push_back("r >= 1");
    if (!violations.empty()) return violations;

    if (l > n || n % l != 0) violations.push_back("l | n");
    if (r > n) violations.push_back("r <= n");
    if (std::gcd(r, n) != 1) violations.push_back("gcd(r, n) = 1");
    if (std::gcd(r, n) == 1 && r <= n) {
        if ((long long)l * r % n != l % n) violations.push_back("l*r ≡ l (mod n)");
        if (t % nt::mult_order_mod(r, n) != 0) violations.push_back("ord_n(r) | t");
    }
    return violations;
}

MetacyclicParams validate_params(int n, int t, int l, int r) {
    auto violations = param_violations(n, t, l, r);
    if (!violations.empty()) {
        std::ostringstream oss;
        oss << "invalid metacyclic parameters (" << n << "," << t << "," << l << "," << r
            << "): violated";
        for (const auto& v : violations) oss << " [" << v << "]";
        throw std::invalid_argument(oss.str());
    }
    return MetacyclicParams{n, t, l, r};
}

std::string to_string(const MetacyclicParams& p) {
    std::ostringstream oss;
    oss << "M(" << p.n << "," << p.t << "," << p.l << "," << p.r << ")";
    return oss.str();
}

} // namespace cutrank
