#pragma once

#include "popcrit/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace popcrit {

// det(g_i^{(j-1)}); the empty list gives 1.
Poly wronskian(const std::vector<Poly>& gs);

// W(us) / prod_{j<i} T_j^{i-j}, i = us.size(). Throws NotDivisible.
Poly divided_wronskian(const std::vector<Poly>& us, const std::vector<Poly>& Ts);
// prod_{j<i} T_j^{i-j}
Poly framing_factor(const std::vector<Poly>& Ts, int i);

Poly random_poly(Sampler& rng, int max_degree, int height = 5);

struct IdentityReport {
    bool ok = true;
    int checks = 0;
    std::string failed_identity;
    std::string counterexample;
};

// Exact checks of the five classical Wronskian identities on seeded random data.
// `which` selects one identity (1..5) or all of them (0).
IdentityReport identity_suite(std::uint64_t seed, int trials, int which = 0);

}  // namespace popcrit
