#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace popcrit {

// mpq_class keeps num/den canonical (reduced, den > 0) after every operation.
using Rat = mpq_class;
using Int = mpz_class;

Rat parse_rat(const std::string& s);
std::string to_string(const Rat& q);

// Exact integer k-th root of a nonnegative rational, if it exists.
std::optional<Rat> rat_root(const Rat& q, unsigned k);

// Parameter schedule 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, ...
// (Stern-Brocot levels, larger values first, each followed by its negative).
std::vector<Rat> stern_brocot_schedule(std::size_t count);

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    // Random rational p/q with |p| <= height, 1 <= q <= height.
    Rat rational(int height);
    long integer(long lo, long hi);
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace popcrit
