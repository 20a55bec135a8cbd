#pragma once

#include "popcrit/critical.hpp"
#include "popcrit/fundamental.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace popcrit {

struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PointKind { Finite, Infinity };
enum class RamSource { Schubert, Exponents, Weight };

// Ramification at one point of an (N+1)-dimensional space of polynomials of degree <= d.
struct RamificationTriple {
    std::vector<long> a;       // non-increasing Schubert index
    std::vector<long> m;       // exponents, ascending
    std::vector<long> lambda;  // dominant weight, length N
    long d = 0;
    PointKind kind = PointKind::Finite;
    long size() const;  // |a|
};

// `base` is the first exponent, needed only when converting from a weight.
RamificationTriple convert_ramification(RamSource from, const std::vector<long>& values, long d, PointKind kind,
                                        long base = 0);

struct SpaceRamification {
    std::vector<RamificationTriple> finite;  // one per requested point
    RamificationTriple infinity;
    long d = 0;
    int N = 0;
    bool plucker() const;
};
SpaceRamification ramification_of_space(const PolySpace& V, const std::vector<Rat>& points);

using Partition = std::vector<long>;
Partition trim(Partition p);
// (lambda_1 + ... + lambda_N, ..., lambda_N, 0) with N+1 parts.
Partition weight_to_partition(const Weight& lambda);
Weight partition_to_weight(const Partition& p, int rank);

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// All nu with c^nu_{lambda mu} > 0 and at most `rows` parts.
std::vector<std::pair<Partition, long>> lr_product(const Partition& lambda, const Partition& mu, int rows);

// Multiplicity of L_{lambda_inf} in the tensor product of the instance's modules (type A).
long multiplicity_bound(const ProblemInstance& piA, const Weight& lambda_inf);

// Number of monic degree-l critical y for sl_2 with weights m_s at points z_s,
// or nullopt when the solution set is not finite. Handles l <= 2.
std::optional<long> sl2_exact_count(const std::vector<long>& m, const std::vector<Rat>& z, int l);

struct CountReport {
    long lambda_inf = 0;
    bool dominant = true;
    bool on_wall = false;
    int counted_degree = 0;         // degree at which critical points were counted
    std::optional<long> exact;      // number of populations
    long bound = 0;
    bool within_bound() const { return !exact || *exact <= bound; }
};
CountReport population_count_vs_bound(const std::vector<long>& m, const std::vector<Rat>& z, int l);

// Distinct integers in [-1000, 1000] drawn from the seed. Small ranges hit special
// configurations (a critical point running into a marked point) too often.
std::vector<Rat> generic_points(int n, std::uint64_t seed);

}  // namespace popcrit
