#pragma once

#include "popcrit/reproduction.hpp"
#include "popcrit/selfdual.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace popcrit {

struct FoldedTuple {
    TupleY original;
    TupleY folded;
};

FoldedTuple fold(const TupleY& y, char kind);
// Inverse of fold; throws std::invalid_argument when the tuple is not of folded shape.
TupleY unfold(const TupleY& folded, char kind);
std::vector<long> fold_degrees(const std::vector<long>& l, char kind);

// Genericity plus solvability of every direction's Wronskian equation.
// Throws std::logic_error if the native Heine-Stieltjes test disagrees.
bool bc_critical_test(const ProblemInstance& pi, const TupleY& y);

// Criticality on the A side: y_A critical (B), or y_A fertile plus a critical bridge tuple (C).
bool folded_critical(const ProblemInstance& pi, const TupleY& y, std::uint64_t seed = 0);

struct BridgeTuples {
    TupleY first, second;
    Rat c;
};
BridgeTuples c_bridge_tuples(const ProblemInstance& pi, const TupleY& y, const Poly& ytilde_N, const Rat& c);
// y_{A,2} for the first parameter in the schedule that makes it A-generic and A-critical.
std::optional<BridgeTuples> critical_bridge(const ProblemInstance& pi, const TupleY& y, std::uint64_t seed = 0);

struct BCSpace {
    PolySpace space;
    Framing Ts;            // framing of the folded instance
    TupleY seed_tuple;     // the A-side tuple the space was built from
    bool selfdual = false;
    RatMatrix gram;
};
BCSpace bc_fundamental_space(const ProblemInstance& pi, const TupleY& y, std::uint64_t seed = 0);

// Factors of the B/C operator D(y), listed in the order they are applied.
std::vector<LogFactor> bc_dp_factors(char kind, const std::vector<Poly>& Ts, const TupleY& y);

struct IsotropicSampleReport {
    int samples = 0;
    int generic = 0;
    int critical = 0;
    int symmetric = 0;
    int square_middle = 0;  // C only
    int dp_checked = 0;
    int dp_ok = 0;
    std::vector<TupleY> tuples;  // unfolded samples
    bool ok() const;
};
IsotropicSampleReport bc_population_as_isotropic_flags(const ProblemInstance& pi, const BCSpace& V, int samples,
                                                       std::uint64_t seed);

struct DegreeLawReport {
    int vectors = 0;
    int matched = 0;
    int distinct_elements = 0;
    bool folded_match = true;  // A-side Weyl element equals the folded embedding
    bool ok() const { return matched == vectors && distinct_elements == vectors && folded_match; }
};
DegreeLawReport bc_degree_law(const ProblemInstance& pi, const PopulationAtlas& atlas);

}  // namespace popcrit
