#pragma once

#include "popcrit/critical.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace popcrit {

struct NotFertile : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonGenericExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kRetryCap = 64;

// Solution line {base + c * fiber} of W(fiber, ytilde) = rhs.
struct DescendantFamily {
    int direction = -1;
    Poly base;   // reduced: no x^{deg fiber} term
    Poly fiber;  // the current coordinate y_i
    Poly rhs;
    Poly member(const Rat& c) const { return base + fiber * c; }
    // Degree of the members other than the fiber itself (or of the base when it is lower).
    int other_degree() const { return base.degree(); }
};

std::optional<DescendantFamily> solve_wronskian_equation(const Poly& y, const Poly& R);
DescendantFamily immediate_descendants(const ProblemInstance& pi, const TupleY& y, int i);
bool is_fertile(const ProblemInstance& pi, const TupleY& y);

// Parameter schedule shifted by the seed.
std::vector<Rat> parameter_schedule(std::uint64_t seed);

// First generic member of the family (replacing y_i), skipping c = 0 when
// `nonzero` is set. Returns the parameter and the tuple.
std::optional<std::pair<Rat, TupleY>> sample_generic_member(const ProblemInstance& pi, const std::vector<Poly>& Ts,
                                                            const TupleY& y, const DescendantFamily& fam,
                                                            std::uint64_t seed, bool nonzero = false);

struct PathStep {
    int direction;
    std::string param;  // rational parameter, or "low" for the unique lower-degree member
};

struct AtlasMember {
    TupleY y;
    std::vector<PathStep> path;
};

struct AtlasEdge {
    std::vector<long> from;
    int direction;
    std::vector<long> to;
};

struct PopulationAtlas {
    std::map<std::vector<long>, AtlasMember> members;
    std::vector<AtlasEdge> edges;
    Weight start_weight;  // weight at infinity of the starting tuple
    std::set<std::vector<long>> degree_set() const;
};

struct ExploreOptions {
    int max_degree = 8;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool verify_members = true;
};

PopulationAtlas explore_population(const ProblemInstance& pi, const TupleY& y0, const ExploreOptions& opt);

// Follows a stored generation path from y0.
TupleY replay_path(const ProblemInstance& pi, const TupleY& y0, const std::vector<PathStep>& path);

std::optional<WeylElement> degree_vector_to_weyl(const ProblemInstance& pi, const WeylGroup& group,
                                                 const Weight& lambda_inf, const std::vector<long>& l);
// {l >= 0 : sum Lambda_s - sum l_i alpha_i in W . lambda_inf}, each l_i <= cap.
std::set<std::vector<long>> predicted_degree_vectors(const ProblemInstance& pi, const WeylGroup& group,
                                                     const Weight& lambda_inf, int cap);
// Solves sum_i l_i alpha_i = v (coroot coordinates); nullopt unless integral.
std::optional<std::vector<long>> root_coordinates(const RootData& rd, const Weight& v);

std::string degree_str(const std::vector<long>& l);

}  // namespace popcrit
