#pragma once

#include "popcrit/rat.hpp"

#include <optional>
#include <vector>

namespace popcrit {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

struct Rref {
    RatMat m;                 // reduced row echelon form
    std::vector<int> pivots;  // pivot column of each nonzero row
    int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(RatMat a, int ncols);

struct LinearSolution {
    RatVec particular;
    std::vector<RatVec> kernel;
};

// Solves A v = b exactly; nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const RatMat& a, const RatVec& b, int ncols);
std::vector<RatVec> nullspace(const RatMat& a, int ncols);
std::optional<RatMat> inverse(const RatMat& a);
Rat determinant(RatMat a);

}  // namespace popcrit
