#pragma once

#include "popcrit/poly.hpp"
#include "popcrit/root_data.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace popcrit {

struct NotGeneric : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CoincidentCoordinates : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemInstance {
    RootData rd;
    std::vector<Weight> weights;
    std::vector<Rat> points;

    ProblemInstance() = default;
    ProblemInstance(RootData r, std::vector<Weight> w, std::vector<Rat> z);
    int n() const { return static_cast<int>(points.size()); }
    Weight weight_sum() const;
    // The A-series instance obtained by folding B/C weights.
    ProblemInstance folded() const;
};

// Monic coordinates y_1..y_r.
using TupleY = std::vector<Poly>;
TupleY normalize(const TupleY& y);
std::vector<long> degrees(const TupleY& y);
std::string tuple_str(const TupleY& y);

std::vector<Poly> t_polys(const ProblemInstance& pi);

struct GenericCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};
GenericCheck is_generic(const ProblemInstance& pi, const TupleY& y);
// Only the conditions that involve coordinate i.
GenericCheck is_generic_at(const ProblemInstance& pi, const std::vector<Poly>& Ts, const TupleY& y, int i);

// Right-hand side T_i prod_{j != i} y_j^{-a_ij} of the direction-i Wronskian equation.
Poly wronskian_rhs(const ProblemInstance& pi, const std::vector<Poly>& Ts, const TupleY& y, int i);

// Throws NotGeneric when y is not generic.
bool heine_stieltjes_test(const ProblemInstance& pi, const TupleY& y);
// F_i and G_i of the divisibility criterion.
std::pair<Poly, Poly> heine_stieltjes_fg(const ProblemInstance& pi, const TupleY& y, int i);

using RootSets = std::vector<std::vector<std::complex<double>>>;
double bethe_residual(const ProblemInstance& pi, const RootSets& roots);
std::vector<std::complex<double>> numeric_roots(const Poly& p);

Weight weight_at_infinity(const ProblemInstance& pi, const std::vector<long>& l);
inline Weight weight_at_infinity(const ProblemInstance& pi, const TupleY& y) {
    return weight_at_infinity(pi, degrees(y));
}
bool check_separating(const ProblemInstance& pi, const std::vector<long>& l);

}  // namespace popcrit
