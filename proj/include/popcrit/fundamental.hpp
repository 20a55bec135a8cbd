#pragma once

#include "popcrit/critical.hpp"
#include "popcrit/root_data.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace popcrit {

struct ConstructionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Span of polynomials stored as a reduced echelon basis: strictly decreasing
// degrees, monic, and zero coefficient at every other basis element's degree.
class PolySpace {
public:
    PolySpace() = default;
    static PolySpace span(const std::vector<Poly>& gens);
    const std::vector<Poly>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int max_degree() const { return basis_.empty() ? -1 : basis_.front().degree(); }
    std::vector<int> degrees_ascending() const;
    bool contains(const Poly& p) const;
    // Remainder of p after elimination against the basis.
    Poly reduce(const Poly& p) const;
    friend bool operator==(const PolySpace& a, const PolySpace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const PolySpace& a, const PolySpace& b) { return !(a == b); }

private:
    std::vector<Poly> basis_;
};

// Full flag given by an adjusted basis u_1..u_k; canonical form: each u_i is
// monic after removing its coefficients at the leading degrees of u_1..u_{i-1}.
struct Flag {
    std::vector<Poly> u;
    static Flag canonical(const std::vector<Poly>& basis);
    friend bool operator==(const Flag& a, const Flag& b) { return a.u == b.u; }
};

struct FundamentalData {
    PolySpace space;
    std::vector<Poly> u;  // the constructed u_1..u_{N+1}
};

// Type A only. Throws ConstructionFailed when an internal identity fails.
FundamentalData fundamental_space(const ProblemInstance& pi, const TupleY& y, std::uint64_t seed = 0);

// Rational function num/den, kept reduced with monic denominator.
struct RatFunc {
    Poly num, den{1};
    RatFunc() = default;
    RatFunc(Poly n, Poly d);
    RatFunc derivative() const;
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    bool is_zero() const { return num.is_zero(); }
};

// A first-order factor (d/dx - f'/f) with f = num/den.
struct LogFactor {
    Poly num, den;
    RatFunc log_derivative() const;
};
RatFunc apply_factors(const std::vector<LogFactor>& rightmost_first, const Poly& u);
// Factors of D(y) for type A, listed in the order they are applied.
std::vector<LogFactor> dp_factors(const std::vector<Poly>& Ts, const TupleY& y);
bool annihilates(const std::vector<LogFactor>& factors, const PolySpace& space);

struct DpReport {
    bool spaces_equal = true;
    bool factors_annihilate = true;
    bool ok() const { return spaces_equal && factors_annihilate; }
};
DpReport verify_dp(const ProblemInstance& pi, const std::vector<TupleY>& members, const std::vector<PolySpace>& spaces);

std::vector<int> exponents_at(const PolySpace& space, const Rat& z);
std::vector<int> exponents_at_infinity(const PolySpace& space);
// 0, (Lambda+rho, alpha_1), (Lambda+rho, alpha_1+alpha_2), ... for sl_{N+1}
std::vector<int> expected_exponents_finite(const Weight& lambda);
// l_1, l_1 + (Lambda+rho, alpha_1), ... with Lambda the dominant weight at infinity
std::vector<int> expected_exponents_infinity(long l1, const Weight& lambda_inf);

Flag degree_flag(const PolySpace& space);
TupleY generating_morphism(const Flag& flag, const std::vector<Poly>& Ts);
TupleY generating_morphism_raw(const Flag& flag, const std::vector<Poly>& Ts);
Flag flag_from_tuple(const PolySpace& space, const TupleY& y, const std::vector<Poly>& Ts);
Flag random_flag(const PolySpace& space, Sampler& rng);

struct BruhatData {
    Perm w;
    std::vector<long> l;           // degrees of the generating morphism image
    WeylElement weyl;              // element matching w
    Weight dominant_inf;           // weight at infinity of the degree flag image
    bool degree_law_holds = false;      // sum l_i alpha_i = sum Lambda_s - w . Lambda_inf
};
BruhatData bruhat_index(const ProblemInstance& pi, const PolySpace& space, const Flag& flag, const WeylGroup& group);

// T_1..T_N recovered from gcds of Wronskians of basis subsets.
std::vector<Poly> space_framing(const PolySpace& space);
bool has_base_point(const PolySpace& space, const Rat& z);

}  // namespace popcrit
