#pragma once

#include "popcrit/fundamental.hpp"

#include <optional>
#include <string>
#include <vector>

namespace popcrit {

struct NotSelfdual : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConstant : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SquareRootMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Framing = std::vector<Poly>;
using RatMatrix = std::vector<std::vector<Rat>>;

// W(us) divided by prod_{j<k} T_j^{k-j}, k = us.size().
Poly wdag(const std::vector<Poly>& us, const Framing& Ts);
// W_k = wdag of the basis with u_k removed (1-based k).
std::vector<Poly> complementary_wronskians(const std::vector<Poly>& basis, const Framing& Ts);

PolySpace dual_space(const PolySpace& V, const Framing& Ts);
bool symmetric_framing(const Framing& Ts);
bool is_selfdual(const PolySpace& V, const Framing& Ts);

// Matrix of (u_i, u_j) in the given basis. Throws NotSelfdual or NotConstant.
RatMatrix gram(const std::vector<Poly>& basis, const Framing& Ts);
// Basis ordered by ascending degree.
RatMatrix gram(const PolySpace& V, const Framing& Ts);
bool is_skew(const RatMatrix& g);
bool is_symmetric(const RatMatrix& g);

// a + b sqrt(d), d a non-square rational.
struct QuadScalar {
    Rat a, b, d;
    QuadScalar operator*(const QuadScalar& o) const;
    QuadScalar inverse() const;
    bool operator==(const QuadScalar& o) const { return a == o.a && b == o.b && d == o.d; }
    std::string str() const;
};

struct WittResult {
    std::vector<Poly> q;          // strictly decreasing degrees, anti-diagonal Gram
    std::vector<Rat> a;           // W+(q_1..q_i) = a_i W+(q_1..q_{N+1-i})
    std::vector<Rat> kappa;       // q_i = kappa_i W_{N+2-i}
    std::string kind;             // "witt", "quadratic" or "quasi"
    std::vector<Poly> witt;       // rescaled basis when kind == "witt"
    std::vector<QuadScalar> scale;  // rescaling factors when kind == "quadratic"
};
WittResult quasi_witt_basis(const PolySpace& V, const Framing& Ts);
// a_i of the relation above, or nullopt if some pair is not proportional.
std::optional<std::vector<Rat>> dar_scalars(const std::vector<Poly>& basis, const Framing& Ts);

bool is_isotropic(const PolySpace& V, const Framing& Ts, const Flag& flag);

// A basis adjusted to the same flag with anti-diagonal Gram matrix.
std::vector<Poly> antidiagonal_adjusted_basis(const Flag& flag, const Framing& Ts);

struct IsotropicFamily {
    int i = 0;                   // 1-based, i <= k
    std::vector<Poly> u;         // anti-diagonal adjusted basis of the flag
    RatMatrix g;                 // its Gram matrix
    std::vector<Poly> basis_at(const Rat& c) const;
};
IsotropicFamily isotropic_family(const Flag& flag, const Framing& Ts, int i);
// beta of the moved flag, unnormalized divided Wronskians.
TupleY isotropic_generators(const PolySpace& V, const Framing& Ts, const Flag& flag, int i, const Rat& c);

struct GeneratorCheck {
    bool wronskian_ok = false;  // W(y_i, dy_i/dc) proportional to the expected product
    bool square_ok = true;      // odd dimension, i = k: y_k(c) = L (p + c q)^2
    Poly p, q;
};
GeneratorCheck check_generator(const IsotropicFamily& fam, const Framing& Ts);

bool is_symmetric_tuple(const TupleY& y);

}  // namespace popcrit
