#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace popcrit {

using IntMat = std::vector<std::vector<long>>;
// Coroot coordinates <lambda, alpha_i^vee>.
using Weight = std::vector<long>;

struct RootData {
    char kind = 'A';
    int rank = 0;
    IntMat cartan;          // a_ij
    std::vector<long> sym;  // d_i
    IntMat scalar;          // (alpha_i, alpha_j) = d_i a_ij

    static RootData make(char kind, int rank);
    static RootData parse(const std::string& code);  // "A2", "B3", "C2"
    std::string code() const { return std::string(1, kind) + std::to_string(rank); }

    // <alpha_j, alpha_i^vee> = a_ij, so alpha_i has coroot coordinates (a_1i, ..., a_ri).
    Weight root(int i) const;
    Weight rho() const { return Weight(rank, 1); }
    // (lambda, alpha_i) = d_i <lambda, alpha_i^vee>
    long pair(const Weight& lambda, int i) const { return sym[i] * lambda[i]; }
    // (lambda, sum_i c_i alpha_i)
    long pair_root_comb(const Weight& lambda, const std::vector<long>& c) const;
    // (sum c_i alpha_i, sum c_j alpha_j)
    long root_norm(const std::vector<long>& c) const;
    // lambda - sum_i l_i alpha_i
    Weight minus_roots(const Weight& lambda, const std::vector<long>& l) const;
    std::size_t weyl_order() const;
};

bool is_dominant(const Weight& w);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);

struct WeylElement {
    std::vector<int> word;  // generator indices (0-based); word {i, j} means s_i s_j
    IntMat matrix;          // action on coroot coordinates
};

WeylElement weyl_identity(const RootData& rd);
WeylElement weyl_generator(const RootData& rd, int i);
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_from_word(const RootData& rd, const std::vector<int>& word);

Weight act(const WeylElement& w, const Weight& lambda);
Weight reflect(const RootData& rd, int i, const Weight& lambda);
Weight shifted_action(const RootData& rd, const WeylElement& w, const Weight& lambda);

struct OnWall {};
struct Dominant {
    Weight weight;
    WeylElement w;
};
std::variant<Dominant, OnWall> dominant_representative(const RootData& rd, const Weight& lambda);

// Full enumeration by breadth-first search; words are reduced.
class WeylGroup {
public:
    explicit WeylGroup(const RootData& rd);
    const std::vector<WeylElement>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    // Index of the element with this matrix.
    std::optional<std::size_t> find(const IntMat& m) const;
    std::size_t longest() const;

private:
    std::vector<WeylElement> elems_;
    std::map<IntMat, std::size_t> index_;
};

Weight fold_weight_B(const Weight& lambda);
Weight fold_weight_C(const Weight& lambda);

// Permutations are 1-based images: p[k-1] = p(k); product (p q)(k) = p(q(k)).
using Perm = std::vector<int>;
Perm perm_identity(int n);
Perm perm_mul(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);

// Image in S^{2N} (kind B: isotropic flags of a 2N-dim space) or S^{2N+1} (kind C).
Perm folded_weyl_embed(char kind, int rank, const WeylElement& w);
// The same embedding expressed as a word in the simple reflections of A_{2N-1} / A_{2N}.
std::vector<int> folded_weyl_word(char kind, int rank, const std::vector<int>& word);
bool is_centro_symmetric(const Perm& p);

// Permutation attached to a type-A Weyl element through the ordering of the
// epsilon-coordinates of w(rho): p_i is the rank of -(w rho)_i.
Perm a_weyl_to_perm(const RootData& rdA, const WeylElement& w);

std::string weight_str(const Weight& w);

}  // namespace popcrit
