#pragma once

// Independent reference computations used only by the tests.

#include "popcrit/critical.hpp"
#include "popcrit/root_data.hpp"
#include "popcrit/schubert.hpp"

#include <map>
#include <set>
#include <vector>

namespace oracle {

using popcrit::Poly;
using popcrit::Rat;

// Determinant of the derivative matrix by permutation expansion.
Poly naive_wronskian(const std::vector<Poly>& us);

// Checks the root equations numerically from the scalar products.
bool bethe_numeric(const popcrit::ProblemInstance& pi, const popcrit::TupleY& y, double tol = 1e-6);

long weyl_order(char kind, int rank);

// {l >= 0, l_i <= cap : sum Lambda_s - sum l_i alpha_i lies in the shifted orbit of lambda_inf},
// via orbit closure of lambda_inf + rho under the reflection formula.
std::set<std::vector<long>> predicted_degrees(const popcrit::RootData& rd, const popcrit::Weight& total,
                                              const popcrit::Weight& lambda_inf, int cap);

using Monomial = std::vector<int>;
using Character = std::map<Monomial, long>;
// Schur polynomial in k variables from semistandard tableaux.
Character schur(const popcrit::Partition& lambda, int k);
Character multiply(const Character& a, const Character& b);
// Decomposition into Schur polynomials by repeatedly removing the top dominant term.
std::map<popcrit::Partition, long> decompose(Character c, int k);
long hook_content_dim(const popcrit::Partition& lambda, int k);

// Multiplicity of L_target in the tensor product of sl_{N+1} modules, via characters.
long tensor_multiplicity(const std::vector<popcrit::Weight>& weights, const popcrit::Weight& target);

}  // namespace oracle
