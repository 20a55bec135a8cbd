#include "popcrit/critical.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <set>

namespace popcrit {

ProblemInstance::ProblemInstance(RootData r, std::vector<Weight> w, std::vector<Rat> z)
    : rd(std::move(r)), weights(std::move(w)), points(std::move(z)) {
    if (weights.size() != points.size()) throw std::invalid_argument("weights and points differ in count");
    for (const auto& lam : weights) {
        if (static_cast<int>(lam.size()) != rd.rank) throw std::invalid_argument("weight has wrong rank");
        if (!is_dominant(lam)) throw std::invalid_argument("weight is not dominant integral");
    }
    std::set<Rat> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw std::invalid_argument("points are not distinct");
}

Weight ProblemInstance::weight_sum() const {
    Weight s(rd.rank, 0);
    for (const auto& w : weights) s = add(s, w);
    return s;
}

ProblemInstance ProblemInstance::folded() const {
    if (rd.kind == 'A') return *this;
    const int n = rd.rank;
    RootData a = RootData::make('A', rd.kind == 'B' ? 2 * n - 1 : 2 * n);
    std::vector<Weight> w;
    for (const auto& lam : weights) w.push_back(rd.kind == 'B' ? fold_weight_B(lam) : fold_weight_C(lam));
    return ProblemInstance(a, w, points);
}

TupleY normalize(const TupleY& y) {
    TupleY r;
    for (const auto& p : y) r.push_back(p.monic());
    return r;
}

std::vector<long> degrees(const TupleY& y) {
    std::vector<long> d;
    for (const auto& p : y) d.push_back(p.degree());
    return d;
}

std::string tuple_str(const TupleY& y) {
    std::string s = "(";
    for (std::size_t i = 0; i < y.size(); ++i) s += (i ? " | " : "") + y[i].str();
    return s + ")";
}

std::vector<Poly> t_polys(const ProblemInstance& pi) {
    std::vector<Poly> Ts(pi.rd.rank, Poly(1));
    for (int i = 0; i < pi.rd.rank; ++i)
        for (int s = 0; s < pi.n(); ++s)
            if (pi.weights[s][i] > 0) Ts[i] *= Poly::linear_root(pi.points[s]).pow(pi.weights[s][i]);
    return Ts;
}

GenericCheck is_generic_at(const ProblemInstance& pi, const std::vector<Poly>& Ts, const TupleY& y, int i) {
    const auto& a = pi.rd.cartan;
    if (y[i].is_zero()) return {false, "y_" + std::to_string(i + 1) + " is zero"};
    if (!is_squarefree(y[i])) return {false, "y_" + std::to_string(i + 1) + " has a multiple root"};
    if (gcd(y[i], Ts[i]).degree() > 0) return {false, "y_" + std::to_string(i + 1) + " shares a root with T"};
    for (int j = 0; j < pi.rd.rank; ++j)
        if (j != i && a[i][j] != 0 && gcd(y[i], y[j]).degree() > 0)
            return {false, "y_" + std::to_string(std::min(i, j) + 1) + " and y_" + std::to_string(std::max(i, j) + 1) +
                               " share a root"};
    return {};
}

GenericCheck is_generic(const ProblemInstance& pi, const TupleY& y) {
    if (static_cast<int>(y.size()) != pi.rd.rank) return {false, "tuple has wrong length"};
    auto Ts = t_polys(pi);
    for (int i = 0; i < pi.rd.rank; ++i)
        if (auto g = is_generic_at(pi, Ts, y, i); !g) return g;
    return {};
}

Poly wronskian_rhs(const ProblemInstance& pi, const std::vector<Poly>& Ts, const TupleY& y, int i) {
    Poly r = Ts[i];
    for (int j = 0; j < pi.rd.rank; ++j)
        if (j != i && pi.rd.cartan[i][j] != 0) r *= y[j].pow(static_cast<unsigned>(-pi.rd.cartan[i][j]));
    return r;
}

std::pair<Poly, Poly> heine_stieltjes_fg(const ProblemInstance& pi, const TupleY& y, int i) {
    const auto& a = pi.rd.cartan;
    Poly F(1);
    for (const auto& z : pi.points) F *= Poly::linear_root(z);
    for (int j = 0; j < pi.rd.rank; ++j)
        if (j != i && a[i][j] != 0) F *= y[j];
    Poly G;
    for (int s = 0; s < pi.n(); ++s)
        if (pi.weights[s][i] != 0)
            G += exact_div(F, Poly::linear_root(pi.points[s])) * Rat(pi.weights[s][i]);
    for (int j = 0; j < pi.rd.rank; ++j)
        if (j != i && a[i][j] != 0) G -= exact_div(F, y[j]) * y[j].derivative() * Rat(a[i][j]);
    return {F, G};
}

bool heine_stieltjes_test(const ProblemInstance& pi, const TupleY& y) {
    if (auto g = is_generic(pi, y); !g) throw NotGeneric(g.reason);
    for (int i = 0; i < pi.rd.rank; ++i) {
        if (y[i].degree() < 1) continue;
        auto [F, G] = heine_stieltjes_fg(pi, y, i);
        Poly num = F * y[i].derivative(2) - G * y[i].derivative();
        if (!divides(y[i], num)) return false;
    }
    return true;
}

double bethe_residual(const ProblemInstance& pi, const RootSets& roots) {
    const auto& rd = pi.rd;
    double worst = 0;
    for (int i = 0; i < rd.rank && i < static_cast<int>(roots.size()); ++i) {
        for (std::size_t k = 0; k < roots[i].size(); ++k) {
            auto t = roots[i][k];
            std::complex<double> lhs = 0;
            for (int s = 0; s < pi.n(); ++s) {
                auto d = t - std::complex<double>(pi.points[s].get_d());
                if (d == 0.0) throw CoincidentCoordinates("coordinate coincides with a marked point");
                lhs -= double(rd.pair(pi.weights[s], i)) / d;
            }
            for (int j = 0; j < rd.rank && j < static_cast<int>(roots.size()); ++j) {
                if (rd.scalar[j][i] == 0) continue;
                for (std::size_t kk = 0; kk < roots[j].size(); ++kk) {
                    if (j == i && kk == k) continue;
                    auto d = t - roots[j][kk];
                    if (d == 0.0) throw CoincidentCoordinates("coordinates coincide");
                    lhs += double(rd.scalar[j][i]) / d;
                }
            }
            worst = std::max(worst, std::abs(lhs));
        }
    }
    return worst;
}

std::vector<std::complex<double>> numeric_roots(const Poly& p) {
    if (p.degree() < 1) return {};
    Eigen::VectorXd c(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) c[k] = p.coeff(k).get_d();
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
    std::vector<std::complex<double>> out;
    for (Eigen::Index k = 0; k < solver.roots().size(); ++k) out.push_back(solver.roots()[k]);
    return out;
}

Weight weight_at_infinity(const ProblemInstance& pi, const std::vector<long>& l) {
    return pi.rd.minus_roots(pi.weight_sum(), l);
}

bool check_separating(const ProblemInstance& pi, const std::vector<long>& l) {
    const auto& rd = pi.rd;
    Weight shifted = add(weight_at_infinity(pi, l), rd.rho());
    std::vector<long> c(rd.rank, 0);
    for (;;) {
        int k = 0;
        while (k < rd.rank && c[k] == l[k]) c[k++] = 0;
        if (k == rd.rank) return true;
        ++c[k];
        if (2 * rd.pair_root_comb(shifted, c) + rd.root_norm(c) == 0) return false;
    }
}

}  // namespace popcrit
