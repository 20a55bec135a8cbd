#include "oracles.hpp"

#include <algorithm>
#include <complex>
#include <deque>
#include <functional>
#include <numeric>

namespace oracle {

Poly naive_wronskian(const std::vector<Poly>& us) {
    const int n = static_cast<int>(us.size());
    if (n == 0) return Poly(1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Poly term(1);
        for (int r = 0; r < n; ++r) term *= us[perm[r]].derivative(r);
        total += inv % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

bool bethe_numeric(const popcrit::ProblemInstance& pi, const popcrit::TupleY& y, double tol) {
    using C = std::complex<double>;
    const auto& rd = pi.rd;
    std::vector<std::vector<C>> roots;
    for (const auto& p : y) roots.push_back(popcrit::numeric_roots(p));
    for (int i = 0; i < rd.rank; ++i) {
        for (std::size_t a = 0; a < roots[i].size(); ++a) {
            C t = roots[i][a];
            C s = 0;
            double scale = 1;
            for (int k = 0; k < pi.n(); ++k) {
                // (Lambda_s, alpha_i) = d_i <Lambda_s, alpha_i^vee>
                double c = static_cast<double>(rd.sym[i] * pi.weights[k][i]);
                C term = c / (t - pi.points[k].get_d());
                s += term;
                scale = std::max(scale, std::abs(term));
            }
            for (int j = 0; j < rd.rank; ++j)
                for (std::size_t b = 0; b < roots[j].size(); ++b) {
                    if (j == i && b == a) continue;
                    C term = static_cast<double>(rd.scalar[i][j]) / (t - roots[j][b]);
                    s -= term;
                    scale = std::max(scale, std::abs(term));
                }
            if (std::abs(s) > tol * scale) return false;
        }
    }
    return true;
}

long weyl_order(char kind, int rank) {
    long f = 1;
    for (int k = 2; k <= rank; ++k) f *= k;
    if (kind == 'A') return f * (rank + 1);
    return f << rank;
}

std::set<std::vector<long>> predicted_degrees(const popcrit::RootData& rd, const popcrit::Weight& total,
                                              const popcrit::Weight& lambda_inf, int cap) {
    const int r = rd.rank;
    popcrit::Weight start(r);
    for (int i = 0; i < r; ++i) start[i] = lambda_inf[i] + 1;
    std::set<popcrit::Weight> orbit{start};
    std::deque<popcrit::Weight> queue{start};
    while (!queue.empty()) {
        auto w = queue.front();
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            popcrit::Weight v = w;
            // s_i(lambda)_j = lambda_j - lambda_i <alpha_i, alpha_j^vee>
            for (int j = 0; j < r; ++j) v[j] -= w[i] * rd.cartan[j][i];
            if (orbit.insert(v).second) queue.push_back(v);
        }
    }
    std::set<std::vector<long>> out;
    // Enumerate l in the box and test membership.
    std::vector<long> l(r, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == r) {
            popcrit::Weight v = total;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) v[j] -= l[i] * rd.cartan[j][i];
            for (int j = 0; j < r; ++j) v[j] += 1;
            if (orbit.count(v)) out.insert(l);
            return;
        }
        for (long v = 0; v <= cap; ++v) {
            l[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

Character schur(const popcrit::Partition& lambda_in, int k) {
    auto lambda = popcrit::trim(lambda_in);
    Character out;
    if (static_cast<int>(lambda.size()) > k) return out;
    std::vector<std::vector<int>> t;
    for (long row : lambda) t.emplace_back(row, 0);
    Monomial content(k, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t r, long c) {
        if (r == lambda.size()) {
            ++out[content];
            return;
        }
        if (c == lambda[r]) {
            rec(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= k; ++v) {
            t[r][c] = v;
            ++content[v - 1];
            rec(r, c + 1);
            --content[v - 1];
        }
    };
    rec(0, 0);
    return out;
}

Character multiply(const Character& a, const Character& b) {
    Character out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    return out;
}

std::map<popcrit::Partition, long> decompose(Character c, int k) {
    std::map<popcrit::Partition, long> out;
    for (;;) {
        for (auto it = c.begin(); it != c.end();)
            it = it->second == 0 ? c.erase(it) : std::next(it);
        if (c.empty()) return out;
        // The lexicographically largest exponent is a highest weight.
        Monomial top = c.rbegin()->first;
        long mult = c.rbegin()->second;
        popcrit::Partition p(top.begin(), top.end());
        out[popcrit::trim(p)] += mult;
        for (const auto& [m, v] : schur(p, k)) c[m] -= mult * v;
    }
}

long hook_content_dim(const popcrit::Partition& lambda_in, int k) {
    auto lambda = popcrit::trim(lambda_in);
    if (static_cast<int>(lambda.size()) > k) return 0;
    Rat d = 1;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (long c = 0; c < lambda[r]; ++c) {
            long arm = lambda[r] - c - 1;
            long leg = 0;
            for (std::size_t s = r + 1; s < lambda.size() && lambda[s] > c; ++s) ++leg;
            Rat f(k + c - static_cast<long>(r), arm + leg + 1);
            f.canonicalize();
            d *= f;
        }
    return d.get_num().get_si();
}

long tensor_multiplicity(const std::vector<popcrit::Weight>& weights, const popcrit::Weight& target) {
    const int k = static_cast<int>(target.size()) + 1;
    Character c{{Monomial(k, 0), 1}};
    for (const auto& w : weights) c = multiply(c, schur(popcrit::weight_to_partition(w), k));
    auto dec = decompose(c, k);
    long total = 0;
    for (const auto& [p, m] : dec)
        if (popcrit::partition_to_weight(p, k - 1) == target) total += m;
    return total;
}

}  // namespace oracle
