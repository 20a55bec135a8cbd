#include "popcrit/schubert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace popcrit {

long RamificationTriple::size() const { return std::accumulate(a.begin(), a.end(), 0L); }

RamificationTriple convert_ramification(RamSource from, const std::vector<long>& v, long d, PointKind kind, long base) {
    RamificationTriple t;
    t.d = d;
    t.kind = kind;
    const long dim = from == RamSource::Weight ? static_cast<long>(v.size()) + 1 : static_cast<long>(v.size());
    const long N = dim - 1;
    if (dim < 1) throw Inconsistent("empty ramification data");
    std::vector<long>& e = t.m;
    e.assign(dim, 0);
    switch (from) {
        case RamSource::Exponents:
            e = v;
            break;
        case RamSource::Weight:
            e[0] = base;
            for (long i = 0; i < N; ++i) {
                if (v[i] < 0) throw Inconsistent("weight is not dominant");
                e[i + 1] = e[i] + v[i] + 1;
            }
            break;
        case RamSource::Schubert:
            for (long i = 1; i <= dim; ++i)
                e[i - 1] = kind == PointKind::Finite ? v[dim - i] + (i - 1) : d - N + i - 1 - v[i - 1];
            break;
    }
    for (long i = 0; i + 1 < dim; ++i)
        if (e[i + 1] <= e[i]) throw Inconsistent("exponents are not strictly increasing");
    if (e[0] < 0 || e[dim - 1] > d) throw Inconsistent("exponents out of range");
    t.a.assign(dim, 0);
    for (long i = 1; i <= dim; ++i)
        t.a[i - 1] = kind == PointKind::Finite ? e[dim - i] - (dim - i) : d - N + i - 1 - e[i - 1];
    for (long i = 0; i < N; ++i) t.lambda.push_back(e[i + 1] - e[i] - 1);
    for (long i = 0; i + 1 < dim; ++i)
        if (t.a[i] < t.a[i + 1]) throw Inconsistent("Schubert index is not non-increasing");
    if (t.a[dim - 1] < 0 || t.a[0] > d - N) throw Inconsistent("Schubert index out of range");
    if (from == RamSource::Schubert && t.a != v) throw Inconsistent("Schubert index does not round-trip");
    return t;
}

SpaceRamification ramification_of_space(const PolySpace& V, const std::vector<Rat>& points) {
    SpaceRamification r;
    r.d = V.max_degree();
    r.N = V.dim() - 1;
    for (const auto& z : points) {
        auto e = exponents_at(V, z);
        r.finite.push_back(convert_ramification(RamSource::Exponents, {e.begin(), e.end()}, r.d, PointKind::Finite));
    }
    auto e = exponents_at_infinity(V);
    r.infinity = convert_ramification(RamSource::Exponents, {e.begin(), e.end()}, r.d, PointKind::Infinity);
    return r;
}

bool SpaceRamification::plucker() const {
    long total = infinity.size();
    for (const auto& t : finite) total += t.size();
    return total == static_cast<long>(N + 1) * (d - N);
}

Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Partition weight_to_partition(const Weight& lambda) {
    Partition p(lambda.size() + 1, 0);
    for (int i = static_cast<int>(lambda.size()) - 1; i >= 0; --i) p[i] = p[i + 1] + lambda[i];
    return p;
}

Weight partition_to_weight(const Partition& p, int rank) {
    Weight w(rank, 0);
    auto at = [&](int i) { return i < static_cast<int>(p.size()) ? p[i] : 0L; };
    for (int i = 0; i < rank; ++i) w[i] = at(i) - at(i + 1);
    return w;
}

namespace {

long part_at(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

struct LrSearch {
    const Partition& lam;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> fill;  // fill[r][c], 0 outside the skew shape
    std::vector<long> count;
    long found = 0;

    void place(std::size_t r, long c) {
        if (r == nu.size()) {
            ++found;
            return;
        }
        const long left = part_at(lam, r);
        if (c < left) {
            place(r + 1, part_at(nu, r + 1) - 1);
            return;
        }
        int hi = static_cast<int>(mu.size());
        if (c + 1 < nu[r]) hi = std::min(hi, fill[r][c + 1]);
        int lo = 1;
        if (r > 0 && c >= part_at(lam, r - 1)) lo = fill[r - 1][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (count[v] >= mu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            ++count[v];
            fill[r][c] = v;
            place(r, c - 1);
            fill[r][c] = 0;
            --count[v];
        }
    }
};

}  // namespace

long lr_coefficient(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
    Partition lam = trim(lambda_in), mu = trim(mu_in), nu = trim(nu_in);
    const long sl = std::accumulate(lam.begin(), lam.end(), 0L);
    const long sm = std::accumulate(mu.begin(), mu.end(), 0L);
    const long sn = std::accumulate(nu.begin(), nu.end(), 0L);
    if (sl + sm != sn) return 0;
    if (lam.size() > nu.size()) return 0;
    for (std::size_t i = 0; i < lam.size(); ++i)
        if (lam[i] > nu[i]) return 0;
    if (mu.empty()) return 1;
    LrSearch s{lam, mu, nu, {}, std::vector<long>(mu.size() + 1, 0)};
    for (long r : nu) s.fill.emplace_back(r, 0);
    s.place(0, nu[0] - 1);
    return s.found;
}

std::vector<std::pair<Partition, long>> lr_product(const Partition& lambda_in, const Partition& mu_in, int rows) {
    Partition lam = trim(lambda_in), mu = trim(mu_in);
    const long total = std::accumulate(lam.begin(), lam.end(), 0L) + std::accumulate(mu.begin(), mu.end(), 0L);
    const long m1 = mu.empty() ? 0 : mu[0];
    std::vector<std::pair<Partition, long>> out;
    Partition nu(rows, 0);
    std::function<void(int, long, long)> rec = [&](int i, long remaining, long cap) {
        if (i == rows) {
            if (remaining == 0) {
                long c = lr_coefficient(lam, mu, nu);
                if (c > 0) out.emplace_back(trim(nu), c);
            }
            return;
        }
        long lo = part_at(lam, i);
        long hi = std::min({cap, lo + m1, remaining});
        for (long v = hi; v >= lo; --v) {
            nu[i] = v;
            rec(i + 1, remaining - v, v);
        }
        nu[i] = 0;
    };
    rec(0, total, total);
    return out;
}

long multiplicity_bound(const ProblemInstance& piA, const Weight& lambda_inf) {
    if (piA.rd.kind != 'A') throw std::invalid_argument("multiplicity bound is computed for type A");
    if (!is_dominant(lambda_inf)) return 0;
    const int rows = piA.rd.rank + 1;
    std::map<Partition, long> dist{{Partition{}, 1}};
    for (const auto& w : piA.weights) {
        Partition p = trim(weight_to_partition(w));
        std::map<Partition, long> next;
        for (const auto& [nu, mult] : dist)
            for (const auto& [rho, c] : lr_product(nu, p, rows)) next[rho] += mult * c;
        dist = std::move(next);
    }
    Partition target = weight_to_partition(lambda_inf);
    long result = 0;
    for (const auto& [nu, mult] : dist) {
        Partition full(rows, 0);
        for (std::size_t i = 0; i < nu.size(); ++i) full[i] = nu[i];
        const long k = full[rows - 1];
        bool match = true;
        for (int i = 0; i < rows; ++i)
            if (full[i] - k != target[i]) match = false;
        if (match) result += mult;
    }
    return result;
}

namespace {

// B^D P(A/B) for deg P <= D.
Poly homogenized(const Poly& P, const Poly& A, const Poly& B, int D) {
    Poly out;
    for (int k = 0; k <= P.degree(); ++k)
        if (P.coeff(k) != 0) out += A.pow(k) * B.pow(D - k) * P.coeff(k);
    return out;
}

Poly strip(Poly q, const Poly& s) {
    if (s.is_zero()) return q;
    for (;;) {
        Poly g = gcd(q, s);
        if (g.degree() < 1) return q;
        q = exact_div(q, g);
    }
}

}  // namespace

std::optional<long> sl2_exact_count(const std::vector<long>& m, const std::vector<Rat>& z, int l) {
    if (m.size() != z.size()) throw std::invalid_argument("weights and points differ in length");
    if (l < 0 || l > 2) throw std::invalid_argument("exact counting is implemented for l <= 2");
    if (l == 0) return 1;
    Poly F(1), G;
    std::vector<Poly> lin;
    for (std::size_t s = 0; s < z.size(); ++s)
        if (m[s] > 0) lin.push_back(Poly::linear_root(z[s]));
    for (const auto& f : lin) F *= f;
    {
        std::size_t k = 0;
        for (std::size_t s = 0; s < z.size(); ++s) {
            if (m[s] <= 0) continue;
            G += exact_div(F, lin[k++]) * Rat(m[s]);
        }
    }
    if (l == 1) {
        if (G.is_zero()) return std::nullopt;
        Poly q = strip(squarefree_part(G), F);
        return q.degree();
    }
    // l = 2: y = (x - t1)(x - t2), b = -(t1 + t2)
    Poly x = Poly::x();
    Poly P0 = F * Rat(2) - x * G * Rat(2);
    Poly P1 = -G;
    if (P1.is_zero()) return std::nullopt;
    Poly A = P0 - x * P1;  // t2 = A / B
    const Poly& B = P1;
    const int D = std::max(P0.degree(), P1.degree());
    Poly Q = P1 * homogenized(P0, A, B, D) - P0 * homogenized(P1, A, B, D);
    if (Q.is_zero()) return std::nullopt;
    Poly q = squarefree_part(Q);
    q = strip(q, B);
    q = strip(q, F);
    q = strip(q, A - x * B);
    q = strip(q, homogenized(F, A, B, F.degree()));
    if (q.degree() % 2 != 0) throw std::logic_error("unpaired root in the two-root count");
    return q.degree() / 2;
}

CountReport population_count_vs_bound(const std::vector<long>& m, const std::vector<Rat>& z, int l) {
    std::vector<Weight> w;
    long M = 0;
    for (long v : m) {
        w.push_back({v});
        M += v;
    }
    ProblemInstance pi(RootData::make('A', 1), w, z);
    CountReport r;
    r.lambda_inf = M - 2 * l;
    r.counted_degree = l;
    if (r.lambda_inf == -1) {
        r.dominant = false;
        r.on_wall = true;
        r.exact = 0;
        r.bound = 0;
        return r;
    }
    if (r.lambda_inf < -1) {
        r.dominant = false;
        r.counted_degree = static_cast<int>(M + 1 - l);
    }
    const long dom = M - 2L * r.counted_degree;
    r.exact = sl2_exact_count(m, z, r.counted_degree);
    r.bound = multiplicity_bound(pi, {dom});
    return r;
}

std::vector<Rat> generic_points(int n, std::uint64_t seed) {
    Sampler rng(seed);
    std::vector<Rat> out;
    while (static_cast<int>(out.size()) < n) {
        Rat v(rng.integer(-1000, 1000));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

}  // namespace popcrit
