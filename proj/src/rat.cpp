#include "popcrit/rat.hpp"

#include <algorithm>
#include <stdexcept>

namespace popcrit {

Rat parse_rat(const std::string& s) {
    Rat q;
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '+') t.push_back(ch);
    if (t.empty() || q.set_str(t, 10) != 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

namespace {
std::optional<Int> int_root(const Int& n, unsigned k) {
    if (n < 0) return std::nullopt;
    Int r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
}
}  // namespace

std::optional<Rat> rat_root(const Rat& q, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return q;
    bool neg = q < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    Rat a = neg ? Rat(-q) : q;
    auto n = int_root(a.get_num(), k);
    auto d = int_root(a.get_den(), k);
    if (!n || !d) return std::nullopt;
    Rat r(*n, *d);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

std::vector<Rat> stern_brocot_schedule(std::size_t count) {
    std::vector<Rat> out;
    out.reserve(count);
    out.push_back(0);
    // Stern-Brocot tree, level by level, with each level sorted descending.
    std::vector<std::pair<Int, Int>> level{{1, 1}};
    std::vector<std::pair<Int, Int>> bounds_lo{{0, 1}}, bounds_hi{{1, 0}};
    while (out.size() < count) {
        std::vector<Rat> vals;
        for (auto& [p, q] : level) vals.emplace_back(p, q);
        std::sort(vals.begin(), vals.end(), [](const Rat& a, const Rat& b) { return a > b; });
        for (auto& v : vals) {
            if (out.size() >= count) break;
            out.push_back(v);
            if (out.size() >= count) break;
            out.push_back(-v);
        }
        std::vector<std::pair<Int, Int>> next, nlo, nhi;
        for (std::size_t i = 0; i < level.size(); ++i) {
            auto [p, q] = level[i];
            auto [lp, lq] = bounds_lo[i];
            auto [hp, hq] = bounds_hi[i];
            next.push_back({lp + p, lq + q});
            nlo.push_back({lp, lq});
            nhi.push_back({p, q});
            next.push_back({p + hp, q + hq});
            nlo.push_back({p, q});
            nhi.push_back({hp, hq});
        }
        level = std::move(next);
        bounds_lo = std::move(nlo);
        bounds_hi = std::move(nhi);
    }
    return out;
}

Rat Sampler::rational(int height) {
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    Rat r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
}

long Sampler::integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
}

}  // namespace popcrit
