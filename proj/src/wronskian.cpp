#include "popcrit/wronskian.hpp"

namespace popcrit {

Poly wronskian(const std::vector<Poly>& gs) {
    const int s = static_cast<int>(gs.size());
    if (s == 0) return Poly(1);
    std::vector<std::vector<Poly>> m(s, std::vector<Poly>(s));
    for (int i = 0; i < s; ++i) {
        m[i][0] = gs[i];
        for (int j = 1; j < s; ++j) m[i][j] = m[i][j - 1].derivative();
    }
    // Fraction-free Bareiss elimination; all divisions are exact in Q[x].
    Poly prev(1);
    bool neg = false;
    for (int k = 0; k + 1 < s; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < s; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Poly();
            std::swap(m[k], m[piv]);
            neg = !neg;
        }
        for (int i = k + 1; i < s; ++i)
            for (int j = k + 1; j < s; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return neg ? -m[s - 1][s - 1] : m[s - 1][s - 1];
}

Poly framing_factor(const std::vector<Poly>& Ts, int i) {
    Poly f(1);
    for (int j = 1; j < i; ++j) {
        if (j > static_cast<int>(Ts.size())) throw std::invalid_argument("framing too short");
        f *= Ts[j - 1].pow(i - j);
    }
    return f;
}

Poly divided_wronskian(const std::vector<Poly>& us, const std::vector<Poly>& Ts) {
    const int i = static_cast<int>(us.size());
    Poly w = wronskian(us);
    if (i <= 1) return w;
    try {
        return exact_div(w, framing_factor(Ts, i));
    } catch (const NotDivisible&) {
        throw NotDivisible("Wronskian not divisible by the framing product");
    }
}

Poly random_poly(Sampler& rng, int max_degree, int height) {
    int d = static_cast<int>(rng.integer(0, max_degree));
    std::vector<Rat> c(d + 1);
    for (auto& a : c) a = rng.rational(height);
    if (c[d] == 0) c[d] = 1;
    return Poly(std::move(c));
}

namespace {

std::string show(const std::vector<Poly>& ps) {
    std::string s = "[";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "; " : "") + ps[i].str();
    return s + "]";
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

IdentityReport identity_suite(std::uint64_t seed, int trials, int which) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    Sampler rng(seed);
    IdentityReport rep;
    auto fail = [&](const char* name, const std::string& ex) {
        if (!rep.ok) return;
        rep.ok = false;
        rep.failed_identity = name;
        rep.counterexample = ex;
    };
    auto gen = [&](int n) {
        std::vector<Poly> g;
        for (int i = 0; i < n; ++i) g.push_back(random_poly(rng, 5));
        return g;
    };
    for (int t = 0; t < trials; ++t) {
        if (which == 0 || which == 1) {
            int s = static_cast<int>(rng.integer(1, 4));
            auto g = gen(s);
            std::vector<Poly> lhs{Poly(1)}, d;
            for (auto& p : g) {
                lhs.push_back(p);
                d.push_back(p.derivative());
            }
            if (wronskian(lhs) != wronskian(d)) fail("1-wronskian", show(g));
            ++rep.checks;
        }
        if (which == 0 || which == 2) {
            int s = static_cast<int>(rng.integer(1, 4));
            auto g = gen(s);
            Poly f = random_poly(rng, 5);
            if (f.is_zero()) f = Poly(1);
            std::vector<Poly> fg;
            for (auto& p : g) fg.push_back(f * p);
            if (wronskian(fg) != f.pow(s) * wronskian(g)) fail("f-wronskian", show(g) + " f=" + f.str());
            ++rep.checks;
        }
        if (which == 0 || which == 3) {
            int s = static_cast<int>(rng.integer(1, 4));
            Poly f = random_poly(rng, 5), g = random_poly(rng, 5);
            std::vector<Poly> args;
            for (int i = 0; i <= s; ++i) args.push_back(f.pow(s - i) * g.pow(i));
            Int c = 1;
            for (int i = 1; i <= s; ++i) c *= factorial(i);
            Poly rhs = wronskian({f, g}).pow(s * (s + 1) / 2) * Rat(c);
            if (wronskian(args) != rhs) fail("fg-id", "f=" + f.str() + " g=" + g.str());
            ++rep.checks;
        }
        if (which == 0 || which == 4) {
            int s = static_cast<int>(rng.integer(1, 4));
            int k = static_cast<int>(rng.integer(0, s));
            auto g = gen(s + 1);
            std::vector<Poly> head(g.begin(), g.begin() + (s - k));
            std::vector<Poly> outer;
            for (int i = s - k + 1; i <= s + 1; ++i) {
                auto a = head;
                a.push_back(g[i - 1]);
                outer.push_back(wronskian(a));
            }
            Poly rhs = wronskian(head).pow(k) * wronskian(g);
            if (wronskian(outer) != rhs) fail("wr-id-2", show(g) + " k=" + std::to_string(k));
            ++rep.checks;
        }
        if (which == 0 || which == 5) {
            int s = static_cast<int>(rng.integer(1, 4));
            int k = static_cast<int>(rng.integer(0, s));
            auto g = gen(s + 1);
            auto omit = [&](int i) {
                std::vector<Poly> a;
                for (int j = 1; j <= s + 1; ++j)
                    if (j != i) a.push_back(g[j - 1]);
                return wronskian(a);
            };
            std::vector<Poly> outer;
            for (int i = s + 1; i >= s - k + 1; --i) outer.push_back(omit(i));
            std::vector<Poly> head(g.begin(), g.begin() + (s - k));
            Poly rhs = wronskian(head) * wronskian(g).pow(k);
            if (wronskian(outer) != rhs) fail("wr-id-1", show(g) + " k=" + std::to_string(k));
            ++rep.checks;
        }
    }
    return rep;
}

}  // namespace popcrit
