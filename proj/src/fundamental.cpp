#include "popcrit/fundamental.hpp"

#include "popcrit/linalg.hpp"
#include "popcrit/reproduction.hpp"
#include "popcrit/wronskian.hpp"

#include <algorithm>
#include <functional>

namespace popcrit {

PolySpace PolySpace::span(const std::vector<Poly>& gens) {
    int d = -1;
    for (const auto& g : gens) d = std::max(d, g.degree());
    PolySpace s;
    if (d < 0) return s;
    // Column c holds the coefficient of x^{d-c}.
    RatMat m;
    for (const auto& g : gens) {
        RatVec row(d + 1, Rat(0));
        for (int k = 0; k <= g.degree(); ++k) row[d - k] = g.coeff(k);
        m.push_back(std::move(row));
    }
    Rref rr = rref(std::move(m), d + 1);
    for (const auto& row : rr.m) {
        std::vector<Rat> c(d + 1);
        for (int k = 0; k <= d; ++k) c[k] = row[d - k];
        s.basis_.emplace_back(std::move(c));
    }
    return s;
}

std::vector<int> PolySpace::degrees_ascending() const {
    std::vector<int> d;
    for (auto it = basis_.rbegin(); it != basis_.rend(); ++it) d.push_back(it->degree());
    return d;
}

Poly PolySpace::reduce(const Poly& p) const {
    Poly r = p;
    for (const auto& b : basis_) {
        Rat c = r.coeff(b.degree());
        if (c != 0) r -= b * c;
    }
    return r;
}

bool PolySpace::contains(const Poly& p) const { return reduce(p).is_zero(); }

Flag Flag::canonical(const std::vector<Poly>& basis) {
    Flag f;
    for (const auto& b : basis) {
        Poly u = b;
        for (const auto& prev : f.u) {
            Rat c = u.coeff(prev.degree());
            if (c != 0) u -= prev * c;
        }
        if (u.is_zero()) throw std::invalid_argument("flag basis is linearly dependent");
        f.u.push_back(u.monic());
    }
    return f;
}

namespace {

// u_i of the recursion for the tuple y (1-based i).
Poly recursive_u(const ProblemInstance& pi, const std::vector<Poly>& Ts, const TupleY& y, int i,
                 std::uint64_t seed) {
    if (i == 1) return y[0];
    if (i == 2) {
        auto fam = solve_wronskian_equation(y[0], Ts[0] * (pi.rd.rank > 1 ? y[1] : Poly(1)));
        if (!fam) throw ConstructionFailed("first Wronskian equation has no polynomial solution");
        return fam->base;
    }
    const int dir = i - 2;  // 0-based direction of the sibling
    auto fam = solve_wronskian_equation(y[dir], wronskian_rhs(pi, Ts, y, dir));
    if (!fam) throw ConstructionFailed("tuple not fertile in direction " + std::to_string(dir + 1));
    fam->direction = dir;
    auto sib = sample_generic_member(pi, Ts, y, *fam, seed);
    if (!sib) throw ConstructionFailed("no generic sibling within the retry cap");
    return recursive_u(pi, Ts, sib->second, i - 1, seed);
}

}  // namespace

FundamentalData fundamental_space(const ProblemInstance& pi, const TupleY& y_in, std::uint64_t seed) {
    if (pi.rd.kind != 'A') throw std::invalid_argument("fundamental space is built for type A data");
    const int N = pi.rd.rank;
    auto Ts = t_polys(pi);
    TupleY y = normalize(y_in);
    FundamentalData out;
    for (int i = 1; i <= N + 1; ++i) out.u.push_back(recursive_u(pi, Ts, y, i, seed));
    for (int i = 1; i <= N + 1; ++i) {
        std::vector<Poly> head(out.u.begin(), out.u.begin() + i);
        Poly expect = (i <= N ? y[i - 1] : Poly(1)) * framing_factor(Ts, i);
        if (!proportional(wronskian(head), expect))
            throw ConstructionFailed("W(u_1..u_" + std::to_string(i) + ") is not y_i times the T-product");
    }
    out.space = PolySpace::span(out.u);
    if (out.space.dim() != N + 1) throw ConstructionFailed("constructed polynomials are dependent");
    return out;
}

RatFunc::RatFunc(Poly n, Poly d) {
    if (d.is_zero()) throw std::domain_error("zero denominator");
    if (n.is_zero()) {
        num = Poly();
        den = Poly(1);
        return;
    }
    Poly g = gcd(n, d);
    num = exact_div(n, g);
    den = exact_div(d, g);
    Rat lc = den.lead();
    num *= 1 / lc;
    den *= 1 / lc;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num.derivative() * den - num * den.derivative(), den * den);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.num, a.den * b.den); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFunc LogFactor::log_derivative() const {
    return RatFunc(num.derivative(), num) - RatFunc(den.derivative(), den);
}

RatFunc apply_factors(const std::vector<LogFactor>& factors, const Poly& u) {
    RatFunc phi(u, Poly(1));
    for (const auto& f : factors) {
        if (phi.is_zero()) break;
        phi = phi.derivative() - f.log_derivative() * phi;
    }
    return phi;
}

std::vector<LogFactor> dp_factors(const std::vector<Poly>& Ts, const TupleY& y) {
    const int N = static_cast<int>(y.size());
    auto yy = [&](int k) { return (k == 0 || k == N + 1) ? Poly(1) : y[k - 1]; };
    std::vector<LogFactor> fs;
    Poly tprod(1);
    for (int k = 0; k <= N; ++k) {
        if (k > 0) tprod *= Ts[k - 1];
        fs.push_back({yy(k + 1) * tprod, yy(k)});
    }
    return fs;
}

bool annihilates(const std::vector<LogFactor>& factors, const PolySpace& space) {
    for (const auto& b : space.basis())
        if (!apply_factors(factors, b).is_zero()) return false;
    return true;
}

DpReport verify_dp(const ProblemInstance& pi, const std::vector<TupleY>& members, const std::vector<PolySpace>& spaces) {
    DpReport rep;
    for (std::size_t k = 1; k < spaces.size(); ++k)
        if (spaces[k] != spaces[0]) rep.spaces_equal = false;
    auto Ts = t_polys(pi);
    for (std::size_t k = 0; k < members.size() && k < spaces.size(); ++k)
        if (!annihilates(dp_factors(Ts, normalize(members[k])), spaces[k])) rep.factors_annihilate = false;
    return rep;
}

std::vector<int> exponents_at(const PolySpace& space, const Rat& z) {
    const int d = space.max_degree();
    RatMat m;
    for (const auto& b : space.basis()) {
        Poly s = b.shift(z);
        RatVec row(d + 1, Rat(0));
        for (int k = 0; k <= s.degree(); ++k) row[k] = s.coeff(k);
        m.push_back(std::move(row));
    }
    Rref rr = rref(std::move(m), d + 1);
    return rr.pivots;
}

std::vector<int> exponents_at_infinity(const PolySpace& space) { return space.degrees_ascending(); }

std::vector<int> expected_exponents_finite(const Weight& lambda) {
    std::vector<int> e{0};
    for (long v : lambda) e.push_back(e.back() + static_cast<int>(v) + 1);
    return e;
}

std::vector<int> expected_exponents_infinity(long l1, const Weight& lambda_inf) {
    std::vector<int> e{static_cast<int>(l1)};
    for (long v : lambda_inf) e.push_back(e.back() + static_cast<int>(v) + 1);
    return e;
}

Flag degree_flag(const PolySpace& space) {
    std::vector<Poly> b(space.basis().rbegin(), space.basis().rend());
    return Flag::canonical(b);
}

TupleY generating_morphism_raw(const Flag& flag, const std::vector<Poly>& Ts) {
    TupleY y;
    for (std::size_t i = 1; i < flag.u.size(); ++i) {
        std::vector<Poly> head(flag.u.begin(), flag.u.begin() + i);
        y.push_back(divided_wronskian(head, Ts));
    }
    return y;
}

TupleY generating_morphism(const Flag& flag, const std::vector<Poly>& Ts) {
    return normalize(generating_morphism_raw(flag, Ts));
}

Flag flag_from_tuple(const PolySpace& space, const TupleY& y_in, const std::vector<Poly>& Ts) {
    const int dim = space.dim();
    TupleY y = normalize(y_in);
    if (static_cast<int>(y.size()) != dim - 1) throw NotInImage("tuple length does not match the space");
    if (!space.contains(y[0])) throw NotInImage("y_1 is not in the space");
    std::vector<Poly> u{y[0]};
    const auto& B = space.basis();
    for (int i = 1; i + 1 < dim; ++i) {
        Poly target = y[i] * framing_factor(Ts, i + 1);
        std::vector<Poly> images;
        int deg = target.degree();
        for (const auto& b : B) {
            auto args = u;
            args.push_back(b);
            images.push_back(wronskian(args));
            deg = std::max(deg, images.back().degree());
        }
        // sum_k c_k W(u, b_k) - lambda * target = 0
        RatMat m(deg + 1, RatVec(dim + 1, Rat(0)));
        for (int k = 0; k < dim; ++k)
            for (int r = 0; r <= images[k].degree(); ++r) m[r][k] = images[k].coeff(r);
        for (int r = 0; r <= target.degree(); ++r) m[r][dim] = -target.coeff(r);
        auto ker = nullspace(m, dim + 1);
        const RatVec* pick = nullptr;
        for (const auto& v : ker)
            if (v[dim] != 0) {
                pick = &v;
                break;
            }
        if (!pick) throw NotInImage("no flag step reproduces y_" + std::to_string(i + 1));
        Poly next;
        for (int k = 0; k < dim; ++k) next += B[k] * (*pick)[k];
        u.push_back(next);
    }
    PolySpace partial = PolySpace::span(u);
    for (const auto& b : B)
        if (!partial.contains(b)) {
            u.push_back(b);
            break;
        }
    Flag f = Flag::canonical(u);
    if (generating_morphism(f, Ts) != y) throw NotInImage("reconstructed flag does not reproduce the tuple");
    return f;
}

Flag random_flag(const PolySpace& space, Sampler& rng) {
    const int dim = space.dim();
    for (;;) {
        RatMat m(dim, RatVec(dim));
        for (auto& row : m)
            for (auto& v : row) v = rng.rational(4);
        if (determinant(m) == 0) continue;
        std::vector<Poly> u;
        for (int i = 0; i < dim; ++i) {
            Poly p;
            for (int k = 0; k < dim; ++k) p += space.basis()[k] * m[i][k];
            u.push_back(p);
        }
        return Flag::canonical(u);
    }
}

BruhatData bruhat_index(const ProblemInstance& pi, const PolySpace& space, const Flag& flag, const WeylGroup& group) {
    auto Ts = t_polys(pi);
    auto delta = space.degrees_ascending();
    BruhatData out;
    for (const auto& u : flag.u) {
        auto it = std::find(delta.begin(), delta.end(), u.degree());
        if (it == delta.end()) throw std::logic_error("flag element degree not realized by the space");
        out.w.push_back(static_cast<int>(it - delta.begin()) + 1);
    }
    out.l = degrees(generating_morphism(flag, Ts));
    auto ldom = degrees(generating_morphism(degree_flag(space), Ts));
    out.dominant_inf = weight_at_infinity(pi, ldom);
    for (const auto& e : group.elements())
        if (a_weyl_to_perm(pi.rd, e) == out.w) {
            out.weyl = e;
            out.degree_law_holds = weight_at_infinity(pi, out.l) == shifted_action(pi.rd, e, out.dominant_inf);
            break;
        }
    return out;
}

std::vector<Poly> space_framing(const PolySpace& space) {
    const int dim = space.dim();
    const auto& B = space.basis();
    std::vector<Poly> G(dim + 1, Poly(1));
    for (int i = 1; i <= dim; ++i) {
        Poly g;
        std::vector<int> idx(i);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == i) {
                std::vector<Poly> args;
                for (int k : idx) args.push_back(B[k]);
                g = gcd(g, wronskian(args));
                return;
            }
            for (int k = start; k < dim; ++k) {
                idx[depth] = k;
                rec(k + 1, depth + 1);
            }
        };
        rec(0, 0);
        G[i] = g;
    }
    // G_{i+1} / G_i = T_1 ... T_i
    std::vector<Poly> P(dim, Poly(1)), Ts;
    for (int i = 1; i < dim; ++i) P[i] = exact_div(G[i + 1], G[i]);
    for (int i = 1; i < dim; ++i) Ts.push_back(exact_div(P[i], P[i - 1]).monic());
    return Ts;
}

bool has_base_point(const PolySpace& space, const Rat& z) {
    for (const auto& b : space.basis())
        if (b.eval(z) != 0) return false;
    return true;
}

}  // namespace popcrit
