#include "popcrit/bc.hpp"

#include "popcrit/wronskian.hpp"

namespace popcrit {

FoldedTuple fold(const TupleY& y, char kind) {
    const int n = static_cast<int>(y.size());
    FoldedTuple f{y, {}};
    if (kind == 'B') {
        for (int i = 0; i < n; ++i) f.folded.push_back(y[i]);
        for (int i = n - 2; i >= 0; --i) f.folded.push_back(y[i]);
    } else if (kind == 'C') {
        for (int i = 0; i < n - 1; ++i) f.folded.push_back(y[i]);
        f.folded.push_back(y[n - 1] * y[n - 1]);
        f.folded.push_back(y[n - 1] * y[n - 1]);
        for (int i = n - 2; i >= 0; --i) f.folded.push_back(y[i]);
    } else {
        throw std::invalid_argument("fold needs B or C");
    }
    return f;
}

TupleY unfold(const TupleY& yA, char kind) {
    const int m = static_cast<int>(yA.size());
    for (int i = 0; i < m; ++i)
        if (!proportional(yA[i], yA[m - 1 - i])) throw std::invalid_argument("tuple is not symmetric");
    TupleY y;
    if (kind == 'B') {
        if (m % 2 == 0) throw std::invalid_argument("B-folded tuples have odd length");
        for (int i = 0; i <= m / 2; ++i) y.push_back(yA[i].monic());
    } else {
        if (m % 2 == 1) throw std::invalid_argument("C-folded tuples have even length");
        for (int i = 0; i < m / 2 - 1; ++i) y.push_back(yA[i].monic());
        auto r = poly_sqrt(yA[m / 2 - 1].monic());
        if (!r) throw std::invalid_argument("middle coordinate is not a square");
        y.push_back(r->monic());
    }
    return y;
}

std::vector<long> fold_degrees(const std::vector<long>& l, char kind) {
    const int n = static_cast<int>(l.size());
    std::vector<long> r;
    if (kind == 'B') {
        for (int i = 0; i < n; ++i) r.push_back(l[i]);
        for (int i = n - 2; i >= 0; --i) r.push_back(l[i]);
    } else {
        for (int i = 0; i < n - 1; ++i) r.push_back(l[i]);
        r.push_back(2 * l[n - 1]);
        r.push_back(2 * l[n - 1]);
        for (int i = n - 2; i >= 0; --i) r.push_back(l[i]);
    }
    return r;
}

namespace {

bool all_directions_solvable(const ProblemInstance& pi, const TupleY& y) {
    auto Ts = t_polys(pi);
    for (int i = 0; i < pi.rd.rank; ++i)
        if (!solve_wronskian_equation(y[i], wronskian_rhs(pi, Ts, y, i))) return false;
    return true;
}

bool a_critical(const ProblemInstance& piA, const TupleY& y) {
    if (!is_generic(piA, y)) return false;
    return all_directions_solvable(piA, y);
}

}  // namespace

bool bc_critical_test(const ProblemInstance& pi, const TupleY& y_in) {
    if (pi.rd.kind != 'B' && pi.rd.kind != 'C') throw std::invalid_argument("B or C data expected");
    TupleY y = normalize(y_in);
    if (!is_generic(pi, y)) return false;
    bool wr = all_directions_solvable(pi, y);
    if (wr != heine_stieltjes_test(pi, y)) throw std::logic_error("criticality tests disagree");
    return wr;
}

BridgeTuples c_bridge_tuples(const ProblemInstance& pi, const TupleY& y_in, const Poly& yt, const Rat& c) {
    if (pi.rd.kind != 'C') throw std::invalid_argument("bridge tuples are defined for C data");
    if (c == 0) throw std::invalid_argument("bridge parameter must be nonzero");
    TupleY y = normalize(y_in);
    const int n = pi.rd.rank;
    auto Ts = t_polys(pi);
    const Poly& yn = y[n - 1];
    Poly prev = n >= 2 ? y[n - 2] : Poly(1);
    if (wronskian({yn, yt}) != Ts[n - 1] * prev) throw std::invalid_argument("ytilde does not solve the last equation");
    BridgeTuples b;
    b.c = c;
    b.first = fold(y, 'C').folded;
    b.first[n - 1] = yn * yt;
    b.second = b.first;
    b.second[n] = yn * yn + yt * yt * c;
    if (wronskian({yn * yn, yn * yt}) != Ts[n - 1] * prev * yn * yn ||
        wronskian({yn * yn, b.second[n]}) != Ts[n - 1] * prev * yn * yt * (2 * c))
        throw std::logic_error("bridge Wronskian identities fail");
    return b;
}

std::optional<BridgeTuples> critical_bridge(const ProblemInstance& pi, const TupleY& y_in, std::uint64_t seed) {
    TupleY y = normalize(y_in);
    const int n = pi.rd.rank;
    auto Ts = t_polys(pi);
    auto fam = solve_wronskian_equation(y[n - 1], wronskian_rhs(pi, Ts, y, n - 1));
    if (!fam) return std::nullopt;
    auto piA = pi.folded();
    // c = 1 first, then the seeded schedule; the companion ytilde_N also runs over its family.
    std::vector<Rat> cs{Rat(1)};
    for (const auto& c : parameter_schedule(seed))
        if (c != 0 && c != 1) cs.push_back(c);
    auto shifts = parameter_schedule(seed);
    int tries = 0;
    for (std::size_t a = 0; a < shifts.size(); ++a) {
        for (std::size_t b = 0; b < 8 && b < cs.size(); ++b) {
            if (++tries > kRetryCap) return std::nullopt;
            auto br = c_bridge_tuples(pi, y, fam->member(shifts[a]), cs[b]);
            if (a_critical(piA, normalize(br.second))) return br;
        }
    }
    return std::nullopt;
}

bool folded_critical(const ProblemInstance& pi, const TupleY& y_in, std::uint64_t seed) {
    TupleY y = normalize(y_in);
    auto piA = pi.folded();
    auto yA = fold(y, pi.rd.kind).folded;
    if (pi.rd.kind == 'B') return a_critical(piA, yA);
    if (!all_directions_solvable(piA, yA)) return false;
    return critical_bridge(pi, y, seed).has_value();
}

BCSpace bc_fundamental_space(const ProblemInstance& pi, const TupleY& y_in, std::uint64_t seed) {
    TupleY y = normalize(y_in);
    if (!bc_critical_test(pi, y)) throw std::invalid_argument("tuple is not critical");
    auto piA = pi.folded();
    BCSpace out;
    if (pi.rd.kind == 'B') {
        out.seed_tuple = fold(y, 'B').folded;
    } else {
        auto b = critical_bridge(pi, y, seed);
        if (!b) throw ConstructionFailed("no critical bridge tuple within the retry cap");
        out.seed_tuple = normalize(b->second);
    }
    out.space = fundamental_space(piA, out.seed_tuple, seed).space;
    out.Ts = t_polys(piA);
    out.selfdual = is_selfdual(out.space, out.Ts);
    if (!out.selfdual) throw ConstructionFailed("folded fundamental space is not selfdual");
    out.gram = gram(out.space, out.Ts);
    return out;
}

std::vector<LogFactor> bc_dp_factors(char kind, const std::vector<Poly>& Ts, const TupleY& y) {
    const int n = static_cast<int>(y.size());
    auto yy = [&](int k) { return k == 0 ? Poly(1) : y[k - 1]; };
    auto tp = [&](int hi) {
        Poly p(1);
        for (int j = 1; j <= hi; ++j) p *= Ts[j - 1];
        return p;
    };
    std::vector<LogFactor> fs;
    if (kind == 'B') {
        Poly big = tp(n - 1) * tp(n - 1) * Ts[n - 1];
        for (int k = 0; k < n; ++k) fs.push_back({yy(k + 1) * tp(k), yy(k)});
        for (int j = n; j >= 1; --j) fs.push_back({yy(j - 1) * big, yy(j) * tp(j - 1)});
    } else {
        Poly big = tp(n) * tp(n);
        for (int k = 0; k < n - 1; ++k) fs.push_back({yy(k + 1) * tp(k), yy(k)});
        fs.push_back({y[n - 1] * y[n - 1] * tp(n - 1), yy(n - 1)});
        fs.push_back({tp(n), Poly(1)});
        fs.push_back({yy(n - 1) * big, y[n - 1] * y[n - 1] * tp(n - 1)});
        for (int j = n - 1; j >= 1; --j) fs.push_back({yy(j - 1) * big, yy(j) * tp(j - 1)});
    }
    return fs;
}

bool IsotropicSampleReport::ok() const {
    return samples > 0 && critical == generic && symmetric == samples && dp_ok == dp_checked &&
           (square_middle == 0 || square_middle == samples);
}

namespace {

bool same_operator(const std::vector<LogFactor>& a, const std::vector<LogFactor>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto fa = a[k].log_derivative(), fb = b[k].log_derivative();
        if (!(fa - fb).is_zero()) return false;
    }
    return true;
}

}  // namespace

IsotropicSampleReport bc_population_as_isotropic_flags(const ProblemInstance& pi, const BCSpace& V, int samples,
                                                       std::uint64_t seed) {
    const char kind = pi.rd.kind;
    const int n = pi.rd.rank;
    auto TsN = t_polys(pi);
    Sampler rng(seed);
    IsotropicSampleReport rep;
    auto start = antidiagonal_adjusted_basis(degree_flag(V.space), V.Ts);
    const int k = V.space.dim() / 2;
    for (int s = 0; s < samples; ++s) {
        std::vector<Poly> u = start;
        const int steps = s == 0 ? 0 : static_cast<int>(rng.integer(1, 4));
        for (int t = 0; t < steps; ++t) {
            int i = static_cast<int>(rng.integer(1, k));
            Rat c = rng.rational(3);
            u = isotropic_family(Flag{u}, V.Ts, i).basis_at(c);
        }
        Flag f{u};
        if (!is_isotropic(V.space, V.Ts, f)) throw std::logic_error("generator left the isotropic flags");
        TupleY yA = normalize(generating_morphism_raw(f, V.Ts));
        ++rep.samples;
        if (!is_symmetric_tuple(yA)) continue;
        ++rep.symmetric;
        if (kind == 'C') {
            if (!poly_sqrt(yA[n - 1]) || yA[n - 1] != yA[n]) continue;
            ++rep.square_middle;
        }
        TupleY y = unfold(yA, kind);
        rep.tuples.push_back(y);
        if (!is_generic(pi, y)) continue;
        ++rep.generic;
        if (bc_critical_test(pi, y)) ++rep.critical;
        if (rep.dp_checked < 3) {
            ++rep.dp_checked;
            auto fs = bc_dp_factors(kind, TsN, y);
            bool ok = annihilates(fs, V.space) && same_operator(fs, dp_factors(V.Ts, fold(y, kind).folded));
            if (ok) ++rep.dp_ok;
        }
    }
    return rep;
}

DegreeLawReport bc_degree_law(const ProblemInstance& pi, const PopulationAtlas& atlas) {
    const char kind = pi.rd.kind;
    const int n = pi.rd.rank;
    WeylGroup group(pi.rd);
    auto piA = pi.folded();
    WeylGroup groupA(piA.rd);
    DegreeLawReport rep;
    // The starting tuple is the lowest-degree member.
    auto lowest = atlas.members.begin()->first;
    for (const auto& [l, m] : atlas.members) {
        long s = 0, s0 = 0;
        for (long v : l) s += v;
        for (long v : lowest) s0 += v;
        if (s < s0) lowest = l;
    }
    Weight inf = weight_at_infinity(pi, lowest);
    Weight infA = weight_at_infinity(piA, fold_degrees(lowest, kind));
    std::set<IntMat> seen;
    for (const auto& [l, m] : atlas.members) {
        ++rep.vectors;
        auto w = degree_vector_to_weyl(pi, group, inf, l);
        if (!w) continue;
        ++rep.matched;
        seen.insert(w->matrix);
        auto wA = degree_vector_to_weyl(piA, groupA, infA, fold_degrees(l, kind));
        if (!wA || a_weyl_to_perm(piA.rd, *wA) != folded_weyl_embed(kind, n, *w)) rep.folded_match = false;
    }
    rep.distinct_elements = static_cast<int>(seen.size());
    return rep;
}

}  // namespace popcrit
