#include "popcrit/reproduction.hpp"

#include "popcrit/linalg.hpp"

#include <algorithm>
#include <future>

namespace popcrit {

std::optional<DescendantFamily> solve_wronskian_equation(const Poly& y, const Poly& R) {
    if (y.is_zero() || R.is_zero()) throw std::invalid_argument("Wronskian equation needs nonzero data");
    const int dy = y.degree();
    const int D = std::max(R.degree() + 1 - dy, dy) + 1;
    const int rows = dy + D + 1;
    RatMat a(rows, RatVec(D + 1, Rat(0)));
    Poly dyp = y.derivative();
    for (int k = 0; k <= D; ++k) {
        // L(x^k) = k y x^{k-1} - y' x^k
        Poly img = Poly::monomial(k) * -dyp;
        if (k > 0) img += Poly::monomial(k - 1, Rat(k)) * y;
        for (int r = 0; r <= img.degree(); ++r) a[r][k] = img.coeff(r);
    }
    RatVec b(rows, Rat(0));
    for (int r = 0; r <= R.degree(); ++r) b[r] = R.coeff(r);
    auto sol = solve_linear(a, b, D + 1);
    if (!sol) return std::nullopt;
    if (sol->kernel.size() != 1 || !proportional(Poly(sol->kernel[0]), y))
        throw std::logic_error("Wronskian operator kernel is not the line of y");
    Poly base(sol->particular);
    base -= y * (base.coeff(dy) / y.lead());
    DescendantFamily fam;
    fam.base = std::move(base);
    fam.fiber = y;
    fam.rhs = R;
    return fam;
}

DescendantFamily immediate_descendants(const ProblemInstance& pi, const TupleY& y, int i) {
    auto Ts = t_polys(pi);
    auto fam = solve_wronskian_equation(y[i], wronskian_rhs(pi, Ts, y, i));
    if (!fam) throw NotFertile("tuple is not fertile in direction " + std::to_string(i + 1));
    fam->direction = i;
    return *fam;
}

bool is_fertile(const ProblemInstance& pi, const TupleY& y) {
    auto Ts = t_polys(pi);
    for (int i = 0; i < pi.rd.rank; ++i)
        if (!solve_wronskian_equation(y[i], wronskian_rhs(pi, Ts, y, i))) return false;
    return true;
}

std::vector<Rat> parameter_schedule(std::uint64_t seed) {
    const std::size_t offset = seed % 8;
    auto all = stern_brocot_schedule(kRetryCap + offset);
    return std::vector<Rat>(all.begin() + offset, all.end());
}

std::optional<std::pair<Rat, TupleY>> sample_generic_member(const ProblemInstance& pi, const std::vector<Poly>& Ts,
                                                            const TupleY& y, const DescendantFamily& fam,
                                                            std::uint64_t seed, bool nonzero) {
    const int i = fam.direction;
    for (const Rat& c : parameter_schedule(seed)) {
        if (nonzero && c == 0) continue;
        Poly m = fam.member(c);
        if (m.degree() != std::max(fam.base.degree(), fam.fiber.degree())) continue;
        TupleY cand = y;
        cand[i] = m.monic();
        if (is_generic_at(pi, Ts, cand, i)) return std::make_pair(c, cand);
    }
    return std::nullopt;
}

std::set<std::vector<long>> PopulationAtlas::degree_set() const {
    std::set<std::vector<long>> s;
    for (const auto& [l, m] : members) s.insert(l);
    return s;
}

namespace {

struct StepResult {
    std::vector<long> to;
    bool has_member = false;
    bool failed = false;
    AtlasMember member;
};

bool within_cap(const std::vector<long>& l, int cap) {
    return std::all_of(l.begin(), l.end(), [&](long v) { return v <= cap; });
}

StepResult explore_step(const ProblemInstance& pi, const std::vector<Poly>& Ts, const AtlasMember& from, int i,
                        const ExploreOptions& opt) {
    StepResult res;
    const TupleY& y = from.y;
    auto fam = solve_wronskian_equation(y[i], wronskian_rhs(pi, Ts, y, i));
    if (!fam) throw NotFertile("atlas member is not fertile in direction " + std::to_string(i + 1));
    fam->direction = i;
    auto l = degrees(y);
    res.to = l;
    res.to[i] = fam->other_degree();
    // Degree-change law: the weight at infinity moves by s_i.
    Weight before = weight_at_infinity(pi, l), after = weight_at_infinity(pi, res.to);
    if (after != shifted_action(pi.rd, weyl_generator(pi.rd, i), before))
        throw std::logic_error("degree change violates the shifted reflection law");
    if (!within_cap(res.to, opt.max_degree)) return res;

    auto record = [&](TupleY t, std::vector<PathStep> extra) {
        res.has_member = true;
        res.member.y = std::move(t);
        res.member.path = from.path;
        res.member.path.insert(res.member.path.end(), extra.begin(), extra.end());
    };
    if (fam->other_degree() > y[i].degree()) {
        if (auto s = sample_generic_member(pi, Ts, y, *fam, opt.seed)) {
            record(s->second, {{i, to_string(s->first)}});
        } else {
            res.failed = true;
        }
        return res;
    }
    // The unique lower-degree member of the line.
    TupleY cand = y;
    cand[i] = fam->base.monic();
    if (is_generic_at(pi, Ts, cand, i)) {
        record(cand, {{i, "low"}});
        return res;
    }
    // Perturb inside the current cell along another direction, then descend.
    auto sched = parameter_schedule(opt.seed);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        int j = attempt % pi.rd.rank;
        if (j == i) continue;
        auto fj = solve_wronskian_equation(y[j], wronskian_rhs(pi, Ts, y, j));
        if (!fj || fj->base.degree() > y[j].degree()) continue;
        fj->direction = j;
        Rat c = sched[(attempt / pi.rd.rank) % sched.size()];
        if (c == 0) continue;
        TupleY moved = y;
        moved[j] = fj->member(c).monic();
        if (!is_generic_at(pi, Ts, moved, j)) continue;
        auto fi = solve_wronskian_equation(moved[i], wronskian_rhs(pi, Ts, moved, i));
        if (!fi) continue;
        TupleY down = moved;
        down[i] = fi->base.monic();
        if (down[i].degree() != res.to[i] || !is_generic_at(pi, Ts, down, i)) continue;
        record(down, {{j, to_string(c)}, {i, "low"}});
        return res;
    }
    res.failed = true;
    return res;
}

}  // namespace

PopulationAtlas explore_population(const ProblemInstance& pi, const TupleY& y0, const ExploreOptions& opt) {
    const int r = pi.rd.rank;
    auto Ts = t_polys(pi);
    TupleY start = normalize(y0);
    if (!heine_stieltjes_test(pi, start)) throw NotFertile("starting tuple is not critical");
    PopulationAtlas atlas;
    atlas.start_weight = weight_at_infinity(pi, start);
    auto l0 = degrees(start);
    atlas.members[l0] = AtlasMember{start, {}};
    std::vector<std::vector<long>> frontier{l0};
    std::set<std::vector<long>> failed;
    const int jobs = std::max(1, opt.jobs);

    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<std::pair<std::vector<long>, int>> tasks;
        for (const auto& l : frontier)
            for (int i = 0; i < r; ++i) tasks.push_back({l, i});
        std::vector<StepResult> results(tasks.size());
        auto run = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t t = lo; t < hi; ++t)
                results[t] = explore_step(pi, Ts, atlas.members.at(tasks[t].first), tasks[t].second, opt);
        };
        if (jobs == 1 || tasks.size() < 2) {
            run(0, tasks.size());
        } else {
            std::vector<std::future<void>> futs;
            std::size_t chunk = (tasks.size() + jobs - 1) / jobs;
            for (std::size_t lo = 0; lo < tasks.size(); lo += chunk)
                futs.push_back(std::async(std::launch::async, run, lo, std::min(tasks.size(), lo + chunk)));
            for (auto& f : futs) f.get();
        }
        std::vector<std::vector<long>> next;
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            auto& res = results[t];
            if (!within_cap(res.to, opt.max_degree)) continue;
            atlas.edges.push_back({tasks[t].first, tasks[t].second, res.to});
            if (atlas.members.count(res.to)) continue;
            if (!res.has_member) {
                if (res.failed) failed.insert(res.to);
                continue;
            }
            if (opt.verify_members && !heine_stieltjes_test(pi, res.member.y))
                throw std::logic_error("generated member fails the divisibility criterion");
            atlas.members[res.to] = std::move(res.member);
            failed.erase(res.to);
            next.push_back(res.to);
        }
        frontier = std::move(next);
    }
    for (const auto& l : failed)
        if (!atlas.members.count(l))
            throw NonGenericExhausted("no generic member found for degree vector " + degree_str(l));
    return atlas;
}

TupleY replay_path(const ProblemInstance& pi, const TupleY& y0, const std::vector<PathStep>& path) {
    TupleY y = normalize(y0);
    for (const auto& st : path) {
        auto fam = immediate_descendants(pi, y, st.direction);
        y[st.direction] = (st.param == "low" ? fam.base : fam.member(parse_rat(st.param))).monic();
    }
    return y;
}

std::optional<std::vector<long>> root_coordinates(const RootData& rd, const Weight& v) {
    // sum_i l_i a_ji = v_j
    RatMat m(rd.rank, RatVec(rd.rank));
    for (int j = 0; j < rd.rank; ++j)
        for (int i = 0; i < rd.rank; ++i) m[j][i] = rd.cartan[j][i];
    auto inv = inverse(m);
    std::vector<long> l(rd.rank);
    for (int i = 0; i < rd.rank; ++i) {
        Rat s = 0;
        for (int j = 0; j < rd.rank; ++j) s += (*inv)[i][j] * v[j];
        if (s.get_den() != 1) return std::nullopt;
        l[i] = s.get_num().get_si();
    }
    return l;
}

std::optional<WeylElement> degree_vector_to_weyl(const ProblemInstance& pi, const WeylGroup& group,
                                                 const Weight& lambda_inf, const std::vector<long>& l) {
    Weight target = weight_at_infinity(pi, l);
    for (const auto& w : group.elements())
        if (shifted_action(pi.rd, w, lambda_inf) == target) return w;
    return std::nullopt;
}

std::set<std::vector<long>> predicted_degree_vectors(const ProblemInstance& pi, const WeylGroup& group,
                                                     const Weight& lambda_inf, int cap) {
    std::set<std::vector<long>> out;
    Weight total = pi.weight_sum();
    for (const auto& w : group.elements()) {
        auto l = root_coordinates(pi.rd, sub(total, shifted_action(pi.rd, w, lambda_inf)));
        if (!l) continue;
        if (std::all_of(l->begin(), l->end(), [&](long v) { return v >= 0 && v <= cap; })) out.insert(*l);
    }
    return out;
}

std::string degree_str(const std::vector<long>& l) { return weight_str(l); }

}  // namespace popcrit
