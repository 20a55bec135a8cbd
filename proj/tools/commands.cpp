#include "commands.hpp"

#include "popcrit/schubert.hpp"
#include "popcrit/wronskian.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numeric>
#include <iostream>
#include <sstream>

namespace popcrit::cli {

namespace {

std::string pretty(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = a == 1 && k > 0;
        if (!unit) s += a.get_str();
        if (k > 0) {
            if (!unit) s += "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

std::string tuple_pretty(const TupleY& y) {
    std::string s = "(";
    for (std::size_t i = 0; i < y.size(); ++i) s += (i ? ", " : "") + pretty(y[i]);
    return s + ")";
}

std::string ints(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string word_str(const std::vector<int>& w) {
    if (w.empty()) return "e";
    std::string s;
    for (int g : w) s += "s" + std::to_string(g + 1);
    return s;
}

std::string matrix_str(const RatMatrix& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.size(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < g[i].size(); ++j) s += (j ? " " : "") + to_string(g[i][j]);
    }
    return s + "]";
}

ojson poly_list(const std::vector<Poly>& ps) {
    ojson a = ojson::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

TupleY start_tuple(const RunConfig& cfg) {
    if (cfg.tuple) return normalize(*cfg.tuple);
    return TupleY(cfg.pi.rd.rank, Poly(1));
}

Rat json_rat(const ojson& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw ConfigError("points must be integers or rational strings");
}

// Lowest-degree member: its weight at infinity is dominant.
std::vector<long> lowest_member(const PopulationAtlas& atlas) {
    auto best = atlas.members.begin()->first;
    auto sum = [](const std::vector<long>& l) { return std::accumulate(l.begin(), l.end(), 0L); };
    for (const auto& [l, m] : atlas.members)
        if (sum(l) < sum(best)) best = l;
    return best;
}

}  // namespace

std::uint64_t RunConfig::require_seed() const {
    if (!seed) throw ConfigError("this command samples; a seed is required (config \"seed\" or --seed)");
    return *seed;
}

RunConfig parse_config(const ojson& j, const Overrides& o) {
    RunConfig c;
    try {
        if (!j.contains("root_system")) throw ConfigError("missing \"root_system\"");
        RootData rd = RootData::parse(j.at("root_system").get<std::string>());
        std::vector<Weight> weights;
        std::vector<Rat> points;
        if (j.contains("weights"))
            for (const auto& w : j.at("weights")) weights.push_back(w.get<Weight>());
        if (j.contains("points"))
            for (const auto& z : j.at("points")) points.push_back(json_rat(z));
        c.pi = ProblemInstance(rd, weights, points);
        if (j.contains("tuple")) {
            TupleY y;
            for (const auto& p : j.at("tuple")) y.push_back(Poly::parse(p.get<std::string>()));
            if (static_cast<int>(y.size()) != rd.rank) throw ConfigError("tuple length differs from the rank");
            c.tuple = y;
        }
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("max_degree")) c.max_degree = j.at("max_degree").get<int>();
        if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
        if (j.contains("samples")) c.samples = j.at("samples").get<int>();
        if (j.contains("trials")) c.trials = j.at("trials").get<int>();
        if (j.contains("l")) {
            if (j.at("l").is_array())
                c.l = j.at("l").get<std::vector<int>>();
            else
                c.l = {j.at("l").get<int>()};
        }
        if (j.contains("lambda_inf")) c.lambda_inf = j.at("lambda_inf").get<Weight>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (o.seed) c.seed = o.seed;
    if (o.max_degree) c.max_degree = *o.max_degree;
    if (o.jobs) c.jobs = *o.jobs;
    c.output = o.output;
    c.format = o.format;
    if (c.max_degree < 0 || c.jobs < 1 || c.samples < 1) throw ConfigError("numeric option out of range");
    return c;
}

RunConfig load_config(const std::string& path, const Overrides& o) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    ojson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j, o);
}

void Report::info(const std::string& key, const std::string& value) { info_.emplace_back(key, value); }

void Report::check(const std::string& tag, bool ok, const std::string& detail) {
    checks_.emplace_back(tag, ok, detail);
    ok_ = ok_ && ok;
}

void Report::render(std::ostream& out, const std::string& format) const {
    if (format == "json") {
        ojson j;
        j["command"] = command_;
        ojson info = ojson::array();
        for (const auto& [k, v] : info_) info.push_back({{"key", k}, {"value", v}});
        j["info"] = info;
        ojson checks = ojson::array();
        for (const auto& [t, ok, d] : checks_) checks.push_back({{"tag", t}, {"ok", ok}, {"detail", d}});
        j["checks"] = checks;
        if (!data_.empty()) j["data"] = data_;
        j["ok"] = ok_;
        out << j.dump(2) << "\n";
        return;
    }
    out << "== " << command_ << "\n";
    for (const auto& [k, v] : info_) out << k << ": " << v << "\n";
    for (const auto& [t, ok, d] : checks_) out << "[" << t << "] " << (ok ? "PASS" : "FAIL") << " " << d << "\n";
    out << (ok_ ? "OK" : "FAILED") << "\n";
}

ojson atlas_to_json(const RunConfig& cfg, const PopulationAtlas& atlas) {
    ojson j;
    j["schema"] = "atlas-v1";
    j["root_system"] = cfg.pi.rd.code();
    j["weights"] = cfg.pi.weights;
    ojson pts = ojson::array();
    for (const auto& z : cfg.pi.points) pts.push_back(to_string(z));
    j["points"] = pts;
    j["seed"] = cfg.seed.value_or(0);
    j["max_degree"] = cfg.max_degree;
    j["start"] = poly_list(start_tuple(cfg));
    j["start_weight"] = atlas.start_weight;
    ojson members = ojson::array();
    for (const auto& [l, m] : atlas.members) {
        ojson path = ojson::array();
        for (const auto& s : m.path) path.push_back({{"direction", s.direction + 1}, {"param", s.param}});
        members.push_back({{"degrees", l}, {"tuple", poly_list(m.y)}, {"path", path}});
    }
    j["members"] = members;
    ojson edges = ojson::array();
    for (const auto& e : atlas.edges) edges.push_back({{"from", e.from}, {"direction", e.direction + 1}, {"to", e.to}});
    j["edges"] = edges;
    return j;
}

Report cmd_verify(const RunConfig& cfg) {
    Report r("verify");
    const auto& pi = cfg.pi;
    TupleY y = start_tuple(cfg);
    r.info("root system", pi.rd.code());
    r.info("tuple", tuple_pretty(y));
    auto g = is_generic(pi, y);
    r.info("generic", g.ok ? "yes" : "no (" + g.reason + ")");
    if (!g) {
        r.check("critical", false, "tuple is not generic");
        return r;
    }
    bool critical;
    if (pi.rd.kind == 'A') {
        critical = heine_stieltjes_test(pi, y);
        bool fertile = true;
        for (int i = 0; i < pi.rd.rank; ++i) {
            try {
                immediate_descendants(pi, y, i);
            } catch (const NotFertile&) {
                fertile = false;
            }
        }
        r.check("solvable", fertile == critical, "Wronskian solvability agrees with the root-equation test");
    } else {
        critical = bc_critical_test(pi, y);
        r.check("fold", folded_critical(pi, y, cfg.seed.value_or(0)) == critical,
                "folded A-series test agrees with the native test");
    }
    r.check("critical", critical, critical ? "tuple represents a critical point" : "tuple is not critical");
    return r;
}

Report cmd_populate(const RunConfig& cfg) {
    Report r("populate");
    const auto& pi = cfg.pi;
    ExploreOptions opt;
    opt.max_degree = cfg.max_degree;
    opt.seed = cfg.require_seed();
    opt.jobs = cfg.jobs;
    TupleY y0 = start_tuple(cfg);
    auto atlas = explore_population(pi, y0, opt);
    WeylGroup group(pi.rd);
    r.info("root system", pi.rd.code());
    r.info("start", tuple_pretty(y0));
    r.info("weight at infinity", weight_str(atlas.start_weight));
    r.info("members", std::to_string(atlas.members.size()));
    auto base = lowest_member(atlas);
    Weight dom = weight_at_infinity(pi, base);
    for (const auto& [l, m] : atlas.members) {
        auto w = degree_vector_to_weyl(pi, group, dom, l);
        r.info(degree_str(l), (w ? word_str(w->word) : std::string("?")) + "  " + tuple_pretty(m.y));
    }
    auto predicted = predicted_degree_vectors(pi, group, atlas.start_weight, cfg.max_degree);
    r.check("orbit-law", predicted == atlas.degree_set(),
            std::to_string(atlas.members.size()) + " reachable vs " + std::to_string(predicted.size()) + " predicted");
    if (pi.rd.kind != 'A') {
        auto law = bc_degree_law(pi, atlas);
        r.check("bc-bruhat", law.ok(),
                std::to_string(law.matched) + "/" + std::to_string(law.vectors) + " matched to distinct folded Weyl elements");
    }
    auto j = atlas_to_json(cfg, atlas);
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw ConfigError("cannot write " + cfg.output);
        out << j.dump(2) << "\n";
        r.info("atlas", cfg.output);
    } else if (cfg.format == "json") {
        r.data("atlas", j);
    }
    return r;
}

namespace {

void report_ramification(Report& r, const PolySpace& V, const ProblemInstance& pi) {
    auto ram = ramification_of_space(V, pi.points);
    auto show = [](const RamificationTriple& t) {
        return "a=" + degree_str(t.a) + " exponents=" + degree_str(t.m) + " weight=" + weight_str(t.lambda);
    };
    for (std::size_t s = 0; s < pi.points.size(); ++s) r.info("ramification z=" + to_string(pi.points[s]), show(ram.finite[s]));
    r.info("ramification inf", show(ram.infinity));
    r.check("plucker", ram.plucker(), "sum of |a| equals (N+1)(d-N) with d=" + std::to_string(ram.d));
}

void report_exponents(Report& r, const PolySpace& V, const ProblemInstance& pi, const std::vector<long>& l_inf) {
    bool ok = true;
    for (std::size_t s = 0; s < pi.points.size(); ++s) {
        auto e = exponents_at(V, pi.points[s]);
        ok = ok && e == expected_exponents_finite(pi.weights[s]);
        r.info("exponents z=" + to_string(pi.points[s]), ints(e));
    }
    r.check("exp-z", ok, "exponents at every finite point match the weights");
    auto e = exponents_at_infinity(V);
    r.info("exponents inf", ints(e));
    auto lam = weight_at_infinity(pi, l_inf);
    r.check("exp-inf", e == expected_exponents_infinity(l_inf[0], lam), "exponents at infinity match the degree flag");
}

}  // namespace

Report cmd_fundamental(const RunConfig& cfg) {
    Report r("fundamental");
    const auto& pi = cfg.pi;
    const auto seed = cfg.require_seed();
    TupleY y = start_tuple(cfg);
    r.info("root system", pi.rd.code());
    r.info("tuple", tuple_pretty(y));
    if (pi.rd.kind != 'A') {
        auto bs = bc_fundamental_space(pi, y, seed);
        for (const auto& b : bs.space.basis()) r.info("basis", pretty(b));
        r.check("selfdual", bs.selfdual, "folded fundamental space is selfdual");
        bool even = bs.space.dim() % 2 == 0;
        r.check("form-parity", even ? is_skew(bs.gram) : is_symmetric(bs.gram),
                std::string(even ? "skew" : "symmetric") + " form in dimension " + std::to_string(bs.space.dim()));
        auto piA = pi.folded();
        auto lA = degrees(generating_morphism(degree_flag(bs.space), bs.Ts));
        report_exponents(r, bs.space, piA, lA);
        report_ramification(r, bs.space, piA);
        return r;
    }
    FundamentalData fd;
    try {
        fd = fundamental_space(pi, y, seed);
    } catch (const ConstructionFailed& e) {
        r.check("wronskian-u", false, e.what());
        return r;
    }
    r.check("wronskian-u", true, "W(u_1..u_i) is y_i times the T-product for the starting tuple");
    for (const auto& b : fd.space.basis()) r.info("basis", pretty(b));
    auto Ts = t_polys(pi);
    auto framing = space_framing(fd.space);
    bool framing_ok = framing.size() == Ts.size();
    for (std::size_t i = 0; framing_ok && i < Ts.size(); ++i) framing_ok = framing[i] == Ts[i].monic();
    r.check("framing", framing_ok, "gcds of basis Wronskians recover T_1..T_N");
    auto lflag = degrees(generating_morphism(degree_flag(fd.space), Ts));
    report_exponents(r, fd.space, pi, lflag);
    report_ramification(r, fd.space, pi);

    ExploreOptions opt;
    opt.max_degree = cfg.max_degree;
    opt.seed = seed;
    opt.jobs = cfg.jobs;
    auto atlas = explore_population(pi, y, opt);
    std::vector<TupleY> members;
    std::vector<PolySpace> spaces;
    bool wr_ok = true;
    for (const auto& [l, m] : atlas.members) {
        if (members.size() >= 6) break;
        try {
            spaces.push_back(fundamental_space(pi, m.y, seed).space);
            members.push_back(m.y);
        } catch (const ConstructionFailed&) {
            wr_ok = false;
        }
    }
    auto dp = verify_dp(pi, members, spaces);
    r.check("wronskian-u", wr_ok, "held for " + std::to_string(members.size()) + " population members");
    r.check("same-space", dp.ok() && spaces.size() >= 2 && spaces[0] == fd.space,
            "same space and annihilating operator across " + std::to_string(spaces.size()) + " members");
    WeylGroup group(pi.rd);
    bool bruhat = true;
    for (const auto& m : members) {
        auto f = flag_from_tuple(fd.space, m, Ts);
        bruhat = bruhat && bruhat_index(pi, fd.space, f, group).degree_law_holds;
    }
    r.check("bruhat-cells", bruhat, "degree vectors of member flags follow their Bruhat cells");
    return r;
}

Report cmd_selfdual(const RunConfig& cfg) {
    Report r("selfdual");
    const auto& pi = cfg.pi;
    const auto seed = cfg.require_seed();
    TupleY y = start_tuple(cfg);
    r.info("root system", pi.rd.code());
    PolySpace V;
    Framing Ts;
    std::optional<BCSpace> bs;
    if (pi.rd.kind == 'A') {
        V = fundamental_space(pi, y, seed).space;
        Ts = t_polys(pi);
    } else {
        bs = bc_fundamental_space(pi, y, seed);
        V = bs->space;
        Ts = bs->Ts;
    }
    for (const auto& b : V.basis()) r.info("basis", pretty(b));
    auto D = dual_space(V, Ts);
    for (const auto& b : D.basis()) r.info("dual basis", pretty(b));
    bool sd = is_selfdual(V, Ts);
    r.info("selfdual", sd ? "yes" : "no");
    if (!sd) {
        if (pi.rd.kind != 'A') r.check("selfdual", false, "folded fundamental space is not selfdual");
        return r;
    }
    auto g = gram(V, Ts);
    r.info("gram", matrix_str(g));
    bool even = V.dim() % 2 == 0;
    r.check("form-parity", even ? is_skew(g) : is_symmetric(g),
            std::string(even ? "skew" : "symmetric") + " form in dimension " + std::to_string(V.dim()));
    auto w = quasi_witt_basis(V, Ts);
    r.info("witt kind", w.kind);
    for (const auto& q : w.q) r.info("quasi-witt", pretty(q));
    std::string as;
    for (const auto& a : w.a) as += (as.empty() ? "" : " ") + to_string(a);
    r.info("dar scalars", as);
    if (w.kind == "witt")
        for (const auto& q : w.witt) r.info("witt", pretty(q));
    if (w.kind == "quadratic")
        for (const auto& s : w.scale) r.info("witt scale", s.str());
    r.check("isotropic", is_isotropic(V, Ts, Flag{w.q}), "flag of the quasi-Witt basis is isotropic");
    Flag start{antidiagonal_adjusted_basis(degree_flag(V), Ts)};
    bool gens = true;
    for (int i = 1; i <= V.dim() / 2; ++i) {
        auto gc = check_generator(isotropic_family(start, Ts, i), Ts);
        gens = gens && gc.wronskian_ok && gc.square_ok;
    }
    r.check("generators", gens, "one-parameter isotropic families satisfy their Wronskian relations");
    if (bs) {
        auto rep = bc_population_as_isotropic_flags(pi, *bs, cfg.samples, seed);
        r.info("isotropic samples", std::to_string(rep.samples) + " sampled, " + std::to_string(rep.generic) + " generic, " +
                                        std::to_string(rep.critical) + " critical");
        r.check("iso-flags", rep.ok(), "isotropic flags unfold to critical points");
        if (pi.rd.kind == 'C') r.check("square", rep.square_middle == rep.samples, "middle coordinates are squares");
        r.check("bc-operator", rep.dp_checked > 0 && rep.dp_ok == rep.dp_checked,
                std::to_string(rep.dp_ok) + "/" + std::to_string(rep.dp_checked) + " operators annihilate the space");
    }
    return r;
}

Report cmd_count(const RunConfig& cfg) {
    Report r("count");
    const auto& pi = cfg.pi;
    r.info("root system", pi.rd.code());
    if (pi.rd.kind != 'A') throw ConfigError("count works on type A data");
    if (cfg.lambda_inf) {
        long b = multiplicity_bound(pi, *cfg.lambda_inf);
        r.info("bound " + weight_str(*cfg.lambda_inf), std::to_string(b));
    }
    if (pi.rd.rank != 1) {
        if (!cfg.lambda_inf) throw ConfigError("count needs \"lambda_inf\" beyond sl_2");
        return r;
    }
    std::vector<long> m;
    for (const auto& w : pi.weights) m.push_back(w[0]);
    std::vector<int> ls = cfg.l;
    if (ls.empty()) ls = {0, 1, 2};
    ojson rows = ojson::array();
    for (int l : ls) {
        auto c = population_count_vs_bound(m, pi.points, l);
        std::string ex = c.exact ? std::to_string(*c.exact) : std::string("infinite");
        r.info("l=" + std::to_string(l), "weight " + std::to_string(c.lambda_inf) + (c.dominant ? "" : c.on_wall ? " (wall)" : " (counted at l=" + std::to_string(c.counted_degree) + ")") +
                                             "  bound " + std::to_string(c.bound) + "  exact " + ex);
        r.check("bound", c.within_bound(), "l=" + std::to_string(l) + ": exact count does not exceed the bound");
        rows.push_back({{"l", l}, {"weight", c.lambda_inf}, {"bound", c.bound}, {"exact", ex}});
    }
    r.data("table", rows);
    return r;
}

Report cmd_identities(std::uint64_t seed, int trials) {
    Report r("identities");
    const char* names[] = {"1-wronskian", "f-wronskian", "fg-id", "wr-id-2", "wr-id-1"};
    for (int k = 1; k <= 5; ++k) {
        auto rep = identity_suite(seed, trials, k);
        r.check(names[k - 1], rep.ok,
                std::to_string(rep.checks) + " exact checks" + (rep.ok ? "" : ", counterexample " + rep.counterexample));
    }
    return r;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"popcrit: populations of critical points for A/B/C root data"};
    app.require_subcommand(1);
    std::string config;
    Overrides o;
    std::uint64_t seed = 0;
    int max_degree = 0, jobs = 0, trials = 100;
    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto c = sub->add_option("--config", config, "JSON config file");
        if (needs_config) c->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "seed for every sampling step");
        sub->add_option("--max-degree", max_degree, "degree cap for exploration");
        sub->add_option("--jobs", jobs, "worker threads");
        sub->add_option("--output", o.output, "output path (atlas for populate)");
        sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };
    std::vector<CLI::App*> subs;
    for (const char* name : {"verify", "populate", "fundamental", "selfdual", "count"}) {
        auto s = app.add_subcommand(name);
        add_common(s, true);
        subs.push_back(s);
    }
    auto ident = app.add_subcommand("identities", "exact checks of the Wronskian identities");
    add_common(ident, false);
    ident->add_option("--trials", trials, "random instances per identity");
    subs[0]->description("criticality test for a supplied tuple");
    subs[1]->description("explore a population and write its atlas");
    subs[2]->description("fundamental space, exponents and ramification");
    subs[3]->description("dual space, canonical form and isotropic flags");
    subs[4]->description("multiplicity bound and exact sl_2 counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    for (auto* s : app.get_subcommands()) {
        if (s->count("--seed")) o.seed = seed;
        if (s->count("--max-degree")) o.max_degree = max_degree;
        if (s->count("--jobs")) o.jobs = jobs;
    }
    try {
        std::string name = app.get_subcommands().front()->get_name();
        if (name == "identities") {
            std::uint64_t s = o.seed.value_or(0);
            int t = trials;
            if (!config.empty()) {
                auto cfg = load_config(config, o);
                s = cfg.seed.value_or(s);
                t = cfg.trials;
            }
            auto rep = cmd_identities(s, t);
            rep.render(out, o.format);
            return rep.ok() ? 0 : 1;
        }
        auto cfg = load_config(config, o);
        Report rep = name == "verify"        ? cmd_verify(cfg)
                     : name == "populate"    ? cmd_populate(cfg)
                     : name == "fundamental" ? cmd_fundamental(cfg)
                     : name == "selfdual"    ? cmd_selfdual(cfg)
                                             : cmd_count(cfg);
        rep.render(out, o.format);
        return rep.ok() ? 0 : 1;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace popcrit::cli
