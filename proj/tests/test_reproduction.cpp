#include "oracles.hpp"
#include "popcrit/reproduction.hpp"
#include "popcrit/wronskian.hpp"

#include <doctest.h>

using namespace popcrit;

TEST_CASE("solutions of a first-order wronskian equation form a line") {
    Poly x = Poly::x();
    Poly y = x - 1;
    Poly R = x * x - 2 * x;
    auto fam = solve_wronskian_equation(y, R);
    REQUIRE(fam.has_value());
    for (int c : {0, 1, -3}) {
        Poly m = fam->member(c);
        CHECK(proportional(wronskian({y, m}), R));
    }
    // x has no partner with W(x, f) = 1 of polynomial type beyond the line {c x - 1}: still solvable.
    CHECK(solve_wronskian_equation(x, Poly(1)).has_value());
    // W(x^2, f) = 1 would need a 1/x term.
    CHECK_FALSE(solve_wronskian_equation(x * x, Poly(1)).has_value());
}

TEST_CASE("trivial sl3 population has the six predicted degree vectors") {
    ProblemInstance pi(RootData::make('A', 2), {}, {});
    ExploreOptions opt;
    opt.seed = 1;
    opt.max_degree = 8;
    auto atlas = explore_population(pi, {Poly(1), Poly(1)}, opt);
    std::set<std::vector<long>> want{{0, 0}, {1, 0}, {0, 1}, {1, 2}, {2, 1}, {2, 2}};
    CHECK(atlas.degree_set() == want);
    WeylGroup g(pi.rd);
    CHECK(predicted_degree_vectors(pi, g, {0, 0}, 8) == want);
    CHECK(oracle::predicted_degrees(pi.rd, {0, 0}, {0, 0}, 8) == want);
    for (const auto& [l, m] : atlas.members) {
        CHECK(is_generic(pi, m.y));
        CHECK(heine_stieltjes_test(pi, m.y));
        CHECK(replay_path(pi, {Poly(1), Poly(1)}, m.path) == m.y);
    }
}

TEST_CASE("members of a population satisfy the root equations") {
    ProblemInstance pi(RootData::make('A', 2), {{1, 0}, {0, 1}, {1, 1}}, {0, 1, -1});
    ExploreOptions opt;
    opt.seed = 7;
    opt.max_degree = 6;
    TupleY y0{Poly(1), Poly(1)};
    REQUIRE(is_fertile(pi, y0));
    auto atlas = explore_population(pi, y0, opt);
    CHECK(atlas.members.size() > 4);
    for (const auto& [l, m] : atlas.members) CHECK(oracle::bethe_numeric(pi, m.y, 1e-5));
    WeylGroup g(pi.rd);
    auto predicted = oracle::predicted_degrees(pi.rd, pi.weight_sum(), atlas.start_weight, 6);
    CHECK(atlas.degree_set() == predicted);
    CHECK(predicted_degree_vectors(pi, g, atlas.start_weight, 6) == predicted);
}

TEST_CASE("exploration is reproducible for a fixed seed") {
    ProblemInstance pi(RootData::make('A', 2), {{1, 1}}, {0});
    ExploreOptions opt;
    opt.seed = 5;
    opt.max_degree = 5;
    auto a = explore_population(pi, {Poly(1), Poly(1)}, opt);
    opt.jobs = 3;
    auto b = explore_population(pi, {Poly(1), Poly(1)}, opt);
    REQUIRE(a.members.size() == b.members.size());
    for (const auto& [l, m] : a.members) CHECK(b.members.at(l).y == m.y);
}

TEST_CASE("root coordinates") {
    auto rd = RootData::make('A', 2);
    CHECK(root_coordinates(rd, {2, -1}) == std::vector<long>{1, 0});
    CHECK_FALSE(root_coordinates(rd, {1, 0}).has_value());
}

TEST_CASE("parameter schedule is a seeded rotation") {
    auto s0 = parameter_schedule(0);
    auto s3 = parameter_schedule(3);
    CHECK(s0.size() >= static_cast<std::size_t>(kRetryCap));
    CHECK(s0 != s3);
    CHECK(parameter_schedule(3) == parameter_schedule(11));
}
