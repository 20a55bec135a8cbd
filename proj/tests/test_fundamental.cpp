#include "oracles.hpp"
#include "popcrit/fundamental.hpp"
#include "popcrit/reproduction.hpp"
#include "popcrit/wronskian.hpp"

#include <doctest.h>

using namespace popcrit;

TEST_CASE("echelon span") {
    Poly x = Poly::x();
    auto V = PolySpace::span({x * x + x, x + 1, 2 * x * x - x - 3});
    CHECK(V.dim() == 2);
    CHECK(V.contains(x * x - 1));
    CHECK_FALSE(V.contains(x));
    CHECK(V.degrees_ascending() == std::vector<int>{1, 2});
    CHECK(V == PolySpace::span({x + 1, x * x - 1}));
}

TEST_CASE("sl2 space for two unit weights") {
    ProblemInstance pi(RootData::make('A', 1), {{1}, {1}}, {0, 2});
    Poly x = Poly::x();
    auto fd = fundamental_space(pi, {x - 1});
    CHECK(fd.space == PolySpace::span({x * x, x - 1}));
    CHECK(exponents_at(fd.space, 0) == std::vector<int>{0, 2});
    CHECK(exponents_at(fd.space, 2) == std::vector<int>{0, 2});
    CHECK(exponents_at(fd.space, 5) == std::vector<int>{0, 1});
    CHECK(exponents_at_infinity(fd.space) == std::vector<int>{1, 2});
    CHECK(space_framing(fd.space) == std::vector<Poly>{x * x - 2 * x});
    CHECK_FALSE(has_base_point(fd.space, 0));
}

TEST_CASE("the space does not depend on the population member") {
    ProblemInstance pi(RootData::make('A', 2), {{1, 0}, {0, 1}, {1, 1}}, {0, 1, -1});
    ExploreOptions opt;
    opt.seed = 7;
    opt.max_degree = 8;
    auto atlas = explore_population(pi, {Poly(1), Poly(1)}, opt);
    std::vector<TupleY> members;
    std::vector<PolySpace> spaces;
    auto Ts = t_polys(pi);
    for (const auto& [l, m] : atlas.members) {
        auto fd = fundamental_space(pi, m.y, 3);
        // W(u_1..u_i) = y_i times prod T_j^{i-j}
        for (int i = 1; i <= pi.rd.rank; ++i) {
            std::vector<Poly> head(fd.u.begin(), fd.u.begin() + i);
            CHECK(proportional(oracle::naive_wronskian(head), m.y[i - 1] * framing_factor(Ts, i)));
        }
        members.push_back(m.y);
        spaces.push_back(fd.space);
    }
    REQUIRE(spaces.size() >= 5);
    CHECK(verify_dp(pi, members, spaces).ok());
    for (const auto& s : spaces) CHECK(s == spaces.front());
}

TEST_CASE("exponents follow the weights") {
    ProblemInstance pi(RootData::make('A', 2), {{1, 0}, {0, 1}, {1, 1}}, {0, 1, -1});
    auto fd = fundamental_space(pi, {Poly(1), Poly(1)});
    for (int s = 0; s < pi.n(); ++s) CHECK(exponents_at(fd.space, pi.points[s]) == expected_exponents_finite(pi.weights[s]));
    CHECK(expected_exponents_finite({1, 1}) == std::vector<int>{0, 2, 4});
    CHECK(exponents_at_infinity(fd.space) == expected_exponents_infinity(0, pi.weight_sum()));
}

TEST_CASE("flags round trip through generating tuples") {
    ProblemInstance pi(RootData::make('A', 2), {{1, 0}, {1, 1}}, {0, 2});
    auto fd = fundamental_space(pi, {Poly(1), Poly(1)});
    auto Ts = t_polys(pi);
    WeylGroup g(pi.rd);
    Sampler rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Flag f = random_flag(fd.space, rng);
        TupleY y = generating_morphism(f, Ts);
        CHECK(flag_from_tuple(fd.space, y, Ts) == f);
        auto b = bruhat_index(pi, fd.space, f, g);
        CHECK(b.degree_law_holds);
        if (is_generic(pi, y)) CHECK(heine_stieltjes_test(pi, y));
    }
}

TEST_CASE("canonical flag ignores the choice of adjusted basis") {
    Poly x = Poly::x();
    auto a = Flag::canonical({x + 1, x * x});
    auto b = Flag::canonical({2 * x + 2, 3 * x * x + x + 1});
    CHECK(a == b);
}

TEST_CASE("factored operator annihilates the space") {
    ProblemInstance pi(RootData::make('A', 1), {{1}, {1}}, {0, 2});
    Poly x = Poly::x();
    auto V = PolySpace::span({x * x, x - 1});
    auto f = dp_factors(t_polys(pi), {x - 1});
    CHECK(annihilates(f, V));
    CHECK_FALSE(annihilates(f, PolySpace::span({x * x, x - 3})));
}
