#include "oracles.hpp"
#include "popcrit/linalg.hpp"
#include "popcrit/wronskian.hpp"

#include <doctest.h>

using namespace popcrit;

TEST_CASE("rationals parse and print canonically") {
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(parse_rat("-3") == Rat(-3));
    CHECK(to_string(parse_rat("-6/4")) == "-3/2");
    CHECK(rat_root(Rat(27, 8), 3) == Rat(3, 2));
    CHECK_FALSE(rat_root(Rat(2), 2).has_value());
}

TEST_CASE("parameter schedule starts with small values and has no repeats") {
    auto s = stern_brocot_schedule(11);
    std::vector<Rat> head{0, 1, -1, 2, -2, Rat(1, 2), Rat(-1, 2)};
    for (std::size_t i = 0; i < head.size(); ++i) CHECK(s[i] == head[i]);
    auto big = stern_brocot_schedule(200);
    std::set<std::string> seen;
    for (const auto& q : big) CHECK(seen.insert(to_string(q)).second);
}

TEST_CASE("polynomial arithmetic") {
    Poly x = Poly::x();
    Poly p = x * x - 1;
    CHECK(p.degree() == 2);
    CHECK(p.eval(3) == 8);
    CHECK(Poly::parse("x^2 - 1") == p);
    auto [q, r] = divmod(p, x - 1);
    CHECK(q == x + 1);
    CHECK(r.is_zero());
    CHECK(gcd(p, x * x - 2 * x + 1) == x - 1);
    CHECK(p.shift(1) == x * x + 2 * x);
    CHECK(Poly().degree() == -1);
    CHECK_THROWS_AS(exact_div(p, x - 2), NotDivisible);
}

TEST_CASE("square roots and square-free parts") {
    Poly x = Poly::x();
    Poly s = (2 * x - 3) * (2 * x - 3) * Rat(4);
    auto r = poly_sqrt(s);
    REQUIRE(r.has_value());
    CHECK(*r * *r == s);
    CHECK_FALSE(poly_sqrt(x * x + 1).has_value());
    CHECK_FALSE(poly_sqrt(-(x * x)).has_value());
    Poly f = (x - 1).pow(3) * (x + 2);
    CHECK(squarefree_part(f) == (x - 1) * (x + 2));
    CHECK_FALSE(is_squarefree(f));
}

TEST_CASE("wronskian agrees with the permutation expansion") {
    Sampler rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 1 + trial % 4;
        std::vector<Poly> gs;
        for (int i = 0; i < k; ++i) gs.push_back(random_poly(rng, 5));
        CHECK(wronskian(gs) == oracle::naive_wronskian(gs));
    }
    CHECK(wronskian({}) == Poly(1));
}

TEST_CASE("wronskian of monomials") {
    // W(1, x, x^2) = 2
    Poly x = Poly::x();
    CHECK(wronskian({Poly(1), x, x * x}) == Poly(2));
    CHECK(wronskian({x, x * x}) == x * x);
}

TEST_CASE("divided wronskian divides out the framing") {
    Poly x = Poly::x();
    std::vector<Poly> Ts{x * x - 2 * x};
    CHECK(divided_wronskian({x - 1, x * x}, Ts) == Poly(1));
    CHECK(divided_wronskian({x - 1}, Ts) == x - 1);
    CHECK(framing_factor({x - 1, x + 2}, 3) == (x - 1).pow(2) * (x + 2));
    CHECK_THROWS_AS(divided_wronskian({x - 3, x * x}, Ts), NotDivisible);
}

TEST_CASE("classical identities hold on random data") {
    for (int which = 1; which <= 5; ++which) {
        auto rep = identity_suite(7, 20, which);
        INFO(rep.failed_identity << " " << rep.counterexample);
        CHECK(rep.ok);
        CHECK(rep.checks > 0);
    }
}

TEST_CASE("exact linear algebra") {
    RatMat a{{1, 2}, {3, 4}};
    CHECK(determinant(a) == -2);
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK((*inv)[0][0] == -2);
    CHECK((*inv)[1][0] == Rat(3, 2));
    auto sol = solve_linear({{1, 1}, {2, 2}}, {1, 2}, 2);
    REQUIRE(sol.has_value());
    CHECK(sol->kernel.size() == 1);
    CHECK_FALSE(solve_linear({{1, 1}, {2, 2}}, {1, 3}, 2).has_value());
    CHECK(nullspace({{1, 2, 3}}, 3).size() == 2);
}
