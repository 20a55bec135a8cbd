#include "oracles.hpp"
#include "popcrit/bc.hpp"
#include "popcrit/selfdual.hpp"
#include "popcrit/wronskian.hpp"

#include <doctest.h>

using namespace popcrit;

TEST_CASE("two-dimensional space is selfdual with a skew form") {
    Poly x = Poly::x();
    auto V = PolySpace::span({x * x, x - 1});
    Framing Ts{x * x - 2 * x};
    CHECK(symmetric_framing(Ts));
    CHECK(dual_space(V, Ts) == V);
    CHECK(is_selfdual(V, Ts));
    auto g = gram(V, Ts);
    CHECK(g == RatMatrix{{0, 1}, {-1, 0}});
    CHECK(is_skew(g));
    CHECK(quasi_witt_basis(V, Ts).kind == "witt");
}

TEST_CASE("complementary wronskians") {
    Poly x = Poly::x();
    std::vector<Poly> b{Poly(1), x, x * x};
    Framing Ts{Poly(1), Poly(1)};
    auto w = complementary_wronskians(b, Ts);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == wronskian({x, x * x}));
    CHECK(w[2] == Poly(1));
}

TEST_CASE("dual of a generic A2 space is a different space") {
    ProblemInstance pi(RootData::make('A', 2), {{1, 0}}, {0});
    auto fd = fundamental_space(pi, {Poly(1), Poly(1)});
    auto Ts = t_polys(pi);
    CHECK_FALSE(symmetric_framing(Ts));
    CHECK_FALSE(is_selfdual(fd.space, Ts));
    // Duality is an involution.
    Framing rev(Ts.rbegin(), Ts.rend());
    CHECK(dual_space(dual_space(fd.space, Ts), rev) == fd.space);
}

TEST_CASE("folded spaces carry forms of the right parity") {
    struct Case {
        const char* code;
        std::vector<Weight> w;
        std::vector<Rat> z;
    };
    std::vector<Case> cases{{"B2", {}, {}}, {"C2", {}, {}}, {"B2", {{1, 0}}, {0}}, {"C2", {{0, 1}}, {0}},
                            {"B3", {}, {}}, {"C3", {{1, 0, 0}}, {1}}};
    for (const auto& c : cases) {
        ProblemInstance pi(RootData::parse(c.code), c.w, c.z);
        TupleY y(pi.rd.rank, Poly(1));
        auto bs = bc_fundamental_space(pi, y, 2);
        INFO(c.code);
        CHECK(bs.selfdual);
        bool even = bs.space.dim() % 2 == 0;
        CHECK(even == (pi.rd.kind == 'B'));
        CHECK((even ? is_skew(bs.gram) : is_symmetric(bs.gram)));
        auto w = quasi_witt_basis(bs.space, bs.Ts);
        CHECK(is_isotropic(bs.space, bs.Ts, Flag{w.q}));
        CHECK(w.kind != "quasi");
        Flag start{antidiagonal_adjusted_basis(degree_flag(bs.space), bs.Ts)};
        for (int i = 1; i <= bs.space.dim() / 2; ++i) {
            auto fam = isotropic_family(start, bs.Ts, i);
            auto gc = check_generator(fam, bs.Ts);
            CHECK(gc.wronskian_ok);
            CHECK(gc.square_ok);
            for (int c2 : {1, -2}) CHECK(is_isotropic(bs.space, bs.Ts, Flag::canonical(fam.basis_at(c2))));
        }
    }
}

TEST_CASE("quadratic scalars") {
    QuadScalar s{1, 1, 2};
    auto p = s * s.inverse();
    CHECK(p.a == 1);
    CHECK(p.b == 0);
}

TEST_CASE("symmetric tuples") {
    Poly x = Poly::x();
    CHECK(is_symmetric_tuple({x, x + 1, x}));
    CHECK_FALSE(is_symmetric_tuple({x, x + 1, x - 1}));
}
