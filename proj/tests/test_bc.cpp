#include "oracles.hpp"
#include "popcrit/bc.hpp"

#include <doctest.h>

using namespace popcrit;

TEST_CASE("folding and unfolding") {
    Poly x = Poly::x();
    TupleY y{x - 1, x + 2};
    auto fb = fold(y, 'B');
    CHECK(fb.folded == TupleY{x - 1, x + 2, x - 1});
    CHECK(unfold(fb.folded, 'B') == y);
    auto fc = fold(y, 'C');
    CHECK(fc.folded.size() == 4);
    CHECK(fc.folded[1] == (x + 2) * (x + 2));
    CHECK(unfold(fc.folded, 'C') == y);
    CHECK_THROWS_AS(unfold({x, x + 1, x - 1}, 'B'), std::invalid_argument);
    CHECK(fold_degrees({1, 2}, 'B') == std::vector<long>{1, 2, 1});
    CHECK(fold_degrees({1, 2}, 'C') == std::vector<long>{1, 4, 4, 1});
}

TEST_CASE("native and folded criticality agree") {
    Sampler rng(5);
    for (const char* code : {"B2", "C2", "B3"}) {
        auto rd = RootData::parse(code);
        ProblemInstance pi(rd, {Weight(rd.rank, 1)}, {0});
        int tested = 0;
        for (int trial = 0; trial < 20; ++trial) {
            TupleY y;
            for (int i = 0; i < rd.rank; ++i) y.push_back(Poly::linear_root(rng.rational(5)));
            if (!is_generic(pi, y)) continue;
            // The C fold squares the last coordinate, so only B folds stay generic.
            if (rd.kind == 'B' && !is_generic(pi.folded(), fold(y, 'B').folded)) continue;
            ++tested;
            bool native = heine_stieltjes_test(pi, y);
            CHECK(bc_critical_test(pi, y) == native);
            CHECK(folded_critical(pi, y, 1) == native);
            CHECK(oracle::bethe_numeric(pi, y) == native);
        }
        CHECK(tested > 5);
    }
}

TEST_CASE("critical points of B and C populations fold to critical points") {
    for (const char* code : {"B2", "C2"}) {
        ProblemInstance pi(RootData::parse(code), {}, {});
        ExploreOptions opt;
        opt.seed = 3;
        opt.max_degree = 8;
        auto atlas = explore_population(pi, {Poly(1), Poly(1)}, opt);
        CHECK(atlas.members.size() == 8);
        for (const auto& [l, m] : atlas.members) {
            CHECK(heine_stieltjes_test(pi, m.y));
            if (pi.rd.kind == 'B') CHECK(heine_stieltjes_test(pi.folded(), fold(m.y, 'B').folded));
        }
        auto law = bc_degree_law(pi, atlas);
        CHECK(law.ok());
        CHECK(law.vectors == 8);
    }
}

TEST_CASE("C bridge satisfies its wronskian identities") {
    ProblemInstance pi(RootData::make('C', 2), {{0, 1}}, {0});
    Poly x = Poly::x();
    TupleY y{Poly(1), Poly(1)};
    auto br = critical_bridge(pi, y, 5);
    REQUIRE(br.has_value());
    CHECK(heine_stieltjes_test(pi.folded(), br->second));
}

TEST_CASE("isotropic samples unfold to critical points") {
    ProblemInstance pi(RootData::make('C', 2), {{0, 1}}, {0});
    auto bs = bc_fundamental_space(pi, {Poly(1), Poly(1)}, 5);
    auto rep = bc_population_as_isotropic_flags(pi, bs, 8, 5);
    CHECK(rep.ok());
    CHECK(rep.samples == 8);
    CHECK(rep.square_middle == rep.samples);
    for (const auto& y : rep.tuples)
        if (is_generic(pi, y)) CHECK(oracle::bethe_numeric(pi, y));
}
