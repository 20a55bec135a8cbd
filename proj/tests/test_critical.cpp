#include "oracles.hpp"

#include <doctest.h>

using namespace popcrit;

namespace {
ProblemInstance sl2_two_points() { return ProblemInstance(RootData::make('A', 1), {{1}, {1}}, {0, 2}); }
}  // namespace

TEST_CASE("sl2 critical point at the midpoint") {
    auto pi = sl2_two_points();
    Poly x = Poly::x();
    CHECK(heine_stieltjes_test(pi, {x - 1}));
    CHECK(oracle::bethe_numeric(pi, {x - 1}));
    CHECK_FALSE(heine_stieltjes_test(pi, {x - 3}));
    CHECK_FALSE(oracle::bethe_numeric(pi, {x - 3}));
    CHECK(heine_stieltjes_test(pi, {Poly(1)}));
}

TEST_CASE("non-generic tuples are rejected") {
    auto pi = sl2_two_points();
    Poly x = Poly::x();
    CHECK_FALSE(is_generic(pi, {x * (x - 1)}));
    CHECK_FALSE(is_generic(pi, {(x - 1) * (x - 1)}));
    CHECK_THROWS_AS(heine_stieltjes_test(pi, {x - 2}), NotGeneric);
    auto a2 = ProblemInstance(RootData::make('A', 2), {}, {});
    CHECK_FALSE(is_generic(a2, {x, x * (x - 1)}));
    CHECK(is_generic(a2, {x, x - 1}));
}

TEST_CASE("framing polynomials collect weights per direction") {
    ProblemInstance pi(RootData::make('A', 2), {{1, 0}, {2, 1}}, {0, 1});
    Poly x = Poly::x();
    auto Ts = t_polys(pi);
    CHECK(Ts[0] == x * (x - 1).pow(2));
    CHECK(Ts[1] == x - 1);
    CHECK(weight_at_infinity(pi, std::vector<long>{1, 1}) == Weight{2, 0});
}

TEST_CASE("divisibility test agrees with the root equations on random tuples") {
    Sampler rng(99);
    for (const char* code : {"A1", "A2", "B2", "C2"}) {
        auto rd = RootData::parse(code);
        ProblemInstance pi(rd, {Weight(rd.rank, 1), Weight(rd.rank, 0)}, {0, 3});
        pi.weights[1][0] = 2;
        int tested = 0;
        for (int trial = 0; trial < 30; ++trial) {
            TupleY y;
            for (int i = 0; i < rd.rank; ++i) {
                Poly p(1);
                for (int k = 0; k < 1 + trial % 2; ++k) p *= Poly::linear_root(rng.rational(6));
                y.push_back(p);
            }
            if (!is_generic(pi, y)) continue;
            ++tested;
            CHECK(heine_stieltjes_test(pi, y) == oracle::bethe_numeric(pi, y));
        }
        CHECK(tested > 10);
    }
}

TEST_CASE("numeric residual vanishes at a critical point") {
    auto pi = sl2_two_points();
    RootSets roots{{std::complex<double>(1.0, 0.0)}};
    CHECK(bethe_residual(pi, roots) < 1e-12);
    RootSets off{{std::complex<double>(1.5, 0.0)}};
    CHECK(bethe_residual(pi, off) > 1e-3);
}

TEST_CASE("separating degree vectors") {
    auto pi = sl2_two_points();
    // Lambda_inf = 2 - 2l; l = 2 gives -2 and crosses the wall at l = 1 + 1.
    CHECK(check_separating(pi, std::vector<long>{1}));
    CHECK_FALSE(check_separating(pi, std::vector<long>{2}));
}
