#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pio/errors.hpp"
#include "pio/pencil.hpp"
#include "support.hpp"

using namespace pio;
using pio::testing::mk;
using pio::testing::Rng;

TEST_CASE("construction validates shapes") {
    CHECK_THROWS_AS(DescriptorSystem(Mat::zero(2, 3), Mat::zero(2, 2), Mat::zero(1, 3),
                                     Mat::zero(1, 3)),
                    DimensionMismatch);
    CHECK_THROWS_AS(DescriptorSystem(Mat::zero(2, 3), Mat::zero(2, 3), Mat::zero(1, 2),
                                     Mat::zero(1, 3)),
                    DimensionMismatch);
    CHECK_THROWS_AS(DescriptorSystem(Mat::zero(2, 0), Mat::zero(2, 0), Mat::zero(1, 0),
                                     Mat::zero(1, 0)),
                    DimensionMismatch); // n >= 1
}

TEST_CASE("augmented pair stacks outputs under the pencil") {
    const DescriptorSystem sys = pio::testing::counterexample_system();
    const AugmentedPair ap = augmented(sys);
    CHECK(ap.Ebar == vstack(sys.E, Mat::zero(1, 3)));
    CHECK(ap.Abar == vstack(sys.A, sys.C));
    CHECK(ap.Ebar1 == vstack(ap.Ebar, Mat::zero(1, 3)));
    CHECK(ap.Abar1 == vstack(ap.Abar, sys.L));
}

TEST_CASE("build_F block layout") {
    const DescriptorSystem sys = pio::testing::epsilon_example_system();
    const AugmentedPair ap = augmented(sys);

    CHECK(build_F(sys, 1, false) == ap.Ebar);
    CHECK(build_F(sys, 1, true) == ap.Ebar1);
    CHECK_THROWS_AS(build_F(sys, 0, false), InvalidL);

    const Mat f2 = build_F(sys, 2, false);
    CHECK(f2 == block({{ap.Ebar, ap.Abar}, {Mat::zero(2, 2), ap.Ebar}}));
}

TEST_CASE("build_F shape invariant") {
    Rng rng(7301);
    for (int t = 0; t < 50; ++t) {
        const DescriptorSystem sys = rng.system();
        const std::size_t l = rng.count(1, 4);
        const Mat f = build_F(sys, l, false);
        CHECK(f.rows() == l * (sys.m() + sys.p()));
        CHECK(f.cols() == l * sys.n());
        const Mat fl = build_F(sys, l, true);
        CHECK(fl.rows() == l * (sys.m() + sys.p() + sys.r()));
        CHECK(fl.cols() == l * sys.n());
    }
}

TEST_CASE("reference ranks of the worked examples") {
    // underdetermined pencil: 4 vs 5 at l = 3
    const DescriptorSystem eps = pio::testing::epsilon_example_system();
    CHECK(rank(build_F(eps, 3, false)) == 4);
    CHECK(rank(build_F(eps, 3, true)) == 5);

    // nilpotent pencil, observable output choice: 11 on both sides at l = 4
    const DescriptorSystem obs = pio::testing::observable_sigma_system();
    CHECK(rank(build_F(obs, 4, false)) == 11);
    CHECK(rank(build_F(obs, 4, true)) == 11);
}

TEST_CASE("published test matrices") {
    const DescriptorSystem sys = pio::testing::counterexample_system();
    const auto [lhs, rhs] = darouach_lhs_rhs(sys);
    CHECK(lhs.rows() == 8);
    CHECK(rhs.rows() == 7);
    CHECK(lhs.cols() == 6);
    // equal ranks here even though the system is not partially impulse
    // observable; the common value is 4
    CHECK(rank(lhs) == 4);
    CHECK(rank(rhs) == 4);

    // a zero L row never raises the rank
    const DescriptorSystem zl(sys.E, sys.A, sys.C, Mat::zero(1, 3));
    const auto [lhs0, rhs0] = darouach_lhs_rhs(zl);
    CHECK(rank(lhs0) == rank(rhs0));
}

TEST_CASE("iobs matrix") {
    const DescriptorSystem obs = pio::testing::observable_sigma_system();
    CHECK(rank(iobs_matrix(obs)) == 5); // == n + rank E = 3 + 2

    const DescriptorSystem ode(Mat::identity(2), mk({{0, 1}, {1, 0}}), mk({{1, 0}}),
                               mk({{0, 1}}));
    CHECK(rank(iobs_matrix(ode)) == 4); // 2n for an ODE

    // the counterexample falls short: rank 4 < n + rank E = 5
    const DescriptorSystem cex = pio::testing::counterexample_system();
    CHECK(rank(iobs_matrix(cex)) == 4);
}

TEST_CASE("F with L equals F stacked with shifted L rows, up to row permutation") {
    Rng rng(7302);
    for (int t = 0; t < 60; ++t) {
        const DescriptorSystem sys = rng.system();
        const std::size_t l = rng.count(2, sys.n() + 1);

        // [0 L 0 ..; 0 0 L ..; ...] with l-1 block rows
        Mat lshift(( l - 1) * sys.r(), l * sys.n());
        for (std::size_t blk = 0; blk + 1 < l; ++blk)
            for (std::size_t i = 0; i < sys.r(); ++i)
                for (std::size_t j = 0; j < sys.n(); ++j)
                    lshift(blk * sys.r() + i, (blk + 1) * sys.n() + j) = sys.L(i, j);

        CHECK(rank(build_F(sys, l, true)) == rank(vstack(build_F(sys, l, false), lshift)));
    }
}

TEST_CASE("rank growth of F is eventually constant") {
    Rng rng(7303);
    for (int t = 0; t < 30; ++t) {
        const DescriptorSystem sys = rng.system();
        const std::size_t n = sys.n();
        const std::size_t r1 = rank(build_F(sys, n + 1, false));
        const std::size_t r2 = rank(build_F(sys, n + 2, false));
        const std::size_t r3 = rank(build_F(sys, n + 3, false));
        CHECK(r2 - r1 == r3 - r2);
    }
}
