#include <weakmonads/errors.hpp>
#include <weakmonads/premonad_bridge.hpp>
#include <weakmonads/sample.hpp>
#include <weakmonads/verify.hpp>

#include <gtest/gtest.h>

#include "support/oracle.hpp"

using namespace weakmonads;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);
const Field F7 = Field::prime(7);

}  // namespace

TEST(WreathToPremonad, StrictWreathGivesMonad) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Rng rng(seed);
        MonadInEMW m = sample_strict_wreath(seed % 2 ? F5 : Q, rng);
        WreathToPremonad w = wreath_to_premonad(m);
        EXPECT_TRUE(w.report.passed()) << w.report.text();
        EXPECT_TRUE(check_algebra(as_algebra(w.p.premonad)).passed()) << seed;
        EXPECT_TRUE(roundtrip_theorem23(m).passed()) << seed;
        EXPECT_TRUE(roundtrip_theorem23_rev(w.p).passed()) << seed;
        EXPECT_EQ(premonad_to_wreath(w.p), m);
    }
}

TEST(WreathToPremonad, G2WeakSmashIsNotUnital) {
    MonadInEMW m = weak_smash(g2(Q));
    ASSERT_TRUE(check_monad_in_emw(m).passed());
    WreathToPremonad w = wreath_to_premonad(m);
    for (const char* tag : {"(2.8)", "(2.9)", "(2.10)", "(2.11)", "(2.13a)", "(2.13b)", "(2.14)"})
        EXPECT_TRUE(w.report.passed(tag)) << tag;
    Report unit = check_algebra(as_algebra(w.p.premonad));
    EXPECT_FALSE(unit.passed("unit-left"));
    ASSERT_TRUE(unit.find("unit-left")->witness.has_value());

    // the same failure, found by evaluating Θ(ϑ ⊗ x) on basis vectors with the oracle
    auto theta = oracle::of(w.p.premonad.mult), unitv = oracle::of(w.p.premonad.unit);
    const std::size_t d = w.p.premonad.dim;
    auto left = oracle::mul(theta, oracle::tensor(unitv, oracle::eye(0, d)));
    EXPECT_FALSE(oracle::equal(left, oracle::eye(0, d)));
    std::size_t first_bad = d;
    for (std::size_t j = 0; j < d && first_bad == d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            if (left(i, j) != (i == j ? 1 : 0)) {
                first_bad = j;
                break;
            }
    EXPECT_EQ(unit.find("unit-left")->witness->column, first_bad);
}

TEST(WreathToPremonad, RejectsBrokenInput) {
    MonadInEMW m = weak_smash(g2(Q));
    m.nu = LinMap::zero(Q, m.nu.rows(), m.nu.cols());
    EXPECT_THROW(wreath_to_premonad(m), NotMonadInEMW);
}

TEST(PremonadToWreath, G2RoundTrips) {
    MonadInEMW m = weak_smash(g2(Q));
    WreathToPremonad w = wreath_to_premonad(m);
    MonadInEMW back = premonad_to_wreath(w.p);
    Report seven = check_monad_in_emw(back);
    for (const char* tag : {"(2.1)", "(2.2)", "(2.3)", "(2.4)", "(2.5)", "(2.6)", "(2.7)"})
        EXPECT_TRUE(seven.passed(tag)) << tag;
    EXPECT_TRUE(roundtrip_theorem23(m).passed());
    EXPECT_TRUE(roundtrip_theorem23_rev(w.p).passed());
    EXPECT_EQ(back.psi, m.psi);
    EXPECT_EQ(back.nu, m.nu);
    EXPECT_EQ(back.theta, m.theta);
}

TEST(PremonadToWreath, WeakSmashPremonadDirect) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Rng rng(seed);
        WeakBialgebra h = sample_groupoid_wba(F7, rng);
        ComposedPreMonad p = weak_smash_premonad(h);
        EXPECT_TRUE(roundtrip_theorem23_rev(p).passed()) << seed;
        MonadInEMW m = premonad_to_wreath(p);
        EXPECT_TRUE(check_monad_in_emw(m).passed()) << seed;
        EXPECT_EQ(wreath_to_premonad(m).p, p);
    }
}

TEST(PremonadToWreath, ScrambledFactors) {
    ComposedPreMonad p = weak_smash_premonad(g2(Q));
    p.s_dim = 3;
    EXPECT_THROW(premonad_to_wreath(p), ShapeMismatch);
}

TEST(PremonadToWreath, LeftLinearityRequired) {
    // a pre-monad on k^2 ⊗ k^2 that is not t-linear for the declared t = k^2
    WeakBialgebra h = g2(Q);
    ComposedPreMonad p = weak_smash_premonad(h);
    PreMonad flat = p.premonad;
    LinMap g = LinMap::identity(Q, 4);
    g.set(0, 1, Scalar(Q, 1));
    Algebra moved = transport(as_algebra(flat), g);
    ComposedPreMonad q{as_premonad(moved), 2, h.algebra()};
    ASSERT_TRUE(check_premonad(q.premonad).passed());
    ASSERT_FALSE(left_linearity(q).passed);
    EXPECT_THROW(premonad_to_wreath(q), LeftLinearityFailed);
}

TEST(RoundTrip, CorruptedThetaLocated) {
    ComposedPreMonad p = weak_smash_premonad(g2(Q));
    LinMap& theta = p.premonad.mult;
    theta.set(0, 0, theta.at(0, 0) + Scalar(Q, 1));
    Report r = roundtrip_theorem23_rev(p);
    EXPECT_FALSE(r.passed());
    const Verdict* bad = r.first_failure();
    ASSERT_NE(bad, nullptr);
    EXPECT_TRUE(bad->witness.has_value()) << bad->tag;
}

TEST(Suites, WreathAndRetract) {
    SuiteOptions o;
    o.trials = 15;
    EXPECT_TRUE(verify_wreath_roundtrip(o).passed());
    EXPECT_TRUE(verify_retracts(o).passed());
}
