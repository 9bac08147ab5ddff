#include <weakmonads/entwine.hpp>
#include <weakmonads/errors.hpp>
#include <weakmonads/lifting.hpp>
#include <weakmonads/sample.hpp>
#include <weakmonads/verify.hpp>

#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "support/sabotage.hpp"

using namespace weakmonads;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);
const Field F7 = Field::prime(7);

// h ⊗ h' ↦ Σ h'₁ ⊗ h h'₂ by structure constants
oracle::Dense oracle_psi_r(const WeakBialgebra& h) {
    auto m = oracle::of(h.mult), d = oracle::of(h.comult);
    const std::size_t n = h.dim;
    oracle::Dense out(m.p, n * n, n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) out(i * n + k, x * n + y) += d(i * n + j, y) * m(k, x * n + j);
    out.reduce();
    return out;
}

// h ⊗ h' ↦ Σ h₁ h' ⊗ h₂
oracle::Dense oracle_psi_l(const WeakBialgebra& h) {
    auto m = oracle::of(h.mult), d = oracle::of(h.comult);
    const std::size_t n = h.dim;
    oracle::Dense out(m.p, n * n, n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) out(k * n + j, x * n + y) += d(i * n + j, x) * m(k, i * n + y);
    out.reduce();
    return out;
}

oracle::Wba oracle_wba(const WeakBialgebra& h) {
    return {h.field.characteristic(), h.dim, oracle::of(h.mult), oracle::of(h.unit), oracle::of(h.comult),
            oracle::of(h.counit)};
}

}  // namespace

TEST(Classify, StrictIsEverything) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        Classification c = classify_entwining(sample_strict_entwining(F7, rng));
        EXPECT_TRUE(c.mixed_dl && c.weak && c.partial && c.lax) << seed << c.report.text();
    }
}

TEST(Classify, G2PsiR) {
    EntwiningDatum d = psi_R(g2(Q));
    Classification c = classify_entwining(d);
    EXPECT_TRUE(c.weak);
    EXPECT_FALSE(c.mixed_dl);
    EXPECT_FALSE(c.report.passed("(dl-unit)"));
    // ψ(e_b ⊗ 1) = e_b ⊗ e_b, not 1 ⊗ e_b
    LinMap one_b = kron(LinMap::basis_vector(Q, 2, 0), d.A.unit);
    EXPECT_EQ(compose(d.psi, one_b), kron(LinMap::basis_vector(Q, 2, 0), LinMap::basis_vector(Q, 2, 0)));
}

TEST(Classify, PartialInstance) {
    Classification c = classify_entwining(smallest_partial_entwining(Q));
    EXPECT_TRUE(c.partial);
    EXPECT_FALSE(c.weak);
    EXPECT_FALSE(c.report.passed("(5.11)"));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        EXPECT_TRUE(classify_entwining(sample_partial_entwining(F7, rng)).partial) << seed;
    }
}

TEST(Classify, SharedAxiomFailure) {
    EntwiningDatum d = psi_R(g2(Q));
    d.psi = LinMap::identity(Q, 4);
    d.psi.set(0, 1, Scalar(Q, 1));
    EXPECT_FALSE(entwining_axioms(d).passed("(5.9)"));
    EXPECT_THROW(classify_entwining(d), SharedAxiomFailed);
}

TEST(Classify, ZeroComultiplication) {
    WeakBialgebra h = g2(Q);
    h.comult = LinMap::zero(Q, 4, 2);
    EXPECT_TRUE(psi_R(h).psi.is_zero());
    EXPECT_FALSE(check_weak_bialgebra(h).passed("coalgebra:counit-left"));
}

TEST(Cor51, Sides) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        EntwiningDatum w = sample_weak_entwining(F7, rng);
        EXPECT_TRUE(cor51_sides(cor51_conditions(w)).iota) << seed;
        EntwiningDatum p = sample_partial_entwining(F7, rng);
        EXPECT_TRUE(cor51_sides(cor51_conditions(p)).pi) << seed;
        Report s = cor51_conditions(sample_strict_entwining(F7, rng));
        EXPECT_TRUE(s.passed("(5.6)") && s.passed("(5.7)")) << seed;
        EXPECT_TRUE(cor51_sides(s).both);
    }
    Report g = cor51_conditions(psi_R(g2(Q)));
    EXPECT_TRUE(g.passed("comonad-iota:coassoc"));
}

TEST(Cor55, Sides) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        Report w = cor55_conditions(sample_weak_entwining(F7, rng));
        EXPECT_TRUE(w.passed("(5.13)") && w.passed("(5.14)")) << seed;
        Report s = cor55_conditions(sample_strict_entwining(F7, rng));
        EXPECT_TRUE(s.passed()) << s.text();
    }
}

TEST(Cor55, FailureCarriesWitness) {
    std::size_t found = 0;
    for (std::uint64_t seed = 0; seed < 40 && found < 3; ++seed) {
        Rng rng(seed);
        EntwiningDatum d = sample_onecell_entwining(F5, 2, rng);
        Report r = cor55_conditions(d);
        const Verdict* v = r.find("(5.14)");
        ASSERT_NE(v, nullptr);
        if (v->passed) continue;
        ++found;
        EXPECT_TRUE(v->witness.has_value());
    }
    EXPECT_GT(found, 0u);
}

TEST(Implications, WeakGivesE2AndPartialGivesE4) {
    std::size_t weak = 0, partial = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        EntwiningDatum d = seed % 3 == 0   ? sample_weak_entwining(F7, rng)
                           : seed % 3 == 1 ? sample_partial_entwining(F7, rng)
                                           : sample_onecell_entwining(F7, 2, rng);
        Report ax = entwining_axioms(d);
        if (!ax.passed("(5.9)")) continue;
        Report c51 = cor51_conditions(d);
        if (classify_entwining(d).weak) {
            ++weak;
            EXPECT_TRUE(c51.passed("(5.2)")) << seed;
        }
        if (ax.passed("(5.17)")) {
            ++partial;
            EXPECT_TRUE(c51.passed("(5.4)")) << seed;
        }
    }
    EXPECT_GT(weak, 10u);
    EXPECT_GT(partial, 10u);
}

TEST(PsiMaps, AgreeWithSweedlerOracle) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const Field& f = seed % 2 ? F7 : Q;
        WeakBialgebra h = seed % 3 ? sample_groupoid_wba(f, rng) : sample_group_algebra(f, rng);
        if (seed % 4 == 0) h = sabotage::variant(h, rng);
        EntwiningDatum r = psi_R(h), l = psi_L(h);
        EXPECT_EQ(r.handedness, Handedness::right);
        EXPECT_EQ(l.handedness, Handedness::left);
        EXPECT_TRUE(oracle::equal(oracle::of(r.psi), oracle_psi_r(h))) << seed;
        EXPECT_TRUE(oracle::equal(oracle::of(l.psi), oracle_psi_l(h))) << seed;
    }
}

TEST(PsiMaps, Examples) {
    WeakBialgebra z2 = cyclic_group_algebra(Q, 2);
    // Ψ_R(g ⊗ h) = h ⊗ gh
    LinMap expect(Q, 4, 4);
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t h = 0; h < 2; ++h) expect.set(h * 2 + (g + h) % 2, g * 2 + h, Scalar(Q, 1));
    EXPECT_EQ(psi_R(z2).psi, expect);
    EXPECT_TRUE(classify_entwining(psi_R(z2)).mixed_dl);

    LinMap d(Q, 4, 4);
    d.set(0, 0, Scalar(Q, 1));
    d.set(3, 3, Scalar(Q, 1));
    EXPECT_EQ(psi_R(g2(Q)).psi, d);
}

TEST(Characterize, Examples) {
    Characterization g = characterize_weak_bialgebra(g2(Q));
    EXPECT_TRUE(g.wba && g.psi_r_weak && g.psi_l_weak && g.biconditional);
    Characterization z = characterize_weak_bialgebra(cyclic_group_algebra(F7, 2));
    EXPECT_TRUE(z.wba && z.psi_r_weak && z.psi_l_weak && z.biconditional);

    WeakBialgebra bad = g2(Q);
    bad.counit = LinMap::from_ints(Q, 1, 2, {1, 0});
    Characterization b = characterize_weak_bialgebra(bad);
    EXPECT_FALSE(b.wba);
    EXPECT_TRUE(b.report.passed("wba:WBA_3a"));
    EXPECT_TRUE(b.biconditional);
}

TEST(Characterize, BiconditionalOnSamplesAndSabotage) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const Field& f = seed % 2 ? F7 : Q;
        WeakBialgebra h = seed % 3 ? sample_groupoid_wba(f, rng) : sample_group_algebra(f, rng);
        Characterization good = characterize_weak_bialgebra(h);
        EXPECT_TRUE(good.wba && good.biconditional) << seed;
        WeakBialgebra s = sabotage::variant(h, rng);
        ASSERT_FALSE(oracle::wba_axioms(oracle_wba(s))) << seed;
        Characterization c = characterize_weak_bialgebra(s);
        EXPECT_FALSE(c.wba) << seed;
        EXPECT_FALSE(c.psi_r_weak && c.psi_l_weak) << seed;
        EXPECT_TRUE(c.biconditional) << seed;
    }
}

TEST(Suites, WeakBiconditional) {
    SuiteOptions o;
    o.trials = 40;
    o.max_dim = 2;
    EXPECT_TRUE(verify_weak_biconditional(o).passed());
}
