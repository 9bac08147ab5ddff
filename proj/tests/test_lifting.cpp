#include <weakmonads/entwine.hpp>
#include <weakmonads/errors.hpp>
#include <weakmonads/lifting.hpp>
#include <weakmonads/sample.hpp>
#include <weakmonads/verify.hpp>

#include <gtest/gtest.h>

#include <string>

#include "support/oracle.hpp"

using namespace weakmonads;

namespace {

const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

LinMap diag(const Field& f, const std::vector<long>& d) {
    LinMap m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, Scalar(f, d[i]));
    return m;
}

Bimodule character(const Algebra& a, std::size_t i, bool right) {
    const Field& f = a.field;
    LinMap chi(f, 1, a.dim);
    chi.set(0, i, Scalar(f, 1));
    Algebra k = ground_algebra(f);
    if (right) return {k, a, 1, LinMap::identity(f, 1), chi};
    return {a, k, 1, chi, LinMap::identity(f, 1)};
}

}  // namespace

TEST(LiftingIdempotent, StrictIsIdentity) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        EntwiningDatum d = sample_strict_entwining(F7, rng);
        EXPECT_EQ(lifting_idempotent(d), LinMap::identity(F7, d.A.dim * d.C.dim)) << seed;
    }
}

TEST(LiftingIdempotent, G2PsiR) {
    LinMap e = lifting_idempotent(psi_R(g2(Q)));
    EXPECT_EQ(e, diag(Q, {1, 0, 0, 1}));
    EXPECT_EQ(oracle::rank(oracle::of(e)), 2u);
}

TEST(LiftingIdempotent, TrivialCoalgebra) {
    Algebra a = g2(Q).algebra();
    Coalgebra k{Q, 1, LinMap::identity(Q, 1), LinMap::identity(Q, 1)};
    EntwiningDatum d{a, k, LinMap::identity(Q, 2), Handedness::right};
    EXPECT_EQ(lifting_idempotent(d), LinMap::identity(Q, 2));
}

TEST(LiftingIdempotent, NotIdempotentSignalsBadDatum) {
    EntwiningDatum d = psi_R(g2(Q));
    d.psi = diag(Q, {2, 0, 0, 2});
    EXPECT_THROW(lifting_idempotent(d), NotIdempotent);
}

TEST(LiftingIdempotent, IdempotentAbsorbsPsi) {
    // Vμ ∗ ψt ∗ η'Vt ∗ ψ = ψ
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        EntwiningDatum d = sample_onecell_entwining(F7, 2, rng);
        EMWOneCell cell = entwining_onecell(d);
        Whisker W(F7, cell.order);
        const std::size_t n = d.A.dim, v = d.C.dim;
        LinMap lhs = compose_all({W(v, d.A.mult, 1), W(1, cell.psi, n), W(1, d.A.unit, v * n), cell.psi});
        EXPECT_EQ(lhs, cell.psi) << seed;
    }
}

TEST(LiftTwocell, IdentityZeroAndCounit) {
    EntwiningDatum d = psi_R(g2(Q));
    EMWOneCell cell = entwining_onecell(d);
    Splitting sv = split_idempotent(lifting_idempotent(d));
    EXPECT_EQ(lift_twocell(identity_twocell(cell), sv, sv), LinMap::identity(Q, 2));
    EMWTwoCell zero{cell, cell, LinMap::zero(Q, 4, 2)};
    EXPECT_TRUE(lift_twocell(zero, sv, sv).is_zero());

    auto [delta, eps] = comonad_twocells(d, CoringKind::iota);
    EMWOneCell idcell = eps.dst;
    Splitting sw = split_idempotent(lifting_idempotent(idcell));
    ASSERT_EQ(sw.retract_dim, 2u);
    // the rank-2 basis e₁⊗e₁, e₂⊗e₂ goes to e₁, e₂
    EXPECT_EQ(lift_twocell(eps, sv, sw), LinMap::identity(Q, 2));
    EXPECT_THROW(lift_twocell(eps, sw, sw), ShapeMismatch);
}

TEST(TensorOverA, Unitor) {
    Rng rng(5);
    Algebra a = sample_algebra(Q, rng);
    Bimodule reg = regular_bimodule(a);
    TensorOverA t = tensor_over_A(reg, reg);
    EXPECT_EQ(t.result.dim, a.dim);
    LinMap unitor = compose(t.quotient.proj, kron(a.unit, LinMap::identity(Q, a.dim)));
    EXPECT_EQ(oracle::rank(oracle::of(unitor)), a.dim);
    EXPECT_TRUE(check_bimodule(t.result).passed());
}

TEST(TensorOverA, OrthogonalCharactersOfG2) {
    Algebra a = g2(Q).algebra();
    TensorOverA t = tensor_over_A(character(a, 0, true), character(a, 1, false));
    EXPECT_EQ(oracle::rank(oracle::of(t.relation)), 1u);
    EXPECT_EQ(t.result.dim, 0u);
    TensorOverA same = tensor_over_A(character(a, 0, true), character(a, 0, false));
    EXPECT_EQ(same.result.dim, 1u);
}

TEST(TensorOverA, FreeModule) {
    Rng rng(6);
    Algebra a = sample_algebra(F7, rng);
    const std::size_t n = a.dim;
    // Y = A ⊕ A as a left A-module
    LinMap act(F7, 2 * n, n * 2 * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (!a.mult.is_zero_at(z, x * n + y)) act.set(b * n + z, x * 2 * n + b * n + y, a.mult.at(z, x * n + y));
    Bimodule y{a, ground_algebra(F7), 2 * n, act, LinMap::identity(F7, 2 * n)};
    ASSERT_TRUE(check_bimodule(y).passed());
    Bimodule x = character(a.dim == 2 ? cyclic_group_algebra(F7, 3).algebra() : g2(F7).algebra(), 0, true);
    Bimodule xa{ground_algebra(F7), a, n, LinMap::identity(F7, n), a.mult};
    EXPECT_EQ(tensor_over_A(xa, y).result.dim, 2 * n);
    EXPECT_THROW(tensor_over_A(x, y), MonadMismatch);
}

TEST(Coring, StrictEntwiningIota) {
    for (std::size_t order : {2, 3})
        for (const EntwiningDatum& d : {psi_R(cyclic_group_algebra(F7, order)), psi_L(cyclic_group_algebra(F7, order))}) {
            LiftedCoring lc = build_lifted_coring(d, CoringKind::iota);
            EXPECT_TRUE(lc.report.passed()) << lc.report.text();
            EXPECT_EQ(lc.coring.carrier.dim, d.A.dim * d.C.dim) << order;
            // left-handed input is mirrored first
            EXPECT_EQ(recover_psi(lc.coring), d.handedness == Handedness::right ? d.psi : mirror(d).psi);
        }
}

TEST(Coring, G2PsiRIota) {
    EntwiningDatum d = psi_R(g2(Q));
    LiftedCoring lc = build_lifted_coring(d, CoringKind::iota);
    EXPECT_EQ(lc.coring.carrier.dim, 2u);
    EXPECT_TRUE(lc.report.passed()) << lc.report.text();
    EXPECT_TRUE(lc.report.passed("counit-left"));
    EXPECT_TRUE(lc.report.passed("counit-right"));
    EXPECT_TRUE(check_coring(lc.coring).passed());
    EXPECT_EQ(lc.coring.counit, LinMap::identity(Q, 2));
    EXPECT_EQ(recover_psi(lc.coring), d.psi);

    LiftedCoring cols = build_lifted_coring(d, CoringKind::iota, SplitChoice::columns);
    EXPECT_TRUE(cols.report.passed());
    EXPECT_EQ(recover_psi(cols.coring), d.psi);
}

TEST(Coring, LeftHandedG2) {
    EntwiningDatum d = psi_L(g2(Q));
    LiftedCoring lc = build_lifted_coring(d, CoringKind::iota);
    EXPECT_TRUE(lc.report.passed()) << lc.report.text();
}

TEST(Coring, PartialPi) {
    EntwiningDatum d = smallest_partial_entwining(Q);
    LiftedCoring lc = build_lifted_coring(d, CoringKind::pi);
    EXPECT_TRUE(lc.report.passed()) << lc.report.text();
    EXPECT_EQ(recover_psi(lc.coring), d.psi);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Rng rng(seed);
        EntwiningDatum p = sample_partial_entwining(F7, rng);
        EXPECT_TRUE(build_lifted_coring(p, CoringKind::pi).report.passed()) << seed;
    }
}

TEST(Coring, WeakSamplesIotaAndLax) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Rng rng(seed);
        EntwiningDatum d = sample_weak_entwining(F7, rng);
        LiftedCoring lc = build_lifted_coring(d, CoringKind::iota);
        EXPECT_TRUE(lc.report.passed()) << seed << lc.report.text();
        EXPECT_EQ(recover_psi(lc.coring), d.handedness == Handedness::right ? d.psi : mirror(d).psi);
    }
    EntwiningDatum s = psi_R(cyclic_group_algebra(F7, 2));
    EXPECT_TRUE(build_lifted_coring(s, CoringKind::lax).report.passed());
}

TEST(Coring, KindMismatch) {
    EntwiningDatum d = smallest_partial_entwining(Q);
    EXPECT_THROW(build_lifted_coring(d, CoringKind::iota), EntwiningKindMismatch);
}

TEST(ModuleCorrespondence, TrivialWreath) {
    Algebra t = g2(Q).algebra();
    MonadInEMW m{t, 1, LinMap::identity(Q, 2), t.unit, t.unit};
    ASSERT_TRUE(check_monad_in_emw(m).passed());
    WreathModuleContext ctx = make_module_context(m);
    ASSERT_EQ(ctx.retract.monad.dim, 2u);
    LinMap gamma = ctx.retract.monad.mult;
    LiftedModuleDatum d = gamma_to_rholambda(ctx, 2, gamma);
    EXPECT_EQ(d.lam, LinMap::identity(Q, 2));
    EXPECT_EQ(d.rho, t.mult);
    EXPECT_EQ(rholambda_to_gamma(ctx, d), gamma);
}

TEST(ModuleCorrespondence, G2WeakSmash) {
    MonadInEMW m = weak_smash(g2(Q));
    WreathModuleContext ctx = make_module_context(m);
    const Algebra& hat = ctx.retract.monad;
    LiftedModuleDatum d = gamma_to_rholambda(ctx, hat.dim, hat.mult);
    EXPECT_TRUE(check_rholambda(ctx, d).passed());
    EXPECT_EQ(rholambda_to_gamma(ctx, d), hat.mult);

    SuiteOptions o;
    o.trials = 10;
    o.field = Q;
    EXPECT_TRUE(verify_module_roundtrip_for(m, o).passed());
}

TEST(ModuleCorrespondence, CorruptedLambda) {
    MonadInEMW m = weak_smash(g2(Q));
    WreathModuleContext ctx = make_module_context(m);
    const Algebra& hat = ctx.retract.monad;
    LiftedModuleDatum d = gamma_to_rholambda(ctx, hat.dim, hat.mult);
    d.lam.set(0, 0, d.lam.at(0, 0) + Scalar(Q, 1));
    Report r = check_rholambda(ctx, d);
    const Verdict* bad = r.first_failure();
    ASSERT_NE(bad, nullptr);
    EXPECT_TRUE(bad->witness.has_value());
    try {
        rholambda_to_gamma(ctx, d);
        FAIL() << "corrupted lambda accepted";
    } catch (const AxiomFailed& e) {
        EXPECT_NE(std::string(e.what()).find(bad->tag), std::string::npos) << e.what();
    }
    EXPECT_THROW(gamma_to_rholambda(ctx, hat.dim, LinMap::zero(Q, hat.dim, hat.dim * hat.dim)), NotModule);
}

TEST(Suites, FunctorialityAndModules) {
    SuiteOptions o;
    o.trials = 10;
    EXPECT_TRUE(verify_lift_functoriality(o).passed());
    EXPECT_TRUE(verify_module_roundtrip(o).passed());
}
