#include "weakmonads/verify.hpp"

#include <functional>
#include <sstream>

#include "weakmonads/errors.hpp"
#include "weakmonads/sample.hpp"

namespace weakmonads {

namespace {

constexpr std::size_t max_notes = 8;

// Records the checks of one trial; a trial fails if any check fails.
class Trial {
public:
    Trial(SuiteResult& r, std::size_t index) : r_(r), index_(index) {}

    void check(const std::string& law, bool ok, const std::string& detail = "") {
        ++r_.counters[law];
        if (ok) return;
        failed_ = true;
        if (r_.failure_notes.size() < max_notes)
            r_.failure_notes.push_back("trial " + std::to_string(index_) + ": " + law + (detail.empty() ? "" : " (" + detail + ")"));
    }
    void count(const std::string& what) { ++r_.counters[what]; }
    bool failed() const { return failed_; }

private:
    SuiteResult& r_;
    std::size_t index_;
    bool failed_ = false;
};

Rng trial_rng(std::uint64_t seed, std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    return Rng(seq);
}

SuiteResult run_trials(const std::string& name, const SuiteOptions& o,
                       const std::function<void(Trial&, Rng&)>& body) {
    SuiteResult r;
    r.name = name;
    for (std::size_t i = 0; i < o.trials; ++i) {
        Trial t(r, i);
        Rng rng = trial_rng(o.seed, i);
        try {
            body(t, rng);
        } catch (const std::exception& e) {
            t.check("exception", false, e.what());
        }
        ++r.trials;
        if (t.failed()) ++r.failures;
    }
    return r;
}

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::size_t cell_dim(const SuiteOptions& o, Rng& rng) { return 1 + pick(rng, std::min<std::size_t>(2, o.max_dim)); }

// A second cell parallel to v: v itself, a fresh random cell, or v ⊕ fresh.
EMWOneCell related_cell(const EMWOneCell& v, const CatalogAlgebra& a, const CatalogAlgebra& b, std::size_t dim,
                        Rng& rng) {
    switch (pick(rng, 3)) {
        case 0: return v;
        case 1: return random_onecell(a, b, dim, rng);
        default: return direct_sum(v, random_onecell(a, b, 1, rng));
    }
}

}  // namespace

std::string SuiteResult::text() const {
    std::ostringstream out;
    out << name << ": " << (passed() ? "PASS" : "FAIL") << " (" << trials - failures << "/" << trials << " trials)\n";
    for (const auto& [law, n] : counters) out << "  " << law << ": " << n << "\n";
    for (const auto& note : failure_notes) out << "  failure: " << note << "\n";
    return out.str();
}

SuiteResult verify_emw_laws(const SuiteOptions& o) {
    return run_trials("emw-laws", o, [&](Trial& t, Rng& rng) {
        const Field& f = o.field;
        CatalogAlgebra a0 = random_catalog_entry(f, o.max_dim, rng), a1 = random_catalog_entry(f, o.max_dim, rng),
                       a2 = random_catalog_entry(f, o.max_dim, rng), a3 = random_catalog_entry(f, o.max_dim, rng);
        // level 1: t0 -> t1, level 2: t1 -> t2, level 3: t2 -> t3
        EMWOneCell V = random_onecell(a0, a1, cell_dim(o, rng), rng);
        EMWOneCell W = related_cell(V, a0, a1, cell_dim(o, rng), rng);
        EMWOneCell U = related_cell(W, a0, a1, cell_dim(o, rng), rng);
        EMWOneCell V2 = random_onecell(a1, a2, cell_dim(o, rng), rng);
        EMWOneCell W2 = related_cell(V2, a1, a2, cell_dim(o, rng), rng);
        EMWOneCell U2 = related_cell(W2, a1, a2, cell_dim(o, rng), rng);
        EMWOneCell V3 = random_onecell(a2, a3, 1, rng);
        EMWOneCell W3 = related_cell(V3, a2, a3, 1, rng);

        EMWTwoCell rho = random_twocell(V, W, rng), sigma = random_twocell(W, U, rng), tau = random_twocell(U, V, rng);
        EMWTwoCell rho2 = random_twocell(V2, W2, rng), sigma2 = random_twocell(W2, U2, rng);
        EMWTwoCell rho3 = random_twocell(V3, W3, rng);
        if (!rho.rho.is_zero() && !sigma.rho.is_zero()) t.count("nonzero-vertical-pairs");

        // 1-cells
        EMWOneCell VV2 = hcompose_onecells(V, V2);
        t.check("onecell-composite-valid", check_onecell(VV2).passed());
        t.check("onecell-hassoc", hcompose_onecells(VV2, V3) == hcompose_onecells(V, hcompose_onecells(V2, V3)));
        t.check("onecell-unit", hcompose_onecells(identity_onecell(a0.algebra), V) == V &&
                                    hcompose_onecells(V, identity_onecell(a1.algebra)) == V);

        // vertical
        EMWTwoCell sr = vcompose_twocells(sigma, rho);
        t.check("vcompose-valid", check_twocell(sr).passed());
        t.check("vassoc", vcompose_twocells(tau, sr) == vcompose_twocells(vcompose_twocells(tau, sigma), rho));
        t.check("vunit", vcompose_twocells(identity_twocell(W), rho) == rho &&
                             vcompose_twocells(rho, identity_twocell(V)) == rho);

        // horizontal
        EMWTwoCell h12 = hcompose_twocells(rho, rho2);
        t.check("hcompose-valid", check_twocell(h12).passed());
        t.check("hassoc", hcompose_twocells(h12, rho3) == hcompose_twocells(rho, hcompose_twocells(rho2, rho3)));
        EMWTwoCell id0 = identity_twocell(identity_onecell(a0.algebra));
        EMWTwoCell id1 = identity_twocell(identity_onecell(a1.algebra));
        t.check("hunit", hcompose_twocells(id0, rho) == rho && hcompose_twocells(rho, id1) == rho);
        t.check("hcompose-identities",
                hcompose_twocells(identity_twocell(V), identity_twocell(V2)) == identity_twocell(VV2));

        // interchange: (σ•ϱ)∘(σ'•ϱ') = (σ∘σ')•(ϱ∘ϱ')
        EMWTwoCell lhs = hcompose_twocells(sr, vcompose_twocells(sigma2, rho2));
        EMWTwoCell rhs = vcompose_twocells(hcompose_twocells(sigma, sigma2), h12);
        t.check("interchange", lhs == rhs);
    });
}

SuiteResult verify_membership(const SuiteOptions& o) {
    return run_trials("membership", o, [&](Trial& t, Rng& rng) {
        CatalogAlgebra a = random_catalog_entry(o.field, o.max_dim, rng);
        CatalogAlgebra b = random_catalog_entry(o.field, o.max_dim, rng);
        EMWOneCell V = random_onecell(a, b, cell_dim(o, rng), rng);
        EMWOneCell W = related_cell(V, a, b, cell_dim(o, rng), rng);
        LinMap omega = random_omega(V, W, rng);
        bool member[2] = {false, false};
        EMWTwoCell induced[2];
        for (Side side : {Side::iota, Side::pi}) {
            const std::string name = side == Side::iota ? "iota" : "pi";
            const int k = side == Side::iota ? 0 : 1;
            EMWTwoCell cand = induced_candidate(omega, side, V, W);
            bool i = check_twocell(cand).passed();
            Membership m = mnd_membership(omega, side, V, W);
            bool iii = membership_criterion_iii(omega, side, V, W).passed();
            t.check(name + ":(i)=(ii)=(iii)", i == m.member && m.member == iii);
            if (m.member) {
                t.count(name + "-members");
                t.check(name + ":induced", m.induced == cand);
            }
            member[k] = m.member;
            induced[k] = cand;
        }
        bool strict = strict_morphism(omega, V, W);
        t.check("(3):(i)=(ii)", strict == (member[0] && member[1]));
        if (strict) {
            t.count("strict");
            t.check("(3):equal-induced", induced[0].rho == induced[1].rho);
        }
    });
}

SuiteResult verify_membership_composition(const SuiteOptions& o) {
    return run_trials("membership-composition", o, [&](Trial& t, Rng& rng) {
        const Field& f = o.field;
        CatalogAlgebra a = random_catalog_entry(f, o.max_dim, rng), b = random_catalog_entry(f, o.max_dim, rng),
                       c = random_catalog_entry(f, o.max_dim, rng);
        EMWOneCell V = random_onecell(a, b, cell_dim(o, rng), rng);
        EMWOneCell W = related_cell(V, a, b, cell_dim(o, rng), rng);
        EMWOneCell U = related_cell(W, a, b, cell_dim(o, rng), rng);
        EMWOneCell V2 = random_onecell(b, c, cell_dim(o, rng), rng);
        EMWOneCell W2 = related_cell(V2, b, c, cell_dim(o, rng), rng);
        EMWOneCell VV2 = hcompose_onecells(V, V2), WW2 = hcompose_onecells(W, W2);
        Whisker X(f, TensorOrder::direct);
        const std::size_t n = a.algebra.dim;
        const LinMap& eta3 = c.algebra.unit;

        for (Side side : {Side::iota, Side::pi}) {
            const std::string name = side == Side::iota ? "iota" : "pi";
            OmegaSpace space = side == Side::iota ? OmegaSpace::iota : OmegaSpace::pi;
            auto draw = [&](const EMWOneCell& from, const EMWOneCell& to) {
                return unvectorize(random_combination(omega_space(space, from, to), rng), to.v_dim, from.v_dim);
            };
            LinMap om = draw(V, W), kap = draw(W, U), om2 = draw(V2, W2);
            bool ok = mnd_membership(om, side, V, W).member && mnd_membership(kap, side, W, U).member &&
                      mnd_membership(om2, side, V2, W2).member;
            t.check(name + ":sampled-members", ok);
            if (!ok) continue;
            if (!om.is_zero() && !om2.is_zero()) t.count(name + "-nonzero-pairs");

            // horizontal: formulas (1) / (2)
            EMWTwoCell h = hcompose_twocells(induced_candidate(om, side, V, W), induced_candidate(om2, side, V2, W2));
            LinMap both = X.juxt(om2, om);
            LinMap expected;
            if (side == Side::iota)
                expected = compose_all({X(1, both, n), X(V2.v_dim, V.psi, 1), X(1, V2.psi, V.v_dim),
                                        X(1, eta3, V2.v_dim * V.v_dim)});
            else
                expected = compose_all({X(W2.v_dim, W.psi, 1), X(1, W2.psi, W.v_dim), X(1, eta3, W2.v_dim * W.v_dim), both});
            t.check(name + (side == Side::iota ? ":(1)" : ":(2)"), h.rho == expected);
            t.check(name + ":horizontal-member", mnd_membership(both, side, VV2, WW2).member);

            // vertical: formulas (3) / (4)
            EMWTwoCell v = vcompose_twocells(induced_candidate(kap, side, W, U), induced_candidate(om, side, V, W));
            LinMap ko = compose(kap, om);
            const LinMap& eta2 = b.algebra.unit;
            LinMap expected_v = side == Side::iota
                                    ? compose_all({X(1, ko, n), V.psi, X(1, eta2, V.v_dim)})
                                    : compose_all({U.psi, X(1, eta2, U.v_dim), ko});
            t.check(name + (side == Side::iota ? ":(3)" : ":(4)"), v.rho == expected_v);
            t.check(name + ":vertical-member", mnd_membership(ko, side, V, U).member);
        }
    });
}

SuiteResult verify_lift_functoriality(const SuiteOptions& o) {
    return run_trials("lift-functoriality", o, [&](Trial& t, Rng& rng) {
        CatalogAlgebra a = random_catalog_entry(o.field, o.max_dim, rng);
        CatalogAlgebra b = random_catalog_entry(o.field, o.max_dim, rng);
        EMWOneCell V = random_onecell(a, b, cell_dim(o, rng), rng);
        EMWOneCell W = related_cell(V, a, b, cell_dim(o, rng), rng);
        EMWOneCell U = related_cell(W, a, b, cell_dim(o, rng), rng);
        EMWTwoCell rho = random_twocell(V, W, rng), tau = random_twocell(W, U, rng);
        Splitting sv = split_idempotent(lifting_idempotent(V));
        Splitting sw = split_idempotent(lifting_idempotent(W));
        Splitting su = split_idempotent(lifting_idempotent(U));
        LinMap composite = lift_twocell(vcompose_twocells(tau, rho), sv, su);
        LinMap product = compose(lift_twocell(tau, sw, su), lift_twocell(rho, sv, sw));
        if (!product.is_zero()) t.count("nonzero");
        t.check("lift(tau.rho)=lift(tau)lift(rho)", composite == product);
        t.check("lift(identity)=identity",
                lift_twocell(identity_twocell(V), sv, sv) == LinMap::identity(o.field, sv.retract_dim));
    });
}

SuiteResult verify_weak_biconditional(const SuiteOptions& o) {
    return run_trials("weak-biconditional", o, [&](Trial& t, Rng& rng) {
        const Field& f = o.field;
        EntwiningDatum d;
        switch (pick(rng, 6)) {
            case 0:
            case 1: {
                std::vector<WeakBialgebra> small{g2(f), cyclic_group_algebra(f, 2), cyclic_group_algebra(f, 1)};
                WeakBialgebra h = small[pick(rng, small.size())];
                h = transport(h, random_invertible(f, h.dim, rng));
                d = pick(rng, 2) ? psi_R(h) : psi_L(h);
                break;
            }
            case 2: d = smallest_partial_entwining(f); break;
            default: d = sample_onecell_entwining(f, std::min<std::size_t>(2, o.max_dim), rng); break;
        }
        Report ax = entwining_axioms(d);
        t.check("sampled-(5.9)", ax.passed("(5.9)"));
        bool weak = ax.passed("(5.9)") && ax.passed("(5.10)") && ax.passed("(5.11)") && ax.passed("(5.12)");
        bool lhs = cor51_sides(cor51_conditions(d)).iota;
        bool rhs = cor55_sides(cor55_conditions(d)).pi;
        if (weak) t.count("weak");
        if (lhs) t.count("iota-side");
        if (rhs) t.count("pi-side");
        t.check("weak<=>(iota-side and pi-side)", weak == (lhs && rhs));
    });
}

SuiteResult verify_wreath_roundtrip(const SuiteOptions& o) {
    return run_trials("wreath-roundtrip", o, [&](Trial& t, Rng& rng) {
        MonadInEMW m = sample_strict_wreath(o.field, rng);
        t.check("sampled-wreath", check_monad_in_emw(m).passed());
        t.check("wreath->premonad->wreath", roundtrip_theorem23(m).passed());
        t.check("premonad->wreath->premonad", roundtrip_theorem23_rev(wreath_to_premonad(m).p).passed());
    });
}

SuiteResult verify_retracts(const SuiteOptions& o) {
    return run_trials("retract", o, [&](Trial& t, Rng& rng) {
        PreMonad p = sample_premonad(o.field, rng);
        t.check("sampled-premonad", check_premonad(p).passed());
        Retract r = premonad_retract(p);
        t.check("retract-is-monad", check_algebra(r.monad).passed());
        if (r.split.retract_dim < p.dim) t.count("proper-retract");
    });
}

namespace {

// gamma for the left ideal generated by x in the algebra a.
LinMap left_ideal_action(const Algebra& a, const LinMap& x) {
    LinMap right_mult = compose(a.mult, kron(LinMap::identity(a.field, a.dim), x));  // y ↦ yx
    std::vector<std::size_t> piv = rref(right_mult).pivots;
    LinMap basis = right_mult.select_cols(piv);
    LinMap act = compose(a.mult, kron(LinMap::identity(a.field, a.dim), basis));
    auto g = solve(basis, act);
    if (!g) throw PreconditionFailed("left ideal is not closed");
    return *g;
}

LinMap direct_sum_action(const Field& f, std::size_t n, const LinMap& g1, std::size_t d1, const LinMap& g2,
                         std::size_t d2) {
    LinMap p1 = hstack({LinMap::identity(f, d1), LinMap(f, d1, d2)});
    LinMap p2 = hstack({LinMap(f, d2, d1), LinMap::identity(f, d2)});
    LinMap id = LinMap::identity(f, n);
    return vstack({compose(g1, kron(id, p1)), compose(g2, kron(id, p2))});
}

}  // namespace

SuiteResult verify_module_roundtrip(const SuiteOptions& o) { return verify_module_roundtrip_for(weak_smash(g2(o.field)), o); }

SuiteResult verify_module_roundtrip_for(const MonadInEMW& m, const SuiteOptions& o) {
    WreathModuleContext ctx = make_module_context(m);
    const Algebra& hat = ctx.retract.monad;
    const Field& f = m.base.field;
    return run_trials("module-roundtrip", o, [&](Trial& t, Rng& rng) {
        auto one = [&](std::size_t& dim) {
            if (pick(rng, 2)) {
                dim = hat.dim;
                return hat.mult;
            }
            LinMap g = left_ideal_action(hat, random_matrix(f, hat.dim, 1, rng));
            dim = g.rows();
            return g;
        };
        std::size_t w = 0, w2 = 0;
        LinMap gamma = one(w);
        if (pick(rng, 2)) {
            LinMap second = one(w2);
            gamma = direct_sum_action(f, hat.dim, gamma, w, second, w2);
            w += w2;
        }
        if (w > 0) {
            LinMap g = random_invertible(f, w, rng);
            gamma = compose_all({g, gamma, kron(LinMap::identity(f, hat.dim), *inverse(g))});
        }
        t.check("sampled-module", check_gamma(ctx, w, gamma).passed());
        LiftedModuleDatum d = gamma_to_rholambda(ctx, w, gamma);
        t.check("(rho,lambda)-axioms", check_rholambda(ctx, d).passed());
        LinMap back = rholambda_to_gamma(ctx, d);
        t.check("gamma->(rho,lambda)->gamma", back == gamma);
        LiftedModuleDatum again = gamma_to_rholambda(ctx, w, back);
        t.check("(rho,lambda)->gamma->(rho,lambda)", again.rho == d.rho && again.lam == d.lam);
    });
}

std::vector<std::string> suite_names() {
    return {"emw-laws", "membership", "membership-composition", "lift-functoriality", "weak-biconditional", "wreath-roundtrip", "retract", "module-roundtrip"};
}

std::optional<SuiteResult> run_suite(const std::string& name, const SuiteOptions& o) {
    if (name == "emw-laws") return verify_emw_laws(o);
    if (name == "membership") return verify_membership(o);
    if (name == "membership-composition") return verify_membership_composition(o);
    if (name == "lift-functoriality") return verify_lift_functoriality(o);
    if (name == "weak-biconditional") return verify_weak_biconditional(o);
    if (name == "wreath-roundtrip") return verify_wreath_roundtrip(o);
    if (name == "retract") return verify_retracts(o);
    if (name == "module-roundtrip") return verify_module_roundtrip(o);
    return std::nullopt;
}

}  // namespace weakmonads
