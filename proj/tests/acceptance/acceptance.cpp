// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <weakmonads/entwine.hpp>
#include <weakmonads/lifting.hpp>
#include <weakmonads/premonad_bridge.hpp>
#include <weakmonads/sample.hpp>
#include <weakmonads/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracle.hpp"
#include "../support/sabotage.hpp"

using namespace weakmonads;

namespace {

const Field Q = Field::rationals();
const Field F7 = Field::prime(7);
constexpr double time_limit = 60.0;

struct Outcome {
    bool passed = false;
    std::string detail;
};

SuiteOptions options(std::size_t trials, std::size_t max_dim = 3) {
    SuiteOptions o;
    o.field = F7;
    o.trials = trials;
    o.max_dim = max_dim;
    o.seed = 1;
    return o;
}

Outcome from_suite(const SuiteResult& r, const char* what) {
    std::ostringstream s;
    s << r.trials - r.failures << "/" << r.trials << " " << what;
    if (!r.failure_notes.empty()) s << "; first failure: " << r.failure_notes.front();
    return {r.passed(), s.str()};
}

Outcome criterion4() {
    SuiteResult strict = verify_wreath_roundtrip(options(50));
    MonadInEMW m = weak_smash(g2(Q));
    bool emw = check_monad_in_emw(m).passed();
    WreathToPremonad w = wreath_to_premonad(m);
    bool fwd = roundtrip_theorem23(m).passed();
    bool rev = roundtrip_theorem23_rev(w.p).passed();
    bool pre = check_premonad(w.p.premonad).passed();
    Report unit = check_algebra(as_algebra(w.p.premonad));
    const Verdict* bad = unit.first_failure();
    bool not_monad = bad && bad->witness;
    std::ostringstream s;
    s << strict.trials - strict.failures << "/" << strict.trials << " strict wreaths; G2 weak smash: round trips "
      << (fwd && rev ? "exact" : "FAILED") << ", pre-monad " << (pre ? "yes" : "no");
    if (not_monad)
        s << ", strict unit law fails (" << bad->tag << " at column " << bad->witness->column << ", row "
          << bad->witness->row << ": " << bad->witness->lhs << " vs " << bad->witness->rhs << ")";
    else
        s << ", strict unit law unexpectedly holds";
    return {strict.passed() && emw && fwd && rev && pre && not_monad, s.str()};
}

Outcome criterion5() {
    SuiteResult r = verify_retracts(options(100));
    Retract corner = premonad_retract(corner_premonad(Q));
    std::size_t oracle_rank = oracle::rank(oracle::of(corner.split.e));
    bool ok = r.passed() && corner.split.retract_dim == 1 && oracle_rank == 1 && check_algebra(corner.monad).passed();
    std::ostringstream s;
    s << r.trials - r.failures << "/" << r.trials << " sampled retracts are monads; (k^2, e1xy, e1) retract dim "
      << corner.split.retract_dim << " (independent rank " << oracle_rank << ")";
    return {ok, s.str()};
}

Outcome criterion6() {
    EntwiningDatum d = psi_R(g2(Q));
    LinMap e = lifting_idempotent(d);
    std::size_t rk = oracle::rank(oracle::of(e));
    LiftedCoring lc = build_lifted_coring(d, CoringKind::iota);
    Report coring = check_coring(lc.coring);
    bool fg = recover_psi(lc.coring) == d.psi;
    std::ostringstream s;
    s << "rank(e) = " << rk << ", coring carrier dim " << lc.coring.carrier.dim << ", coring invariants "
      << (coring.passed() && lc.report.passed() ? "exact" : "FAILED") << ", recovered psi "
      << (fg ? "bitwise equal" : "DIFFERS");
    if (!lc.report.passed()) s << " (" << lc.report.first_failure()->tag << ")";
    return {rk == 2 && coring.passed() && lc.report.passed() && fg, s.str()};
}

Outcome criterion9() {
    std::vector<std::string> problems;
    auto all_true = [&](const WeakBialgebra& h, const char* name) {
        Characterization c = characterize_weak_bialgebra(h);
        if (!(c.wba && c.psi_r_weak && c.psi_l_weak && c.biconditional)) problems.push_back(name);
    };
    all_true(g2(Q), "G2");
    all_true(cyclic_group_algebra(Q, 2), "Z/2");

    std::vector<WeakBialgebra> bases{g2(Q), cyclic_group_algebra(Q, 2)};
    Rng rng(9);
    for (std::uint64_t seed = 0; bases.size() < 5; ++seed) {
        Rng r(seed);
        bases.push_back(sample_groupoid_wba(F7, r));
    }
    std::size_t sabotaged = 0;
    for (int i = 0; i < 20; ++i) {
        WeakBialgebra s = sabotage::variant(bases[i % bases.size()], rng);
        oracle::Wba o{s.field.characteristic(), s.dim, oracle::of(s.mult), oracle::of(s.unit), oracle::of(s.comult),
                      oracle::of(s.counit)};
        Characterization c = characterize_weak_bialgebra(s);
        bool both_false = !c.wba && !(c.psi_r_weak && c.psi_l_weak);
        if (both_false && c.biconditional && !oracle::wba_axioms(o)) ++sabotaged;
        else problems.push_back("variant " + std::to_string(i));
    }
    std::ostringstream s;
    s << "G2 and Z/2 all true; " << sabotaged << "/20 sabotaged variants false on both sides";
    for (const auto& p : problems) s << "; failed: " << p;
    return {problems.empty(), s.str()};
}

Outcome criterion10() {
    EntwiningDatum d = smallest_partial_entwining(Q);
    Classification c = classify_entwining(d);
    LiftedCoring lc = build_lifted_coring(d, CoringKind::pi);
    std::ostringstream s;
    s << "partial " << (c.partial ? "yes" : "no") << ", weak " << (c.weak ? "yes" : "no") << ", pi coring (carrier dim "
      << lc.coring.carrier.dim << ") " << (lc.report.passed() ? "passes all invariants" : "FAILS");
    return {c.partial && !c.weak && lc.report.passed(), s.str()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "EM^w law suite", [] { return from_suite(verify_emw_laws(options(200)), "configurations exact"); }},
        {2, "membership criteria agree", [] { return from_suite(verify_membership(options(100)), "samples agree"); }},
        {3, "membership closed under composition", [] { return from_suite(verify_membership_composition(options(100)), "composable pairs exact"); }},
        {4, "wreath / pre-monad round trips", criterion4},
        {5, "pre-monad retracts", criterion5},
        {6, "lifting pipeline on G2 / Psi_R", criterion6},
        {7, "module round trips",
         [] { return from_suite(verify_module_roundtrip_for(weak_smash(g2(F7)), options(50)), "module structures exact"); }},
        {8, "weak entwining biconditional",
         [] { return from_suite(verify_weak_biconditional(options(200, 2)), "sampled psi agree"); }},
        {9, "weak bialgebra characterization", criterion9},
        {10, "partial entwining", criterion10},
        {11, "lift functoriality",
         [] { return from_suite(verify_lift_functoriality(options(50)), "composable pairs exact"); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > time_limit) {
            o.passed = false;
            o.detail += "; exceeded the time limit";
        }
        if (!o.passed) ++failed;
        std::printf("%s criterion %2d  %s: %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
