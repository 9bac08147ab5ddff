// weakmonads: command line front end for the structure checks.
// Exit codes: 0 every check passes, 1 a checked identity fails, 2 input error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "weakmonads/entwine.hpp"
#include "weakmonads/errors.hpp"
#include "weakmonads/sample.hpp"
#include "weakmonads/serialize.hpp"
#include "weakmonads/verify.hpp"

using namespace weakmonads;
using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

bool g_json = false;

class InputError : public Error {
public:
    using Error::Error;
};

std::uint64_t default_seed() {
    if (const char* s = std::getenv("WEAKMONADS_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw InputError(std::string("WEAKMONADS_SEED is not a number: ") + s);
        }
    }
    return 1;
}

Field parse_field_flag(const std::string& text) {
    try {
        return Field::parse(text);
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

int emit(const Report& r, const json& extra = json::object()) {
    if (g_json) {
        json j = json::parse(report_json(r));
        for (auto& [k, v] : extra.items()) j[k] = v;
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << r.text();
        for (auto& [k, v] : extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return r.passed() ? exit_pass : exit_fail;
}

int emit(const SuiteResult& s) {
    if (g_json) {
        json j{{"suite", s.name},
               {"passed", s.passed()},
               {"trials", s.trials},
               {"failures", s.failures},
               {"counters", s.counters},
               {"failure_notes", s.failure_notes}};
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << s.text();
    }
    return s.passed() ? exit_pass : exit_fail;
}

template <class T>
T expect_kind(const Structure& s, const std::string& wanted) {
    if (const T* t = std::get_if<T>(&s)) return *t;
    throw InputError("expected a " + wanted + " document, got " + kind_name(s));
}

ComposedPreMonad expect_composed(const Structure& s) {
    if (const auto* p = std::get_if<ComposedPreMonad>(&s)) return *p;
    throw InputError("expected a premonad document with s_dim and t, got " + kind_name(s));
}

void maybe_write(const std::string& out, const Structure& s) {
    if (!out.empty()) write_structure_file(out, s);
}

CoringKind parse_kind(const std::string& k) {
    if (k == "iota") return CoringKind::iota;
    if (k == "pi") return CoringKind::pi;
    return CoringKind::lax;
}

Report check_any(const Structure& s) {
    return std::visit(
        overloaded{
            [](const Algebra& a) { return check_algebra(a); },
            [](const Coalgebra& c) { return check_coalgebra(c); },
            [](const PreMonad& p) { return check_premonad(p); },
            [](const ComposedPreMonad& p) {
                Report r = check_premonad(p.premonad);
                r.append(check_algebra(p.t), "t:");
                r.add(left_linearity(p));
                return r;
            },
            [](const WeakBialgebra& h) { return check_weak_bialgebra(h); },
            [](const EntwiningDatum& d) {
                Report r{"entwining datum", {}};
                r.append(check_algebra(d.A), "A:");
                r.append(check_coalgebra(d.C), "C:");
                Report ax = entwining_axioms(d);
                r.add(*ax.find("(5.9)"));
                return r;
            },
            [](const MonadInEMW& m) { return check_monad_in_emw(m); },
            [](const Coring& c) { return check_coring(c); },
        },
        s);
}

const char* yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for weak liftings, EM^w cells and weak entwining structures"};
    app.add_flag("--json", g_json, "Machine-readable JSON output");
    app.require_subcommand(1);

    std::string file, out, kind = "iota", split = "rows", suite, family, field_text = "F7";
    std::size_t trials = 100, max_dim = 3;
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto* check = app.add_subcommand("check", "Check a structure file against its axioms");
    check->add_option("file", file, "Structure file")->required();

    auto* classify = app.add_subcommand("classify", "Classify an entwining datum");
    classify->add_option("file", file, "Entwining file")->required();

    auto* lift = app.add_subcommand("lift", "Build the lifted coring of an entwining datum");
    lift->add_option("file", file, "Entwining file")->required();
    lift->add_option("--kind", kind, "iota, pi or lax")->check(CLI::IsMember({"iota", "pi", "lax"}));
    lift->add_option("--split", split, "Splitting: rows or columns")->check(CLI::IsMember({"rows", "columns"}));
    lift->add_option("--out", out, "Write the coring here");

    auto* premonad = app.add_subcommand("premonad", "Pre-monad operations");
    premonad->require_subcommand(1);
    auto* retract = premonad->add_subcommand("retract", "Retract monad of a pre-monad");
    retract->add_option("file", file, "Pre-monad file")->required();
    retract->add_option("--out", out, "Write the retract algebra here");

    auto* wreath = app.add_subcommand("wreath", "Monads in EM^w and pre-monads");
    wreath->require_subcommand(1);
    auto* to_pm = wreath->add_subcommand("to-premonad", "Monad in EM^w -> pre-monad");
    to_pm->add_option("file", file, "emw_monad file")->required();
    to_pm->add_option("--out", out, "Write the pre-monad here");
    auto* from_pm = wreath->add_subcommand("from-premonad", "Pre-monad -> monad in EM^w");
    from_pm->add_option("file", file, "premonad file with s_dim and t")->required();
    from_pm->add_option("--out", out, "Write the monad here");

    auto* roundtrip = app.add_subcommand("roundtrip", "Round trips of the correspondences");
    roundtrip->require_subcommand(1);
    auto* rt_thm = roundtrip->add_subcommand("thm23", "Wreath <-> pre-monad");
    rt_thm->add_option("file", file, "emw_monad or premonad file")->required();
    auto* rt_mod = roundtrip->add_subcommand("prop38", "Modules of the retract <-> (rho, lambda) data");
    rt_mod->add_option("file", file, "emw_monad or premonad file")->required();
    rt_mod->add_option("--trials", trials, "Number of sampled modules");
    rt_mod->add_option("--seed", seed, "Seed")->each([&](const std::string&) { seed_given = true; });
    auto* rt_psi = roundtrip->add_subcommand("psi", "Entwining -> coring -> entwining");
    rt_psi->add_option("file", file, "Entwining file")->required();
    rt_psi->add_option("--kind", kind, "iota, pi or lax")->check(CLI::IsMember({"iota", "pi", "lax"}));
    rt_psi->add_option("--split", split, "rows or columns")->check(CLI::IsMember({"rows", "columns"}));

    auto* verify = app.add_subcommand("verify", "Randomized law suites");
    std::string suites;
    for (const auto& s : suite_names()) suites += (suites.empty() ? "" : ", ") + s;
    verify->add_option("suite", suite, "One of: " + suites)->required();
    verify->add_option("--field", field_text, "Q or Fp, e.g. F7");
    verify->add_option("--trials", trials, "Number of trials");
    verify->add_option("--max-dim", max_dim, "Largest algebra dimension");
    verify->add_option("--seed", seed, "Seed (default $WEAKMONADS_SEED or 1)")->each([&](const std::string&) {
        seed_given = true;
    });

    auto* generate = app.add_subcommand("generate", "Write a sampled or named structure");
    std::string families;
    for (const auto& s : family_names()) families += (families.empty() ? "" : ", ") + s;
    generate->add_option("family", family, "One of: " + families)->required();
    generate->add_option("--field", field_text, "Q or Fp, e.g. F7");
    generate->add_option("--seed", seed, "Seed (default $WEAKMONADS_SEED or 1)")->each([&](const std::string&) {
        seed_given = true;
    });
    generate->add_option("--out", out, "Output file (default stdout)");

    auto* characterize = app.add_subcommand("characterize-wba", "Weak bialgebra <=> weak entwinings");
    characterize->add_option("file", file, "weak_bialgebra file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_input;
    }

    try {
        if (!seed_given) seed = default_seed();
        SuiteOptions opts{parse_field_flag(field_text), trials, max_dim, seed};

        if (*check) return emit(check_any(read_structure_file(file)));

        if (*classify) {
            EntwiningDatum d = expect_kind<EntwiningDatum>(read_structure_file(file), "entwining");
            Classification c = classify_entwining(d);
            // Individual axioms only decide the classes; only (5.9) is a hard failure.
            emit(c.report, {{"mixed_distributive_law", yes(c.mixed_dl)},
                            {"weak", yes(c.weak)},
                            {"partial", yes(c.partial)},
                            {"lax", yes(c.lax)}});
            return exit_pass;
        }

        if (*lift) {
            EntwiningDatum d = expect_kind<EntwiningDatum>(read_structure_file(file), "entwining");
            LiftedCoring lc = build_lifted_coring(d, parse_kind(kind), split == "rows" ? SplitChoice::rows : SplitChoice::columns);
            maybe_write(out, lc.coring);
            return emit(lc.report, {{"carrier_dim", lc.coring.carrier.dim}, {"square_dim", lc.coring.square.quotient.dim}});
        }

        if (*retract) {
            Structure s = read_structure_file(file);
            PreMonad p;
            if (auto* c = std::get_if<ComposedPreMonad>(&s)) p = c->premonad;
            else p = expect_kind<PreMonad>(s, "premonad");
            Retract r = premonad_retract(p);
            maybe_write(out, r.monad);
            Report rep = check_algebra(r.monad);
            rep.title = "retract monad";
            return emit(rep, {{"retract_dim", r.split.retract_dim}});
        }

        if (*to_pm) {
            MonadInEMW m = expect_kind<MonadInEMW>(read_structure_file(file), "emw_monad");
            WreathToPremonad w = wreath_to_premonad(m);
            maybe_write(out, w.p);
            return emit(w.report);
        }

        if (*from_pm) {
            MonadInEMW m = premonad_to_wreath(expect_composed(read_structure_file(file)));
            maybe_write(out, m);
            return emit(check_monad_in_emw(m));
        }

        if (*rt_thm) {
            Structure s = read_structure_file(file);
            if (auto* m = std::get_if<MonadInEMW>(&s)) return emit(roundtrip_theorem23(*m));
            return emit(roundtrip_theorem23_rev(expect_composed(s)));
        }

        if (*rt_mod) {
            Structure s = read_structure_file(file);
            MonadInEMW m = std::holds_alternative<MonadInEMW>(s) ? std::get<MonadInEMW>(s)
                                                                 : premonad_to_wreath(expect_composed(s));
            return emit(verify_module_roundtrip_for(m, opts));
        }

        if (*rt_psi) {
            EntwiningDatum d = expect_kind<EntwiningDatum>(read_structure_file(file), "entwining");
            LiftedCoring lc = build_lifted_coring(d, parse_kind(kind), split == "rows" ? SplitChoice::rows : SplitChoice::columns);
            Report r{"entwining -> coring -> entwining", {}};
            r.add(identity_verdict("psi", recover_psi(lc.coring), lc.coring.source.psi));
            return emit(r);
        }

        if (*verify) {
            auto result = run_suite(suite, opts);
            if (!result) throw InputError("unknown suite \"" + suite + "\"; one of: " + suites);
            return emit(*result);
        }

        if (*generate) {
            Structure s = sample_structure(family, opts.field, seed);
            if (out.empty()) std::cout << emit_structure(s);
            else write_structure_file(out, s);
            return exit_pass;
        }

        if (*characterize) {
            WeakBialgebra h = expect_kind<WeakBialgebra>(read_structure_file(file), "weak_bialgebra");
            Characterization c = characterize_weak_bialgebra(h);
            emit(c.report, {{"weak_bialgebra", yes(c.wba)},
                            {"psi_R_weak_entwining", yes(c.psi_r_weak)},
                            {"psi_L_weak_entwining", yes(c.psi_l_weak)},
                            {"biconditional", yes(c.biconditional)}});
            return c.biconditional ? exit_pass : exit_fail;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_input;
    } catch (const DimensionMismatch& e) {
        std::cerr << "dimension mismatch: " << e.what() << "\n";
        return exit_input;
    } catch (const FieldMismatch& e) {
        std::cerr << "field mismatch: " << e.what() << "\n";
        return exit_input;
    } catch (const ShapeMismatch& e) {
        std::cerr << "shape mismatch: " << e.what() << "\n";
        return exit_input;
    } catch (const InvalidPresentation& e) {
        std::cerr << "invalid presentation: " << e.what() << "\n";
        return exit_input;
    } catch (const UnknownFamily& e) {
        std::cerr << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        // A checked identity failed while building a derived structure.
        std::cerr << "check failed: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_input;
}
