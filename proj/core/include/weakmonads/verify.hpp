#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weakmonads/field.hpp"

namespace weakmonads {

struct SuiteOptions {
    Field field = Field::prime(7);
    std::size_t trials = 100;
    std::size_t max_dim = 3;
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::map<std::string, std::size_t> counters;  // law or case -> number of checks
    std::vector<std::string> failure_notes;       // first few failures, by trial index
    bool passed() const { return trials > 0 && failures == 0; }
    std::string text() const;
};

// Randomized configurations of 1-cells and 2-cells: associativity and unit
// laws for both compositions, interchange, and validity of all composites.
SuiteResult verify_emw_laws(const SuiteOptions& o);
// The three characterizations on each side agree; the strict case gives
// equal induced 2-cells.
SuiteResult verify_membership(const SuiteOptions& o);
// Induced 2-cells of composites are the composites of induced 2-cells.
SuiteResult verify_membership_composition(const SuiteOptions& o);
// lift(τ•ϱ) = lift(τ)∘lift(ϱ).
SuiteResult verify_lift_functoriality(const SuiteOptions& o);
// weak entwining <=> iota side of the first lifting criterion and pi side of the second.
SuiteResult verify_weak_biconditional(const SuiteOptions& o);
// Wreath <-> pre-monad round trips on strict wreaths.
SuiteResult verify_wreath_roundtrip(const SuiteOptions& o);
// Retracts of sampled pre-monads are monads.
SuiteResult verify_retracts(const SuiteOptions& o);
// gamma <-> (rho, lambda) round trips over the weak smash of G2.
SuiteResult verify_module_roundtrip(const SuiteOptions& o);
// The same over the retract of an arbitrary monad in EM^w.
struct MonadInEMW;
SuiteResult verify_module_roundtrip_for(const MonadInEMW& m, const SuiteOptions& o);

std::vector<std::string> suite_names();
// nullopt for an unknown name.
std::optional<SuiteResult> run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace weakmonads
