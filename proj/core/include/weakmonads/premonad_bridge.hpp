#pragma once

#include "weakmonads/emw.hpp"

namespace weakmonads {

// A pre-monad on s ⊗ t with the factorization declared by the caller.
struct ComposedPreMonad {
    PreMonad premonad;
    std::size_t s_dim = 0;
    Algebra t;
    bool operator==(const ComposedPreMonad&) const = default;
};

struct WreathToPremonad {
    ComposedPreMonad p;
    Report report;  // pre-monad axioms, (2.13a), (2.13b), (2.14)
};

// Θ = sμ ∗ νt ∗ ssμ ∗ sψt, no validity checks.
LinMap wreath_theta(const MonadInEMW& m);
// ψ = Θ ∗ sμst ∗ ϑtst ∗ tsη, ν = Θ ∗ sηsη, no validity checks.
MonadInEMW wreath_from_theta(const ComposedPreMonad& p);

// Throws NotMonadInEMW.
WreathToPremonad wreath_to_premonad(const MonadInEMW& m);
// Throws ShapeMismatch, NotPreMonad, LeftLinearityFailed.
MonadInEMW premonad_to_wreath(const ComposedPreMonad& p);

// Θ ∗ stsμ = sμ ∗ Θt, tag (2.14).
Verdict left_linearity(const ComposedPreMonad& p);
// Θ ∗ ϑst = sμ ∗ ψt ∗ ηst = Θ ∗ stϑ, tags (2.13a), (2.13b).
Report unit_identities(const ComposedPreMonad& p, const MonadInEMW& m);

// Forward: wreath -> pre-monad -> wreath, tags psi, nu.
Report roundtrip_theorem23(const MonadInEMW& m);
// Reverse: pre-monad -> wreath -> pre-monad, tag Theta; preceded by the
// validity verdicts of the input, which do not gate the computation.
Report roundtrip_theorem23_rev(const ComposedPreMonad& p);

}  // namespace weakmonads
