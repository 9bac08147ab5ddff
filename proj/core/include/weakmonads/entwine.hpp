#pragma once

#include "weakmonads/lifting.hpp"

namespace weakmonads {

struct Classification {
    bool mixed_dl = false;
    bool weak = false;
    bool partial = false;
    bool lax = false;
    Report report;  // every individual axiom verdict
};

// Individual axioms, evaluated in the datum's tensor order:
// (5.9) shared multiplicativity, (5.10)-(5.12) weak, (5.5) and (5.17) partial,
// (lax-unit) for lax, (dl-unit)/(dl-counit) for mixed distributive laws.
Report entwining_axioms(const EntwiningDatum& d);
// Throws SharedAxiomFailed when (5.9) fails.
Classification classify_entwining(const EntwiningDatum& d);

struct Sides {
    bool iota = false;
    bool pi = false;
    bool both = false;
};

// (5.1) 1-cell; (5.2)/(5.3) iota; (5.4)/(5.5) pi; (5.6)/(5.7) both. When the
// iota side holds, adds comonad:* verdicts from the EM^w comonad.
Report cor51_conditions(const EntwiningDatum& d);
Sides cor51_sides(const Report& r);
// (5.10) 1-cell over the comonad; (5.13)/(5.14) pi; (5.15)/(5.16) iota; (5.17')/(5.18) both.
Report cor55_conditions(const EntwiningDatum& d);
Sides cor55_sides(const Report& r);

// Right-handed h⊗h' -> h'_1 ⊗ h h'_2 on H⊗H, A = C = H.
EntwiningDatum psi_R(const WeakBialgebra& h);
// Left-handed h⊗h' -> h_1 h' ⊗ h_2.
EntwiningDatum psi_L(const WeakBialgebra& h);

struct Characterization {
    bool wba = false;
    bool psi_r_weak = false;
    bool psi_l_weak = false;
    bool biconditional = false;
    Report report;
};

Characterization characterize_weak_bialgebra(const WeakBialgebra& h);

}  // namespace weakmonads
