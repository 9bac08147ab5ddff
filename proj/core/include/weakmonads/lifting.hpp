#pragma once

#include "weakmonads/premonad_bridge.hpp"

namespace weakmonads {

// right: psi: C⊗A -> A⊗C, the reading for functors - ⊗ A (right modules).
// left:  psi: A⊗C -> C⊗A, the reading for functors A ⊗ - (left modules).
enum class Handedness { right, left };

struct EntwiningDatum {
    Algebra A;
    Coalgebra C;
    LinMap psi;
    Handedness handedness = Handedness::right;
    bool operator==(const EntwiningDatum&) const = default;
};

void validate_shape(const EntwiningDatum& d);
TensorOrder tensor_order(Handedness h);
// (C, psi): A -> A as an EM^w 1-cell in the matching tensor order.
EMWOneCell entwining_onecell(const EntwiningDatum& d);
// The same structure read with the other handedness (A^op, C^cop, conjugated psi).
EntwiningDatum mirror(const EntwiningDatum& d);

// ē = (m⊗id_C)∘(id_A⊗psi)∘(id_{A⊗C}⊗u) for right-handed data; throws
// NotIdempotent when the 1-cell axiom fails badly enough to break idempotency.
LinMap lifting_idempotent(const EntwiningDatum& d);
// pi_W ∘ (Wμ ∗ ρt) ∘ iota_V, in the tensor order of the 2-cell.
LinMap lift_twocell(const EMWTwoCell& r, const Splitting& sv, const Splitting& sw);

struct Bimodule {
    Algebra left;
    Algebra right;
    std::size_t dim = 0;
    LinMap left_act;   // left ⊗ M -> M
    LinMap right_act;  // M ⊗ right -> M
};

Algebra ground_algebra(const Field& field);
// A as an (A, A)-bimodule.
Bimodule regular_bimodule(const Algebra& a);
// Tags left-assoc, left-unit, right-assoc, right-unit, commute.
Report check_bimodule(const Bimodule& m);

struct TensorOverA {
    Bimodule result;
    LinMap relation;  // X⊗A⊗Y -> X⊗Y
    Cokernel quotient;  // proj is q: X⊗Y -> Q
};

// Throws MonadMismatch when X.right != Y.left, WellDefinednessFailed when
// the outer actions do not descend to the quotient.
TensorOverA tensor_over_A(const Bimodule& x, const Bimodule& y);

enum class CoringKind { iota, pi, lax };
enum class SplitChoice { rows, columns };

struct Coring {
    Algebra base;
    Bimodule carrier;
    LinMap coproduct;  // carrier -> carrier ⊗_A carrier (cokernel basis)
    LinMap counit;     // carrier -> A
    TensorOverA square;
    Splitting split;   // of ē on A⊗C
    EntwiningDatum source;
    CoringKind kind = CoringKind::iota;
};

struct LiftedCoring {
    Coring coring;
    Report report;
};

// The kind's comultiplication and counit 2-cells on (C, psi), in the datum's order.
std::pair<EMWTwoCell, EMWTwoCell> comonad_twocells(const EntwiningDatum& d, CoringKind kind);
// Coassociativity and counit laws in EM^w, evaluated with ∘ and •.
Report check_emw_comonad(const EntwiningDatum& d, CoringKind kind);

// Right-handed data only (mirror left-handed data first). Throws
// EntwiningKindMismatch, WellDefinednessFailed.
LiftedCoring build_lifted_coring(const EntwiningDatum& d, CoringKind kind, SplitChoice choice = SplitChoice::rows);
Report check_coring(const Coring& c);

// psi(c⊗a) = iota(pi(1⊗c)·a).
LinMap recover_psi(const Coring& c);

// Module data (rho, lambda) for a monad in EM^w, direct order, W a left module.
struct WreathModuleContext {
    MonadInEMW wreath;
    ComposedPreMonad premonad;
    Retract retract;
};

WreathModuleContext make_module_context(const MonadInEMW& m);

struct LiftedModuleDatum {
    std::size_t w_dim = 0;
    LinMap rho;  // t⊗W -> W
    LinMap lam;  // s⊗W -> W
};

// Tags rho-assoc, rho-unit, (3.4), lambda-assoc, lambda-unit.
Report check_rholambda(const WreathModuleContext& ctx, const LiftedModuleDatum& d);
// Tags gamma-assoc, gamma-unit.
Report check_gamma(const WreathModuleContext& ctx, std::size_t w_dim, const LinMap& gamma);
// Throws NotModule.
LiftedModuleDatum gamma_to_rholambda(const WreathModuleContext& ctx, std::size_t w_dim, const LinMap& gamma);
// Throws AxiomFailed naming the first failing tag.
LinMap rholambda_to_gamma(const WreathModuleContext& ctx, const LiftedModuleDatum& d);

}  // namespace weakmonads
