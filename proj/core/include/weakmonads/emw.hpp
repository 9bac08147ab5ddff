#pragma once

#include <cstddef>
#include <optional>

#include "weakmonads/structures.hpp"

namespace weakmonads {

// How a juxtaposed word of 1-cells XY is laid out as a tensor product.
// direct: X ⊗ Y (functors H ⊗ -). reversed: Y ⊗ X (functors - ⊗ A, i.e.
// right modules), so a 2-cell word is read right to left.
enum class TensorOrder { direct, reversed };

class Whisker {
public:
    Whisker(const Field& field, TensorOrder order) : field_(field), order_(order) {}

    // The 2-cell L a R, where L and R are identity words of the given dimension.
    LinMap operator()(std::size_t left, const LinMap& a, std::size_t right) const;
    // Juxtaposition ab of two 2-cells.
    LinMap juxt(const LinMap& a, const LinMap& b) const;
    LinMap id(std::size_t n) const { return LinMap::identity(field_, n); }
    TensorOrder order() const { return order_; }

private:
    Field field_;
    TensorOrder order_;
};

// (V, psi): t -> t', psi: t'V => Vt.
struct EMWOneCell {
    Algebra source;  // t
    Algebra target;  // t'
    std::size_t v_dim = 0;
    LinMap psi;
    TensorOrder order = TensorOrder::direct;
    bool operator==(const EMWOneCell&) const = default;
};

// rho: V => Wt.
struct EMWTwoCell {
    EMWOneCell src;
    EMWOneCell dst;
    LinMap rho;
    bool operator==(const EMWTwoCell&) const = default;
};

// A monad ((s, psi), nu, theta) in EM^w on the monad t = base, direct order.
struct MonadInEMW {
    Algebra base;
    std::size_t s_dim = 0;
    LinMap psi;    // ts => st
    LinMap nu;     // ss => st
    LinMap theta;  // k => st
    bool operator==(const MonadInEMW&) const = default;
};

void validate_shape(const EMWOneCell& c);
void validate_shape(const EMWTwoCell& c);
void validate_shape(const MonadInEMW& m);

// Tag (1.1).
Report check_onecell(const EMWOneCell& c);
// Tags (1.2), (1.3).
Report check_twocell(const EMWTwoCell& c);

EMWOneCell identity_onecell(const Algebra& t, TensorOrder order = TensorOrder::direct);
// phi ∗ η'W on (W, phi).
EMWTwoCell identity_twocell(const EMWOneCell& c);

// inner: t -> t', outer: t' -> t''; result (V'V, V'psi ∗ psi'V).
EMWOneCell hcompose_onecells(const EMWOneCell& inner, const EMWOneCell& outer);
// inner: (V,psi) => (W,phi), outer: (V',psi') => (W',phi'); result outer ∘ inner.
EMWTwoCell hcompose_twocells(const EMWTwoCell& inner, const EMWTwoCell& outer);
// tau • rho = Uμ ∗ τt ∗ ρ, requires dst(rho) == src(tau).
EMWTwoCell vcompose_twocells(const EMWTwoCell& tau, const EMWTwoCell& rho);

enum class Side { iota, pi };

struct Membership {
    bool member = false;
    EMWTwoCell induced;  // G^iota(omega) or G^pi(omega); set only when member
};

// iota: ωt ∗ ψ = Wμ ∗ φt ∗ t'ωt ∗ t'ψ ∗ t'η'V, induced ωt ∗ ψ ∗ η'V.
// pi:   φ ∗ t'ω = Wμ ∗ φt ∗ η'Wt ∗ ωt ∗ ψ,    induced φ ∗ η'W ∗ ω.
Membership mnd_membership(const LinMap& omega, Side side, const EMWOneCell& v, const EMWOneCell& w);
// The candidate 2-cell regardless of membership.
EMWTwoCell induced_candidate(const LinMap& omega, Side side, const EMWOneCell& v, const EMWOneCell& w);
// The two identities of characterization (iii) for the given side; tags (iii-a), (iii-b).
Report membership_criterion_iii(const LinMap& omega, Side side, const EMWOneCell& v, const EMWOneCell& w);
// φ ∗ t'ω = ωt ∗ ψ.
bool strict_morphism(const LinMap& omega, const EMWOneCell& v, const EMWOneCell& w);

// Vμ ∗ ψt ∗ η'Vt : Vt => Vt, the idempotent whose retract is the lifted 1-cell.
LinMap lifting_idempotent(const EMWOneCell& c);

// Direct sum (V ⊕ W, psi ⊕ phi) of two parallel 1-cells.
EMWOneCell direct_sum(const EMWOneCell& a, const EMWOneCell& b);
// Switches the tensor order, replacing every monad by its opposite and
// conjugating psi by the symmetries; an involution.
Algebra mirror(const Algebra& a);
EMWOneCell mirror(const EMWOneCell& c);
EMWTwoCell mirror(const EMWTwoCell& c);

// Tags (2.1) .. (2.7).
Report check_monad_in_emw(const MonadInEMW& m);
EMWOneCell underlying_onecell(const MonadInEMW& m);

}  // namespace weakmonads
