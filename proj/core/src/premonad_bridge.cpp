#include "weakmonads/premonad_bridge.hpp"

#include "weakmonads/errors.hpp"

namespace weakmonads {

namespace {

void validate(const ComposedPreMonad& p) {
    validate_shape(p.premonad);
    validate_shape(p.t);
    if (!(p.t.field == p.premonad.field)) throw ShapeMismatch("pre-monad and t over different fields");
    if (p.s_dim * p.t.dim != p.premonad.dim)
        throw ShapeMismatch("declared factors " + std::to_string(p.s_dim) + " x " + std::to_string(p.t.dim) +
                            " do not multiply to " + std::to_string(p.premonad.dim));
}

}  // namespace

LinMap wreath_theta(const MonadInEMW& m) {
    validate_shape(m);
    Whisker W(m.base.field, TensorOrder::direct);
    const std::size_t s = m.s_dim, n = m.base.dim;
    return compose_all({W(s, m.base.mult, 1), W(1, m.nu, n), W(s * s, m.base.mult, 1), W(s, m.psi, n)});
}

MonadInEMW wreath_from_theta(const ComposedPreMonad& p) {
    validate(p);
    Whisker W(p.t.field, TensorOrder::direct);
    const std::size_t s = p.s_dim, n = p.t.dim;
    const LinMap& theta = p.premonad.mult;
    const LinMap& eta = p.t.unit;
    MonadInEMW m{p.t, s, {}, {}, p.premonad.unit};
    m.psi = compose_all({theta, W(s, p.t.mult, s * n), W(1, p.premonad.unit, n * s * n), W(n * s, eta, 1)});
    m.nu = compose(theta, kron_all({W.id(s), eta, W.id(s), eta}));
    return m;
}

Verdict left_linearity(const ComposedPreMonad& p) {
    validate(p);
    Whisker W(p.t.field, TensorOrder::direct);
    const std::size_t s = p.s_dim, n = p.t.dim;
    const LinMap& theta = p.premonad.mult;
    return identity_verdict("(2.14)", compose(theta, W(s * n * s, p.t.mult, 1)),
                            compose(W(s, p.t.mult, 1), W(1, theta, n)));
}

Report unit_identities(const ComposedPreMonad& p, const MonadInEMW& m) {
    validate(p);
    Whisker W(p.t.field, TensorOrder::direct);
    const std::size_t s = p.s_dim, n = p.t.dim;
    const LinMap& theta = p.premonad.mult;
    const LinMap& vt = p.premonad.unit;
    LinMap mid = compose_all({W(s, p.t.mult, 1), W(1, m.psi, n), W(1, p.t.unit, s * n)});
    Report r{"unit identities", {}};
    r.add(identity_verdict("(2.13a)", compose(theta, W(1, vt, s * n)), mid));
    r.add(identity_verdict("(2.13b)", compose(theta, W(s * n, vt, 1)), mid));
    return r;
}

WreathToPremonad wreath_to_premonad(const MonadInEMW& m) {
    Report rep = check_monad_in_emw(m);
    if (!rep.passed()) throw NotMonadInEMW("wreath_to_premonad: " + rep.first_failure()->tag + " fails");
    WreathToPremonad out;
    out.p = ComposedPreMonad{PreMonad{m.base.field, m.s_dim * m.base.dim, wreath_theta(m), m.theta}, m.s_dim, m.base};
    out.report = check_premonad(out.p.premonad);
    out.report.title = "wreath to pre-monad";
    out.report.append(unit_identities(out.p, m));
    out.report.add(left_linearity(out.p));
    return out;
}

MonadInEMW premonad_to_wreath(const ComposedPreMonad& p) {
    validate(p);
    Report alg = check_algebra(p.t);
    if (!alg.passed()) throw NotPreMonad("premonad_to_wreath: declared t is not a monad (" + alg.first_failure()->tag + ")");
    Report rep = check_premonad(p.premonad);
    if (!rep.passed()) throw NotPreMonad("premonad_to_wreath: " + rep.first_failure()->tag + " fails");
    Verdict lin = left_linearity(p);
    if (!lin.passed) throw LeftLinearityFailed("premonad_to_wreath: (2.14) fails");
    return wreath_from_theta(p);
}

Report roundtrip_theorem23(const MonadInEMW& m) {
    WreathToPremonad fwd = wreath_to_premonad(m);
    MonadInEMW back = premonad_to_wreath(fwd.p);
    Report r{"wreath -> pre-monad -> wreath", {}};
    r.add(identity_verdict("psi", back.psi, m.psi));
    r.add(identity_verdict("nu", back.nu, m.nu));
    return r;
}

Report roundtrip_theorem23_rev(const ComposedPreMonad& p) {
    validate(p);
    Report r{"pre-monad -> wreath -> pre-monad", {}};
    r.append(check_premonad(p.premonad));
    r.add(left_linearity(p));
    MonadInEMW m = wreath_from_theta(p);
    r.add(identity_verdict("Theta", wreath_theta(m), p.premonad.mult));
    return r;
}

}  // namespace weakmonads
