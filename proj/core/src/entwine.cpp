#include "weakmonads/entwine.hpp"

#include "weakmonads/errors.hpp"

namespace weakmonads {

namespace {

// Whiskered structure maps for one datum, in the datum's tensor order.
struct Ctx {
    const EntwiningDatum& d;
    Whisker W;
    std::size_t n, c;
    const LinMap &mu, &eta, &delta, &eps, &psi;

    explicit Ctx(const EntwiningDatum& d_)
        : d(d_),
          W(d_.A.field, tensor_order(d_.handedness)),
          n(d_.A.dim),
          c(d_.C.dim),
          mu(d_.A.mult),
          eta(d_.A.unit),
          delta(d_.C.comult),
          eps(d_.C.counit),
          psi(d_.psi) {}

    // two sides of the shared and 1-cell equations
    LinMap mult_lhs() const { return compose(psi, W(1, mu, c)); }
    LinMap mult_rhs() const { return compose_all({W(c, mu, 1), W(1, psi, n), W(n, psi, 1)}); }
    LinMap comult_lhs() const { return compose(W(1, delta, n), psi); }
    LinMap comult_rhs() const { return compose_all({W(c, psi, 1), W(1, psi, c), W(n, delta, 1)}); }
    LinMap unit_lhs() const { return compose(psi, W(1, eta, c)); }
    LinMap weak_unit_rhs() const {
        return compose_all({W(c, eps, n), W(c, psi, 1), W(c, eta, c), delta});
    }
    LinMap counit_lhs() const { return compose(W(1, eps, n), psi); }
    LinMap weak_counit_rhs() const {
        return compose_all({mu, W(n, eps, n), W(n, psi, 1), W(n, eta, c)});
    }
};

}  // namespace

Report entwining_axioms(const EntwiningDatum& d) {
    validate_shape(d);
    Ctx x(d);
    const auto& W = x.W;
    const std::size_t n = x.n, c = x.c;
    Report r{"entwining axioms", {}};
    r.add(identity_verdict("(5.9)", x.mult_lhs(), x.mult_rhs()));
    r.add(identity_verdict("(5.10)", x.comult_lhs(), x.comult_rhs()));
    r.add(identity_verdict("(5.11)", x.unit_lhs(), x.weak_unit_rhs()));
    r.add(identity_verdict("(5.12)", x.counit_lhs(), x.weak_counit_rhs()));
    r.add(identity_verdict("(5.5)", W(n, x.eps, 1), x.counit_lhs()));
    r.add(identity_verdict("(5.17)",
                           compose_all({W(c * c, x.mu, 1), W(c, x.psi, n), W(c, x.eta, c * n), x.comult_lhs()}),
                           x.comult_rhs()));
    r.add(identity_verdict("(lax-unit)",
                           compose_all({W(c, x.mu, 1), W(c * n, x.eps, n), W(c * n, x.psi, 1), W(c * n, x.eta, c),
                                        W(1, x.psi, c), W(n, x.delta, 1), W(1, x.eta, c)}),
                           x.unit_lhs()));
    r.add(identity_verdict("(dl-unit)", x.unit_lhs(), W(c, x.eta, 1)));
    r.add(identity_verdict("(dl-counit)", x.counit_lhs(), W(n, x.eps, 1)));
    return r;
}

Classification classify_entwining(const EntwiningDatum& d) {
    Classification out;
    out.report = entwining_axioms(d);
    out.report.title = "classification";
    const Report& r = out.report;
    if (!r.passed("(5.9)")) throw SharedAxiomFailed("(5.9) fails: psi does not commute with multiplication");
    out.mixed_dl = r.passed("(5.10)") && r.passed("(dl-unit)") && r.passed("(dl-counit)");
    out.weak = r.passed("(5.10)") && r.passed("(5.11)") && r.passed("(5.12)");
    out.partial = r.passed("(5.5)") && r.passed("(5.17)");
    out.lax = r.passed("(5.12)") && r.passed("(5.17)") && r.passed("(lax-unit)");
    return out;
}

Report cor51_conditions(const EntwiningDatum& d) {
    validate_shape(d);
    Ctx x(d);
    const auto& W = x.W;
    const std::size_t n = x.n, c = x.c;
    Report r{"iota/pi lifting conditions", {}};
    r.add(identity_verdict("(5.1)", x.mult_lhs(), x.mult_rhs()));
    r.add(identity_verdict("(5.2)", x.comult_lhs(),
                           compose_all({W(c * c, x.mu, 1), W(c, x.psi, n), W(1, x.psi, c * n), W(n, x.delta, n),
                                        W(n, x.psi, 1), W(n, x.eta, c)})));
    r.add(identity_verdict("(5.3)", x.counit_lhs(), x.weak_counit_rhs()));
    r.add(identity_verdict("(5.4)", x.comult_rhs(),
                           compose_all({W(c * c, x.mu, 1), W(c, x.psi, n), W(1, x.psi, c * n), W(1, x.eta, c * c * n),
                                        x.comult_lhs()})));
    r.add(identity_verdict("(5.5)", W(n, x.eps, 1), x.counit_lhs()));
    r.add(identity_verdict("(5.6)", x.comult_rhs(), x.comult_lhs()));
    r.add(identity_verdict("(5.7)", W(n, x.eps, 1), x.counit_lhs()));
    Sides s = cor51_sides(r);
    if (s.iota) r.append(check_emw_comonad(d, CoringKind::iota), "comonad-iota:");
    if (s.pi) r.append(check_emw_comonad(d, CoringKind::pi), "comonad-pi:");
    return r;
}

Sides cor51_sides(const Report& r) {
    bool one = r.passed("(5.1)");
    return {one && r.passed("(5.2)") && r.passed("(5.3)"), one && r.passed("(5.4)") && r.passed("(5.5)"),
            one && r.passed("(5.6)") && r.passed("(5.7)")};
}

Report cor55_conditions(const EntwiningDatum& d) {
    validate_shape(d);
    Ctx x(d);
    const auto& W = x.W;
    const std::size_t n = x.n, c = x.c;
    Report r{"comonad-side lifting conditions", {}};
    r.add(identity_verdict("(5.10)", x.comult_lhs(), x.comult_rhs()));
    LinMap spread = compose_all({W(1, x.psi, n * c), W(n, x.psi, c), W(n * n, x.delta, 1)});
    r.add(identity_verdict("(5.13)", x.mult_lhs(),
                           compose_all({W(c, x.eps, n), W(c, x.psi, 1), W(c, x.mu, c), spread})));
    r.add(identity_verdict("(5.14)", x.unit_lhs(), x.weak_unit_rhs()));
    r.add(identity_verdict("(5.15)", x.mult_rhs(),
                           compose_all({x.psi, W(1, x.mu, c), W(1, x.eps, n * n * c), spread})));
    r.add(identity_verdict("(5.16)", W(c, x.eta, 1), x.unit_lhs()));
    r.add(identity_verdict("(5.17')", x.mult_rhs(), x.mult_lhs()));
    r.add(identity_verdict("(5.18)", W(c, x.eta, 1), x.unit_lhs()));
    return r;
}

Sides cor55_sides(const Report& r) {
    bool one = r.passed("(5.10)");
    return {one && r.passed("(5.15)") && r.passed("(5.16)"), one && r.passed("(5.13)") && r.passed("(5.14)"),
            one && r.passed("(5.17')") && r.passed("(5.18)")};
}

EntwiningDatum psi_R(const WeakBialgebra& h) {
    const Field& f = h.field;
    LinMap id = LinMap::identity(f, h.dim);
    LinMap psi = compose_all({kron(id, h.mult), kron(swap_map(f, h.dim, h.dim), id), kron(id, h.comult)});
    return {h.algebra(), h.coalgebra(), psi, Handedness::right};
}

EntwiningDatum psi_L(const WeakBialgebra& h) {
    const Field& f = h.field;
    LinMap id = LinMap::identity(f, h.dim);
    LinMap psi = compose_all({kron(h.mult, id), kron(id, swap_map(f, h.dim, h.dim)), kron(h.comult, id)});
    return {h.algebra(), h.coalgebra(), psi, Handedness::left};
}

namespace {

bool weak_part(const EntwiningDatum& d, const std::string& prefix, Report& out) {
    Report ax = entwining_axioms(d);
    out.append(ax, prefix);
    return ax.passed("(5.9)") && ax.passed("(5.10)") && ax.passed("(5.11)") && ax.passed("(5.12)");
}

}  // namespace

Characterization characterize_weak_bialgebra(const WeakBialgebra& h) {
    Characterization c;
    c.report.title = "weak bialgebra characterization";
    Report w = check_weak_bialgebra(h);
    c.wba = w.passed();
    c.report.append(w, "wba:");
    c.psi_r_weak = weak_part(psi_R(h), "psi_R:", c.report);
    c.psi_l_weak = weak_part(psi_L(h), "psi_L:", c.report);
    c.biconditional = c.wba == (c.psi_r_weak && c.psi_l_weak);
    c.report.add(flag_verdict("biconditional", c.biconditional));
    return c;
}

}  // namespace weakmonads
