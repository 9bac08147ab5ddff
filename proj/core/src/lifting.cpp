#include "weakmonads/lifting.hpp"

#include "weakmonads/entwine.hpp"
#include "weakmonads/errors.hpp"

namespace weakmonads {

namespace {

LinMap I(const Field& f, std::size_t n) { return LinMap::identity(f, n); }

void require(bool ok, const std::string& what) {
    if (!ok) throw WellDefinednessFailed(what);
}

}  // namespace

void validate_shape(const EntwiningDatum& d) {
    validate_shape(d.A);
    validate_shape(d.C);
    if (!(d.A.field == d.C.field)) throw ShapeMismatch("entwining: A and C over different fields");
    const std::size_t n = d.A.dim, c = d.C.dim;
    if (!(d.psi.field() == d.A.field) || d.psi.rows() != n * c || d.psi.cols() != n * c)
        throw ShapeMismatch("entwining psi: " + std::to_string(d.psi.rows()) + "x" + std::to_string(d.psi.cols()) +
                            ", expected " + std::to_string(n * c) + "x" + std::to_string(n * c));
}

TensorOrder tensor_order(Handedness h) { return h == Handedness::right ? TensorOrder::reversed : TensorOrder::direct; }

EMWOneCell entwining_onecell(const EntwiningDatum& d) {
    validate_shape(d);
    return {d.A, d.A, d.C.dim, d.psi, tensor_order(d.handedness)};
}

EntwiningDatum mirror(const EntwiningDatum& d) {
    EMWOneCell m = mirror(entwining_onecell(d));
    return {m.source, coopposite(d.C), m.psi, d.handedness == Handedness::right ? Handedness::left : Handedness::right};
}

LinMap lifting_idempotent(const EntwiningDatum& d) {
    LinMap e = lifting_idempotent(entwining_onecell(d));
    if (!(compose(e, e) == e)) throw NotIdempotent("lifting idempotent is not idempotent; the 1-cell axiom fails");
    return e;
}

LinMap lift_twocell(const EMWTwoCell& r, const Splitting& sv, const Splitting& sw) {
    validate_shape(r);
    Whisker W(r.src.source.field, r.src.order);
    const std::size_t n = r.src.source.dim, v = r.src.v_dim, w = r.dst.v_dim;
    if (sv.e.rows() != v * n || sw.e.rows() != w * n) throw ShapeMismatch("lift_twocell: splittings do not match the 1-cells");
    return compose_all({sw.pi, W(w, r.src.source.mult, 1), W(1, r.rho, n), sv.iota});
}

Algebra ground_algebra(const Field& field) {
    return {field, 1, LinMap::identity(field, 1), LinMap::identity(field, 1)};
}

Bimodule regular_bimodule(const Algebra& a) { return {a, a, a.dim, a.mult, a.mult}; }

Report check_bimodule(const Bimodule& m) {
    const Field& f = m.left.field;
    const std::size_t d = m.dim, l = m.left.dim, r = m.right.dim;
    if (m.left_act.rows() != d || m.left_act.cols() != l * d || m.right_act.rows() != d || m.right_act.cols() != d * r)
        throw ShapeMismatch("bimodule: action shapes");
    Report rep{"bimodule", {}};
    rep.add(identity_verdict("left-assoc", compose(m.left_act, kron(I(f, l), m.left_act)),
                             compose(m.left_act, kron(m.left.mult, I(f, d)))));
    rep.add(identity_verdict("left-unit", compose(m.left_act, kron(m.left.unit, I(f, d))), I(f, d)));
    rep.add(identity_verdict("right-assoc", compose(m.right_act, kron(m.right_act, I(f, r))),
                             compose(m.right_act, kron(I(f, d), m.right.mult))));
    rep.add(identity_verdict("right-unit", compose(m.right_act, kron(I(f, d), m.right.unit)), I(f, d)));
    rep.add(identity_verdict("commute", compose(m.right_act, kron(m.left_act, I(f, r))),
                             compose(m.left_act, kron(I(f, l), m.right_act))));
    return rep;
}

TensorOverA tensor_over_A(const Bimodule& x, const Bimodule& y) {
    if (!(x.right == y.left)) throw MonadMismatch("tensor_over_A: middle algebras differ");
    const Field& f = x.right.field;
    const std::size_t dx = x.dim, dy = y.dim, l = x.left.dim, r = y.right.dim;
    TensorOverA t;
    t.relation = kron(x.right_act, I(f, dy)) - kron(I(f, dx), y.left_act);
    t.quotient = cokernel(t.relation);
    const LinMap& q = t.quotient.proj;
    LinMap lift_left = compose(q, kron(x.left_act, I(f, dy)));
    LinMap lift_right = compose(q, kron(I(f, dx), y.right_act));
    require(compose(lift_left, kron(I(f, l), t.relation)).is_zero(), "tensor_over_A: left action does not descend");
    require(compose(lift_right, kron(t.relation, I(f, r))).is_zero(), "tensor_over_A: right action does not descend");
    t.result = Bimodule{x.left, y.right, t.quotient.dim, compose(lift_left, kron(I(f, l), t.quotient.section)),
                        compose(lift_right, kron(t.quotient.section, I(f, r)))};
    return t;
}

std::pair<EMWTwoCell, EMWTwoCell> comonad_twocells(const EntwiningDatum& d, CoringKind kind) {
    EMWOneCell cell = entwining_onecell(d);
    Whisker W(d.A.field, cell.order);
    const std::size_t n = d.A.dim, c = d.C.dim;
    const LinMap& psi = d.psi;
    const LinMap& u = d.A.unit;
    LinMap delta;
    if (kind == CoringKind::iota)
        delta = compose_all({W(1, d.C.comult, n), psi, W(1, u, c)});
    else
        delta = compose_all({W(c, psi, 1), W(1, psi, c), W(1, u, c * c), d.C.comult});
    LinMap eps;
    if (kind == CoringKind::pi) eps = compose(u, d.C.counit);
    else eps = compose_all({W(1, d.C.counit, n), psi, W(1, u, c)});
    return {EMWTwoCell{cell, hcompose_onecells(cell, cell), delta},
            EMWTwoCell{cell, identity_onecell(d.A, cell.order), eps}};
}

Report check_emw_comonad(const EntwiningDatum& d, CoringKind kind) {
    auto [delta, eps] = comonad_twocells(d, kind);
    const EMWOneCell& cell = delta.src;
    Report r{"EM^w comonad", {}};
    r.add(flag_verdict("delta-2cell", check_twocell(delta).passed()));
    r.add(flag_verdict("epsilon-2cell", check_twocell(eps).passed()));
    EMWTwoCell id = identity_twocell(cell);
    EMWTwoCell a = vcompose_twocells(hcompose_twocells(id, delta), delta);
    EMWTwoCell b = vcompose_twocells(hcompose_twocells(delta, id), delta);
    Verdict co = identity_verdict("coassoc", a.rho, b.rho);
    if (!(a.dst == b.dst)) co = flag_verdict("coassoc", false, "composite 1-cells differ");
    r.add(co);
    r.add(identity_verdict("counit-outer", vcompose_twocells(hcompose_twocells(id, eps), delta).rho, id.rho));
    r.add(identity_verdict("counit-inner", vcompose_twocells(hcompose_twocells(eps, id), delta).rho, id.rho));
    return r;
}

namespace {

void require_kind(const EntwiningDatum& d, CoringKind kind) {
    bool ok = false;
    std::string name;
    if (kind == CoringKind::lax) {
        name = "lax";
        Report ax = entwining_axioms(d);
        ok = ax.passed("(5.9)") && ax.passed("(5.12)") && ax.passed("(5.17)") && ax.passed("(lax-unit)");
    } else {
        Report r = cor51_conditions(d);
        Sides s = cor51_sides(r);
        ok = kind == CoringKind::iota ? s.iota : s.pi;
        name = kind == CoringKind::iota ? "iota" : "pi";
    }
    if (!ok) throw EntwiningKindMismatch("build_lifted_coring: datum fails the " + name + " axiom set");
}

}  // namespace

LiftedCoring build_lifted_coring(const EntwiningDatum& input, CoringKind kind, SplitChoice choice) {
    EntwiningDatum d = input.handedness == Handedness::right ? input : mirror(input);
    validate_shape(d);
    require_kind(d, kind);
    const Field& f = d.A.field;
    const std::size_t n = d.A.dim, c = d.C.dim;
    const LinMap& m = d.A.mult;
    const LinMap& u = d.A.unit;

    Coring cor;
    cor.base = d.A;
    cor.source = d;
    cor.kind = kind;
    LinMap e = lifting_idempotent(d);
    cor.split = choice == SplitChoice::rows ? split_idempotent(e) : split_idempotent_by_columns(e);
    const LinMap& iota = cor.split.iota;
    const LinMap& pi = cor.split.pi;
    const std::size_t r = cor.split.retract_dim;

    LinMap left = compose_all({pi, kron(m, I(f, c)), kron(I(f, n), iota)});
    LinMap right = compose_all({pi, kron(m, I(f, c)), kron(I(f, n), d.psi), kron(iota, I(f, n))});
    cor.carrier = Bimodule{d.A, d.A, r, left, right};
    Report bim = check_bimodule(cor.carrier);
    if (!bim.passed()) throw WellDefinednessFailed("lifted carrier is not a bimodule: " + bim.first_failure()->tag);
    cor.square = tensor_over_A(cor.carrier, cor.carrier);
    const LinMap& q = cor.square.quotient.proj;

    auto [delta, eps] = comonad_twocells(d, kind);
    LinMap p2 = compose_all({q, kron(pi, pi), kron_all({I(f, n * c), u, I(f, c)})});
    LinMap lift_delta = compose(kron(m, I(f, c * c)), kron(I(f, n), delta.rho));
    LinMap lift_eps = compose(m, kron(I(f, n), eps.rho));
    LinMap off = I(f, n * c) - e;
    require(compose_all({p2, lift_delta, off}).is_zero(), "coproduct depends on the chosen representative");
    require(compose(lift_eps, off).is_zero(), "counit depends on the chosen representative");
    cor.coproduct = compose_all({p2, lift_delta, iota});
    cor.counit = compose(lift_eps, iota);

    LiftedCoring out{cor, check_coring(cor)};
    out.report.title = "lifted coring";
    out.report.append(check_emw_comonad(d, kind), "emw:");

    EMWOneCell cell = entwining_onecell(d);
    LinMap ecc = lifting_idempotent(hcompose_onecells(cell, cell));
    LinMap i2raw = compose_all({kron(m, I(f, c * c)), kron_all({I(f, n), d.psi, I(f, c)}), kron(iota, iota)});
    require(compose(i2raw, cor.square.relation).is_zero(), "composite splitting map does not descend");
    LinMap i2 = compose(i2raw, cor.square.quotient.section);
    out.report.add(identity_verdict("composite-splitting:P2∘I2", compose(p2, i2), I(f, cor.square.quotient.dim)));
    out.report.add(identity_verdict("composite-splitting:I2∘P2", compose(i2, p2), ecc));
    Splitting canon = split_idempotent(ecc);
    LinMap cmp = compose(canon.pi, i2);
    bool invertible = cmp.is_square() && rank(cmp) == cmp.rows();
    bool is_identity = invertible && cmp == I(f, cmp.rows());
    out.report.add(flag_verdict("composite-splitting:comparison", invertible,
                                is_identity ? "comparison with the echelon splitting is the identity"
                                            : "comparison with the echelon splitting is a non-identity isomorphism"));
    return out;
}

Report check_coring(const Coring& c) {
    const Field& f = c.base.field;
    const std::size_t n = c.base.dim, r = c.carrier.dim;
    const LinMap& m = c.base.mult;
    const LinMap& L = c.carrier.left_act;
    const LinMap& R = c.carrier.right_act;
    Report rep{"coring", {}};
    rep.add(identity_verdict("splitting:pi∘iota", compose(c.split.pi, c.split.iota), I(f, r)));
    rep.add(identity_verdict("splitting:iota∘pi", compose(c.split.iota, c.split.pi), c.split.e));
    rep.append(check_bimodule(c.carrier), "carrier:");

    const Bimodule& Q = c.square.result;
    const LinMap& rel = c.square.relation;
    const LinMap& s2 = c.square.quotient.section;
    rep.add(identity_verdict("coproduct-left-linear", compose(c.coproduct, L), compose(Q.left_act, kron(I(f, n), c.coproduct))));
    rep.add(identity_verdict("coproduct-right-linear", compose(c.coproduct, R), compose(Q.right_act, kron(c.coproduct, I(f, n)))));
    rep.add(identity_verdict("counit-left-linear", compose(c.counit, L), compose(m, kron(I(f, n), c.counit))));
    rep.add(identity_verdict("counit-right-linear", compose(c.counit, R), compose(m, kron(c.counit, I(f, n)))));

    LinMap q3 = cokernel(hstack({kron(rel, I(f, r)), kron(I(f, r), rel)})).proj;
    LinMap D = compose(s2, c.coproduct);
    LinMap f1 = compose(q3, kron(D, I(f, r)));
    LinMap f2 = compose(q3, kron(I(f, r), D));
    rep.add(flag_verdict("coassoc-well-defined", compose(f1, rel).is_zero() && compose(f2, rel).is_zero()));
    rep.add(identity_verdict("coassociativity", compose(f1, D), compose(f2, D)));
    LinMap g1 = compose(L, kron(c.counit, I(f, r)));
    LinMap g2 = compose(R, kron(I(f, r), c.counit));
    rep.add(flag_verdict("counit-well-defined", compose(g1, rel).is_zero() && compose(g2, rel).is_zero()));
    rep.add(identity_verdict("counit-left", compose(g1, D), I(f, r)));
    rep.add(identity_verdict("counit-right", compose(g2, D), I(f, r)));
    return rep;
}

LinMap recover_psi(const Coring& c) {
    const Field& f = c.base.field;
    const std::size_t n = c.base.dim, cd = c.source.C.dim;
    LinMap start = compose(c.split.pi, kron(c.base.unit, I(f, cd)));
    return compose_all({c.split.iota, c.carrier.right_act, kron(start, I(f, n))});
}

// ---- module correspondences ----

WreathModuleContext make_module_context(const MonadInEMW& m) {
    WreathModuleContext ctx;
    ctx.wreath = m;
    ctx.premonad = wreath_to_premonad(m).p;
    ctx.retract = premonad_retract(ctx.premonad.premonad);
    return ctx;
}

namespace {

void check_w(const WreathModuleContext& ctx, std::size_t w, const LinMap& map, std::size_t left, const char* what) {
    if (!(map.field() == ctx.wreath.base.field) || map.rows() != w || map.cols() != left * w)
        throw ShapeMismatch(std::string(what) + ": wrong shape");
}

}  // namespace

Report check_rholambda(const WreathModuleContext& ctx, const LiftedModuleDatum& d) {
    const MonadInEMW& m = ctx.wreath;
    const Field& f = m.base.field;
    const std::size_t s = m.s_dim, n = m.base.dim, w = d.w_dim;
    check_w(ctx, w, d.rho, n, "rho");
    check_w(ctx, w, d.lam, s, "lambda");
    LinMap lam_srho = compose(d.lam, kron(I(f, s), d.rho));
    Report r{"module datum", {}};
    r.add(identity_verdict("rho-assoc", compose(d.rho, kron(I(f, n), d.rho)), compose(d.rho, kron(m.base.mult, I(f, w)))));
    r.add(identity_verdict("rho-unit", compose(d.rho, kron(m.base.unit, I(f, w))), I(f, w)));
    r.add(identity_verdict("(3.4)", compose(d.rho, kron(I(f, n), d.lam)), compose(lam_srho, kron(m.psi, I(f, w)))));
    r.add(identity_verdict("lambda-assoc", compose(d.lam, kron(I(f, s), d.lam)), compose(lam_srho, kron(m.nu, I(f, w)))));
    r.add(identity_verdict("lambda-unit", compose(lam_srho, kron(m.theta, I(f, w))), I(f, w)));
    return r;
}

Report check_gamma(const WreathModuleContext& ctx, std::size_t w, const LinMap& gamma) {
    const Algebra& hat = ctx.retract.monad;
    const Field& f = hat.field;
    check_w(ctx, w, gamma, hat.dim, "gamma");
    Report r{"retract module", {}};
    r.add(identity_verdict("gamma-assoc", compose(gamma, kron(I(f, hat.dim), gamma)), compose(gamma, kron(hat.mult, I(f, w)))));
    r.add(identity_verdict("gamma-unit", compose(gamma, kron(hat.unit, I(f, w))), I(f, w)));
    return r;
}

LiftedModuleDatum gamma_to_rholambda(const WreathModuleContext& ctx, std::size_t w, const LinMap& gamma) {
    Report r = check_gamma(ctx, w, gamma);
    if (!r.passed()) throw NotModule("gamma_to_rholambda: " + r.first_failure()->tag + " fails");
    const MonadInEMW& m = ctx.wreath;
    const Field& f = m.base.field;
    const std::size_t s = m.s_dim, n = m.base.dim;
    LinMap gpi = compose(gamma, kron(ctx.retract.split.pi, I(f, w)));
    LiftedModuleDatum d;
    d.w_dim = w;
    d.rho = compose_all({gpi, kron_all({I(f, s), m.base.mult, I(f, w)}), kron_all({m.theta, I(f, n), I(f, w)})});
    d.lam = compose(gpi, kron_all({I(f, s), m.base.unit, I(f, w)}));
    return d;
}

LinMap rholambda_to_gamma(const WreathModuleContext& ctx, const LiftedModuleDatum& d) {
    Report r = check_rholambda(ctx, d);
    if (!r.passed()) throw AxiomFailed("rholambda_to_gamma: " + r.first_failure()->tag + " fails");
    const Field& f = ctx.wreath.base.field;
    return compose_all({d.lam, kron(I(f, ctx.wreath.s_dim), d.rho), kron(ctx.retract.split.iota, I(f, d.w_dim))});
}

}  // namespace weakmonads
