#include "weakmonads/emw.hpp"

#include "weakmonads/errors.hpp"

namespace weakmonads {

namespace {

void expect(const LinMap& m, const Field& field, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!(m.field() == field) || m.rows() != rows || m.cols() != cols)
        throw ShapeMismatch(what + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " over " +
                            m.field().name() + ", expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " over " + field.name());
}

const Field& field_of(const EMWOneCell& c) { return c.source.field; }

}  // namespace

LinMap Whisker::operator()(std::size_t left, const LinMap& a, std::size_t right) const {
    if (order_ == TensorOrder::direct) return kron(kron(id(left), a), id(right));
    return kron(kron(id(right), a), id(left));
}

LinMap Whisker::juxt(const LinMap& a, const LinMap& b) const {
    return order_ == TensorOrder::direct ? kron(a, b) : kron(b, a);
}

void validate_shape(const EMWOneCell& c) {
    validate_shape(c.source);
    validate_shape(c.target);
    if (!(c.source.field == c.target.field)) throw ShapeMismatch("1-cell: monads over different fields");
    expect(c.psi, c.source.field, c.v_dim * c.source.dim, c.target.dim * c.v_dim, "1-cell psi");
}

void validate_shape(const EMWTwoCell& c) {
    validate_shape(c.src);
    validate_shape(c.dst);
    if (!(c.src.source == c.dst.source) || !(c.src.target == c.dst.target) || c.src.order != c.dst.order)
        throw ShapeMismatch("2-cell: 1-cells are not parallel");
    expect(c.rho, field_of(c.src), c.dst.v_dim * c.src.source.dim, c.src.v_dim, "2-cell rho");
}

void validate_shape(const MonadInEMW& m) {
    validate_shape(m.base);
    const std::size_t s = m.s_dim, n = m.base.dim;
    expect(m.psi, m.base.field, s * n, n * s, "psi");
    expect(m.nu, m.base.field, s * n, s * s, "nu");
    expect(m.theta, m.base.field, s * n, 1, "theta");
}

Report check_onecell(const EMWOneCell& c) {
    validate_shape(c);
    Whisker W(field_of(c), c.order);
    const std::size_t v = c.v_dim, n = c.source.dim, n2 = c.target.dim;
    Report r{"EM^w 1-cell", {}};
    r.add(identity_verdict("(1.1)", compose_all({W(v, c.source.mult, 1), W(1, c.psi, n), W(n2, c.psi, 1)}),
                           compose(c.psi, W(1, c.target.mult, v))));
    return r;
}

Report check_twocell(const EMWTwoCell& c) {
    validate_shape(c);
    Whisker W(field_of(c.src), c.src.order);
    const std::size_t w = c.dst.v_dim, n = c.src.source.dim, n2 = c.src.target.dim;
    const LinMap& mu = c.src.source.mult;
    LinMap wmu = W(w, mu, 1);
    LinMap phit = W(1, c.dst.psi, n);
    Report r{"EM^w 2-cell", {}};
    r.add(identity_verdict("(1.2)", compose_all({wmu, W(1, c.rho, n), c.src.psi}),
                           compose_all({wmu, phit, W(n2, c.rho, 1)})));
    r.add(identity_verdict("(1.3)", c.rho, compose_all({wmu, phit, W(1, c.src.target.unit, w * n), c.rho})));
    return r;
}

EMWOneCell identity_onecell(const Algebra& t, TensorOrder order) {
    return {t, t, 1, LinMap::identity(t.field, t.dim), order};
}

EMWTwoCell identity_twocell(const EMWOneCell& c) {
    validate_shape(c);
    Whisker W(field_of(c), c.order);
    return {c, c, compose(c.psi, W(1, c.target.unit, c.v_dim))};
}

EMWOneCell hcompose_onecells(const EMWOneCell& inner, const EMWOneCell& outer) {
    validate_shape(inner);
    validate_shape(outer);
    if (!(inner.target == outer.source)) throw MonadMismatch("hcompose: middle monads differ");
    if (inner.order != outer.order) throw MonadMismatch("hcompose: tensor orders differ");
    Whisker W(field_of(inner), inner.order);
    return {inner.source, outer.target, outer.v_dim * inner.v_dim,
            compose(W(outer.v_dim, inner.psi, 1), W(1, outer.psi, inner.v_dim)), inner.order};
}

EMWTwoCell hcompose_twocells(const EMWTwoCell& inner, const EMWTwoCell& outer) {
    validate_shape(inner);
    validate_shape(outer);
    if (!(inner.src.target == outer.src.source)) throw BoundaryMismatch("hcompose: middle monads differ");
    if (inner.src.order != outer.src.order) throw BoundaryMismatch("hcompose: tensor orders differ");
    Whisker W(field_of(inner.src), inner.src.order);
    const std::size_t w = inner.dst.v_dim, w2 = outer.dst.v_dim, v = inner.src.v_dim, n = inner.src.source.dim;
    LinMap rho = compose_all({W(w2 * w, inner.src.source.mult, 1), W(w2, inner.rho, n), W(w2, inner.src.psi, 1),
                              W(1, outer.rho, v)});
    return {hcompose_onecells(inner.src, outer.src), hcompose_onecells(inner.dst, outer.dst), rho};
}

EMWTwoCell vcompose_twocells(const EMWTwoCell& tau, const EMWTwoCell& rho) {
    validate_shape(tau);
    validate_shape(rho);
    if (!(rho.dst == tau.src)) throw BoundaryMismatch("vcompose: target of the first 2-cell is not the source of the second");
    Whisker W(field_of(rho.src), rho.src.order);
    const std::size_t u = tau.dst.v_dim, n = rho.src.source.dim;
    return {rho.src, tau.dst, compose_all({W(u, rho.src.source.mult, 1), W(1, tau.rho, n), rho.rho})};
}

namespace {

struct MembershipTerms {
    LinMap omega_t_psi;  // ωt ∗ ψ
    LinMap rhs_ii_iota;  // Wμ ∗ φt ∗ t'ωt ∗ t'ψ ∗ t'η'V
    LinMap proj_w;       // Wμ ∗ φt ∗ η'Wt
    LinMap g_iota;
    LinMap g_pi;
    LinMap phi_t2_omega;  // φ ∗ t'ω
};

MembershipTerms terms(const LinMap& omega, const EMWOneCell& v, const EMWOneCell& w) {
    validate_shape(v);
    validate_shape(w);
    if (!(v.source == w.source) || !(v.target == w.target) || v.order != w.order)
        throw ShapeMismatch("membership: 1-cells are not parallel");
    expect(omega, field_of(v), w.v_dim, v.v_dim, "omega");
    Whisker W(field_of(v), v.order);
    const std::size_t n = v.source.dim, n2 = v.target.dim, vd = v.v_dim, wd = w.v_dim;
    const LinMap& eta2 = v.target.unit;
    LinMap wmu = W(wd, v.source.mult, 1);
    LinMap phit = W(1, w.psi, n);
    MembershipTerms t;
    t.omega_t_psi = compose(W(1, omega, n), v.psi);
    t.rhs_ii_iota = compose_all({wmu, phit, W(n2, omega, n), W(n2, v.psi, 1), W(n2, eta2, vd)});
    t.proj_w = compose_all({wmu, phit, W(1, eta2, wd * n)});
    t.g_iota = compose(t.omega_t_psi, W(1, eta2, vd));
    t.g_pi = compose_all({w.psi, W(1, eta2, wd), omega});
    t.phi_t2_omega = compose(w.psi, W(n2, omega, 1));
    return t;
}

}  // namespace

EMWTwoCell induced_candidate(const LinMap& omega, Side side, const EMWOneCell& v, const EMWOneCell& w) {
    MembershipTerms t = terms(omega, v, w);
    return {v, w, side == Side::iota ? t.g_iota : t.g_pi};
}

Membership mnd_membership(const LinMap& omega, Side side, const EMWOneCell& v, const EMWOneCell& w) {
    MembershipTerms t = terms(omega, v, w);
    Membership m;
    if (side == Side::iota) m.member = t.omega_t_psi == t.rhs_ii_iota;
    else m.member = t.phi_t2_omega == compose(t.proj_w, t.omega_t_psi);
    if (m.member) m.induced = {v, w, side == Side::iota ? t.g_iota : t.g_pi};
    return m;
}

Report membership_criterion_iii(const LinMap& omega, Side side, const EMWOneCell& v, const EMWOneCell& w) {
    MembershipTerms t = terms(omega, v, w);
    Report r{side == Side::iota ? "iota criterion (iii)" : "pi criterion (iii)", {}};
    r.add(identity_verdict("(iii-a)", compose(t.proj_w, t.g_iota), side == Side::iota ? t.g_iota : t.g_pi));
    r.add(identity_verdict("(iii-b)", compose(t.proj_w, t.omega_t_psi), t.rhs_ii_iota));
    return r;
}

bool strict_morphism(const LinMap& omega, const EMWOneCell& v, const EMWOneCell& w) {
    MembershipTerms t = terms(omega, v, w);
    return t.phi_t2_omega == t.omega_t_psi;
}

LinMap lifting_idempotent(const EMWOneCell& c) {
    validate_shape(c);
    Whisker W(field_of(c), c.order);
    const std::size_t v = c.v_dim, n = c.source.dim;
    return compose_all({W(v, c.source.mult, 1), W(1, c.psi, n), W(1, c.target.unit, v * n)});
}

EMWOneCell direct_sum(const EMWOneCell& a, const EMWOneCell& b) {
    validate_shape(a);
    validate_shape(b);
    if (!(a.source == b.source) || !(a.target == b.target) || a.order != b.order)
        throw MonadMismatch("direct_sum: 1-cells are not parallel");
    if (a.order == TensorOrder::reversed) return mirror(direct_sum(mirror(a), mirror(b)));
    const std::size_t n = a.source.dim, n2 = a.target.dim, va = a.v_dim, vb = b.v_dim, v = va + vb;
    LinMap psi(a.source.field, v * n, n2 * v);
    for (std::size_t x = 0; x < n2; ++x)
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t i = 0; i < va; ++i)
                for (std::size_t j = 0; j < va; ++j)
                    if (!a.psi.is_zero_at(i * n + u, x * va + j)) psi.set(i * n + u, x * v + j, a.psi.at(i * n + u, x * va + j));
            for (std::size_t i = 0; i < vb; ++i)
                for (std::size_t j = 0; j < vb; ++j)
                    if (!b.psi.is_zero_at(i * n + u, x * vb + j))
                        psi.set((va + i) * n + u, x * v + va + j, b.psi.at(i * n + u, x * vb + j));
        }
    return {a.source, a.target, v, psi, a.order};
}

Algebra mirror(const Algebra& a) { return opposite(a); }

EMWOneCell mirror(const EMWOneCell& c) {
    validate_shape(c);
    const Field& f = field_of(c);
    const std::size_t v = c.v_dim, n = c.source.dim, n2 = c.target.dim;
    EMWOneCell m{opposite(c.source), opposite(c.target), v, {}, TensorOrder::direct};
    if (c.order == TensorOrder::direct) {
        m.order = TensorOrder::reversed;
        m.psi = compose_all({swap_map(f, v, n), c.psi, swap_map(f, v, n2)});
    } else {
        m.psi = compose_all({swap_map(f, n, v), c.psi, swap_map(f, n2, v)});
    }
    return m;
}

EMWTwoCell mirror(const EMWTwoCell& c) {
    validate_shape(c);
    const Field& f = field_of(c.src);
    const std::size_t w = c.dst.v_dim, n = c.src.source.dim;
    LinMap sw = c.src.order == TensorOrder::direct ? swap_map(f, w, n) : swap_map(f, n, w);
    return {mirror(c.src), mirror(c.dst), compose(sw, c.rho)};
}

Report check_monad_in_emw(const MonadInEMW& m) {
    validate_shape(m);
    Whisker W(m.base.field, TensorOrder::direct);
    const std::size_t s = m.s_dim, n = m.base.dim;
    const LinMap& mu = m.base.mult;
    const LinMap& eta = m.base.unit;
    LinMap smu = W(s, mu, 1);
    LinMap smu_psit = compose(smu, W(1, m.psi, n));
    LinMap smu_nut = compose(smu, W(1, m.nu, n));
    LinMap psi_etas = compose(m.psi, W(1, eta, s));
    Report r{"monad in EM^w", {}};
    r.add(identity_verdict("(2.1)", compose(m.psi, W(1, mu, s)),
                           compose_all({smu, W(1, m.psi, n), W(n, m.psi, 1)})));
    r.add(identity_verdict("(2.2)", compose(smu_psit, W(n, m.nu, 1)),
                           compose_all({smu_nut, W(s, m.psi, 1), W(1, m.psi, s)})));
    r.add(identity_verdict("(2.3)", compose_all({smu_psit, W(1, eta, s * n), m.nu}), m.nu));
    r.add(identity_verdict("(2.4)", compose(smu_psit, W(n, m.theta, 1)), compose(smu, W(1, m.theta, n))));
    r.add(identity_verdict("(2.5)", compose(smu_nut, W(s, m.nu, 1)),
                           compose_all({smu_nut, W(s, m.psi, 1), W(1, m.nu, s)})));
    r.add(identity_verdict("(2.6)", compose_all({smu_nut, W(s, m.psi, 1), W(1, m.theta, s)}), psi_etas));
    r.add(identity_verdict("(2.7)", compose(smu_nut, W(s, m.theta, 1)), psi_etas));
    return r;
}

EMWOneCell underlying_onecell(const MonadInEMW& m) { return {m.base, m.base, m.s_dim, m.psi, TensorOrder::direct}; }

}  // namespace weakmonads
