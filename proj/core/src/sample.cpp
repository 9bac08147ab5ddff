#include "weakmonads/sample.hpp"

#include <functional>

#include "weakmonads/errors.hpp"

namespace weakmonads {

namespace {

LinMap I(const Field& f, std::size_t n) { return LinMap::identity(f, n); }

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool coin(Rng& rng, unsigned num = 1, unsigned den = 2) { return rng() % den < num; }

// Columns: vectorized solutions X (rows x cols) of the homogeneous linear system residual(X) = 0.
LinMap solution_space(const Field& f, std::size_t rows, std::size_t cols,
                      const std::function<LinMap(const LinMap&)>& residual) {
    std::vector<LinMap> columns;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            LinMap e(f, rows, cols);
            e.set(i, j, Scalar(f, 1));
            columns.push_back(vectorize(residual(e)));
        }
    if (columns.empty()) return LinMap(f, 0, 0);
    return kernel_basis(hstack(columns));
}

LinMap invert(const LinMap& g) {
    auto inv = inverse(g);
    if (!inv) throw PreconditionFailed("not invertible");
    return *inv;
}

bool char_allows_half(const Field& f) { return f.characteristic() != 2; }

Algebra pointwise(const Field& f, std::size_t n) { return groupoid_algebra(f, discrete_groupoid(n)).algebra(); }

LinMap column(const Field& f, const std::vector<Scalar>& v) { return LinMap::from_scalars(f, v.size(), 1, v); }

Representation character(const Field& f, const std::vector<Scalar>& values) {
    return {1, LinMap::from_scalars(f, 1, values.size(), values)};
}

Representation regular_rep(const Algebra& a) {
    // L_{e_k}[i][j] = mult[i][k*n + j]
    const std::size_t n = a.dim;
    LinMap m(a.field, n * n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i * n + j, k, a.mult.at(i, k * n + j));
    return {n, m};
}

// The defining representation of a subalgebra of M_2 with basis given as 2x2 matrices.
Representation defining_rep(const Field& f, const std::vector<std::vector<long>>& basis) {
    LinMap m(f, 4, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t r = 0; r < 4; ++r) m.set(r, k, Scalar(f, basis[k][r]));
    return {2, m};
}

Algebra matrix_subalgebra(const Field& f, const std::vector<std::vector<long>>& basis) {
    // Structure constants of a subalgebra of M_2 closed under products.
    const std::size_t n = basis.size();
    LinMap coords(f, 4, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < 4; ++r) coords.set(r, k, Scalar(f, basis[k][r]));
    LinMap mult(f, n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            LinMap prod(f, 4, 1);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    long s = 0;
                    for (std::size_t l = 0; l < 2; ++l) s += basis[a][i * 2 + l] * basis[b][l * 2 + j];
                    prod.set(i * 2 + j, 0, Scalar(f, s));
                }
            auto x = solve(coords, prod);
            if (!x) throw InvalidPresentation("matrix subalgebra not closed");
            for (std::size_t c = 0; c < n; ++c) mult.set(c, a * n + b, x->at(c, 0));
        }
    LinMap id(f, 4, 1);
    id.set(0, 0, Scalar(f, 1));
    id.set(3, 0, Scalar(f, 1));
    auto unit = solve(coords, id);
    if (!unit) throw InvalidPresentation("matrix subalgebra lacks the identity");
    return {f, n, mult, *unit};
}

LinMap rep_matrix(const Representation& r, std::size_t k) {
    return unvectorize(r.matrices.select_cols({k}), r.dim, r.dim);
}

WeakBialgebra transported(const WeakBialgebra& h, const Field& f, Rng& rng) {
    if (coin(rng, 1, 3)) return h;
    return transport(h, random_invertible(f, h.dim, rng));
}

}  // namespace

Scalar random_scalar(const Field& field, Rng& rng) {
    if (field.is_rational()) return Scalar(field, static_cast<long>(rng() % 5) - 2);
    return Scalar::from_residue(field, rng() % field.characteristic());
}

LinMap random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
    LinMap m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(field, rng));
    return m;
}

LinMap random_invertible(const Field& field, std::size_t n, Rng& rng) {
    for (;;) {
        LinMap m = random_matrix(field, n, n, rng);
        if (rank(m) == n) return m;
    }
}

LinMap random_combination(const LinMap& basis, Rng& rng) {
    if (basis.cols() == 0) return LinMap(basis.field(), basis.rows(), 1);
    return compose(basis, random_matrix(basis.field(), basis.cols(), 1, rng));
}

LinMap vectorize(const LinMap& m) {
    LinMap v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.is_zero_at(i, j)) v.set(i * m.cols() + j, 0, m.at(i, j));
    return v;
}

LinMap unvectorize(const LinMap& column, std::size_t rows, std::size_t cols) {
    if (column.cols() != 1 || column.rows() != rows * cols) throw DimensionMismatch("unvectorize: wrong length");
    LinMap m(column.field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!column.is_zero_at(i * cols + j, 0)) m.set(i, j, column.at(i * cols + j, 0));
    return m;
}

CatalogAlgebra regular_catalog_entry(const std::string& name, const Algebra& a) {
    return {name, a, {a.unit}, {regular_rep(a)}};
}

CatalogAlgebra transport(const CatalogAlgebra& c, const LinMap& g) {
    LinMap gi = invert(g);
    CatalogAlgebra out{c.name, transport(c.algebra, g), {}, {}};
    for (const auto& e : c.central_idempotents) out.central_idempotents.push_back(compose(g, e));
    for (const auto& r : c.reps) out.reps.push_back({r.dim, compose(r.matrices, gi)});
    return out;
}

CatalogAlgebra random_catalog_entry(const Field& f, std::size_t max_dim, Rng& rng) {
    auto cat = algebra_catalog(f, max_dim);
    const CatalogAlgebra& c = cat[pick(rng, cat.size())];
    if (coin(rng, 1, 3)) return c;
    return transport(c, random_invertible(f, c.algebra.dim, rng));
}

std::vector<CatalogAlgebra> algebra_catalog(const Field& f, std::size_t max_dim) {
    std::vector<CatalogAlgebra> out;
    auto S = [&](long v) { return Scalar(f, v); };
    auto add = [&](CatalogAlgebra c) {
        if (c.algebra.dim <= max_dim) out.push_back(std::move(c));
    };
    add({"k", pointwise(f, 1), {column(f, {S(1)})}, {character(f, {S(1)})}});
    for (std::size_t n = 2; n <= 3; ++n) {
        Algebra a = pointwise(f, n);
        CatalogAlgebra c{"k^" + std::to_string(n), a, {}, {}};
        for (std::size_t i = 0; i < n; ++i) {
            c.central_idempotents.push_back(LinMap::basis_vector(f, n, i));
            c.reps.push_back({1, LinMap::basis_vector(f, n, i).transpose()});
        }
        c.reps.push_back(regular_rep(a));
        add(c);
    }
    {
        Algebra a = cyclic_group_algebra(f, 2).algebra();
        CatalogAlgebra c{"kZ2", a, {}, {character(f, {S(1), S(1)}), regular_rep(a)}};
        if (char_allows_half(f)) {
            Scalar h = S(1) / S(2);
            c.central_idempotents = {column(f, {h, h}), column(f, {h, -h})};
            c.reps.push_back(character(f, {S(1), S(-1)}));
        } else {
            c.central_idempotents = {a.unit};
        }
        add(c);
    }
    {
        Algebra a = cyclic_group_algebra(f, 3).algebra();
        add({"kZ3", a, {a.unit}, {character(f, {S(1), S(1), S(1)}), regular_rep(a)}});
    }
    {
        // dual numbers k[x]/x², basis 1, x
        Algebra a{f, 2, LinMap::from_ints(f, 2, 4, {1, 0, 0, 0, 0, 1, 1, 0}), column(f, {S(1), S(0)})};
        add({"k[x]/x^2", a, {a.unit}, {character(f, {S(1), S(0)}), regular_rep(a)}});
    }
    {
        std::vector<std::vector<long>> basis{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
        Algebra a = matrix_subalgebra(f, basis);
        add({"T2", a, {a.unit},
             {defining_rep(f, basis), character(f, {S(1), S(0), S(0)}), character(f, {S(0), S(0), S(1)})}});
    }
    {
        std::vector<std::vector<long>> basis{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        Algebra a = matrix_subalgebra(f, basis);
        add({"M2", a, {a.unit}, {defining_rep(f, basis)}});
    }
    return out;
}

EMWOneCell random_onecell(const CatalogAlgebra& t, const CatalogAlgebra& tp, std::size_t v, Rng& rng) {
    const Field& f = t.algebra.field;
    const std::size_t n = t.algebra.dim, n2 = tp.algebra.dim;
    LinMap psi(f, v * n, n2 * v);
    const bool unital = coin(rng, 1, 4);
    for (const LinMap& idem : t.central_idempotents) {
        if (!unital && coin(rng, 1, 4)) continue;
        // block-diagonal representation of t' of size at most v
        std::vector<const Representation*> blocks;
        std::size_t used = 0;
        for (int attempt = 0; attempt < 8 && used < v; ++attempt) {
            const Representation& r = tp.reps[pick(rng, tp.reps.size())];
            if (used + r.dim > v) continue;
            if (!unital && coin(rng, 1, 3)) break;
            blocks.push_back(&r);
            used += r.dim;
        }
        LinMap P = random_invertible(f, v, rng);
        LinMap Pi = invert(P);
        for (std::size_t k = 0; k < n2; ++k) {
            LinMap b(f, v, v);
            std::size_t off = 0;
            for (const Representation* r : blocks) {
                LinMap m = rep_matrix(*r, k);
                for (std::size_t i = 0; i < r->dim; ++i)
                    for (std::size_t j = 0; j < r->dim; ++j)
                        if (!m.is_zero_at(i, j)) b.set(off + i, off + j, m.at(i, j));
                off += r->dim;
            }
            LinMap phi = compose_all({P, b, Pi});
            for (std::size_t u = 0; u < v; ++u)
                for (std::size_t x = 0; x < v; ++x) {
                    if (phi.is_zero_at(u, x)) continue;
                    for (std::size_t c = 0; c < n; ++c) {
                        if (idem.is_zero_at(c, 0)) continue;
                        Scalar cur = psi.at(u * n + c, k * v + x);
                        psi.set(u * n + c, k * v + x, cur + phi.at(u, x) * idem.at(c, 0));
                    }
                }
        }
    }
    return {t.algebra, tp.algebra, v, psi, TensorOrder::direct};
}

LinMap twocell_space(const EMWOneCell& v, const EMWOneCell& w) {
    const Field& f = v.source.field;
    Whisker W(f, v.order);
    const std::size_t n = v.source.dim, n2 = v.target.dim, wd = w.v_dim;
    const LinMap& mu = v.source.mult;
    LinMap ew = lifting_idempotent(w);
    LinMap top = compose(W(wd, mu, 1), W(1, w.psi, n));
    return solution_space(f, wd * n, v.v_dim, [&](const LinMap& rho) {
        LinMap a = compose_all({W(wd, mu, 1), W(1, rho, n), v.psi}) - compose(top, W(n2, rho, 1));
        LinMap b = rho - compose(ew, rho);
        return vstack({vectorize(a), vectorize(b)});
    });
}

EMWTwoCell random_twocell(const EMWOneCell& v, const EMWOneCell& w, Rng& rng) {
    LinMap rho = unvectorize(random_combination(twocell_space(v, w), rng), w.v_dim * v.source.dim, v.v_dim);
    return {v, w, rho};
}

LinMap omega_space(OmegaSpace which, const EMWOneCell& v, const EMWOneCell& w) {
    const Field& f = v.source.field;
    Whisker W(f, v.order);
    const std::size_t n = v.source.dim, n2 = v.target.dim, vd = v.v_dim, wd = w.v_dim;
    const LinMap& mu = v.source.mult;
    const LinMap& eta2 = v.target.unit;
    return solution_space(f, wd, vd, [&](const LinMap& om) {
        LinMap omt_psi = compose(W(1, om, n), v.psi);
        LinMap phi_om = compose(w.psi, W(n2, om, 1));
        switch (which) {
            case OmegaSpace::iota:
                return omt_psi - compose_all({W(wd, mu, 1), W(1, w.psi, n), W(n2, om, n), W(n2, v.psi, 1), W(n2, eta2, vd)});
            case OmegaSpace::pi:
                return phi_om - compose_all({W(wd, mu, 1), W(1, w.psi, n), W(1, eta2, wd * n), omt_psi});
            case OmegaSpace::strict:
                break;
        }
        return phi_om - omt_psi;
    });
}

LinMap random_omega(const EMWOneCell& v, const EMWOneCell& w, Rng& rng) {
    switch (pick(rng, 4)) {
        case 0: return random_matrix(v.source.field, w.v_dim, v.v_dim, rng);
        case 1: return unvectorize(random_combination(omega_space(OmegaSpace::iota, v, w), rng), w.v_dim, v.v_dim);
        case 2: return unvectorize(random_combination(omega_space(OmegaSpace::pi, v, w), rng), w.v_dim, v.v_dim);
        default: return unvectorize(random_combination(omega_space(OmegaSpace::strict, v, w), rng), w.v_dim, v.v_dim);
    }
}

// ---- families ----

WeakBialgebra g2(const Field& field) { return groupoid_algebra(field, discrete_groupoid(2)); }

PreMonad corner_premonad(const Field& field) {
    Algebra a = pointwise(field, 2);
    return premonad_normalize(field, 2, a.mult, LinMap::basis_vector(field, 2, 0));
}

EntwiningDatum smallest_partial_entwining(const Field& field) {
    if (!char_allows_half(field)) throw PreconditionFailed("the partial instance needs 1/2");
    WeakBialgebra z2 = cyclic_group_algebra(field, 2);
    Scalar h = Scalar(field, 1) / Scalar(field, 2);
    // right multiplication by (1+g)/2 on basis 1, g
    LinMap psi = LinMap::from_scalars(field, 2, 2, {h, h, h, h});
    return {ground_algebra(field), z2.coalgebra(), psi, Handedness::right};
}

Algebra sample_algebra(const Field& field, Rng& rng) { return random_catalog_entry(field, 4, rng).algebra; }

PreMonad sample_premonad(const Field& field, Rng& rng) {
    switch (pick(rng, 4)) {
        case 0: return corner_premonad(field);
        case 1: {
            WeakBialgebra h = groupoid_algebra(field, pick(rng, 2) ? discrete_groupoid(2) : pair_groupoid(2));
            return weak_smash_premonad(h).premonad;
        }
        default: break;
    }
    CatalogAlgebra c = random_catalog_entry(field, 4, rng);
    LinMap e(field, c.algebra.dim, 1);
    for (const LinMap& idem : c.central_idempotents)
        if (coin(rng, 2, 3)) e = e + idem;
    PreMonad p = premonad_normalize(field, c.algebra.dim, c.algebra.mult, e);
    return p;
}

WeakBialgebra sample_group_algebra(const Field& field, Rng& rng) {
    std::size_t choice = pick(rng, 5);
    WeakBialgebra h;
    if (choice < 4) {
        h = cyclic_group_algebra(field, choice + 1);
    } else {
        std::vector<std::vector<std::size_t>> klein(4, std::vector<std::size_t>(4));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) klein[i][j] = i ^ j;
        h = group_algebra(field, klein);
    }
    return transported(h, field, rng);
}

WeakBialgebra sample_groupoid_wba(const Field& field, Rng& rng) {
    std::vector<std::vector<std::size_t>> z2{{0, 1}, {1, 0}};
    Groupoid g;
    switch (pick(rng, 6)) {
        case 0: g = discrete_groupoid(1 + pick(rng, 4)); break;
        case 1: g = pair_groupoid(2); break;
        case 2: g = disjoint_union(group_as_groupoid(z2), discrete_groupoid(1)); break;
        case 3: g = disjoint_union(group_as_groupoid(z2), group_as_groupoid(z2)); break;
        case 4: g = disjoint_union(discrete_groupoid(2), group_as_groupoid(z2)); break;
        default: g = disjoint_union(pair_groupoid(1), discrete_groupoid(1)); break;
    }
    WeakBialgebra h = groupoid_algebra(field, g);
    if (coin(rng)) h = dual(h);
    return transported(h, field, rng);
}

MonadInEMW sample_strict_wreath(const Field& field, Rng& rng) {
    Algebra s, t;
    LinMap psi;
    switch (pick(rng, 3)) {
        case 0: {
            s = random_catalog_entry(field, 3, rng).algebra;
            t = random_catalog_entry(field, 3, rng).algebra;
            psi = swap_map(field, t.dim, s.dim);
            break;
        }
        case 1: {
            // kG acting on functions on X by permutations: g⊗δ_x ↦ δ_{gx}⊗g
            const std::size_t order = 2 + pick(rng, 2);
            const std::size_t x = order == 3 ? 3 : 2 + pick(rng, 2);
            t = cyclic_group_algebra(field, order).algebra();
            s = pointwise(field, x);
            psi = LinMap(field, x * order, order * x);
            for (std::size_t i = 0; i < order; ++i)
                for (std::size_t p = 0; p < x; ++p) {
                    std::size_t q = order == 3 ? (p + i) % 3 : (i == 1 && p < 2 ? 1 - p : p);
                    psi.set(q * order + i, i * x + p, Scalar(field, 1));
                }
            break;
        }
        default: {
            // Z2 acting on upper triangular matrices by conjugation with diag(1,-1)
            t = cyclic_group_algebra(field, 2).algebra();
            s = matrix_subalgebra(field, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
            psi = LinMap(field, 3 * 2, 2 * 3);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t a = 0; a < 3; ++a)
                    psi.set(a * 2 + i, i * 3 + a, Scalar(field, (i == 1 && a == 1) ? -1 : 1));
            break;
        }
    }
    LinMap nu = kron(s.mult, t.unit);
    LinMap theta = kron(s.unit, t.unit);
    if (coin(rng, 2, 3)) {
        LinMap gs = random_invertible(field, s.dim, rng), gt = random_invertible(field, t.dim, rng);
        LinMap gsi = invert(gs), gti = invert(gt);
        LinMap st = kron(gs, gt);
        psi = compose_all({st, psi, kron(gti, gsi)});
        nu = compose_all({st, nu, kron(gsi, gsi)});
        theta = compose(st, theta);
        t = transport(t, gt);
        s = transport(s, gs);
    }
    return {t, s.dim, psi, nu, theta};
}

ComposedPreMonad weak_smash_premonad(const WeakBialgebra& h) {
    const Field& f = h.field;
    const std::size_t n = h.dim;
    LinMap id = I(f, n);
    LinMap one_one = compose(h.comult, h.unit);
    LinMap eps_t = compose_all({kron(compose(h.counit, h.mult), id), kron(id, swap_map(f, n, n)), kron(one_one, id)});
    Splitting sp = split_idempotent(eps_t);
    const std::size_t a = sp.retract_dim;
    LinMap ia = I(f, a);
    Algebra A{f, a, compose_all({sp.pi, h.mult, kron(sp.iota, sp.iota)}), compose(sp.pi, h.unit)};
    LinMap act = compose_all({sp.pi, eps_t, h.mult, kron(id, sp.iota)});
    LinMap theta0 = compose_all({kron(A.mult, h.mult), kron_all({ia, act, id, id}),
                                 kron_all({ia, id, swap_map(f, n, a), id}), kron_all({ia, h.comult, ia, id})});
    LinMap unit0 = kron(A.unit, h.unit);
    return {premonad_normalize(f, a * n, theta0, unit0), a, h.algebra()};
}

MonadInEMW weak_smash(const WeakBialgebra& h) { return premonad_to_wreath(weak_smash_premonad(h)); }

EntwiningDatum sample_strict_entwining(const Field& field, Rng& rng) {
    WeakBialgebra h = sample_group_algebra(field, rng);
    return coin(rng) ? psi_R(h) : psi_L(h);
}

EntwiningDatum sample_weak_entwining(const Field& field, Rng& rng) {
    WeakBialgebra h = sample_groupoid_wba(field, rng);
    return coin(rng) ? psi_R(h) : psi_L(h);
}

EntwiningDatum sample_partial_entwining(const Field& field, Rng& rng) {
    // A = k, C = kG with psi = right multiplication by the averaging idempotent of a subgroup
    if (!char_allows_half(field)) throw PreconditionFailed("partial entwining sampler needs 1/2");
    if (coin(rng, 1, 3)) return smallest_partial_entwining(field);
    std::vector<std::vector<std::size_t>> klein(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) klein[i][j] = i ^ j;
    const bool use_klein = coin(rng);
    WeakBialgebra h = use_klein ? group_algebra(field, klein) : cyclic_group_algebra(field, 4);
    // subgroup {0, k} with k of order 2
    std::size_t k = use_klein ? 1 + pick(rng, 3) : 2;
    Scalar half = Scalar(field, 1) / Scalar(field, 2);
    LinMap e(field, 4, 1);
    e.set(0, 0, half);
    e.set(k, 0, half);
    LinMap psi = compose(h.mult, kron(I(field, 4), e));
    Coalgebra c = h.coalgebra();
    if (coin(rng)) {
        LinMap g = random_invertible(field, 4, rng);
        c = transport(c, g);
        psi = compose_all({g, psi, invert(g)});
    }
    return {ground_algebra(field), c, psi, Handedness::right};
}

EntwiningDatum sample_onecell_entwining(const Field& field, std::size_t max_dim, Rng& rng) {
    CatalogAlgebra a = random_catalog_entry(field, max_dim, rng);
    Coalgebra c = dual(random_catalog_entry(field, max_dim, rng).algebra);
    if (coin(rng)) c = transport(c, random_invertible(field, c.dim, rng));
    EMWOneCell cell = random_onecell(a, a, c.dim, rng);
    EntwiningDatum d{a.algebra, c, cell.psi, Handedness::left};
    return coin(rng) ? mirror(d) : d;
}

std::vector<std::string> family_names() {
    return {"algebra",         "premonad",         "group_algebra",      "groupoid_wba",  "strict_wreath",
            "weak_smash",      "strict_entwining", "weak_entwining",     "partial_entwining",
            "onecell_entwining", "g2",             "g2_psi_r",           "g2_weak_smash", "corner_premonad",
            "partial_minimal"};
}

Structure sample_structure(const std::string& family, const Field& field, std::uint64_t seed) {
    Rng rng(seed);
    if (family == "algebra") return sample_algebra(field, rng);
    if (family == "premonad") return sample_premonad(field, rng);
    if (family == "group_algebra") return sample_group_algebra(field, rng);
    if (family == "groupoid_wba") return sample_groupoid_wba(field, rng);
    if (family == "strict_wreath") return sample_strict_wreath(field, rng);
    if (family == "weak_smash") return weak_smash(sample_groupoid_wba(field, rng));
    if (family == "strict_entwining") return sample_strict_entwining(field, rng);
    if (family == "weak_entwining") return sample_weak_entwining(field, rng);
    if (family == "partial_entwining") return sample_partial_entwining(field, rng);
    if (family == "onecell_entwining") return sample_onecell_entwining(field, 2, rng);
    if (family == "g2") return g2(field);
    if (family == "g2_psi_r") return psi_R(g2(field));
    if (family == "g2_weak_smash") return weak_smash(g2(field));
    if (family == "corner_premonad") return corner_premonad(field);
    if (family == "partial_minimal") return smallest_partial_entwining(field);
    throw UnknownFamily("unknown family \"" + family + "\"");
}

}  // namespace weakmonads
