#include "weakmonads/structures.hpp"

#include "weakmonads/errors.hpp"

namespace weakmonads {

namespace {

LinMap I(const Field& f, std::size_t n) { return LinMap::identity(f, n); }

void expect(const LinMap& m, const Field& field, std::size_t rows, std::size_t cols, const char* what) {
    if (!(m.field() == field))
        throw ShapeMismatch(std::string(what) + ": field " + m.field().name() + ", expected " + field.name());
    if (m.rows() != rows || m.cols() != cols)
        throw ShapeMismatch(std::string(what) + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

LinMap invert(const LinMap& g) {
    auto inv = inverse(g);
    if (!inv) throw PreconditionFailed("transport: map is not invertible");
    return *inv;
}

}  // namespace

WeakBialgebra WeakBialgebra::from_parts(const Algebra& a, const Coalgebra& c) {
    if (!(a.field == c.field) || a.dim != c.dim) throw ShapeMismatch("weak bialgebra: algebra and coalgebra disagree");
    return {a.field, a.dim, a.mult, a.unit, c.comult, c.counit};
}

void validate_shape(const Algebra& a) {
    expect(a.mult, a.field, a.dim, a.dim * a.dim, "mult");
    expect(a.unit, a.field, a.dim, 1, "unit");
}

void validate_shape(const Coalgebra& c) {
    expect(c.comult, c.field, c.dim * c.dim, c.dim, "comult");
    expect(c.counit, c.field, 1, c.dim, "counit");
}

void validate_shape(const PreMonad& p) { validate_shape(as_algebra(p)); }

void validate_shape(const WeakBialgebra& h) {
    validate_shape(h.algebra());
    validate_shape(h.coalgebra());
}

Report check_algebra(const Algebra& a) {
    validate_shape(a);
    const auto& f = a.field;
    const std::size_t n = a.dim;
    Report r{"algebra", {}};
    r.add(identity_verdict("assoc", compose(a.mult, kron(a.mult, I(f, n))), compose(a.mult, kron(I(f, n), a.mult))));
    r.add(identity_verdict("unit-left", compose(a.mult, kron(a.unit, I(f, n))), I(f, n)));
    r.add(identity_verdict("unit-right", compose(a.mult, kron(I(f, n), a.unit)), I(f, n)));
    return r;
}

Report check_coalgebra(const Coalgebra& c) {
    validate_shape(c);
    const auto& f = c.field;
    const std::size_t n = c.dim;
    Report r{"coalgebra", {}};
    r.add(identity_verdict("coassoc", compose(kron(c.comult, I(f, n)), c.comult),
                           compose(kron(I(f, n), c.comult), c.comult)));
    r.add(identity_verdict("counit-left", compose(kron(c.counit, I(f, n)), c.comult), I(f, n)));
    r.add(identity_verdict("counit-right", compose(kron(I(f, n), c.counit), c.comult), I(f, n)));
    return r;
}

Report check_premonad(const PreMonad& p) {
    validate_shape(p);
    const auto& f = p.field;
    const std::size_t n = p.dim;
    const LinMap& m = p.mult;
    const LinMap& u = p.unit;
    Report r{"pre-monad", {}};
    r.add(identity_verdict("(2.8)", compose(m, kron(m, I(f, n))), compose(m, kron(I(f, n), m))));
    r.add(identity_verdict("(2.9)", compose(m, kron(u, I(f, n))), compose(m, kron(I(f, n), u))));
    r.add(identity_verdict("(2.10)", compose(m, kron(u, u)), u));
    r.add(identity_verdict("(2.11)", compose_all({m, kron(m, I(f, n)), kron(u, I(f, n * n))}), m));
    return r;
}

Report check_weak_bialgebra(const WeakBialgebra& h) {
    validate_shape(h);
    const auto& f = h.field;
    const std::size_t n = h.dim;
    Report r{"weak bialgebra", {}};
    r.append(check_algebra(h.algebra()), "algebra:");
    r.append(check_coalgebra(h.coalgebra()), "coalgebra:");

    LinMap sw = swap_map(f, n, n);
    LinMap mid = kron_all({I(f, n), sw, I(f, n)});
    r.add(identity_verdict("WBA_1", compose(h.comult, h.mult),
                           compose_all({kron(h.mult, h.mult), mid, kron(h.comult, h.comult)})));

    LinMap d = compose(h.comult, h.unit);
    LinMap dd = kron(d, d);
    LinMap inner = kron_all({I(f, n), h.mult, I(f, n)});
    LinMap delta2 = compose(kron(h.comult, I(f, n)), d);
    r.add(identity_verdict("WBA_2a", compose(inner, dd), delta2));
    r.add(identity_verdict("WBA_2b", compose_all({inner, mid, dd}), delta2));

    LinMap em = compose(h.counit, h.mult);
    LinMap lhs3 = compose(em, I(f, n * n));
    LinMap emem = kron(em, em);
    r.add(identity_verdict("WBA_3a", compose(emem, kron_all({I(f, n), d, I(f, n)})), lhs3));
    r.add(identity_verdict("WBA_3b", compose(emem, kron_all({I(f, n), compose(sw, d), I(f, n)})), lhs3));
    return r;
}

PreMonad premonad_normalize(const Field& field, std::size_t dim, const LinMap& mult, const LinMap& unit) {
    Algebra a{field, dim, mult, unit};
    validate_shape(a);
    LinMap id = I(field, dim);
    if (!(compose(mult, kron(mult, id)) == compose(mult, kron(id, mult))))
        throw PreconditionFailed("premonad_normalize: associativity mult∘(mult⊗id) = mult∘(id⊗mult) fails");
    LinMap left = compose(mult, kron(unit, id));
    if (!(left == compose(mult, kron(id, unit))))
        throw PreconditionFailed("premonad_normalize: mult∘(unit⊗id) = mult∘(id⊗unit) fails");
    if (!(left == compose_all({mult, kron(mult, id), kron(kron(unit, unit), id)})))
        throw PreconditionFailed("premonad_normalize: mult∘(unit⊗id) = mult∘(mult⊗id)∘(unit⊗unit⊗id) fails");
    PreMonad p{field, dim, compose_all({mult, kron(mult, id), kron(unit, I(field, dim * dim))}),
               compose(mult, kron(unit, unit))};
    return p;
}

Retract premonad_retract(const PreMonad& p) {
    Report rep = check_premonad(p);
    if (!rep.passed()) throw NotPreMonad("premonad_retract: " + rep.first_failure()->tag + " fails");
    LinMap e = compose(p.mult, kron(p.unit, I(p.field, p.dim)));
    Retract r;
    r.split = split_idempotent(e);
    r.monad = Algebra{p.field, r.split.retract_dim,
                      compose_all({r.split.pi, p.mult, kron(r.split.iota, r.split.iota)}),
                      compose(r.split.pi, p.unit)};
    return r;
}

Algebra opposite(const Algebra& a) {
    return {a.field, a.dim, compose(a.mult, swap_map(a.field, a.dim, a.dim)), a.unit};
}

Coalgebra coopposite(const Coalgebra& c) {
    return {c.field, c.dim, compose(swap_map(c.field, c.dim, c.dim), c.comult), c.counit};
}

Algebra as_algebra(const PreMonad& p) { return {p.field, p.dim, p.mult, p.unit}; }
PreMonad as_premonad(const Algebra& a) { return {a.field, a.dim, a.mult, a.unit}; }

Algebra transport(const Algebra& a, const LinMap& g) {
    LinMap gi = invert(g);
    return {a.field, a.dim, compose_all({g, a.mult, kron(gi, gi)}), compose(g, a.unit)};
}

Coalgebra transport(const Coalgebra& c, const LinMap& g) {
    LinMap gi = invert(g);
    return {c.field, c.dim, compose_all({kron(g, g), c.comult, gi}), compose(c.counit, gi)};
}

WeakBialgebra transport(const WeakBialgebra& h, const LinMap& g) {
    return WeakBialgebra::from_parts(transport(h.algebra(), g), transport(h.coalgebra(), g));
}

// ---- generators ----

WeakBialgebra group_algebra(const Field& field, const std::vector<std::vector<std::size_t>>& table) {
    return groupoid_algebra(field, group_as_groupoid(table));
}

WeakBialgebra cyclic_group_algebra(const Field& field, std::size_t order) {
    if (order == 0) throw InvalidPresentation("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) table[i][j] = (i + j) % order;
    return group_algebra(field, table);
}

void validate_groupoid(const Groupoid& g) {
    const std::size_t n = g.arrows.size();
    if (g.compose.size() != n) throw InvalidPresentation("composition table has wrong number of rows");
    for (const auto& row : g.compose)
        if (row.size() != n) throw InvalidPresentation("composition table row has wrong length");
    for (const auto& [s, t] : g.arrows)
        if (s >= g.objects || t >= g.objects) throw InvalidPresentation("arrow endpoint out of range");
    auto src = [&](std::size_t a) { return g.arrows[a].first; };
    auto tgt = [&](std::size_t a) { return g.arrows[a].second; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto& c = g.compose[a][b];
            bool composable = src(a) == tgt(b);
            if (composable != c.has_value())
                throw InvalidPresentation("composite of arrows " + std::to_string(a) + ", " + std::to_string(b) +
                                          " defined iff source(g) == target(f) is violated");
            if (c && (*c >= n || src(*c) != src(b) || tgt(*c) != tgt(a)))
                throw InvalidPresentation("composite of arrows " + std::to_string(a) + ", " + std::to_string(b) +
                                          " has wrong endpoints");
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (!g.compose[a][b] || !g.compose[b][c]) continue;
                if (g.compose[*g.compose[a][b]][c] != g.compose[a][*g.compose[b][c]])
                    throw InvalidPresentation("composition is not associative");
            }
    std::vector<std::optional<std::size_t>> ident(g.objects);
    for (std::size_t a = 0; a < n; ++a) {
        if (src(a) != tgt(a)) continue;
        bool is_id = true;
        for (std::size_t b = 0; b < n; ++b) {
            if (g.compose[a][b] && *g.compose[a][b] != b) is_id = false;
            if (g.compose[b][a] && *g.compose[b][a] != b) is_id = false;
        }
        if (is_id) ident[src(a)] = a;
    }
    for (std::size_t x = 0; x < g.objects; ++x)
        if (!ident[x]) throw InvalidPresentation("object " + std::to_string(x) + " has no identity arrow");
    for (std::size_t a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (std::size_t b = 0; b < n && !has_inverse; ++b)
            has_inverse = g.compose[a][b] == ident[src(b)] && g.compose[b][a] == ident[src(a)];
        if (!has_inverse) throw InvalidPresentation("arrow " + std::to_string(a) + " is not invertible");
    }
}

Groupoid pair_groupoid(std::size_t objects) {
    Groupoid g;
    g.objects = objects;
    for (std::size_t s = 0; s < objects; ++s)
        for (std::size_t t = 0; t < objects; ++t) g.arrows.push_back({s, t});
    const std::size_t n = g.arrows.size();
    g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.arrows[a].first == g.arrows[b].second)
                g.compose[a][b] = g.arrows[b].first * objects + g.arrows[a].second;
    return g;
}

Groupoid discrete_groupoid(std::size_t objects) {
    Groupoid g;
    g.objects = objects;
    for (std::size_t x = 0; x < objects; ++x) g.arrows.push_back({x, x});
    g.compose.assign(objects, std::vector<std::optional<std::size_t>>(objects));
    for (std::size_t x = 0; x < objects; ++x) g.compose[x][x] = x;
    return g;
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
    Groupoid g;
    g.objects = a.objects + b.objects;
    g.arrows = a.arrows;
    for (auto [s, t] : b.arrows) g.arrows.push_back({s + a.objects, t + a.objects});
    const std::size_t na = a.arrows.size(), n = g.arrows.size();
    g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) g.compose[i][j] = a.compose[i][j];
    for (std::size_t i = 0; i < b.arrows.size(); ++i)
        for (std::size_t j = 0; j < b.arrows.size(); ++j)
            if (b.compose[i][j]) g.compose[na + i][na + j] = na + *b.compose[i][j];
    return g;
}

Groupoid group_as_groupoid(const std::vector<std::vector<std::size_t>>& table) {
    Groupoid g;
    g.objects = 1;
    const std::size_t n = table.size();
    g.arrows.assign(n, {0, 0});
    g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw InvalidPresentation("group table is not square");
        for (std::size_t j = 0; j < n; ++j) g.compose[i][j] = table[i][j];
    }
    return g;
}

WeakBialgebra groupoid_algebra(const Field& field, const Groupoid& g) {
    validate_groupoid(g);
    const std::size_t n = g.arrows.size();
    Scalar one(field, 1);
    WeakBialgebra h{field, n, LinMap(field, n, n * n), LinMap(field, n, 1), LinMap(field, n * n, n), LinMap(field, 1, n)};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (g.compose[a][b]) h.mult.set(*g.compose[a][b], a * n + b, one);
        h.comult.set(a * n + a, a, one);
        h.counit.set(0, a, one);
        if (g.arrows[a].first == g.arrows[a].second && g.compose[a][a] == a) h.unit.set(a, 0, one);
    }
    return h;
}

Coalgebra matrix_coalgebra(const Field& field, std::size_t n) {
    const std::size_t d = n * n;
    Coalgebra c{field, d, LinMap(field, d * d, d), LinMap(field, 1, d)};
    Scalar one(field, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) c.comult.set((i * n + k) * d + (k * n + j), i * n + j, one);
            if (i == j) c.counit.set(0, i * n + j, one);
        }
    return c;
}

Coalgebra dual(const Algebra& a) { return {a.field, a.dim, a.mult.transpose(), a.unit.transpose()}; }
Algebra dual(const Coalgebra& c) { return {c.field, c.dim, c.comult.transpose(), c.counit.transpose()}; }

WeakBialgebra dual(const WeakBialgebra& h) {
    return {h.field, h.dim, h.comult.transpose(), h.counit.transpose(), h.mult.transpose(), h.unit.transpose()};
}

}  // namespace weakmonads
