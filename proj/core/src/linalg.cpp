#include "weakmonads/linalg.hpp"

#include "arith.hpp"
#include "weakmonads/errors.hpp"

namespace weakmonads {

using detail::entries;
using detail::with_arith;

Echelon rref(const LinMap& m) {
    Echelon out{m, {}};
    LinMap& r = out.reduced;
    const std::size_t rows = r.rows(), cols = r.cols();
    with_arith(r.field(), [&](auto ar) {
        auto& d = entries<decltype(ar)>(r);
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols && row < rows; ++col) {
            std::size_t piv = row;
            while (piv < rows && ar.is_zero(d[piv * cols + col])) ++piv;
            if (piv == rows) continue;
            if (piv != row)
                for (std::size_t j = 0; j < cols; ++j) std::swap(d[piv * cols + j], d[row * cols + j]);
            auto inv = ar.inv(d[row * cols + col]);
            for (std::size_t j = col; j < cols; ++j) d[row * cols + j] = ar.mul(d[row * cols + j], inv);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == row || ar.is_zero(d[i * cols + col])) continue;
                auto c = d[i * cols + col];
                for (std::size_t j = col; j < cols; ++j)
                    if (!ar.is_zero(d[row * cols + j])) d[i * cols + j] = ar.sub(d[i * cols + j], ar.mul(c, d[row * cols + j]));
            }
            out.pivots.push_back(col);
            ++row;
        }
    });
    return out;
}

std::size_t rank(const LinMap& m) { return rref(m).pivots.size(); }

LinMap kernel_basis(const LinMap& m) {
    Echelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);
    LinMap k(m.field(), n, free.size());
    Scalar one(m.field(), 1);
    for (std::size_t f = 0; f < free.size(); ++f) {
        k.set(free[f], f, one);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (!e.reduced.is_zero_at(i, free[f])) k.set(e.pivots[i], f, -e.reduced.at(i, free[f]));
    }
    return k;
}

std::optional<LinMap> inverse(const LinMap& m) {
    if (!m.is_square()) throw NotSquare("inverse: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    auto x = solve(m, LinMap::identity(m.field(), m.rows()));
    if (!x || rank(m) != m.rows()) return std::nullopt;
    return x;
}

std::optional<LinMap> solve(const LinMap& a, const LinMap& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    Echelon e = rref(hstack({a, b}));
    const std::size_t n = a.cols();
    LinMap x(a.field(), n, b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= n) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!e.reduced.is_zero_at(i, n + j)) x.set(e.pivots[i], j, e.reduced.at(i, n + j));
    }
    return x;
}

Cokernel cokernel(const LinMap& f) {
    LinMap left = kernel_basis(f.transpose()).transpose();
    Echelon e = rref(left);
    Cokernel c;
    c.dim = e.pivots.size();
    std::vector<std::size_t> idx(c.dim);
    for (std::size_t i = 0; i < c.dim; ++i) idx[i] = i;
    c.proj = e.reduced.select_rows(idx);
    if (c.dim == 0) c.proj = LinMap(f.field(), 0, f.rows());
    c.section = LinMap(f.field(), f.rows(), c.dim);
    for (std::size_t i = 0; i < c.dim; ++i) c.section.set(e.pivots[i], i, Scalar(f.field(), 1));
    return c;
}

namespace {

void require_idempotent(const LinMap& e) {
    if (!e.is_square()) throw NotSquare("split_idempotent: " + std::to_string(e.rows()) + "x" + std::to_string(e.cols()));
    if (!(compose(e, e) == e)) throw NotIdempotent("split_idempotent: e∘e != e");
}

}  // namespace

Splitting split_idempotent(const LinMap& e) {
    require_idempotent(e);
    Echelon ech = rref(e);
    Splitting s;
    s.e = e;
    s.retract_dim = ech.pivots.size();
    std::vector<std::size_t> idx(s.retract_dim);
    for (std::size_t i = 0; i < s.retract_dim; ++i) idx[i] = i;
    s.pi = ech.reduced.select_rows(idx);
    if (s.retract_dim == 0) s.pi = LinMap(e.field(), 0, e.cols());
    s.iota = e.select_cols(ech.pivots);
    return s;
}

Splitting split_idempotent_by_columns(const LinMap& e) {
    require_idempotent(e);
    Splitting t = split_idempotent(e.transpose());
    Splitting s;
    s.e = e;
    s.retract_dim = t.retract_dim;
    s.iota = t.pi.transpose();
    s.pi = t.iota.transpose();
    return s;
}

}  // namespace weakmonads
