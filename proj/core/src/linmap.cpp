#include "weakmonads/linmap.hpp"

#include <iterator>
#include <sstream>

#include "arith.hpp"
#include "weakmonads/errors.hpp"

namespace weakmonads {

using detail::entries;
using detail::with_arith;

namespace {

void require_same_field(const LinMap& a, const LinMap& b, const char* op) {
    if (!(a.field() == b.field()))
        throw FieldMismatch(std::string(op) + ": " + a.field().name() + " vs " + b.field().name());
}

std::string shape(const LinMap& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

LinMap::LinMap(const Field& field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {
    if (field.is_rational()) data_ = std::vector<mpq_class>(rows * cols);
    else data_ = std::vector<std::uint64_t>(rows * cols, 0);
}

LinMap LinMap::identity(const Field& field, std::size_t n) {
    LinMap m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(field, 1));
    return m;
}

LinMap LinMap::from_ints(const Field& field, std::size_t rows, std::size_t cols, const std::vector<long>& values) {
    if (values.size() != rows * cols) throw DimensionMismatch("from_ints: expected " + std::to_string(rows * cols) + " entries");
    LinMap m(field, rows, cols);
    for (std::size_t k = 0; k < values.size(); ++k) m.set(k / cols, k % cols, Scalar(field, values[k]));
    return m;
}

LinMap LinMap::from_scalars(const Field& field, std::size_t rows, std::size_t cols, const std::vector<Scalar>& values) {
    if (values.size() != rows * cols) throw DimensionMismatch("from_scalars: expected " + std::to_string(rows * cols) + " entries");
    LinMap m(field, rows, cols);
    for (std::size_t k = 0; k < values.size(); ++k) m.set(k / cols, k % cols, values[k]);
    return m;
}

LinMap LinMap::basis_vector(const Field& field, std::size_t n, std::size_t i) {
    LinMap m(field, n, 1);
    m.set(i, 0, Scalar(field, 1));
    return m;
}

Scalar LinMap::at(std::size_t i, std::size_t j) const {
    if (field_.is_rational()) return Scalar(field_, rational_data()[i * cols_ + j]);
    return Scalar::from_residue(field_, residue_data()[i * cols_ + j]);
}

void LinMap::set(std::size_t i, std::size_t j, const Scalar& value) {
    if (!(value.field() == field_)) throw FieldMismatch("set: scalar over " + value.field().name());
    if (field_.is_rational()) rational_data()[i * cols_ + j] = value.rational();
    else residue_data()[i * cols_ + j] = value.residue();
}

bool LinMap::is_zero_at(std::size_t i, std::size_t j) const {
    if (field_.is_rational()) return sgn(rational_data()[i * cols_ + j]) == 0;
    return residue_data()[i * cols_ + j] == 0;
}

bool LinMap::is_zero() const {
    return with_arith(field_, [&](auto ar) {
        for (const auto& x : entries<decltype(ar)>(*this))
            if (!ar.is_zero(x)) return false;
        return true;
    });
}

LinMap LinMap::transpose() const {
    LinMap t(field_, cols_, rows_);
    with_arith(field_, [&](auto ar) {
        const auto& src = entries<decltype(ar)>(*this);
        auto& dst = entries<decltype(ar)>(t);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
    });
    return t;
}

LinMap LinMap::operator+(const LinMap& o) const {
    require_same_field(*this, o, "add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add: " + shape(*this) + " vs " + shape(o));
    LinMap r = *this;
    with_arith(field_, [&](auto ar) {
        auto& d = entries<decltype(ar)>(r);
        const auto& e = entries<decltype(ar)>(o);
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = ar.add(d[k], e[k]);
    });
    return r;
}

LinMap LinMap::operator-() const {
    LinMap r = *this;
    with_arith(field_, [&](auto ar) {
        for (auto& x : entries<decltype(ar)>(r)) x = ar.neg(x);
    });
    return r;
}

LinMap LinMap::operator-(const LinMap& o) const { return *this + (-o); }

LinMap LinMap::scaled(const Scalar& s) const {
    if (!(s.field() == field_)) throw FieldMismatch("scaled: scalar over " + s.field().name());
    LinMap r = *this;
    with_arith(field_, [&](auto ar) {
        using A = decltype(ar);
        typename A::T c;
        if constexpr (std::is_same_v<A, detail::QArith>) c = s.rational();
        else c = s.residue();
        for (auto& x : entries<A>(r)) x = ar.mul(x, c);
    });
    return r;
}

LinMap LinMap::select_rows(const std::vector<std::size_t>& idx) const {
    LinMap r(field_, idx.size(), cols_);
    with_arith(field_, [&](auto ar) {
        const auto& src = entries<decltype(ar)>(*this);
        auto& dst = entries<decltype(ar)>(r);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) dst[i * cols_ + j] = src[idx[i] * cols_ + j];
    });
    return r;
}

LinMap LinMap::select_cols(const std::vector<std::size_t>& idx) const {
    LinMap r(field_, rows_, idx.size());
    with_arith(field_, [&](auto ar) {
        const auto& src = entries<decltype(ar)>(*this);
        auto& dst = entries<decltype(ar)>(r);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) dst[i * idx.size() + j] = src[i * cols_ + idx[j]];
    });
    return r;
}

bool LinMap::operator==(const LinMap& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string LinMap::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j).str();
    }
    out << "]";
    return out.str();
}

LinMap compose(const LinMap& g, const LinMap& f) {
    require_same_field(g, f, "compose");
    if (g.cols() != f.rows()) throw DimensionMismatch("compose: " + shape(g) + " after " + shape(f));
    LinMap r(g.field(), g.rows(), f.cols());
    const std::size_t n = f.cols();
    with_arith(g.field(), [&](auto ar) {
        using A = decltype(ar);
        const auto& gd = entries<A>(g);
        const auto& fd = entries<A>(f);
        auto& rd = entries<A>(r);
        for (std::size_t i = 0; i < g.rows(); ++i) {
            for (std::size_t k = 0; k < g.cols(); ++k) {
                const auto& c = gd[i * g.cols() + k];
                if (ar.is_zero(c)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& x = fd[k * n + j];
                    if (!ar.is_zero(x)) ar.addmul(rd[i * n + j], c, x);
                }
            }
        }
    });
    return r;
}

LinMap compose_all(std::initializer_list<LinMap> maps) {
    if (maps.size() == 0) throw DimensionMismatch("compose_all: empty chain");
    auto it = std::rbegin(maps);
    LinMap acc = *it;
    for (++it; it != std::rend(maps); ++it) acc = compose(*it, acc);
    return acc;
}

LinMap kron(const LinMap& a, const LinMap& b) {
    require_same_field(a, b, "kron");
    LinMap r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    const std::size_t rc = r.cols();
    with_arith(a.field(), [&](auto ar) {
        using A = decltype(ar);
        const auto& ad = entries<A>(a);
        const auto& bd = entries<A>(b);
        auto& rd = entries<A>(r);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const auto& c = ad[i * a.cols() + j];
                if (ar.is_zero(c)) continue;
                for (std::size_t k = 0; k < b.rows(); ++k)
                    for (std::size_t l = 0; l < b.cols(); ++l) {
                        const auto& x = bd[k * b.cols() + l];
                        if (!ar.is_zero(x))
                            rd[(i * b.rows() + k) * rc + j * b.cols() + l] = ar.mul(c, x);
                    }
            }
    });
    return r;
}

LinMap kron_all(std::initializer_list<LinMap> maps) {
    if (maps.size() == 0) throw DimensionMismatch("kron_all: empty product");
    auto it = maps.begin();
    LinMap acc = *it;
    for (++it; it != maps.end(); ++it) acc = kron(acc, *it);
    return acc;
}

LinMap hstack(const std::vector<LinMap>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("hstack: no blocks");
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        require_same_field(blocks[0], b, "hstack");
        if (b.rows() != blocks[0].rows()) throw DimensionMismatch("hstack: row counts differ");
        cols += b.cols();
    }
    LinMap r(blocks[0].field(), blocks[0].rows(), cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.is_zero_at(i, j)) r.set(i, off + j, b.at(i, j));
        off += b.cols();
    }
    return r;
}

LinMap vstack(const std::vector<LinMap>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("vstack: no blocks");
    std::vector<LinMap> t;
    for (const auto& b : blocks) t.push_back(b.transpose());
    return hstack(t).transpose();
}

LinMap swap_map(const Field& field, std::size_t m, std::size_t n) {
    return permute_factors(field, {m, n}, {1, 0});
}

LinMap permute_factors(const Field& field, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& perm) {
    if (perm.size() != dims.size()) throw DimensionMismatch("permute_factors: arity mismatch");
    const std::size_t k = dims.size();
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    std::vector<std::size_t> out_dims(k);
    for (std::size_t i = 0; i < k; ++i) out_dims[i] = dims[perm[i]];
    LinMap r(field, total, total);
    Scalar one(field, 1);
    std::vector<std::size_t> digits(k, 0);
    for (std::size_t col = 0; col < total; ++col) {
        std::size_t rem = col;
        for (std::size_t i = k; i-- > 0;) {
            digits[i] = rem % dims[i];
            rem /= dims[i];
        }
        std::size_t row = 0;
        for (std::size_t i = 0; i < k; ++i) row = row * out_dims[i] + digits[perm[i]];
        r.set(row, col, one);
    }
    return r;
}

}  // namespace weakmonads
