#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "weakmonads/field.hpp"

namespace weakmonads {

// Dense matrix of an exact linear map; rows index the codomain basis,
// columns the domain basis. Storage is row-major.
class LinMap {
public:
    LinMap() : LinMap(Field::rationals(), 0, 0) {}
    LinMap(const Field& field, std::size_t rows, std::size_t cols);

    static LinMap zero(const Field& field, std::size_t rows, std::size_t cols) { return LinMap(field, rows, cols); }
    static LinMap identity(const Field& field, std::size_t n);
    static LinMap from_ints(const Field& field, std::size_t rows, std::size_t cols, const std::vector<long>& entries);
    static LinMap from_scalars(const Field& field, std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries);
    // Column vector e_i of length n.
    static LinMap basis_vector(const Field& field, std::size_t n, std::size_t i);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& value);
    bool is_zero_at(std::size_t i, std::size_t j) const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    LinMap transpose() const;
    LinMap operator+(const LinMap& o) const;
    LinMap operator-(const LinMap& o) const;
    LinMap operator-() const;
    LinMap scaled(const Scalar& s) const;
    LinMap select_rows(const std::vector<std::size_t>& idx) const;
    LinMap select_cols(const std::vector<std::size_t>& idx) const;

    bool operator==(const LinMap& o) const;
    std::string str() const;

    std::vector<mpq_class>& rational_data() { return std::get<0>(data_); }
    const std::vector<mpq_class>& rational_data() const { return std::get<0>(data_); }
    std::vector<std::uint64_t>& residue_data() { return std::get<1>(data_); }
    const std::vector<std::uint64_t>& residue_data() const { return std::get<1>(data_); }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::variant<std::vector<mpq_class>, std::vector<std::uint64_t>> data_;
};

// g after f; throws DimensionMismatch / FieldMismatch.
LinMap compose(const LinMap& g, const LinMap& f);
// Right-to-left chain: compose_all({h, g, f}) = h∘g∘f.
LinMap compose_all(std::initializer_list<LinMap> maps);
// Kronecker product: (i, j) -> i * dim(b) + j, left factor outermost.
LinMap kron(const LinMap& a, const LinMap& b);
LinMap kron_all(std::initializer_list<LinMap> maps);
LinMap hstack(const std::vector<LinMap>& blocks);
LinMap vstack(const std::vector<LinMap>& blocks);
// Symmetry X ⊗ Y -> Y ⊗ X with dim X = m, dim Y = n.
LinMap swap_map(const Field& field, std::size_t m, std::size_t n);
// Factor permutation: output factor k is input factor perm[k].
LinMap permute_factors(const Field& field, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& perm);

}  // namespace weakmonads
