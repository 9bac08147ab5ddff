#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "weakmonads/linalg.hpp"
#include "weakmonads/report.hpp"

namespace weakmonads {

// mult: dim x dim², unit: dim x 1.
struct Algebra {
    Field field = Field::rationals();
    std::size_t dim = 0;
    LinMap mult;
    LinMap unit;
    bool operator==(const Algebra&) const = default;
};

// comult: dim² x dim, counit: 1 x dim.
struct Coalgebra {
    Field field = Field::rationals();
    std::size_t dim = 0;
    LinMap comult;
    LinMap counit;
    bool operator==(const Coalgebra&) const = default;
};

struct PreMonad {
    Field field = Field::rationals();
    std::size_t dim = 0;
    LinMap mult;
    LinMap unit;
    bool operator==(const PreMonad&) const = default;
};

struct WeakBialgebra {
    Field field = Field::rationals();
    std::size_t dim = 0;
    LinMap mult;
    LinMap unit;
    LinMap comult;
    LinMap counit;

    Algebra algebra() const { return {field, dim, mult, unit}; }
    Coalgebra coalgebra() const { return {field, dim, comult, counit}; }
    static WeakBialgebra from_parts(const Algebra& a, const Coalgebra& c);
    bool operator==(const WeakBialgebra&) const = default;
};

// Throw ShapeMismatch on inconsistent dimensions or fields.
void validate_shape(const Algebra& a);
void validate_shape(const Coalgebra& c);
void validate_shape(const PreMonad& p);
void validate_shape(const WeakBialgebra& h);

// Tags: assoc, unit-left, unit-right.
Report check_algebra(const Algebra& a);
// Tags: coassoc, counit-left, counit-right.
Report check_coalgebra(const Coalgebra& c);
// Tags: (2.8) .. (2.11).
Report check_premonad(const PreMonad& p);
// Algebra and coalgebra parts (prefixed "algebra:" / "coalgebra:"), then
// WBA_1, WBA_2a, WBA_2b, WBA_3a, WBA_3b.
Report check_weak_bialgebra(const WeakBialgebra& h);

// Takes mult/unit with associativity and mult∘(unit⊗id) = mult∘(id⊗unit) =
// mult∘(mult⊗id)∘(unit⊗unit⊗id); returns (mult∘(mult⊗id)∘(unit⊗id⊗id), mult∘(unit⊗unit)).
PreMonad premonad_normalize(const Field& field, std::size_t dim, const LinMap& mult, const LinMap& unit);

struct Retract {
    Algebra monad;
    Splitting split;
};

// e = mult∘(unit⊗id), monad (pi∘mult∘(iota⊗iota), pi∘unit).
Retract premonad_retract(const PreMonad& p);

Algebra opposite(const Algebra& a);
Coalgebra coopposite(const Coalgebra& c);
Algebra as_algebra(const PreMonad& p);
PreMonad as_premonad(const Algebra& a);

// Structure transported along an invertible g: new = g ∘ old ∘ g⁻¹ (tensorwise).
Algebra transport(const Algebra& a, const LinMap& g);
Coalgebra transport(const Coalgebra& c, const LinMap& g);
WeakBialgebra transport(const WeakBialgebra& h, const LinMap& g);

// ---- generators ----

// table[i][j] = index of g_i g_j; element 0 need not be the identity.
WeakBialgebra group_algebra(const Field& field, const std::vector<std::vector<std::size_t>>& table);
WeakBialgebra cyclic_group_algebra(const Field& field, std::size_t order);

// Arrows with source/target objects; compose[g][f] is g∘f, defined iff
// source(g) == target(f).
struct Groupoid {
    std::size_t objects = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)
    std::vector<std::vector<std::optional<std::size_t>>> compose;
};

// Throws InvalidPresentation unless composition is associative, unital and invertible.
void validate_groupoid(const Groupoid& g);
Groupoid pair_groupoid(std::size_t objects);
// Only identity arrows: the groupoid algebra is k^n with Δ(e_i) = e_i⊗e_i.
Groupoid discrete_groupoid(std::size_t objects);
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);
Groupoid group_as_groupoid(const std::vector<std::vector<std::size_t>>& table);
WeakBialgebra groupoid_algebra(const Field& field, const Groupoid& g);

// Basis e_ij (index i*n+j), Δ(e_ij) = Σ_k e_ik⊗e_kj, ε(e_ij) = δ_ij.
Coalgebra matrix_coalgebra(const Field& field, std::size_t n);
Coalgebra dual(const Algebra& a);
Algebra dual(const Coalgebra& c);
WeakBialgebra dual(const WeakBialgebra& h);

}  // namespace weakmonads
