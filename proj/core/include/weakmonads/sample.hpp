#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weakmonads/entwine.hpp"
#include "weakmonads/premonad_bridge.hpp"
#include "weakmonads/serialize.hpp"

namespace weakmonads {

using Rng = std::mt19937_64;

Scalar random_scalar(const Field& field, Rng& rng);
LinMap random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);
LinMap random_invertible(const Field& field, std::size_t n, Rng& rng);
// Random combination of the columns of basis (zero column if there are none).
LinMap random_combination(const LinMap& basis, Rng& rng);

// Row-major flattening of a matrix into a column and back.
LinMap vectorize(const LinMap& m);
LinMap unvectorize(const LinMap& column, std::size_t rows, std::size_t cols);

// A small algebra with the representation-theoretic data the 1-cell
// generator needs. reps[i] has shape (d*d) x dim: column k holds the
// row-major d x d matrix of the k-th basis vector.
struct Representation {
    std::size_t dim = 0;
    LinMap matrices;
};

struct CatalogAlgebra {
    std::string name;
    Algebra algebra;
    std::vector<LinMap> central_idempotents;  // pairwise orthogonal columns
    std::vector<Representation> reps;
};

std::vector<CatalogAlgebra> algebra_catalog(const Field& field, std::size_t max_dim);
CatalogAlgebra regular_catalog_entry(const std::string& name, const Algebra& a);
// New basis g applied to the algebra, its idempotents and representations.
CatalogAlgebra transport(const CatalogAlgebra& c, const LinMap& g);
// A catalog entry of dimension at most max_dim, transported by a random basis change two times in three.
CatalogAlgebra random_catalog_entry(const Field& field, std::size_t max_dim, Rng& rng);

// A random 1-cell t -> t' (direct order) built from algebra maps
// t' -> M_v(k) attached to central idempotents of t.
EMWOneCell random_onecell(const CatalogAlgebra& t, const CatalogAlgebra& tp, std::size_t v, Rng& rng);

// Columns are the vectorized rho: V => Wt satisfying (1.2) and (1.3).
LinMap twocell_space(const EMWOneCell& v, const EMWOneCell& w);
EMWTwoCell random_twocell(const EMWOneCell& v, const EMWOneCell& w, Rng& rng);

enum class OmegaSpace { iota, pi, strict };
// Columns are the vectorized omega: V -> W satisfying the chosen condition.
LinMap omega_space(OmegaSpace which, const EMWOneCell& v, const EMWOneCell& w);
// Mixes unconstrained matrices with elements of the three spaces.
LinMap random_omega(const EMWOneCell& v, const EMWOneCell& w, Rng& rng);

// ---- families ----

Algebra sample_algebra(const Field& field, Rng& rng);
PreMonad sample_premonad(const Field& field, Rng& rng);
WeakBialgebra sample_group_algebra(const Field& field, Rng& rng);
WeakBialgebra sample_groupoid_wba(const Field& field, Rng& rng);
MonadInEMW sample_strict_wreath(const Field& field, Rng& rng);

// The pre-monad on H^t ⊗ H with (a⊗h)(b⊗g) = a ε_t(h_1 b) ⊗ h_2 g, normalized.
ComposedPreMonad weak_smash_premonad(const WeakBialgebra& h);
MonadInEMW weak_smash(const WeakBialgebra& h);

EntwiningDatum sample_strict_entwining(const Field& field, Rng& rng);
EntwiningDatum sample_weak_entwining(const Field& field, Rng& rng);
EntwiningDatum sample_partial_entwining(const Field& field, Rng& rng);
// psi from a random 1-cell A -> A with V = C; satisfies (5.9) only.
EntwiningDatum sample_onecell_entwining(const Field& field, std::size_t max_dim, Rng& rng);

// The fixed small instances.
WeakBialgebra g2(const Field& field);
// A = k, C = kZ2, psi(c) = c(1+g)/2.
EntwiningDatum smallest_partial_entwining(const Field& field);
// The pre-monad (k², x⊗y ↦ e1xy, e1).
PreMonad corner_premonad(const Field& field);

// Named families for the command line; deterministic in (family, field, seed).
std::vector<std::string> family_names();
// Throws UnknownFamily.
Structure sample_structure(const std::string& family, const Field& field, std::uint64_t seed);

}  // namespace weakmonads
