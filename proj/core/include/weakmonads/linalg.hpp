#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weakmonads/linmap.hpp"

namespace weakmonads {

struct Echelon {
    LinMap reduced;
    std::vector<std::size_t> pivots;
};

Echelon rref(const LinMap& m);
std::size_t rank(const LinMap& m);
// Columns form a basis of ker(m), one per free variable of the echelon form.
LinMap kernel_basis(const LinMap& m);
std::optional<LinMap> inverse(const LinMap& m);
// Some X with a∘X = b, free variables set to zero.
std::optional<LinMap> solve(const LinMap& a, const LinMap& b);

// proj: codomain(f) -> coker(f) in reduced echelon form, proj∘f = 0,
// section∘ is a right inverse of proj built from unit vectors at pivots.
struct Cokernel {
    LinMap proj;
    LinMap section;
    std::size_t dim = 0;
};

Cokernel cokernel(const LinMap& f);

// e = iota∘pi, pi∘iota = id on the retract.
struct Splitting {
    LinMap e;
    std::size_t retract_dim = 0;
    LinMap iota;
    LinMap pi;
};

// pi is the nonzero rows of rref(e); iota the unique factor with iota∘pi = e.
Splitting split_idempotent(const LinMap& e);
// Dual choice: iota is a column-echelon basis of the image, pi = e at the pivot rows.
Splitting split_idempotent_by_columns(const LinMap& e);

}  // namespace weakmonads
