#pragma once
// Candidates with valid algebra and coalgebra parts that are not weak
// bialgebras: move only one of the two structures by a random basis change.

#include <weakmonads/linalg.hpp>
#include <weakmonads/sample.hpp>
#include <weakmonads/structures.hpp>

#include <stdexcept>

namespace sabotage {

inline weakmonads::WeakBialgebra variant(const weakmonads::WeakBialgebra& h, weakmonads::Rng& rng) {
    using namespace weakmonads;
    for (int attempt = 0; attempt < 64; ++attempt) {
        LinMap g = random_invertible(h.field, h.dim, rng);
        WeakBialgebra c = attempt % 2 ? WeakBialgebra::from_parts(transport(h.algebra(), g), h.coalgebra())
                                      : WeakBialgebra::from_parts(h.algebra(), transport(h.coalgebra(), g));
        if (!check_weak_bialgebra(c).passed()) return c;
    }
    throw std::runtime_error("no sabotaged variant found");
}

}  // namespace sabotage
