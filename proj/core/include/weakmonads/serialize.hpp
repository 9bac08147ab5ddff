#pragma once

#include <string>
#include <variant>

#include "weakmonads/lifting.hpp"
#include "weakmonads/premonad_bridge.hpp"

namespace weakmonads {

using Structure =
    std::variant<Algebra, Coalgebra, PreMonad, ComposedPreMonad, WeakBialgebra, EntwiningDatum, MonadInEMW, Coring>;

// "algebra", "coalgebra", "premonad", "weak_bialgebra", "entwining", "emw_monad", "coring".
std::string kind_name(const Structure& s);
const Field& structure_field(const Structure& s);

// JSON document {"field": "Q" | {"Fp": p}, "kind": ..., "dim": ..., "maps": {...}}.
// Rational entries are "n/d" strings, residues plain integers; both spellings
// are accepted on input. Throws ParseError (with line/column for malformed
// JSON), FieldMismatch, DimensionMismatch or ShapeMismatch.
Structure parse_structure(const std::string& text);
std::string emit_structure(const Structure& s);

Structure read_structure_file(const std::string& path);
void write_structure_file(const std::string& path, const Structure& s);

// One object per verdict: {"tag", "passed", "witness"?, "note"?}.
std::string report_json(const Report& r);

}  // namespace weakmonads
