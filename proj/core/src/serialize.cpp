#include "weakmonads/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weakmonads/errors.hpp"

namespace weakmonads {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t natural(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        bad(std::string("\"") + key + "\" must be a natural number");
    return v.get<std::size_t>();
}

json field_json(const Field& f) {
    if (f.is_rational()) return "Q";
    return json{{"Fp", f.characteristic()}};
}

Field parse_field(const json& j) {
    try {
        if (j.is_string()) return Field::parse(j.get<std::string>());
        if (j.is_object() && j.contains("Fp") && j.at("Fp").is_number_unsigned())
            return Field::prime(j.at("Fp").get<std::uint64_t>());
    } catch (const FieldMismatch& e) {
        bad(e.what());
    }
    bad("field must be \"Q\" or {\"Fp\": p}");
}

json entry_json(const Scalar& s) {
    if (s.field().is_rational()) return s.str();
    return s.residue();
}

Scalar parse_entry(const Field& f, const json& j) {
    try {
        if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
        if (j.is_number_integer()) return Scalar(f, j.get<long>());
    } catch (const Error& e) {
        bad(std::string("bad entry: ") + e.what());
    }
    bad("matrix entries must be integers or \"n/d\" strings");
}

json map_json(const LinMap& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

LinMap parse_map(const Field& f, const json& maps, const char* key, std::size_t rows, std::size_t cols) {
    const json& j = member(maps, key);
    if (!j.is_array()) bad(std::string("map \"") + key + "\" must be an array of rows");
    if (j.size() != rows)
        throw DimensionMismatch(std::string("map \"") + key + "\": " + std::to_string(j.size()) + " rows, expected " +
                                std::to_string(rows));
    LinMap m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array()) bad(std::string("map \"") + key + "\" row must be an array");
        if (row.size() != cols)
            throw DimensionMismatch(std::string("map \"") + key + "\" row " + std::to_string(i) + ": " +
                                    std::to_string(row.size()) + " columns, expected " + std::to_string(cols));
        for (std::size_t k = 0; k < cols; ++k) m.set(i, k, parse_entry(f, row[k]));
    }
    return m;
}

// Nested structures may repeat the field; it must agree with the document's.
void check_nested_field(const Field& f, const json& j) {
    if (j.contains("field") && !(parse_field(j.at("field")) == f))
        throw FieldMismatch("nested structure declares a different field");
}

json algebra_json(const Algebra& a) {
    return {{"dim", a.dim}, {"maps", {{"mult", map_json(a.mult)}, {"unit", map_json(a.unit)}}}};
}

Algebra parse_algebra(const Field& f, const json& j) {
    check_nested_field(f, j);
    std::size_t n = natural(j, "dim");
    const json& m = member(j, "maps");
    return {f, n, parse_map(f, m, "mult", n, n * n), parse_map(f, m, "unit", n, 1)};
}

json coalgebra_json(const Coalgebra& c) {
    return {{"dim", c.dim}, {"maps", {{"comult", map_json(c.comult)}, {"counit", map_json(c.counit)}}}};
}

Coalgebra parse_coalgebra(const Field& f, const json& j) {
    check_nested_field(f, j);
    std::size_t n = natural(j, "dim");
    const json& m = member(j, "maps");
    return {f, n, parse_map(f, m, "comult", n * n, n), parse_map(f, m, "counit", 1, n)};
}

json entwining_body(const EntwiningDatum& d) {
    return {{"handedness", d.handedness == Handedness::right ? "right" : "left"},
            {"A", algebra_json(d.A)},
            {"C", coalgebra_json(d.C)},
            {"maps", {{"psi", map_json(d.psi)}}}};
}

EntwiningDatum parse_entwining(const Field& f, const json& j) {
    std::string h = member(j, "handedness").is_string() ? j.at("handedness").get<std::string>() : "";
    if (h != "right" && h != "left") bad("handedness must be \"right\" or \"left\"");
    EntwiningDatum d{parse_algebra(f, member(j, "A")), parse_coalgebra(f, member(j, "C")), LinMap(),
                     h == "right" ? Handedness::right : Handedness::left};
    std::size_t nc = d.A.dim * d.C.dim;
    d.psi = parse_map(f, member(j, "maps"), "psi", nc, nc);
    return d;
}

const char* coring_kind_name(CoringKind k) {
    switch (k) {
        case CoringKind::iota: return "iota";
        case CoringKind::pi: return "pi";
        case CoringKind::lax: return "lax";
    }
    return "iota";
}

std::string parse_kind_string(const json& j) {
    if (!j.is_string()) bad("\"kind\" must be a string");
    return j.get<std::string>();
}

Structure parse_document(const json& doc) {
    if (!doc.is_object()) bad("document must be a JSON object");
    Field f = parse_field(member(doc, "field"));
    std::string kind = parse_kind_string(member(doc, "kind"));
    if (kind == "algebra") return parse_algebra(f, doc);
    if (kind == "coalgebra") return parse_coalgebra(f, doc);
    if (kind == "premonad") {
        Algebra a = parse_algebra(f, doc);
        PreMonad p{f, a.dim, a.mult, a.unit};
        if (!doc.contains("s_dim") && !doc.contains("t")) return p;
        std::size_t s = natural(doc, "s_dim");
        Algebra t = parse_algebra(f, member(doc, "t"));
        if (s * t.dim != p.dim) throw DimensionMismatch("premonad: s_dim * dim(t) differs from dim");
        return ComposedPreMonad{p, s, t};
    }
    if (kind == "weak_bialgebra") {
        std::size_t n = natural(doc, "dim");
        const json& m = member(doc, "maps");
        return WeakBialgebra{f,
                             n,
                             parse_map(f, m, "mult", n, n * n),
                             parse_map(f, m, "unit", n, 1),
                             parse_map(f, m, "comult", n * n, n),
                             parse_map(f, m, "counit", 1, n)};
    }
    if (kind == "entwining") return parse_entwining(f, doc);
    if (kind == "emw_monad") {
        Algebra t = parse_algebra(f, member(doc, "base"));
        std::size_t s = natural(doc, "s_dim");
        const json& m = member(doc, "maps");
        const std::size_t st = s * t.dim;
        return MonadInEMW{t, s, parse_map(f, m, "psi", st, st), parse_map(f, m, "nu", st, s * s),
                          parse_map(f, m, "theta", st, 1)};
    }
    if (kind == "coring") {
        EntwiningDatum src = parse_entwining(f, member(doc, "source"));
        std::string ck = parse_kind_string(member(doc, "coring_kind"));
        CoringKind k;
        if (ck == "iota") k = CoringKind::iota;
        else if (ck == "pi") k = CoringKind::pi;
        else if (ck == "lax") k = CoringKind::lax;
        else bad("coring_kind must be iota, pi or lax");
        std::string sc = member(doc, "split").is_string() ? doc.at("split").get<std::string>() : "";
        if (sc != "rows" && sc != "columns") bad("split must be \"rows\" or \"columns\"");
        Coring c = build_lifted_coring(src, k, sc == "rows" ? SplitChoice::rows : SplitChoice::columns).coring;
        // The stored maps must be the ones the construction produces.
        const std::size_t r = natural(doc, "dim");
        if (r != c.carrier.dim) throw DimensionMismatch("coring: carrier dimension differs from the construction");
        const json& m = member(doc, "maps");
        const std::size_t q = c.square.quotient.dim, n = c.base.dim;
        if (!(parse_map(f, m, "coproduct", q, r) == c.coproduct) || !(parse_map(f, m, "counit", n, r) == c.counit) ||
            !(parse_map(f, m, "left_action", r, n * r) == c.carrier.left_act) ||
            !(parse_map(f, m, "right_action", r, r * n) == c.carrier.right_act))
            throw ShapeMismatch("coring: stored maps differ from the construction on the source datum");
        return c;
    }
    bad("unknown kind \"" + kind + "\"");
}

// Indented layout with each matrix row on one line.
void pretty(const json& j, std::ostringstream& out, int depth) {
    const std::string pad(2 * depth, ' '), inner(2 * (depth + 1), ' ');
    auto flat = [](const json& a) {
        for (const auto& x : a)
            if (x.is_structured()) return false;
        return true;
    };
    if (j.is_object() && !j.empty()) {
        out << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out << inner << json(it.key()).dump() << ": ";
            pretty(it.value(), out, depth + 1);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << pad << "}";
    } else if (j.is_array() && !j.empty() && !flat(j)) {
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << inner;
            pretty(j[i], out, depth + 1);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << pad << "]";
    } else {
        out << j.dump();
    }
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

std::string kind_name(const Structure& s) {
    return std::visit(overloaded{[](const Algebra&) { return "algebra"; }, [](const Coalgebra&) { return "coalgebra"; },
                                 [](const PreMonad&) { return "premonad"; },
                                 [](const ComposedPreMonad&) { return "premonad"; },
                                 [](const WeakBialgebra&) { return "weak_bialgebra"; },
                                 [](const EntwiningDatum&) { return "entwining"; },
                                 [](const MonadInEMW&) { return "emw_monad"; }, [](const Coring&) { return "coring"; }},
                      s);
}

const Field& structure_field(const Structure& s) {
    return std::visit(overloaded{[](const Algebra& a) -> const Field& { return a.field; },
                                 [](const Coalgebra& c) -> const Field& { return c.field; },
                                 [](const PreMonad& p) -> const Field& { return p.field; },
                                 [](const ComposedPreMonad& p) -> const Field& { return p.premonad.field; },
                                 [](const WeakBialgebra& h) -> const Field& { return h.field; },
                                 [](const EntwiningDatum& d) -> const Field& { return d.A.field; },
                                 [](const MonadInEMW& m) -> const Field& { return m.base.field; },
                                 [](const Coring& c) -> const Field& { return c.base.field; }},
                      s);
}

Structure parse_structure(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte);
        throw ParseError("malformed JSON", line, col);
    }
    return parse_document(doc);
}

std::string emit_structure(const Structure& s) {
    json doc{{"field", field_json(structure_field(s))}, {"kind", kind_name(s)}};
    std::visit(overloaded{
                   [&](const Algebra& a) { doc.update(algebra_json(a)); },
                   [&](const Coalgebra& c) { doc.update(coalgebra_json(c)); },
                   [&](const PreMonad& p) { doc.update(algebra_json({p.field, p.dim, p.mult, p.unit})); },
                   [&](const ComposedPreMonad& p) {
                       doc.update(algebra_json({p.premonad.field, p.premonad.dim, p.premonad.mult, p.premonad.unit}));
                       doc["s_dim"] = p.s_dim;
                       doc["t"] = algebra_json(p.t);
                   },
                   [&](const WeakBialgebra& h) {
                       doc["dim"] = h.dim;
                       doc["maps"] = {{"mult", map_json(h.mult)},
                                      {"unit", map_json(h.unit)},
                                      {"comult", map_json(h.comult)},
                                      {"counit", map_json(h.counit)}};
                   },
                   [&](const EntwiningDatum& d) { doc.update(entwining_body(d)); },
                   [&](const MonadInEMW& m) {
                       doc["base"] = algebra_json(m.base);
                       doc["s_dim"] = m.s_dim;
                       doc["maps"] = {{"psi", map_json(m.psi)}, {"nu", map_json(m.nu)}, {"theta", map_json(m.theta)}};
                   },
                   [&](const Coring& c) {
                       doc["coring_kind"] = coring_kind_name(c.kind);
                       doc["split"] = c.split.iota == split_idempotent(c.split.e).iota &&
                                              c.split.pi == split_idempotent(c.split.e).pi
                                          ? "rows"
                                          : "columns";
                       doc["source"] = entwining_body(c.source);
                       doc["dim"] = c.carrier.dim;
                       doc["square_dim"] = c.square.quotient.dim;
                       doc["maps"] = {{"coproduct", map_json(c.coproduct)},
                                      {"counit", map_json(c.counit)},
                                      {"left_action", map_json(c.carrier.left_act)},
                                      {"right_action", map_json(c.carrier.right_act)},
                                      {"iota", map_json(c.split.iota)},
                                      {"pi", map_json(c.split.pi)}};
                   },
               },
               s);
    std::ostringstream out;
    pretty(doc, out, 0);
    return out.str() + "\n";
}

Structure read_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_structure(ss.str());
}

void write_structure_file(const std::string& path, const Structure& s) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << emit_structure(s);
}

std::string report_json(const Report& r) {
    json verdicts = json::array();
    for (const Verdict& v : r.verdicts) {
        json o{{"tag", v.tag}, {"passed", v.passed}};
        if (v.witness) o["witness"] = {{"column", v.witness->column}, {"row", v.witness->row},
                                       {"lhs", v.witness->lhs}, {"rhs", v.witness->rhs}};
        if (!v.note.empty()) o["note"] = v.note;
        verdicts.push_back(std::move(o));
    }
    return json{{"title", r.title}, {"passed", r.passed()}, {"verdicts", verdicts}}.dump(1);
}

}  // namespace weakmonads
