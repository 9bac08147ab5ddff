#include "weakmonads/report.hpp"

#include <sstream>

namespace weakmonads {

bool Report::passed() const {
    for (const auto& v : verdicts)
        if (!v.passed) return false;
    return true;
}

const Verdict* Report::find(const std::string& tag) const {
    for (const auto& v : verdicts)
        if (v.tag == tag) return &v;
    return nullptr;
}

bool Report::passed(const std::string& tag) const {
    const Verdict* v = find(tag);
    return v && v->passed;
}

const Verdict* Report::first_failure() const {
    for (const auto& v : verdicts)
        if (!v.passed) return &v;
    return nullptr;
}

void Report::append(const Report& other, const std::string& prefix) {
    for (auto v : other.verdicts) {
        v.tag = prefix + v.tag;
        verdicts.push_back(std::move(v));
    }
}

std::string Report::text() const {
    std::ostringstream out;
    out << title << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& v : verdicts) {
        out << "  [" << (v.passed ? "pass" : "FAIL") << "] " << v.tag;
        if (v.witness)
            out << "  first failing basis vector e" << v.witness->column << " (row " << v.witness->row
                << ": " << v.witness->lhs << " vs " << v.witness->rhs << ")";
        if (!v.note.empty()) out << "  " << v.note;
        out << "\n";
    }
    return out.str();
}

Verdict identity_verdict(const std::string& tag, const LinMap& lhs, const LinMap& rhs) {
    Verdict v{tag, true, std::nullopt, ""};
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() || !(lhs.field() == rhs.field())) {
        v.passed = false;
        v.note = "shape mismatch " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                 std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
        return v;
    }
    if (lhs == rhs) return v;
    v.passed = false;
    for (std::size_t j = 0; j < lhs.cols(); ++j)
        for (std::size_t i = 0; i < lhs.rows(); ++i) {
            Scalar a = lhs.at(i, j), b = rhs.at(i, j);
            if (!(a == b)) {
                v.witness = Witness{j, i, a.str(), b.str()};
                return v;
            }
        }
    return v;
}

Verdict flag_verdict(const std::string& tag, bool passed, const std::string& note) {
    return Verdict{tag, passed, std::nullopt, note};
}

}  // namespace weakmonads
