#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weakmonads/linmap.hpp"

namespace weakmonads {

// First basis vector (domain column) on which two sides differ.
struct Witness {
    std::size_t column = 0;
    std::size_t row = 0;
    std::string lhs;
    std::string rhs;
};

struct Verdict {
    std::string tag;
    bool passed = true;
    std::optional<Witness> witness;
    std::string note;
};

struct Report {
    std::string title;
    std::vector<Verdict> verdicts;

    bool passed() const;
    // nullptr when the tag is absent.
    const Verdict* find(const std::string& tag) const;
    bool passed(const std::string& tag) const;
    const Verdict* first_failure() const;
    void add(Verdict v) { verdicts.push_back(std::move(v)); }
    void append(const Report& other, const std::string& prefix = "");
    std::string text() const;
};

// Compares two maps of equal shape; a shape mismatch is itself a failure.
Verdict identity_verdict(const std::string& tag, const LinMap& lhs, const LinMap& rhs);
Verdict flag_verdict(const std::string& tag, bool passed, const std::string& note = "");

}  // namespace weakmonads
