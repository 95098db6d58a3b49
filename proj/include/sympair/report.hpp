#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sympair {

/// Structured result of a verification check. `lines` holds per-item detail
/// in a deterministic order; `pass` aggregates the asserted items only, so a
/// purely informational report stays green.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;

    explicit CheckReport(std::string n) : name(std::move(n)) {}

    void note(std::string line) { lines.push_back(std::move(line)); }

    void require(bool ok, std::string line) {
        if (!ok) pass = false;
        lines.push_back((ok ? "ok: " : "FAIL: ") + std::move(line));
    }

    std::string summary() const {
        return (pass ? "PASS " : "FAIL ") + name;
    }
};

}  // namespace sympair
