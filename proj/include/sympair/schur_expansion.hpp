#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "sympair/numeric.hpp"
#include "sympair/partition.hpp"

namespace sympair {

/// A finite integer combination of Schur-basis elements, keyed by partition.
/// Zero coefficients are never stored. Iteration runs in decreasing
/// lexicographic order of the indexing partitions, matching the enumeration
/// order used everywhere else.
class SchurExpansion {
public:
    using Map = std::map<Partition, Int, std::greater<Partition>>;

    SchurExpansion() = default;

    void add(const Partition& p, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Coefficient lookup; absent partitions read as 0.
    Int coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Int(0) : it->second;
    }

    bool contains(const Partition& p) const { return terms_.count(p) != 0; }

    size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    Map::const_iterator begin() const { return terms_.begin(); }
    Map::const_iterator end() const { return terms_.end(); }

    bool operator==(const SchurExpansion& other) const { return terms_ == other.terms_; }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << c.get_str() << "*";
            os << "s[" << p.to_string() << "]";
        }
        if (first) os << "0";
        return os.str();
    }

private:
    Map terms_;
};

}  // namespace sympair
