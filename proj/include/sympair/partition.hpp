#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sympair {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is a first-class value (size 0, length 0, self
/// conjugate). Trailing zeros are never stored; padding a partition out to a
/// fixed number of rows is a view operation, so equality and hashing are
/// canonical.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

    const std::vector<int>& parts() const { return parts_; }

    int length() const { return static_cast<int>(parts_.size()); }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool empty() const { return parts_.empty(); }

    /// Zero-padded row access: part(i) == 0 for i >= length().
    int part(int i) const { return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0; }

    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

    Partition conjugate() const {
        Partition out;
        if (parts_.empty()) return out;
        out.parts_.reserve(static_cast<size_t>(parts_.front()));
        for (int col = 1; col <= parts_.front(); ++col) {
            int height = 0;
            for (int p : parts_) {
                if (p >= col) ++height;
                else break;
            }
            out.parts_.push_back(height);
        }
        return out;
    }

    /// Every part doubled: lambda -> 2*lambda (even-row partitions are
    /// exactly the image of this map).
    Partition doubled() const {
        Partition out = *this;
        for (int& p : out.parts_) p *= 2;
        return out;
    }

    Partition doubled_conjugate() const { return doubled().conjugate(); }

    bool has_even_rows() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
    }

    /// Even columns <=> every part appears an even number of times, i.e. the
    /// conjugate has even rows.
    bool has_even_columns() const {
        for (size_t i = 0; i < parts_.size(); i += 2) {
            if (i + 1 >= parts_.size() || parts_[i] != parts_[i + 1]) return false;
        }
        return true;
    }

    /// Inverse of doubled(); empty optional if some part is odd.
    std::optional<Partition> half_rows() const {
        if (!has_even_rows()) return std::nullopt;
        Partition out = *this;
        for (int& p : out.parts_) p /= 2;
        return out;
    }

    /// Diagram containment: inner_i <= this_i for every row.
    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 0; i < inner.length(); ++i) {
            if (inner.parts_[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)]) return false;
        }
        return true;
    }

    /// Hook lengths over all cells, row by row. h(i,j) = (lambda_i - j) +
    /// (lambda'_j - i) + 1 in 1-based coordinates.
    std::vector<int> hook_lengths() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(size()));
        const Partition conj = conjugate();
        for (int i = 1; i <= length(); ++i) {
            for (int j = 1; j <= part(i - 1); ++j) {
                out.push_back(part(i - 1) - j + conj.part(j - 1) - i + 1);
            }
        }
        return out;
    }

    /// n(lambda) = sum_i (i-1) * lambda_i.
    long long n_stat() const {
        long long n = 0;
        for (int i = 0; i < length(); ++i) n += static_cast<long long>(i) * parts_[static_cast<size_t>(i)];
        return n;
    }

    auto operator<=>(const Partition&) const = default;

    /// Canonical text form: comma-separated parts, "[]" for the empty
    /// partition. E.g. "4,2,1".
    std::string to_string() const {
        if (parts_.empty()) return "[]";
        std::ostringstream os;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    /// Parses the canonical text form. "[]", "none" and "" all denote the
    /// empty partition. Rejects non-monotone or non-positive part lists.
    static Partition parse(const std::string& text) {
        std::string s;
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        }
        if (s.empty() || s == "[]" || s == "none") return Partition{};
        std::vector<int> parts;
        std::istringstream is(s);
        std::string token;
        while (std::getline(is, token, ',')) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(token, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("partition: bad part '" + token + "'");
            }
            if (pos != token.size()) throw std::invalid_argument("partition: bad part '" + token + "'");
            parts.push_back(v);
        }
        if (!s.empty() && s.back() == ',') throw std::invalid_argument("partition: trailing comma");
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;

    void validate() const {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition: parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i]) {
                throw std::invalid_argument("partition: parts must be weakly decreasing");
            }
        }
    }
};

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : p.parts()) h = h * 1099511628211ULL + static_cast<size_t>(v) + 1;
        return h;
    }
};

/// A weakly decreasing n-tuple of integers. Such a tuple corresponds uniquely
/// to an ordered pair of partitions (mu, nu): the positive entries form mu,
/// the negated negative entries (read right to left) form nu, and
/// length(mu) + length(nu) <= n.
class SignedTuple {
public:
    explicit SignedTuple(std::vector<int> entries) : entries_(std::move(entries)) {
        for (size_t i = 1; i < entries_.size(); ++i) {
            if (entries_[i - 1] < entries_[i]) {
                throw std::invalid_argument("signed tuple: entries must be weakly decreasing");
            }
        }
    }

    static SignedTuple embed(const Partition& mu, const Partition& nu, int n) {
        if (mu.length() + nu.length() > n) {
            throw std::invalid_argument("signed tuple: length(mu) + length(nu) exceeds n");
        }
        std::vector<int> e;
        e.reserve(static_cast<size_t>(n));
        for (int p : mu.parts()) e.push_back(p);
        for (int i = mu.length() + nu.length(); i < n; ++i) e.push_back(0);
        for (auto it = nu.parts().rbegin(); it != nu.parts().rend(); ++it) e.push_back(-*it);
        return SignedTuple(std::move(e));
    }

    const std::vector<int>& entries() const { return entries_; }

    std::pair<Partition, Partition> split() const {
        std::vector<int> mu, nu;
        for (int v : entries_) {
            if (v > 0) mu.push_back(v);
        }
        for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
            if (*it < 0) nu.push_back(-*it);
        }
        return {Partition(std::move(mu)), Partition(std::move(nu))};
    }

    auto operator<=>(const SignedTuple&) const = default;

private:
    std::vector<int> entries_;
};

namespace detail {

template <typename F>
void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& acc, F& fn) {
    if (remaining == 0) {
        fn(Partition(acc));
        return;
    }
    if (rows_left <= 0) return;
    int hi = std::min(max_part, remaining);
    // Feasibility: the chosen part bounds every later part, so we need
    // part * rows_left >= remaining.
    int lo = (remaining + rows_left - 1) / rows_left;
    for (int p = hi; p >= lo; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, rows_left - 1, acc, fn);
        acc.pop_back();
    }
}

}  // namespace detail

/// Enumerates the partitions of d subject to optional length/part bounds, in
/// decreasing lexicographic order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
/// This order is fixed so downstream output is reproducible byte for byte.
template <typename F>
void for_each_partition(int d, std::optional<int> max_length, std::optional<int> max_part, F&& fn) {
    if (d < 0) throw std::invalid_argument("partitions: d must be non-negative");
    int rows = max_length.value_or(d);
    int cap = max_part.value_or(d);
    std::vector<int> acc;
    acc.reserve(static_cast<size_t>(std::max(0, std::min(rows, d))));
    detail::partitions_rec(d, cap, rows, acc, fn);
}

inline std::vector<Partition> partitions_of(int d, std::optional<int> max_length = std::nullopt,
                                            std::optional<int> max_part = std::nullopt) {
    std::vector<Partition> out;
    for_each_partition(d, max_length, max_part, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace sympair
