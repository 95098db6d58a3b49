#pragma once

#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sympair/numeric.hpp"
#include "sympair/partition.hpp"
#include "sympair/schur_expansion.hpp"

namespace sympair {

namespace detail {

// One cell of the skew shape lambda/mu in reverse reading order (rows top to
// bottom, right to left within a row). `right` and `above` index the
// neighbouring cells within the skew shape, -1 when the neighbour lies
// outside it.
struct SkewCell {
    int row;
    int right;
    int above;
};

class LrFillingCounter {
public:
    LrFillingCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : content_(nu.parts()) {
        // Linearize the skew cells and wire up neighbour indices.
        std::vector<std::vector<int>> index(static_cast<size_t>(lambda.length()));
        for (int r = 0; r < lambda.length(); ++r) {
            index[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(r)), -1);
        }
        for (int r = 0; r < lambda.length(); ++r) {
            for (int c = lambda.part(r) - 1; c >= mu.part(r); --c) {
                int self = static_cast<int>(cells_.size());
                index[static_cast<size_t>(r)][static_cast<size_t>(c)] = self;
                SkewCell cell{r, -1, -1};
                if (c + 1 < lambda.part(r)) cell.right = index[static_cast<size_t>(r)][static_cast<size_t>(c + 1)];
                if (r > 0 && c < lambda.part(r - 1) && c >= mu.part(r - 1)) {
                    cell.above = index[static_cast<size_t>(r - 1)][static_cast<size_t>(c)];
                }
                cells_.push_back(cell);
            }
        }
        values_.assign(cells_.size(), 0);
        counts_.assign(content_.size() + 1, 0);
    }

    Int count() {
        Int total = 0;
        dfs(0, total);
        return total;
    }

private:
    std::vector<SkewCell> cells_;
    std::vector<int> content_;
    std::vector<int> values_;  // 1-based entry per cell, 0 = unfilled
    std::vector<int> counts_;  // counts_[v] = number of v's placed so far

    void dfs(size_t pos, Int& total) {
        if (pos == cells_.size()) {
            ++total;
            return;
        }
        const SkewCell& cell = cells_[pos];
        int hi = cell.right >= 0 ? values_[static_cast<size_t>(cell.right)]
                                 : static_cast<int>(content_.size());
        int lo = cell.above >= 0 ? values_[static_cast<size_t>(cell.above)] + 1 : 1;
        for (int v = lo; v <= hi; ++v) {
            if (counts_[static_cast<size_t>(v)] >= content_[static_cast<size_t>(v - 1)]) continue;
            // Lattice condition on the reverse reading word: every prefix
            // holds at least as many v-1's as v's.
            if (v > 1 && counts_[static_cast<size_t>(v)] >= counts_[static_cast<size_t>(v - 1)]) continue;
            values_[pos] = v;
            ++counts_[static_cast<size_t>(v)];
            dfs(pos + 1, total);
            --counts_[static_cast<size_t>(v)];
        }
        values_[pos] = 0;
    }
};

struct LrKey {
    Partition lambda, mu, nu;
    bool operator==(const LrKey&) const = default;
};

struct LrKeyHash {
    size_t operator()(const LrKey& k) const {
        PartitionHash h;
        size_t a = h(k.lambda), b = h(k.mu), c = h(k.nu);
        return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6)) ^ (c << 1);
    }
};

struct LrCache {
    std::mutex mutex;
    std::unordered_map<LrKey, Int, LrKeyHash> table;
};

inline LrCache& lr_cache() {
    static LrCache cache;
    return cache;
}

}  // namespace detail

/// The Littlewood-Richardson coefficient c^lambda_{mu,nu}: the number of
/// skew tableaux of shape lambda/mu and content nu whose rows weakly
/// increase, columns strictly increase, and whose reverse reading word is a
/// lattice word. Returns 0 whenever |lambda| != |mu| + |nu| or mu is not
/// contained in lambda.
///
/// Results are memoized on the canonical triple (the pair (mu, nu) is
/// symmetric, so it is stored in a fixed order). The cache is guarded by a
/// mutex; since the value for a key is unique, results are independent of
/// thread interleaving.
inline Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
    if (nu.empty()) return lambda == mu ? 1 : 0;
    if (nu.length() > lambda.length()) return 0;

    detail::LrKey key{lambda, std::min(mu, nu), std::max(mu, nu)};
    auto& cache = detail::lr_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) return it->second;
    }
    Int value = detail::LrFillingCounter(lambda, key.mu, key.nu).count();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        cache.table.emplace(std::move(key), value);
    }
    return value;
}

/// Expansion of the product s_mu * s_nu in the Schur basis:
/// { lambda -> c^lambda_{mu,nu} } over all lambda of size |mu| + |nu|,
/// optionally restricted to length(lambda) <= max_length. The length filter
/// bounds the enumeration of candidate shapes rather than discarding
/// results afterwards.
inline SchurExpansion product_expansion(const Partition& mu, const Partition& nu,
                                        std::optional<int> max_length = std::nullopt) {
    SchurExpansion out;
    const int d = mu.size() + nu.size();
    for_each_partition(d, max_length, std::nullopt, [&](const Partition& lambda) {
        if (!lambda.contains(mu) || !lambda.contains(nu)) return;
        out.add(lambda, lr_coefficient(lambda, mu, nu));
    });
    return out;
}

/// Two-block branching: { (mu, nu) -> c^lambda_{mu,nu} } over all pairs with
/// length(mu) <= p and length(nu) <= q. Requires length(lambda) <= p + q.
inline std::map<std::pair<Partition, Partition>, Int> branching_expansion(const Partition& lambda,
                                                                          int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("branching: p and q must be positive");
    if (lambda.length() > p + q) {
        throw std::invalid_argument("branching: length(lambda) exceeds p + q");
    }
    std::map<std::pair<Partition, Partition>, Int> out;
    const int d = lambda.size();
    for (int a = 0; a <= d; ++a) {
        for_each_partition(a, p, lambda.first_part(), [&](const Partition& mu) {
            if (!lambda.contains(mu)) return;
            for_each_partition(d - a, q, lambda.first_part(), [&](const Partition& nu) {
                Int c = lr_coefficient(lambda, mu, nu);
                if (c != 0) out.emplace(std::make_pair(mu, nu), std::move(c));
            });
        });
    }
    return out;
}

/// Schur expansion of the skew function indexed by alpha/beta:
/// { gamma -> c^alpha_{beta,gamma} }. Empty when beta is not contained in
/// alpha.
inline SchurExpansion skew_expansion(const Partition& alpha, const Partition& beta) {
    SchurExpansion out;
    if (!alpha.contains(beta)) return out;
    const int d = alpha.size() - beta.size();
    for_each_partition(d, alpha.length(), alpha.first_part(), [&](const Partition& gamma) {
        out.add(gamma, lr_coefficient(alpha, beta, gamma));
    });
    return out;
}

inline size_t lr_cache_size() {
    auto& cache = detail::lr_cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.table.size();
}

/// Text round-trip of the memo table, one "lambda|mu|nu|value" line per
/// entry, sorted. Used by the CLI's on-disk cache.
inline void lr_cache_export(std::ostream& os) {
    auto& cache = detail::lr_cache();
    std::map<std::tuple<Partition, Partition, Partition>, Int> sorted;
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        for (const auto& [k, v] : cache.table) sorted.emplace(std::make_tuple(k.lambda, k.mu, k.nu), v);
    }
    for (const auto& [k, v] : sorted) {
        os << std::get<0>(k).to_string() << '|' << std::get<1>(k).to_string() << '|'
           << std::get<2>(k).to_string() << '|' << v.get_str() << '\n';
    }
}

inline void lr_cache_import(std::istream& is) {
    auto& cache = detail::lr_cache();
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        size_t start = 0;
        for (size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '|') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() != 4) throw std::invalid_argument("lr cache: malformed line '" + line + "'");
        detail::LrKey key{Partition::parse(fields[0]), Partition::parse(fields[1]),
                          Partition::parse(fields[2])};
        Int value(fields[3]);
        std::lock_guard<std::mutex> lock(cache.mutex);
        cache.table.emplace(std::move(key), std::move(value));
    }
}

}  // namespace sympair
