#pragma once

#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sympair/multipoly.hpp"
#include "sympair/numeric.hpp"
#include "sympair/partition.hpp"
#include "sympair/report.hpp"
#include "sympair/schur_expansion.hpp"

namespace sympair {

/// The cycle structure of a permutation, i.e. a partition of m recording the
/// cycle lengths.
struct CycleType {
    Partition shape;

    explicit CycleType(Partition s) : shape(std::move(s)) {}

    int degree() const { return shape.size(); }
};

/// Centralizer order z_mu = prod over distinct part sizes i of i^{a_i} * a_i!
/// where a_i is the multiplicity of i in mu. The conjugacy class of cycle
/// type mu in S_m has m!/z_mu elements.
inline Int z_order(const Partition& mu) {
    Int z = 1;
    int run = 0;
    int prev = 0;
    for (int p : mu.parts()) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= p;
        z *= run;  // accumulates the factorial of the running multiplicity
    }
    return z;
}

inline Int factorial(int m) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return f;
}

namespace detail {

struct CharKey {
    Partition lambda;
    Partition rho_suffix;
    bool operator==(const CharKey&) const = default;
};

struct CharKeyHash {
    size_t operator()(const CharKey& k) const {
        PartitionHash h;
        return h(k.lambda) * 0x100000001b3ULL ^ h(k.rho_suffix);
    }
};

struct CharCache {
    std::mutex mutex;
    std::unordered_map<CharKey, long, CharKeyHash> table;
};

inline CharCache& char_cache() {
    static CharCache cache;
    return cache;
}

// All ways to strip a border strip of length k from lambda, via beta
// numbers: b_i = lambda_i + (L - i). Removing a strip of length k replaces
// some b_i by b_i - k (which must be fresh and non-negative); the strip
// height is the number of beta values jumped over, contributing the sign
// (-1)^height.
inline void border_strips(const Partition& lambda, int k,
                          std::vector<std::pair<Partition, int>>& out) {
    out.clear();
    const int rows = lambda.length();
    std::vector<int> beta(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) beta[static_cast<size_t>(i)] = lambda.part(i) + (rows - 1 - i);
    for (int i = 0; i < rows; ++i) {
        int target = beta[static_cast<size_t>(i)] - k;
        if (target < 0) continue;
        bool fresh = true;
        int height = 0;
        for (int j = 0; j < rows; ++j) {
            if (j == i) continue;
            if (beta[static_cast<size_t>(j)] == target) {
                fresh = false;
                break;
            }
            if (beta[static_cast<size_t>(j)] > target && beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)]) {
                ++height;
            }
        }
        if (!fresh) continue;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int j = 0; j < rows; ++j) {
            int p = nb[static_cast<size_t>(j)] - (rows - 1 - j);
            if (p > 0) parts.push_back(p);
        }
        out.emplace_back(Partition(std::move(parts)), height % 2 == 0 ? 1 : -1);
    }
}

inline long char_rec(const Partition& lambda, const std::vector<int>& rho, size_t idx) {
    if (idx == rho.size()) return 1;  // lambda is empty here by size bookkeeping
    CharKey key{lambda, Partition(std::vector<int>(rho.begin() + static_cast<long>(idx), rho.end()))};
    auto& cache = char_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) return it->second;
    }
    long value = 0;
    std::vector<std::pair<Partition, int>> strips;
    border_strips(lambda, rho[idx], strips);
    for (const auto& [rest, sign] : strips) {
        value += sign * char_rec(rest, rho, idx + 1);
    }
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        cache.table.emplace(std::move(key), value);
    }
    return value;
}

struct KronKey {
    Partition lambda, mu, nu;
    bool operator==(const KronKey&) const = default;
};

struct KronKeyHash {
    size_t operator()(const KronKey& k) const {
        PartitionHash h;
        size_t a = h(k.lambda), b = h(k.mu), c = h(k.nu);
        return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6)) ^ (c << 1);
    }
};

struct KronCache {
    std::mutex mutex;
    std::unordered_map<KronKey, Int, KronKeyHash> table;
};

inline KronCache& kron_cache() {
    static KronCache cache;
    return cache;
}

}  // namespace detail

/// Irreducible character value chi^lambda(rho) of the symmetric group,
/// computed by the border-strip recursion. Exact integer arithmetic
/// throughout. Requires |lambda| == |rho|.
inline long character_value(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.degree()) {
        throw std::invalid_argument("character: |lambda| must equal the degree of the cycle type");
    }
    return detail::char_rec(lambda, rho.shape.parts(), 0);
}

/// Kronecker coefficient g_{lambda,mu,nu}: the multiplicity of the
/// irreducible indexed by lambda in the tensor product of those indexed by
/// mu and nu, computed as the class-sum inner product
///     sum over cycle types rho of chi^lambda chi^mu chi^nu / z_rho.
/// The sum is accumulated in exact rationals; a non-integral or negative
/// total signals a character-engine bug and throws.
inline Int kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int m = lambda.size();
    if (mu.size() != m || nu.size() != m) {
        throw std::invalid_argument("kronecker: partitions must share one size");
    }
    detail::KronKey key{lambda, mu, nu};
    auto& cache = detail::kron_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) return it->second;
    }
    Rat sum = 0;
    for_each_partition(m, std::nullopt, std::nullopt, [&](const Partition& rho) {
        CycleType ct(rho);
        long a = character_value(lambda, ct);
        if (a == 0) return;
        long b = character_value(mu, ct);
        if (b == 0) return;
        long c = character_value(nu, ct);
        if (c == 0) return;
        Rat term(Int(a) * Int(b) * Int(c), z_order(rho));
        term.canonicalize();
        sum += term;
    });
    if (!is_integral(sum) || sum < 0) {
        throw std::logic_error("kronecker: class-sum inner product is not a non-negative integer");
    }
    Int value = sum.get_num();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        cache.table.emplace(std::move(key), value);
    }
    return value;
}

inline size_t kronecker_cache_size() {
    auto& cache = detail::kron_cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.table.size();
}

/// Text round-trip of the memo table, mirroring the LR cache format.
inline void kronecker_cache_export(std::ostream& os) {
    auto& cache = detail::kron_cache();
    std::map<std::tuple<Partition, Partition, Partition>, Int> sorted;
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        for (const auto& [k, v] : cache.table) {
            sorted.emplace(std::make_tuple(k.lambda, k.mu, k.nu), v);
        }
    }
    for (const auto& [k, v] : sorted) {
        os << std::get<0>(k).to_string() << '|' << std::get<1>(k).to_string() << '|'
           << std::get<2>(k).to_string() << '|' << v.get_str() << '\n';
    }
}

inline void kronecker_cache_import(std::istream& is) {
    auto& cache = detail::kron_cache();
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
        if (fields.size() != 4) {
            throw std::invalid_argument("kronecker cache: malformed line '" + line + "'");
        }
        detail::KronKey key{Partition::parse(fields[0]), Partition::parse(fields[1]),
                            Partition::parse(fields[2])};
        Int value(fields[3]);
        std::lock_guard<std::mutex> lock(cache.mutex);
        cache.table.emplace(std::move(key), std::move(value));
    }
}

/// Verifies, for the given m, that the Schur expansion of
///     sum over mu of p_mu   (mu running over partitions of m)
/// has coefficient sum over mu of g_{lambda,mu,mu} at every s_lambda. The
/// left side is the character of the conjugation action on the group
/// algebra; the right side is its expansion through tensor-square
/// multiplicities. Both sides are computed independently (power sums through
/// the polynomial oracle, multiplicities through the character engine).
inline CheckReport conjugation_character_check(int m) {
    CheckReport report("conjugation character, m=" + std::to_string(m));
    if (m < 0) throw std::invalid_argument("conjugation check: m must be non-negative");
    const int vars = std::max(m, 1);
    TruncatedMultiPoly power_side(vars, m);
    for_each_partition(m, std::nullopt, std::nullopt, [&](const Partition& mu) {
        power_side += power_sum_product(mu, vars, m);
    });
    SchurExpansion expanded = schur_decompose(power_side, m);
    for_each_partition(m, std::nullopt, std::nullopt, [&](const Partition& lambda) {
        Int lhs = 0;
        for_each_partition(m, std::nullopt, std::nullopt, [&](const Partition& mu) {
            lhs += kronecker_coefficient(lambda, mu, mu);
        });
        Int rhs = expanded.coeff(lambda);
        std::ostringstream os;
        os << "lambda=" << lambda.to_string() << ": tensor-square sum " << lhs.get_str()
           << ", power-sum coefficient " << rhs.get_str();
        report.require(lhs == rhs, os.str());
    });
    // No partition of m outside the enumeration can appear on the power-sum side.
    size_t lambda_count = partitions_of(m).size();
    report.require(expanded.term_count() <= lambda_count, "no stray Schur terms on the power-sum side");
    return report;
}

}  // namespace sympair
