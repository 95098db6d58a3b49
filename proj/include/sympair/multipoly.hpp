#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sympair/numeric.hpp"
#include "sympair/partition.hpp"
#include "sympair/schur_expansion.hpp"

namespace sympair {

/// A multivariate polynomial over the integers, truncated at a fixed total
/// degree: terms of higher total degree are discarded by every operation, and
/// everything below the truncation is exact. Exponent tuples are stored
/// densely (always num_vars entries) and ordered lexicographically, so the
/// lexicographically largest monomial is the last map entry.
///
/// This is the brute-force workhorse: nothing here is performance critical.
class TruncatedMultiPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Int>;

    TruncatedMultiPoly(int num_vars, int max_total_degree)
        : num_vars_(num_vars), max_degree_(max_total_degree) {
        if (num_vars < 1) throw std::invalid_argument("multipoly: need at least one variable");
        if (max_total_degree < 0) throw std::invalid_argument("multipoly: negative truncation degree");
    }

    static TruncatedMultiPoly constant(int num_vars, int max_total_degree, const Int& c) {
        TruncatedMultiPoly f(num_vars, max_total_degree);
        f.add_term(Exponents(static_cast<size_t>(num_vars), 0), c);
        return f;
    }

    int num_vars() const { return num_vars_; }
    int max_total_degree() const { return max_degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static int total_degree(const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    }

    /// Adds c * x^e; terms beyond the truncation degree are dropped.
    void add_term(const Exponents& e, const Int& c) {
        if (static_cast<int>(e.size()) != num_vars_) {
            throw std::invalid_argument("multipoly: exponent tuple has wrong arity");
        }
        if (c == 0 || total_degree(e) > max_degree_) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    TruncatedMultiPoly& operator+=(const TruncatedMultiPoly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    TruncatedMultiPoly& operator-=(const TruncatedMultiPoly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend TruncatedMultiPoly operator+(TruncatedMultiPoly a, const TruncatedMultiPoly& b) {
        a += b;
        return a;
    }

    friend TruncatedMultiPoly operator-(TruncatedMultiPoly a, const TruncatedMultiPoly& b) {
        a -= b;
        return a;
    }

    friend TruncatedMultiPoly operator*(const TruncatedMultiPoly& a, const TruncatedMultiPoly& b) {
        a.check_compatible(b);
        TruncatedMultiPoly out(a.num_vars_, a.max_degree_);
        Exponents e(static_cast<size_t>(a.num_vars_));
        for (const auto& [ea, ca] : a.terms_) {
            int da = total_degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > a.max_degree_) continue;
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    bool operator==(const TruncatedMultiPoly& o) const {
        return num_vars_ == o.num_vars_ && terms_ == o.terms_;
    }

    TruncatedMultiPoly homogeneous_component(int d) const {
        TruncatedMultiPoly out(num_vars_, max_degree_);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) == d) out.terms_.emplace(e, c);
        }
        return out;
    }

    /// Retruncation to a lower degree bound.
    TruncatedMultiPoly truncated(int new_max_degree) const {
        TruncatedMultiPoly out(num_vars_, new_max_degree);
        for (const auto& [e, c] : terms_) out.add_term(e, c);
        return out;
    }

    /// Reinterprets this polynomial inside a wider variable set, placing its
    /// variables at [offset, offset + num_vars).
    TruncatedMultiPoly embedded(int new_num_vars, int offset) const {
        if (offset < 0 || offset + num_vars_ > new_num_vars) {
            throw std::invalid_argument("multipoly: embedding out of range");
        }
        TruncatedMultiPoly out(new_num_vars, max_degree_);
        Exponents e(static_cast<size_t>(new_num_vars), 0);
        for (const auto& [src, c] : terms_) {
            std::fill(e.begin(), e.end(), 0);
            std::copy(src.begin(), src.end(), e.begin() + offset);
            out.terms_.emplace(e, c);
        }
        return out;
    }

    /// Geometric series of a monomial, 1 / (1 - coeff * x^e), expanded to the
    /// truncation degree.
    static TruncatedMultiPoly geometric(int num_vars, int max_total_degree, const Exponents& e,
                                        const Int& coeff = 1) {
        int step = total_degree(e);
        if (step <= 0) throw std::invalid_argument("multipoly: geometric factor needs positive degree");
        TruncatedMultiPoly out(num_vars, max_total_degree);
        Exponents cur(static_cast<size_t>(num_vars), 0);
        Int c = 1;
        for (int d = 0; d <= max_total_degree; d += step) {
            out.add_term(cur, c);
            for (size_t i = 0; i < cur.size(); ++i) cur[i] += e[i];
            c *= coeff;
        }
        return out;
    }

    /// Substitutes x_i = t^(i+1) and returns the coefficients of t^0..t^D.
    std::vector<Int> eval_at_powers(int max_t_degree) const {
        std::vector<Int> out(static_cast<size_t>(max_t_degree) + 1, 0);
        for (const auto& [e, c] : terms_) {
            long long t = 0;
            for (size_t i = 0; i < e.size(); ++i) t += static_cast<long long>(i + 1) * e[i];
            if (t <= max_t_degree) out[static_cast<size_t>(t)] += c;
        }
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.get_str() << "*x^(";
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) os << ',';
                os << e[i];
            }
            os << ")";
        }
        if (first) os << "0";
        return os.str();
    }

private:
    int num_vars_;
    int max_degree_;
    Terms terms_;

    void check_compatible(const TruncatedMultiPoly& o) const {
        if (num_vars_ != o.num_vars_) {
            throw std::invalid_argument("multipoly: mismatched variable counts");
        }
        if (max_degree_ != o.max_degree_) {
            throw std::invalid_argument("multipoly: mismatched truncation degrees");
        }
    }
};

namespace detail {

// Enumerates semistandard tableaux of the given shape with entries in 1..n,
// accumulating one monomial per tableau. Rows weakly increase, columns
// strictly increase.
inline void ssyt_rec(const Partition& shape, int n, std::vector<std::vector<int>>& rows,
                     int r, int c, std::vector<int>& weight, TruncatedMultiPoly& out) {
    if (r == shape.length()) {
        out.add_term(weight, 1);
        return;
    }
    if (c == shape.part(r)) {
        ssyt_rec(shape, n, rows, r + 1, 0, weight, out);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0 && c < shape.part(r - 1)) {
        lo = std::max(lo, rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    }
    for (int v = lo; v <= n; ++v) {
        rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        ++weight[static_cast<size_t>(v - 1)];
        ssyt_rec(shape, n, rows, r, c + 1, weight, out);
        --weight[static_cast<size_t>(v - 1)];
    }
}

}  // namespace detail

/// The Schur polynomial s_lambda(x_1..x_n) computed by enumerating
/// semistandard tableaux, truncated at total degree D. Zero when
/// length(lambda) > n (no tableau has a strictly increasing first column) or
/// when |lambda| > D.
inline TruncatedMultiPoly schur_poly(const Partition& lambda, int n, int max_total_degree) {
    TruncatedMultiPoly out(n, max_total_degree);
    if (lambda.length() > n || lambda.size() > max_total_degree) return out;
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < lambda.length(); ++r) {
        rows.emplace_back(static_cast<size_t>(lambda.part(r)), 0);
    }
    std::vector<int> weight(static_cast<size_t>(n), 0);
    detail::ssyt_rec(lambda, n, rows, 0, 0, weight, out);
    return out;
}

inline TruncatedMultiPoly schur_poly(const Partition& lambda, int n) {
    return schur_poly(lambda, n, lambda.size());
}

/// The power sum p_k(x_1..x_n) = x_1^k + ... + x_n^k, truncated.
inline TruncatedMultiPoly power_sum(int k, int n, int max_total_degree) {
    if (k < 1) throw std::invalid_argument("power sum: k must be positive");
    TruncatedMultiPoly out(n, max_total_degree);
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        e[static_cast<size_t>(i)] = k;
        out.add_term(e, 1);
        e[static_cast<size_t>(i)] = 0;
    }
    return out;
}

/// p_mu = product of p_{mu_i}.
inline TruncatedMultiPoly power_sum_product(const Partition& mu, int n, int max_total_degree) {
    TruncatedMultiPoly out = TruncatedMultiPoly::constant(n, max_total_degree, 1);
    for (int part : mu.parts()) out = out * power_sum(part, n, max_total_degree);
    return out;
}

/// Decomposes a polynomial into products of per-block Schur polynomials,
/// where the variables are split into consecutive blocks of the given sizes:
///     f = sum over tuples (lambda_1..lambda_B) of a * prod_b s_{lambda_b}(block_b).
///
/// Algorithm: repeatedly peel the lexicographically largest remaining
/// monomial. Its per-block exponents must each form a partition (otherwise
/// the input is not symmetric in each block and we reject); the monomial's
/// coefficient is the coefficient of the corresponding Schur product, which
/// is then subtracted. The products are triangular with respect to the
/// lexicographic order, so this terminates with a zero residual exactly when
/// f lies in their span.
inline std::map<std::vector<Partition>, Int> block_schur_decompose(const TruncatedMultiPoly& f,
                                                                   const std::vector<int>& blocks) {
    int total = std::accumulate(blocks.begin(), blocks.end(), 0);
    if (total != f.num_vars()) {
        throw std::invalid_argument("block decompose: block sizes must cover all variables");
    }
    std::map<std::vector<Partition>, Int> out;
    TruncatedMultiPoly residual = f;
    while (!residual.is_zero()) {
        const auto& [lead, coeff] = *residual.terms().rbegin();
        std::vector<Partition> shapes;
        shapes.reserve(blocks.size());
        size_t offset = 0;
        for (int b : blocks) {
            std::vector<int> exps(lead.begin() + static_cast<long>(offset),
                                  lead.begin() + static_cast<long>(offset) + b);
            while (!exps.empty() && exps.back() == 0) exps.pop_back();
            for (size_t i = 1; i < exps.size(); ++i) {
                if (exps[i - 1] < exps[i]) {
                    throw std::invalid_argument(
                        "block decompose: input is not symmetric (leading exponent pattern is not a "
                        "partition)");
                }
            }
            shapes.emplace_back(std::move(exps));
            offset += static_cast<size_t>(b);
        }
        TruncatedMultiPoly product = TruncatedMultiPoly::constant(f.num_vars(), f.max_total_degree(), 1);
        offset = 0;
        for (size_t b = 0; b < blocks.size(); ++b) {
            TruncatedMultiPoly s = schur_poly(shapes[b], blocks[b], f.max_total_degree());
            product = product * s.embedded(f.num_vars(), static_cast<int>(offset));
            offset += static_cast<size_t>(blocks[b]);
        }
        Int a = coeff;
        for (const auto& [e, c] : product.terms()) {
            residual.add_term(e, -a * c);
        }
        out[std::move(shapes)] += a;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

/// Schur-basis decomposition of the degree-d homogeneous component of f,
/// which must be a symmetric polynomial (detected during peeling). Requires
/// num_vars >= d so that no partition of d is cut off by the variable count.
inline SchurExpansion schur_decompose(const TruncatedMultiPoly& f, int d) {
    if (f.num_vars() < d) {
        throw std::invalid_argument("schur decompose: need at least d variables");
    }
    auto m = block_schur_decompose(f.homogeneous_component(d), {f.num_vars()});
    SchurExpansion out;
    for (const auto& [shapes, c] : m) out.add(shapes.front(), c);
    return out;
}

}  // namespace sympair
