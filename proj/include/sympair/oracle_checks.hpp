#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sympair/multipoly.hpp"
#include "sympair/numeric.hpp"
#include "sympair/partition.hpp"
#include "sympair/report.hpp"
#include "sympair/symmetric_group.hpp"

namespace sympair {

namespace detail {

inline std::string exponent_string(const std::vector<int>& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ")";
    return os.str();
}

}  // namespace detail

/// Coefficientwise comparison of two polynomials; on mismatch the first
/// offending exponent (in lexicographic order) is reported.
inline void compare_polys(CheckReport& report, const TruncatedMultiPoly& lhs,
                          const TruncatedMultiPoly& rhs) {
    TruncatedMultiPoly diff = lhs - rhs;
    if (diff.is_zero()) {
        report.require(true, "both sides agree on all " + std::to_string(lhs.terms().size()) +
                                 " monomials");
        return;
    }
    const auto& [e, c] = *diff.terms().begin();
    report.require(false, "mismatch at exponent " + detail::exponent_string(e) + ": difference " +
                              c.get_str());
}

/// Checks the two-block product kernel expansion
///     prod_{i<=k, j<=m} 1/(1 - x_i y_j) = sum_lambda s_lambda(x) s_lambda(y)
/// with |lambda| <= D and length(lambda) <= min(k, m), as truncated
/// polynomials. Every kernel factor raises both block degrees together, so
/// truncating at total degree 2D captures exactly the bidegrees (a, a) with
/// a <= D.
inline CheckReport cauchy_check(int k, int m, int D) {
    CheckReport report("cauchy kernel, k=" + std::to_string(k) + " m=" + std::to_string(m) +
                       " D=" + std::to_string(D));
    const int vars = k + m;
    TruncatedMultiPoly kernel = TruncatedMultiPoly::constant(vars, 2 * D, 1);
    std::vector<int> e(static_cast<size_t>(vars), 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m; ++j) {
            std::fill(e.begin(), e.end(), 0);
            e[static_cast<size_t>(i)] = 1;
            e[static_cast<size_t>(k + j)] = 1;
            kernel = kernel * TruncatedMultiPoly::geometric(vars, 2 * D, e);
        }
    }
    TruncatedMultiPoly sum(vars, 2 * D);
    for (int d = 0; d <= D; ++d) {
        for_each_partition(d, std::min(k, m), std::nullopt, [&](const Partition& lambda) {
            sum += schur_poly(lambda, k, 2 * D).embedded(vars, 0) *
                   schur_poly(lambda, m, 2 * D).embedded(vars, k);
        });
    }
    compare_polys(report, kernel, sum);
    return report;
}

/// Checks prod_{i<=j<=n} 1/(1 - x_i x_j) = sum s_{2 lambda}(x) over
/// |lambda| <= D, length(lambda) <= n.
inline CheckReport sym2_check(int n, int D) {
    CheckReport report("sym2 kernel, n=" + std::to_string(n) + " D=" + std::to_string(D));
    TruncatedMultiPoly kernel = TruncatedMultiPoly::constant(n, 2 * D, 1);
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            std::fill(e.begin(), e.end(), 0);
            e[static_cast<size_t>(i)] += 1;
            e[static_cast<size_t>(j)] += 1;
            kernel = kernel * TruncatedMultiPoly::geometric(n, 2 * D, e);
        }
    }
    TruncatedMultiPoly sum(n, 2 * D);
    for (int d = 0; d <= D; ++d) {
        for_each_partition(d, n, std::nullopt, [&](const Partition& lambda) {
            sum += schur_poly(lambda.doubled(), n, 2 * D);
        });
    }
    compare_polys(report, kernel, sum);
    return report;
}

/// Checks prod_{i<j<=n} 1/(1 - x_i x_j) = sum s_{(2 lambda)'}(x) over
/// |lambda| <= D, length((2 lambda)') <= n.
inline CheckReport alt2_check(int n, int D) {
    CheckReport report("alt2 kernel, n=" + std::to_string(n) + " D=" + std::to_string(D));
    TruncatedMultiPoly kernel = TruncatedMultiPoly::constant(n, 2 * D, 1);
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::fill(e.begin(), e.end(), 0);
            e[static_cast<size_t>(i)] = 1;
            e[static_cast<size_t>(j)] = 1;
            kernel = kernel * TruncatedMultiPoly::geometric(n, 2 * D, e);
        }
    }
    TruncatedMultiPoly sum(n, 2 * D);
    for (int d = 0; d <= D; ++d) {
        for_each_partition(d, std::nullopt, std::nullopt, [&](const Partition& lambda) {
            Partition shape = lambda.doubled_conjugate();
            if (shape.length() > n) return;
            sum += schur_poly(shape, n, 2 * D);
        });
    }
    compare_polys(report, kernel, sum);
    return report;
}

/// Expands the triple kernel prod 1/(1 - x_i y_j z_k) to tri-degree
/// (m, m, m) and matches every extracted coefficient of
/// s_mu(x) s_nu(y) s_lambda(z) against the character-engine Kronecker
/// coefficient g_{lambda,mu,nu}, in both directions. Requires nv >= m so no
/// partition of m is cut off by the variable count.
inline CheckReport triple_cauchy_g_check(int m, int nv) {
    CheckReport report("triple cauchy vs kronecker, m=" + std::to_string(m) +
                       " nv=" + std::to_string(nv));
    if (nv < m) throw std::invalid_argument("triple cauchy: need nv >= m");
    const int vars = 3 * nv;
    TruncatedMultiPoly kernel = TruncatedMultiPoly::constant(vars, 3 * m, 1);
    std::vector<int> e(static_cast<size_t>(vars), 0);
    for (int i = 0; i < nv; ++i) {
        for (int j = 0; j < nv; ++j) {
            for (int k = 0; k < nv; ++k) {
                std::fill(e.begin(), e.end(), 0);
                e[static_cast<size_t>(i)] = 1;
                e[static_cast<size_t>(nv + j)] = 1;
                e[static_cast<size_t>(2 * nv + k)] = 1;
                kernel = kernel * TruncatedMultiPoly::geometric(vars, 3 * m, e);
            }
        }
    }
    // Keep only the tri-homogeneous component of degree (m, m, m).
    TruncatedMultiPoly component(vars, 3 * m);
    for (const auto& [exps, c] : kernel.terms()) {
        int dx = 0, dy = 0, dz = 0;
        for (int i = 0; i < nv; ++i) {
            dx += exps[static_cast<size_t>(i)];
            dy += exps[static_cast<size_t>(nv + i)];
            dz += exps[static_cast<size_t>(2 * nv + i)];
        }
        if (dx == m && dy == m && dz == m) component.add_term(exps, c);
    }
    auto extracted = block_schur_decompose(component, {nv, nv, nv});
    std::map<std::vector<Partition>, Int> expected;
    for_each_partition(m, std::nullopt, std::nullopt, [&](const Partition& mu) {
        for_each_partition(m, std::nullopt, std::nullopt, [&](const Partition& nu) {
            for_each_partition(m, std::nullopt, std::nullopt, [&](const Partition& lambda) {
                Int g = kronecker_coefficient(lambda, mu, nu);
                if (g != 0) expected[{mu, nu, lambda}] = g;
            });
        });
    });
    if (extracted == expected) {
        std::ostringstream os;
        os << "all " << expected.size() << " nonzero coefficients match the character engine";
        report.require(true, os.str());
    } else {
        for (const auto& [shapes, g] : expected) {
            auto it = extracted.find(shapes);
            Int got = it == extracted.end() ? Int(0) : it->second;
            if (got != g) {
                report.require(false, "(" + shapes[0].to_string() + ";" + shapes[1].to_string() +
                                          ";" + shapes[2].to_string() + "): kernel " + got.get_str() +
                                          " vs characters " + g.get_str());
            }
        }
        for (const auto& [shapes, g] : extracted) {
            if (!expected.count(shapes)) {
                report.require(false, "stray kernel coefficient at (" + shapes[0].to_string() + ";" +
                                          shapes[1].to_string() + ";" + shapes[2].to_string() + ") = " +
                                          g.get_str());
            }
        }
    }
    return report;
}

}  // namespace sympair
