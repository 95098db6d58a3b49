#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sympair/numeric.hpp"
#include "sympair/partition.hpp"

namespace sympair {

/// A univariate formal power series truncated at a fixed degree, with exact
/// rational coefficients. All operations are truncation-stable: computing at
/// a higher bound and retruncating gives identical coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int max_degree)
        : coeffs_(static_cast<size_t>(max_degree) + 1, Rat(0)) {
        if (max_degree < 0) throw std::invalid_argument("series: negative truncation degree");
    }

    static TruncatedSeries one(int max_degree) {
        TruncatedSeries s(max_degree);
        s.coeffs_[0] = 1;
        return s;
    }

    static TruncatedSeries monomial(int max_degree, int k, const Rat& c) {
        TruncatedSeries s(max_degree);
        if (k < 0) throw std::invalid_argument("series: negative exponent");
        if (k <= max_degree) s.coeffs_[static_cast<size_t>(k)] = c;
        return s;
    }

    /// 1 - c * t^k.
    static TruncatedSeries one_minus(int max_degree, int k, const Rat& c = Rat(1)) {
        TruncatedSeries s = one(max_degree);
        if (k >= 1 && k <= max_degree) s.coeffs_[static_cast<size_t>(k)] = -c;
        return s;
    }

    /// sum_j ratio^j t^(j*k) = 1 / (1 - ratio * t^k).
    static TruncatedSeries geometric(int max_degree, int k, const Rat& ratio = Rat(1)) {
        if (k < 1) throw std::invalid_argument("series: geometric step must be positive");
        TruncatedSeries s(max_degree);
        Rat c(1);
        for (int d = 0; d <= max_degree; d += k) {
            s.coeffs_[static_cast<size_t>(d)] = c;
            c *= ratio;
        }
        return s;
    }

    int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rat& coeff(int d) const { return coeffs_.at(static_cast<size_t>(d)); }
    void set_coeff(int d, const Rat& c) { coeffs_.at(static_cast<size_t>(d)) = c; }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_compatible(o);
        for (size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_compatible(o);
        for (size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        TruncatedSeries out(a.max_degree());
        for (int i = 0; i <= a.max_degree(); ++i) {
            if (a.coeffs_[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= a.max_degree(); ++j) {
                out.coeffs_[static_cast<size_t>(i + j)] +=
                    a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
            }
        }
        return out;
    }

    TruncatedSeries truncated(int new_max_degree) const {
        TruncatedSeries out(new_max_degree);
        for (int d = 0; d <= std::min(new_max_degree, max_degree()); ++d) {
            out.coeffs_[static_cast<size_t>(d)] = coeffs_[static_cast<size_t>(d)];
        }
        return out;
    }

    bool is_integral() const {
        for (const Rat& c : coeffs_) {
            if (!sympair::is_integral(c)) return false;
        }
        return true;
    }

    /// Integer coefficient vector; throws if any denominator is not 1.
    /// Integrality is asserted, never coerced.
    std::vector<Int> integer_coefficients() const {
        std::vector<Int> out;
        out.reserve(coeffs_.size());
        for (const Rat& c : coeffs_) {
            if (!sympair::is_integral(c)) {
                throw std::logic_error("series: coefficient " + c.get_str() + " is not an integer");
            }
            out.push_back(c.get_num());
        }
        return out;
    }

    std::vector<std::string> coefficient_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const Rat& c : coeffs_) out.push_back(c.get_str());
        return out;
    }

    /// {"max_degree": D, "coefficients": ["1", "1/2", ...]} — coefficient
    /// strings are exact rationals, never decimals.
    std::string to_json_string() const {
        std::ostringstream os;
        os << "{\"max_degree\": " << max_degree() << ", \"coefficients\": [";
        for (size_t d = 0; d < coeffs_.size(); ++d) {
            if (d) os << ", ";
            os << '"' << coeffs_[d].get_str() << '"';
        }
        os << "]}";
        return os.str();
    }

private:
    std::vector<Rat> coeffs_;

    void check_compatible(const TruncatedSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size()) {
            throw std::invalid_argument("series: mismatched truncation degrees");
        }
    }
};

/// 1/S for S with nonzero constant term.
inline TruncatedSeries reciprocal(const TruncatedSeries& s) {
    if (s.coeff(0) == 0) throw std::invalid_argument("series: reciprocal needs a unit constant term");
    const int D = s.max_degree();
    TruncatedSeries out(D);
    Rat inv0 = Rat(1) / s.coeff(0);
    out.set_coeff(0, inv0);
    for (int n = 1; n <= D; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) acc += s.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, -inv0 * acc);
    }
    return out;
}

/// exp(S) for S with zero constant term.
inline TruncatedSeries exp(const TruncatedSeries& s) {
    if (s.coeff(0) != 0) throw std::invalid_argument("series: exp needs a zero constant term");
    const int D = s.max_degree();
    TruncatedSeries out(D);
    out.set_coeff(0, Rat(1));
    for (int n = 1; n <= D; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) acc += Rat(k) * s.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, acc / n);
    }
    return out;
}

/// log(S) for S with constant term 1.
inline TruncatedSeries log(const TruncatedSeries& s) {
    if (s.coeff(0) != 1) throw std::invalid_argument("series: log needs constant term 1");
    const int D = s.max_degree();
    TruncatedSeries out(D);
    for (int n = 1; n <= D; ++n) {
        Rat acc(0);
        for (int k = 1; k < n; ++k) acc += Rat(k) * out.coeff(k) * s.coeff(n - k);
        out.set_coeff(n, s.coeff(n) - acc / n);
    }
    return out;
}

/// S^a for rational exponent a and S with constant term 1, via the
/// differential recurrence P' S = a S' P.
inline TruncatedSeries pow(const TruncatedSeries& s, const Rat& a) {
    if (s.coeff(0) != 1) throw std::invalid_argument("series: pow needs constant term 1");
    const int D = s.max_degree();
    TruncatedSeries out(D);
    out.set_coeff(0, Rat(1));
    for (int n = 1; n <= D; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) acc += a * Rat(k) * s.coeff(k) * out.coeff(n - k);
        for (int k = 1; k < n; ++k) acc -= Rat(k) * out.coeff(k) * s.coeff(n - k);
        out.set_coeff(n, acc / n);
    }
    return out;
}

/// Truncated infinite product prod_{k>=1} factor(k). Each factor must equal
/// 1 + O(t^k), so only k <= D contributes; the truncation is exact, not an
/// approximation. A factor violating the precondition is rejected.
template <typename F>
TruncatedSeries product_over_k(int D, F&& factor) {
    TruncatedSeries out = TruncatedSeries::one(D);
    for (int k = 1; k <= D; ++k) {
        TruncatedSeries f = factor(k);
        if (f.max_degree() != D) throw std::invalid_argument("product: factor has wrong truncation");
        if (f.coeff(0) != 1) {
            throw std::invalid_argument("product: factor " + std::to_string(k) +
                                        " has constant term != 1");
        }
        for (int d = 1; d < k && d <= D; ++d) {
            if (f.coeff(d) != 0) {
                throw std::invalid_argument("product: factor " + std::to_string(k) +
                                            " is not 1 + O(t^" + std::to_string(k) + ")");
            }
        }
        out = out * f;
    }
    return out;
}

/// Variant taking (base, exponent) pairs: the k-th factor is base(k)^e(k).
template <typename F>
TruncatedSeries product_over_k_pow(int D, F&& base_and_exponent) {
    return product_over_k(D, [&](int k) {
        auto [base, exponent] = base_and_exponent(k);
        return pow(base, exponent);
    });
}

enum class SeriesName { I, In, F, H, GLq, Stanley };

inline std::optional<SeriesName> parse_series_name(const std::string& s) {
    if (s == "I") return SeriesName::I;
    if (s == "In") return SeriesName::In;
    if (s == "F") return SeriesName::F;
    if (s == "H") return SeriesName::H;
    if (s == "glq") return SeriesName::GLq;
    if (s == "stanley") return SeriesName::Stanley;
    return std::nullopt;
}

/// Named closed-form products:
///   I       prod 1/(1 - t^k)                      (partition numbers)
///   In      prod_{k<=n} 1/(1 - t^k)               (parts bounded by n)
///   F       prod 1/(1 - 2 t^k)
///   H       prod (1 - t^k)/(1 - 2 t^k)
///   glq     prod (1 - t^k)/(1 - q t^k)            (q >= 2; q = 2 gives H)
///   stanley prod (1 - t^i)^(-1/2) * prod_j (1 - t^(2j))^(-2^(j-2))
/// `param` supplies n for In and q for glq and is ignored otherwise.
inline TruncatedSeries named_series(SeriesName name, std::optional<int> param, int D) {
    switch (name) {
        case SeriesName::I:
            return product_over_k(D, [&](int k) { return TruncatedSeries::geometric(D, k); });
        case SeriesName::In: {
            if (!param || *param < 1) throw std::invalid_argument("series In: requires n >= 1");
            int n = *param;
            return product_over_k(D, [&](int k) {
                return k <= n ? TruncatedSeries::geometric(D, k) : TruncatedSeries::one(D);
            });
        }
        case SeriesName::F:
            return product_over_k(D, [&](int k) { return TruncatedSeries::geometric(D, k, Rat(2)); });
        case SeriesName::H:
            return named_series(SeriesName::GLq, 2, D);
        case SeriesName::GLq: {
            if (!param || *param < 2) throw std::invalid_argument("series glq: requires q >= 2");
            Rat q(*param);
            return product_over_k(D, [&](int k) {
                return TruncatedSeries::one_minus(D, k) * TruncatedSeries::geometric(D, k, q);
            });
        }
        case SeriesName::Stanley:
            // Fold the even-index factors into the main product so the
            // 1 + O(t^k) convergence check applies uniformly. The exponent
            // -2^(j-2) is the rational -1/2 at j = 1.
            return product_over_k(D, [&](int k) {
                TruncatedSeries f = pow(TruncatedSeries::one_minus(D, k), Rat(-1, 2));
                if (k % 2 == 0) {
                    int j = k / 2;
                    Rat e = j == 1 ? Rat(1, 2) : Rat(pow2(static_cast<unsigned long>(j - 2)));
                    f = f * pow(TruncatedSeries::one_minus(D, k), -e);
                }
                return f;
            });
    }
    throw std::invalid_argument("series: unknown name");
}

/// The principal specialization s_lambda(t, t^2, t^3, ...) in hook form:
///     t^(|lambda| + n(lambda)) * prod over cells 1/(1 - t^hook).
inline TruncatedSeries principal_specialization(const Partition& lambda, int D) {
    long long valuation = lambda.size() + lambda.n_stat();
    if (valuation > D) return TruncatedSeries(D);
    TruncatedSeries out = TruncatedSeries::monomial(D, static_cast<int>(valuation), Rat(1));
    for (int h : lambda.hook_lengths()) {
        out = out * TruncatedSeries::geometric(D, h);
    }
    return out;
}

}  // namespace sympair
