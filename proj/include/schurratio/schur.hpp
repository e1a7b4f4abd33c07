#ifndef SCHURRATIO_SCHUR_HPP
#define SCHURRATIO_SCHUR_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "tableau.hpp"

namespace schurratio {

/// Raised when the Vandermonde denominator vanishes (repeated coordinates).
class DegeneratePointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sum of x^T over the semistandard fillings of `shape` with labels <= nvars.
inline SparsePolynomial schur_poly(const SkewShape& shape, std::size_t nvars) {
    SparsePolynomial p(nvars);
    for_each_tableau(shape, static_cast<int>(nvars), [&](const SkewTableau& t) { p.add_term(monomial(t), 1); });
    return p;
}

inline SparsePolynomial schur_poly(const Partition& shape, std::size_t nvars) {
    return schur_poly(SkewShape(shape), nvars);
}

/// All mu inside rho such that rho/mu is a horizontal strip of d boxes,
/// in increasing lexicographic order.
inline std::vector<Partition> horizontal_strips(const Partition& rho, int d) {
    if (d < 0 || d > rho.size()) {
        throw std::invalid_argument("strip length " + std::to_string(d) + " out of range for " + rho.str());
    }
    // rho/mu is a horizontal strip iff rho_{i+1} <= mu_i <= rho_i for all i.
    std::vector<Partition> out;
    const std::size_t n = rho.length();
    std::vector<int> mu(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int removed) -> void {
        if (i == n) {
            if (removed == d) {
                out.emplace_back(mu);
            }
            return;
        }
        for (int m = rho.part(i + 1); m <= rho.part(i); ++m) {
            const int r = removed + rho.part(i) - m;
            if (r > d) {
                continue;
            }
            mu[i] = m;
            self(self, i + 1, r);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Memo of skew Schur polynomials keyed by (shape, nvars). Safe for
/// concurrent use; returned polynomials are copies.
class SchurContext {
public:
    SparsePolynomial get(const SkewShape& shape, std::size_t nvars) {
        {
            std::lock_guard lock(mutex_);
            auto it = cache_.find({shape, nvars});
            if (it != cache_.end()) {
                return it->second;
            }
        }
        SparsePolynomial p = schur_poly(shape, nvars);
        std::lock_guard lock(mutex_);
        return cache_.try_emplace({shape, nvars}, std::move(p)).first->second;
    }

    SparsePolynomial get(const Partition& shape, std::size_t nvars) { return get(SkewShape(shape), nvars); }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return cache_.size();
    }

private:
    mutable std::mutex mutex_;
    std::map<std::pair<SkewShape, std::size_t>, SparsePolynomial> cache_;
};

/// s_rho(x_1..x_N) = sum_d x_N^d s_{rho/d}(x_1..x_{N-1}). Returns the pairs
/// (d, s_{rho/d}) for d = 0..rho_1, each polynomial in nvars - 1 variables.
inline std::vector<std::pair<int, SparsePolynomial>> skew_decomposition(const Partition& rho, std::size_t nvars,
                                                                         SchurContext* ctx = nullptr) {
    if (nvars < 1) {
        throw std::invalid_argument("skew_decomposition needs at least one variable");
    }
    std::vector<std::pair<int, SparsePolynomial>> out;
    for (int d = 0; d <= rho.part(0); ++d) {
        const SkewShape shape = SkewShape::strip_first_row(rho, d);
        out.emplace_back(d, ctx ? ctx->get(shape, nvars - 1) : schur_poly(shape, nvars - 1));
    }
    return out;
}

/// Inverse of skew_decomposition: sum_d x_N^d s_{rho/d}.
inline SparsePolynomial reassemble(const std::vector<std::pair<int, SparsePolynomial>>& parts, std::size_t nvars) {
    SparsePolynomial total(nvars);
    for (const auto& [d, p] : parts) {
        total += p.embedded(nvars).shifted(nvars - 1, d);
    }
    return total;
}

namespace detail {

inline BigRational determinant(std::vector<std::vector<BigRational>> m) {
    const std::size_t n = m.size();
    BigRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return BigRational(0);
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            const BigRational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    return det;
}

inline BigRational rational_pow(const BigRational& x, int k) {
    BigRational out(1);
    for (int i = 0; i < k; ++i) {
        out *= x;
    }
    return out;
}

} // namespace detail

/// Ratio of alternants det(x_i^{lambda_j + N - j}) / det(x_i^{N - j}).
/// Throws DegeneratePointError when two coordinates coincide.
inline BigRational schur_bialternant(const Partition& lambda, std::span<const BigRational> point) {
    const std::size_t n = point.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (point[i] == point[j]) {
                throw DegeneratePointError("bialternant needs pairwise-distinct coordinates; x" +
                                           std::to_string(i + 1) + " = x" + std::to_string(j + 1) + " = " +
                                           to_string(point[i]));
            }
        }
    }
    if (lambda.length() > n) {
        return BigRational(0);
    }
    std::vector<std::vector<BigRational>> num(n, std::vector<BigRational>(n));
    std::vector<std::vector<BigRational>> den(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int shift = static_cast<int>(n - 1 - j);
            num[i][j] = detail::rational_pow(point[i], lambda.part(j) + shift);
            den[i][j] = detail::rational_pow(point[i], shift);
        }
    }
    return detail::determinant(std::move(num)) / detail::determinant(std::move(den));
}

inline BigRational schur_bialternant(const Partition& lambda, const std::vector<BigRational>& point) {
    return schur_bialternant(lambda, std::span<const BigRational>(point));
}

/// Evaluates s_lambda at a point by peeling off one variable at a time:
/// s_mu(x_1..x_k) = sum over horizontal strips mu/nu of x_k^{|mu|-|nu|} s_nu(x_1..x_{k-1}).
/// Exact for any point, including repeated coordinates.
template <typename Scalar>
Scalar schur_eval_branching(const Partition& lambda, std::span<const Scalar> point) {
    std::map<std::pair<std::size_t, Partition>, Scalar> memo;
    auto rec = [&](auto&& self, std::size_t k, const Partition& mu) -> Scalar {
        if (mu.empty()) {
            return Scalar(1);
        }
        if (mu.length() > k) {
            return Scalar(0);
        }
        auto key = std::make_pair(k, mu);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        const Scalar& x = point[k - 1];
        Scalar total(0);
        for (int d = 0; d <= mu.part(0); ++d) {
            Scalar xpow(1);
            for (int i = 0; i < d; ++i) {
                xpow *= x;
            }
            if (xpow == 0) {
                continue;
            }
            for (const Partition& nu : horizontal_strips(mu, d)) {
                if (nu.length() > k - 1) {
                    continue;
                }
                total += xpow * self(self, k - 1, nu);
            }
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(rec, point.size(), lambda);
}

/// Number of semistandard fillings of lambda with labels <= n, by the
/// product formula prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
inline BigInt semistandard_count(const Partition& lambda, std::size_t n) {
    if (lambda.length() > n) {
        return 0;
    }
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= lambda.part(i) - lambda.part(j) + static_cast<int>(j - i);
            den *= static_cast<int>(j - i);
        }
    }
    return num / den;
}

/// Route selection for evaluating straight Schur polynomials at rational
/// points. Shapes whose tableau count fits the term budget are expanded once
/// (memoized) and evaluated; larger ones use the bialternant when the
/// coordinates are distinct and the branching recursion otherwise.
class SchurEvaluator {
public:
    enum class Route { expanded, bialternant, branching };

    explicit SchurEvaluator(std::size_t term_budget = 1'000'000) : term_budget_(term_budget) {}

    BigRational evaluate(const Partition& lambda, std::span<const BigRational> point, Route* route = nullptr) {
        const std::size_t n = point.size();
        if (semistandard_count(lambda, n) <= term_budget_) {
            if (route) {
                *route = Route::expanded;
            }
            return context_.get(lambda, n).evaluate(point);
        }
        if (distinct(point)) {
            if (route) {
                *route = Route::bialternant;
            }
            return schur_bialternant(lambda, point);
        }
        if (route) {
            *route = Route::branching;
        }
        return schur_eval_branching(lambda, point);
    }

    BigRational evaluate(const Partition& lambda, const std::vector<BigRational>& point, Route* route = nullptr) {
        return evaluate(lambda, std::span<const BigRational>(point), route);
    }

    [[nodiscard]] std::size_t term_budget() const { return term_budget_; }
    SchurContext& context() { return context_; }

private:
    static bool distinct(std::span<const BigRational> point) {
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::size_t j = i + 1; j < point.size(); ++j) {
                if (point[i] == point[j]) {
                    return false;
                }
            }
        }
        return true;
    }

    std::size_t term_budget_;
    SchurContext context_;
};

} // namespace schurratio

#endif // SCHURRATIO_SCHUR_HPP
