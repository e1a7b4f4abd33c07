// Independent reference computations used only by the tests. Nothing here
// calls into the library's enumeration or evaluation code.
#ifndef SCHURRATIO_TESTS_ORACLES_HPP
#define SCHURRATIO_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "schurratio/arith.hpp"
#include "schurratio/partition.hpp"
#include "schurratio/polynomial.hpp"

namespace oracle {

using schurratio::BigInt;
using schurratio::BigRational;
using schurratio::Partition;
using schurratio::SparsePolynomial;

/// s_lambda(1,...,1) with n ones: prod over cells (n + content) / hook.
inline BigInt hook_content(const Partition& lambda, int n) {
    BigInt num = 1, den = 1;
    const std::size_t rows = lambda.length();
    for (std::size_t i = 0; i < rows; ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            const int content = j - static_cast<int>(i);
            int leg = 0;
            for (std::size_t k = i + 1; k < rows && lambda.part(k) > j; ++k) {
                ++leg;
            }
            const int hook = lambda.part(i) - j - 1 + leg + 1;
            num *= n + content;
            den *= hook;
        }
    }
    return num / den;
}

/// Fillings of outer/inner with labels 1..n by trying every assignment.
inline std::vector<std::vector<int>> brute_fillings(const Partition& outer, const Partition& inner, int n) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < outer.length(); ++i) {
        for (int j = inner.part(i); j < outer.part(i); ++j) {
            cells.emplace_back(static_cast<int>(i), j);
        }
    }
    std::vector<std::vector<int>> out;
    if (n < 1 && !cells.empty()) {
        return out;
    }
    std::vector<int> fill(cells.size(), 1);
    auto value = [&](int r, int c) -> int {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (cells[k].first == r && cells[k].second == c) {
                return fill[k];
            }
        }
        return -1;
    };
    for (;;) {
        bool ok = true;
        for (std::size_t k = 0; k < cells.size() && ok; ++k) {
            const auto [r, c] = cells[k];
            const int right = value(r, c + 1);
            const int below = value(r + 1, c);
            ok = (right < 0 || fill[k] <= right) && (below < 0 || fill[k] < below);
        }
        if (ok) {
            out.push_back(fill);
        }
        std::size_t k = 0;
        while (k < fill.size() && fill[k] == n) {
            fill[k++] = 1;
        }
        if (k == fill.size()) {
            break;
        }
        ++fill[k];
    }
    return out;
}

/// Schur polynomial from brute_fillings.
inline SparsePolynomial brute_schur(const Partition& outer, const Partition& inner, int n) {
    SparsePolynomial p(static_cast<std::size_t>(n));
    for (const auto& f : brute_fillings(outer, inner, n)) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int v : f) {
            ++e[static_cast<std::size_t>(v - 1)];
        }
        p.add_term(e, 1);
    }
    return p;
}

/// mu with rho/mu a horizontal strip of d boxes, by checking every mu inside
/// rho for two boxes in one column.
inline std::set<Partition> brute_strips(const Partition& rho, int d) {
    std::set<Partition> out;
    const std::size_t n = rho.length();
    std::vector<int> mu(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (std::size_t k = 0; k + 1 < n; ++k) {
                if (mu[k] < mu[k + 1]) {
                    return;
                }
            }
            int removed = 0;
            std::vector<int> per_column(static_cast<std::size_t>(rho.part(0)) + 1, 0);
            for (std::size_t r = 0; r < n; ++r) {
                for (int c = mu[r]; c < rho.part(r); ++c) {
                    ++removed;
                    ++per_column[static_cast<std::size_t>(c)];
                }
            }
            if (removed == d && std::all_of(per_column.begin(), per_column.end(), [](int x) { return x <= 1; })) {
                out.insert(Partition(mu));
            }
            return;
        }
        for (int m = 0; m <= rho.part(i); ++m) {
            mu[i] = m;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// prod_{i<j} (x_i + x_j) in n variables.
inline SparsePolynomial staircase_product(std::size_t n) {
    SparsePolynomial p = SparsePolynomial::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            p = p * (SparsePolynomial::variable(n, i) + SparsePolynomial::variable(n, j));
        }
    }
    return p;
}

/// Leibniz expansion of a small determinant.
inline BigRational leibniz(const std::vector<std::vector<BigRational>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    BigRational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        BigRational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) {
            term *= m[i][perm[i]];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline BigRational power(const BigRational& x, int k) {
    BigRational out = 1;
    for (int i = 0; i < k; ++i) {
        out *= x;
    }
    return out;
}

/// det(x_i^{lambda_j + n - j}) / det(x_i^{n - j}) via Leibniz.
inline BigRational bialternant(const Partition& lambda, const std::vector<BigRational>& x) {
    const std::size_t n = x.size();
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n)), v = a;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = power(x[i], lambda.part(j) + static_cast<int>(n - 1 - j));
            v[i][j] = power(x[i], static_cast<int>(n - 1 - j));
        }
    }
    return leibniz(a) / leibniz(v);
}

/// n distinct positive rationals p/q with p in 1..40, q in 1..9.
inline std::vector<BigRational> distinct_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(1, 40), den(1, 9);
    std::vector<BigRational> out;
    while (out.size() < n) {
        BigRational x(num(rng), den(rng));
        if (std::find(out.begin(), out.end(), x) == out.end()) {
            out.push_back(x);
        }
    }
    return out;
}

} // namespace oracle

#endif // SCHURRATIO_TESTS_ORACLES_HPP
