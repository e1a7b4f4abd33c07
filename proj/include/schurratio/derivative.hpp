#ifndef SCHURRATIO_DERIVATIVE_HPP
#define SCHURRATIO_DERIVATIVE_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "partition.hpp"
#include "polynomial.hpp"
#include "schur.hpp"

namespace schurratio {

/// Numerator of d/dx_N (s_lambda / s_rho) over the denominator s_rho^2.
struct DerivativeReport {
    Partition rho;
    Partition lambda;
    std::size_t nvars = 0;
    SparsePolynomial numerator;
    BigInt max_coefficient = 0;
    std::size_t term_count = 0;

    [[nodiscard]] bool all_nonpositive() const { return numerator.all_coefficients_nonpositive(); }
};

namespace detail {

inline void check_nvars(const Partition& rho, const Partition& lambda, std::size_t nvars) {
    if (nvars < 1 || nvars < rho.length() || nvars < lambda.length()) {
        throw std::invalid_argument("need nvars >= max(len rho, len lambda) and >= 1; got nvars = " +
                                    std::to_string(nvars) + " for rho = " + rho.str() + ", lambda = " + lambda.str());
    }
}

inline SparsePolynomial skew_in_fewer(const Partition& outer, int d, std::size_t nvars, SchurContext* ctx) {
    const SkewShape shape = SkewShape::strip_first_row(outer, d);
    SparsePolynomial p = ctx ? ctx->get(shape, nvars - 1) : schur_poly(shape, nvars - 1);
    return p.embedded(nvars);
}

} // namespace detail

/// P(d,e) = (e - d) x_N^{d+e-1} s_{rho/d}(x_1..x_{N-1}) s_{lambda/e}(x_1..x_{N-1}).
inline SparsePolynomial p_term(int d, int e, const Partition& rho, const Partition& lambda, std::size_t nvars,
                               SchurContext* ctx = nullptr) {
    detail::check_nvars(rho, lambda, nvars);
    if (d < 0 || d > rho.part(0) || e < 0 || e > lambda.part(0)) {
        throw std::invalid_argument("P(d,e) needs 0 <= d <= rho_1 and 0 <= e <= lambda_1; got d = " +
                                    std::to_string(d) + ", e = " + std::to_string(e));
    }
    if (d == e) {
        return SparsePolynomial(nvars);
    }
    SparsePolynomial prod =
        detail::skew_in_fewer(rho, d, nvars, ctx) * detail::skew_in_fewer(lambda, e, nvars, ctx);
    return BigInt(e - d) * prod.shifted(nvars - 1, d + e - 1);
}

inline DerivativeReport derivative_numerator(const Partition& rho, const Partition& lambda, std::size_t nvars,
                                             SchurContext* ctx = nullptr) {
    detail::check_nvars(rho, lambda, nvars);
    DerivativeReport report{rho, lambda, nvars, SparsePolynomial(nvars), 0, 0};
    for (int d = 0; d <= rho.part(0); ++d) {
        for (int e = 0; e <= lambda.part(0); ++e) {
            report.numerator += p_term(d, e, rho, lambda, nvars, ctx);
        }
    }
    report.max_coefficient = report.numerator.max_coefficient();
    report.term_count = report.numerator.term_count();
    return report;
}

/// Same numerator for d/dx_{var} (0-based), obtained by exchanging x_{var}
/// and x_N in the d/dx_N numerator.
inline DerivativeReport derivative_numerator(const Partition& rho, const Partition& lambda, std::size_t nvars,
                                             std::size_t var, SchurContext* ctx = nullptr) {
    DerivativeReport report = derivative_numerator(rho, lambda, nvars, ctx);
    if (var >= nvars) {
        throw std::invalid_argument("variable index " + std::to_string(var + 1) + " exceeds nvars = " +
                                    std::to_string(nvars));
    }
    if (var != nvars - 1) {
        report.numerator = report.numerator.swapped(var, nvars - 1);
    }
    return report;
}

/// s_rho * d(s_lambda)/dx_{var} - s_lambda * d(s_rho)/dx_{var}, by formal
/// differentiation of the expanded Schur polynomials.
inline SparsePolynomial quotient_rule_numerator(const Partition& rho, const Partition& lambda, std::size_t nvars,
                                                std::size_t var, SchurContext* ctx = nullptr) {
    const SparsePolynomial s_rho = ctx ? ctx->get(rho, nvars) : schur_poly(rho, nvars);
    const SparsePolynomial s_lambda = ctx ? ctx->get(lambda, nvars) : schur_poly(lambda, nvars);
    return s_rho * s_lambda.derivative(var) - s_lambda * s_rho.derivative(var);
}

inline bool verify_quotient_rule(const Partition& rho, const Partition& lambda, std::size_t nvars,
                                 SchurContext* ctx = nullptr) {
    return derivative_numerator(rho, lambda, nvars, ctx).numerator ==
           quotient_rule_numerator(rho, lambda, nvars, nvars - 1, ctx);
}

/// Every coefficient of P(d,e) + P(e,d) is <= 0, for lambda = rho minus one box.
inline bool verify_pair_cancellation(const Partition& rho, const Partition& lambda, std::size_t nvars, int d, int e,
                                     SchurContext* ctx = nullptr) {
    if (!one_box_row(rho, lambda)) {
        throw std::invalid_argument(lambda.str() + " is not " + rho.str() + " minus one box");
    }
    if (d < 0 || d > e || e > lambda.part(0)) {
        throw std::invalid_argument("pair cancellation needs 0 <= d <= e <= lambda_1; got d = " + std::to_string(d) +
                                    ", e = " + std::to_string(e));
    }
    const SparsePolynomial sum = p_term(d, e, rho, lambda, nvars, ctx) + p_term(e, d, rho, lambda, nvars, ctx);
    return sum.all_coefficients_nonpositive();
}

/// Direct check: the numerator has no positive coefficient. lambda = rho is
/// allowed and trivially true.
inline bool verify_general_case(const Partition& rho, const Partition& lambda, std::size_t nvars,
                                SchurContext* ctx = nullptr) {
    if (!partition_contains(lambda, rho)) {
        throw std::invalid_argument(lambda.str() + " is not contained in " + rho.str());
    }
    return derivative_numerator(rho, lambda, nvars, ctx).all_nonpositive();
}

struct ChainCheck {
    std::vector<Partition> chain;
    std::vector<bool> step_nonpositive;  // one entry per one-box step
    bool all_steps = true;
    bool direct = true;
    [[nodiscard]] bool agree() const { return all_steps == direct; }
};

/// Checks the sign claim along the one-box chain from rho down to lambda and
/// directly on (rho, lambda), so the two can be compared.
inline ChainCheck verify_via_chain(const Partition& rho, const Partition& lambda, std::size_t nvars,
                                   SchurContext* ctx = nullptr) {
    ChainCheck out;
    out.chain = one_box_chain(rho, lambda);
    for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
        const bool ok = derivative_numerator(out.chain[i], out.chain[i + 1], nvars, ctx).all_nonpositive();
        out.step_nonpositive.push_back(ok);
        out.all_steps = out.all_steps && ok;
    }
    out.direct = verify_general_case(rho, lambda, nvars, ctx);
    return out;
}

struct DerivativeSweepReport {
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<std::string> failed;  // "rho / lambda, N = n: reason"
};

/// Every lambda strictly inside rho with |rho| <= max_size and every nvars in
/// [min_nvars, max_nvars] with nvars >= len(rho): the numerator is nonzero with
/// no positive coefficient, matches the quotient rule, and the one-box chain
/// check agrees with the direct one.
inline DerivativeSweepReport sweep_derivative(int max_size, std::size_t min_nvars, std::size_t max_nvars,
                                              unsigned jobs = 1) {
    struct Instance {
        Partition rho;
        Partition lambda;
        std::size_t nvars;
    };
    std::vector<Instance> work;
    for (int size = 1; size <= max_size; ++size) {
        for (const Partition& rho : partitions_of(size)) {
            for (std::size_t n = std::max(min_nvars, rho.length()); n <= max_nvars; ++n) {
                for (const Partition& lambda : subpartitions(rho)) {
                    if (lambda != rho) {
                        work.push_back({rho, lambda, n});
                    }
                }
            }
        }
    }
    SchurContext ctx;
    std::vector<std::string> reasons(work.size());
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            const auto& [rho, lambda, n] = work[i];
            const DerivativeReport r = derivative_numerator(rho, lambda, n, &ctx);
            std::string why;
            if (r.numerator.is_zero()) {
                why += " zero numerator;";
            }
            if (!r.all_nonpositive()) {
                why += " positive coefficient " + to_string(r.max_coefficient) + ";";
            }
            if (r.numerator != quotient_rule_numerator(rho, lambda, n, n - 1, &ctx)) {
                why += " quotient rule disagrees;";
            }
            if (!verify_via_chain(rho, lambda, n, &ctx).agree()) {
                why += " chain check disagrees;";
            }
            reasons[i] = why;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1U, jobs); ++j) {
        pool.emplace_back(run);
    }
    run();
    for (auto& t : pool) {
        t.join();
    }
    DerivativeSweepReport out;
    out.instances = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (!reasons[i].empty()) {
            ++out.failures;
            out.failed.push_back(work[i].rho.str() + " / " + work[i].lambda.str() +
                                 ", N = " + std::to_string(work[i].nvars) + ":" + reasons[i]);
        }
    }
    return out;
}

} // namespace schurratio

#endif // SCHURRATIO_DERIVATIVE_HPP
