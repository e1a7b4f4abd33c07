#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "schurratio/schur.hpp"

using namespace schurratio;

TEST_CASE("schur polynomials of tiny shapes") {
    SparsePolynomial e1(4);
    for (std::size_t i = 0; i < 4; ++i) {
        e1 += SparsePolynomial::variable(4, i);
    }
    CHECK(schur_poly(Partition{1}, 4) == e1);
    CHECK(schur_poly(Partition{}, 3) == SparsePolynomial::constant(3, 1));
    CHECK(schur_poly(Partition{1, 1, 1}, 2).is_zero());
    CHECK(schur_poly(Partition{3, 2, 1}, 4).evaluate(std::vector<BigRational>{1, 1, 2, 2}) == 648);
}

TEST_CASE("schur polynomials match the brute-force oracle") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& outer : partitions_of(n)) {
            for (const auto& inner : subpartitions(outer)) {
                for (int vars = 1; vars <= 3; ++vars) {
                    REQUIRE(schur_poly(SkewShape(outer, inner), static_cast<std::size_t>(vars)) ==
                            oracle::brute_schur(outer, inner, vars));
                }
            }
        }
    }
}

TEST_CASE("schur polynomials are symmetric") {
    for (const auto& lambda : partitions_of(4)) {
        const auto p = schur_poly(lambda, 4);
        for (std::size_t i = 0; i + 1 < 4; ++i) {
            REQUIRE(p.swapped(i, i + 1) == p);
        }
    }
}

TEST_CASE("staircase identity") {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<int> stair;
        for (std::size_t i = 0; i < n; ++i) {
            stair.push_back(static_cast<int>(n - 1 - i));
        }
        REQUIRE(schur_poly(Partition(stair), n) == oracle::staircase_product(n));
    }
}

TEST_CASE("horizontal strips") {
    CHECK(horizontal_strips(Partition{2, 1}, 1) == std::vector<Partition>{{1, 1}, {2}});
    CHECK(horizontal_strips(Partition{2, 1}, 2) == std::vector<Partition>{{1}});
    CHECK(horizontal_strips(Partition{2}, 0) == std::vector<Partition>{{2}});
    CHECK_THROWS_AS(horizontal_strips(Partition{2}, 3), std::invalid_argument);
    for (int n = 1; n <= 7; ++n) {
        for (const auto& rho : partitions_of(n)) {
            for (int d = 0; d <= rho.part(0); ++d) {
                const auto mine = horizontal_strips(rho, d);
                REQUIRE(std::set<Partition>(mine.begin(), mine.end()) == oracle::brute_strips(rho, d));
            }
        }
    }
}

TEST_CASE("skew decomposition by the last variable") {
    const auto parts = skew_decomposition(Partition{1}, 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == SparsePolynomial::variable(1, 0));
    CHECK(parts[1].second == SparsePolynomial::constant(1, 1));
    const auto row = skew_decomposition(Partition{2}, 2);
    const auto x1 = SparsePolynomial::variable(1, 0);
    CHECK(row[0].second == x1 * x1);
    CHECK(row[1].second == x1);
    CHECK(row[2].second == SparsePolynomial::constant(1, 1));

    SchurContext ctx;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& rho : partitions_of(n)) {
            for (std::size_t vars = std::max<std::size_t>(1, rho.length()); vars <= 4; ++vars) {
                REQUIRE(reassemble(skew_decomposition(rho, vars, &ctx), vars) == schur_poly(rho, vars));
                // s_{rho/d} is the sum of s_mu over horizontal strips rho/mu of size d.
                for (int d = 0; d <= rho.part(0); ++d) {
                    SparsePolynomial strip_sum(vars);
                    for (const auto& mu : horizontal_strips(rho, d)) {
                        strip_sum += schur_poly(mu, vars);
                    }
                    REQUIRE(strip_sum == schur_poly(SkewShape::strip_first_row(rho, d), vars));
                }
            }
        }
    }
    CHECK(ctx.size() > 0);
}

TEST_CASE("bialternant agrees with the tableau sum and the Leibniz oracle") {
    std::mt19937_64 rng(20240611);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (std::size_t vars = lambda.length(); vars <= 4; ++vars) {
                const auto p = schur_poly(lambda, vars);
                for (int trial = 0; trial < 5; ++trial) {
                    const auto x = oracle::distinct_point(rng, vars);
                    const BigRational b = schur_bialternant(lambda, x);
                    REQUIRE(b == p.evaluate(x));
                    REQUIRE(b == oracle::bialternant(lambda, x));
                    REQUIRE(b == schur_eval_branching<BigRational>(lambda, std::span<const BigRational>(x)));
                }
            }
        }
    }
    CHECK(schur_bialternant(Partition{1}, std::vector<BigRational>{1, 2, 3}) == 6);
    CHECK(schur_bialternant(Partition{1, 1, 1}, std::vector<BigRational>{1, 2}) == 0);
    CHECK_THROWS_AS(schur_bialternant(Partition{1, 1}, std::vector<BigRational>{1, 2, 2}), DegeneratePointError);
}

TEST_CASE("weyl count matches hook-content") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int vars = 1; vars <= 6; ++vars) {
                REQUIRE(semistandard_count(lambda, static_cast<std::size_t>(vars)) ==
                        oracle::hook_content(lambda, vars));
            }
        }
    }
}

TEST_CASE("evaluator routes") {
    SchurEvaluator small;
    SchurEvaluator::Route route{};
    const std::vector<BigRational> x{1, 2, 3};
    CHECK(small.evaluate(Partition{2, 1}, x, &route) == schur_poly(Partition{2, 1}, 3).evaluate(x));
    CHECK(route == SchurEvaluator::Route::expanded);

    SchurEvaluator tight(1);
    CHECK(tight.evaluate(Partition{2, 1}, x, &route) == 60);
    CHECK(route == SchurEvaluator::Route::bialternant);
    const std::vector<BigRational> tied{1, 1, 2, 2};
    CHECK(tight.evaluate(Partition{3, 2, 1}, tied, &route) == 648);
    CHECK(route == SchurEvaluator::Route::branching);
}
