#include <catch2/catch_amalgamated.hpp>

#include "schurratio/arith.hpp"
#include "schurratio/partition.hpp"
#include "schurratio/polynomial.hpp"

using namespace schurratio;

TEST_CASE("rationals print reduced and parse back") {
    CHECK(to_string(BigRational(2, 4)) == "1/2");
    CHECK(to_string(BigRational(6, 3)) == "2");
    CHECK(to_string(BigRational(-3, 9)) == "-1/3");
    CHECK(parse_rational("10/4") == BigRational(5, 2));
    CHECK(parse_rational("-7") == BigRational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(gcd_int(-12, 18) == 6);
}

TEST_CASE("partitions validate and normalize") {
    const Partition p{2, 1, 0, 0};
    CHECK(p.length() == 2);
    CHECK(p == Partition{2, 1});
    CHECK(p.size() == 3);
    CHECK(p.part(5) == 0);
    CHECK(p.padded(4) == std::vector<int>{2, 1, 0, 0});
    CHECK(p.str() == "(2,1)");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("containment is componentwise") {
    CHECK(partition_contains(Partition{1, 1}, Partition{2, 1}));
    CHECK(partition_contains(Partition{2, 1}, Partition{2, 1}));
    CHECK_FALSE(partition_contains(Partition{3}, Partition{2, 2}));
    CHECK(partition_contains(Partition{}, Partition{1}));
}

TEST_CASE("skew shapes list their cells row-major") {
    const SkewShape s = SkewShape::strip_first_row(Partition{5, 4}, 1);
    CHECK(s.size() == 8);
    CHECK(s.cells().front() == Cell{1, 2});
    CHECK(s.cells().back() == Cell{2, 4});
    CHECK_FALSE(s.contains({1, 1}));
    CHECK(s.row_length(1) == 4);
    CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), std::invalid_argument);
    CHECK_THROWS(SkewShape::strip_first_row(Partition{2}, 3));
}

TEST_CASE("one-box chains") {
    CHECK(one_box_chain(Partition{2, 1}, Partition{1, 1}) == std::vector<Partition>{{2, 1}, {1, 1}});
    CHECK(one_box_chain(Partition{2, 2}, Partition{1}) ==
          std::vector<Partition>{{2, 2}, {2, 1}, {2}, {1}});
    CHECK(one_box_chain(Partition{3, 1}, Partition{3, 1}) == std::vector<Partition>{{3, 1}});
    CHECK_THROWS_AS(one_box_chain(Partition{2}, Partition{1, 1}), std::invalid_argument);

    // Every step on every small pair removes exactly one box and stays a partition.
    for (int n = 1; n <= 6; ++n) {
        for (const auto& rho : partitions_of(n)) {
            for (const auto& lambda : subpartitions(rho)) {
                const auto chain = one_box_chain(rho, lambda);
                REQUIRE(chain.front() == rho);
                REQUIRE(chain.back() == lambda);
                REQUIRE(chain.size() == static_cast<std::size_t>(rho.size() - lambda.size() + 1));
                for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                    REQUIRE(one_box_row(chain[i], chain[i + 1]).has_value());
                }
            }
        }
    }
}

TEST_CASE("partition enumeration counts") {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n) {
        CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
    }
    CHECK(subpartitions(Partition{2, 1}).size() == 5);  // (), (1), (2), (1,1), (2,1)
    CHECK(removable_rows(Partition{2, 2, 1}) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("polynomial ring operations") {
    const auto x1 = SparsePolynomial::variable(2, 0);
    const auto x2 = SparsePolynomial::variable(2, 1);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    const auto p = (x1 + x2) * (x1 + x2);
    CHECK((p + BigInt(-1) * p).is_zero());
    CHECK(p == x1 * x1 + BigInt(2) * x1 * x2 + x2 * x2);
    CHECK(p.str() == "x1^2 + 2*x1*x2 + x2^2");
    CHECK(p.max_coefficient() == 2);
    CHECK(SparsePolynomial(3).max_coefficient() == 0);
    CHECK_THROWS_AS(x1 + SparsePolynomial::variable(3, 0), std::invalid_argument);
}

TEST_CASE("terms are ordered by graded lex, largest first") {
    const auto x1 = SparsePolynomial::variable(2, 0);
    const auto x2 = SparsePolynomial::variable(2, 1);
    const auto p = x2 + x1 * x2 + x1 * x1 + x1 + SparsePolynomial::constant(2, 1);
    std::vector<ExponentVector> order;
    for (const auto& [e, c] : p.terms()) {
        order.push_back(e);
    }
    CHECK(order == std::vector<ExponentVector>{{2, 0}, {1, 1}, {1, 0}, {0, 1}, {0, 0}});
}

TEST_CASE("exact evaluation") {
    const auto x1 = SparsePolynomial::variable(2, 0);
    const auto x2 = SparsePolynomial::variable(2, 1);
    CHECK((x1 + x2).evaluate(std::vector<BigRational>{1, 1}) == 2);
    CHECK((x1 * x2).evaluate(std::vector<BigRational>{BigRational(1, 2), 4}) == 2);
    CHECK(SparsePolynomial(2).evaluate(std::vector<BigRational>{3, 5}) == 0);
    CHECK_THROWS_AS((x1 * x2).evaluate(std::vector<BigRational>{1}), std::invalid_argument);
}

TEST_CASE("derivatives, permutations, embedding") {
    const auto x1 = SparsePolynomial::variable(3, 0);
    const auto x3 = SparsePolynomial::variable(3, 2);
    const auto p = x1 * x1 * x3 + BigInt(3) * x3;
    CHECK(p.derivative(2) == x1 * x1 + SparsePolynomial::constant(3, 3));
    CHECK(p.derivative(1).is_zero());
    CHECK(p.swapped(0, 2) == x3 * x3 * x1 + BigInt(3) * x1);
    CHECK(SparsePolynomial::variable(2, 1).embedded(3) == SparsePolynomial::variable(3, 1));
    CHECK(x1.shifted(2, 2) == x1 * x3 * x3);
    CHECK(p.degree_in(0) == 2);
}
