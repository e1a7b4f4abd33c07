#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "schurratio/tableau.hpp"

using namespace schurratio;

TEST_CASE("semistandard validation") {
    CHECK(SkewTableau(SkewShape(Partition{3}), 2, {{1, 1, 2}}).is_semistandard());
    CHECK_FALSE(SkewTableau(SkewShape(Partition{1, 1}), 2, {{2}, {2}}).is_semistandard());
    CHECK_FALSE(SkewTableau(SkewShape(Partition{2}), 2, {{2, 1}}).is_semistandard());
    CHECK_FALSE(SkewTableau(SkewShape(Partition{1}), 2, {{3}}).is_semistandard());
    const SkewTableau swapped(SkewShape::strip_first_row(Partition{5, 3, 1}, 2), 4, {{1, 1, 2}, {1, 1, 2}, {3}});
    CHECK(validate(swapped));
    CHECK_THROWS_AS(SkewTableau(SkewShape(Partition{2}), 2, {{1}}), std::invalid_argument);
}

TEST_CASE("monomials count label multiplicities") {
    CHECK(monomial(SkewTableau(SkewShape(Partition{1, 1}), 2, {{1}, {2}})) == ExponentVector{1, 1});
    const SkewTableau swapped(SkewShape::strip_first_row(Partition{5, 3, 1}, 2), 4, {{1, 1, 2}, {1, 1, 2}, {3}});
    CHECK(monomial(swapped) == ExponentVector{4, 2, 1, 0});
    CHECK(monomial(SkewTableau(SkewShape(Partition{}), 3, {})) == ExponentVector{0, 0, 0});
}

TEST_CASE("small enumerations") {
    CHECK(count(SkewShape(Partition{1, 1}), 2) == 1);
    const auto row = enumerate(SkewShape(Partition{2}), 2);
    REQUIRE(row.size() == 3);
    CHECK(row[0].rows()[0] == std::vector<int>{1, 1});
    CHECK(row[1].rows()[0] == std::vector<int>{1, 2});
    CHECK(row[2].rows()[0] == std::vector<int>{2, 2});
    CHECK(count(SkewShape(Partition{2, 1}), 3) == 8);
    CHECK(count(SkewShape(Partition{1}), 7) == 7);
    CHECK(count(SkewShape(Partition{2, 1}, Partition{1}), 2) == 4);
    CHECK(count(SkewShape(Partition{}), 3) == 1);
    CHECK(count(SkewShape(Partition{1}), 0) == 0);
}

TEST_CASE("enumeration agrees with brute force and hook-content") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& outer : partitions_of(n)) {
            for (const auto& inner : subpartitions(outer)) {
                for (int labels = 1; labels <= 3; ++labels) {
                    const auto brute = oracle::brute_fillings(outer, inner, labels);
                    const auto mine = enumerate(SkewShape(outer, inner), labels);
                    REQUIRE(mine.size() == brute.size());
                    std::set<std::vector<int>> words;
                    for (const auto& t : mine) {
                        REQUIRE(t.is_semistandard());
                        words.insert(t.reading_word());
                    }
                    REQUIRE(words == std::set<std::vector<int>>(brute.begin(), brute.end()));
                    if (inner.empty()) {
                        REQUIRE(BigInt(mine.size()) == oracle::hook_content(outer, labels));
                    }
                }
            }
        }
    }
}

TEST_CASE("early stop") {
    int seen = 0;
    for_each_tableau(SkewShape(Partition{3, 2}), 4, [&](const SkewTableau&) { return ++seen < 5; });
    CHECK(seen == 5);
}

TEST_CASE("ascii rendering marks removed cells") {
    const SkewTableau t(SkewShape::strip_first_row(Partition{3, 2}, 1), 3, {{1, 2}, {2, 3}});
    CHECK(render_ascii(t) == ". 1 2\n2 3\n");
}
