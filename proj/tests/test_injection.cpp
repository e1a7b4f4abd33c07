#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "schurratio/injection.hpp"

using namespace schurratio;

namespace {

SkewTableau tab(const Partition& outer, int d, int nlabels, std::vector<std::vector<int>> rows) {
    return SkewTableau(SkewShape::strip_first_row(outer, d), nlabels, std::move(rows));
}

// Two pairs for rho = (5,4), lambda = (4,4), five labels, d = 1, e = 2.
const Partition kRho{5, 4};
const Partition kLambda{4, 4};
SkewTableau s1() { return tab(kRho, 1, 5, {{2, 2, 3, 3}, {2, 3, 4, 5}}); }
SkewTableau t1() { return tab(kLambda, 2, 5, {{3, 4}, {2, 3, 4, 5}}); }
SkewTableau s2() { return tab(kRho, 1, 5, {{2, 3, 3, 3}, {2, 3, 4, 5}}); }
SkewTableau t2() { return tab(kLambda, 2, 5, {{2, 4}, {2, 3, 4, 5}}); }

SwapRegion region(std::vector<Cell> cells, Cell root) {
    std::sort(cells.begin(), cells.end());
    return {cells, root};
}

} // namespace

TEST_CASE("raw swap on a three-row example") {
    const SkewTableau s = tab(Partition{5, 3, 1}, 2, 4, {{1, 1, 2}, {1, 1, 2}, {3}});
    const SkewTableau t = tab(Partition{4, 3, 1}, 3, 4, {{3}, {2, 3, 4}, {4}});
    const SwapRegion u = region({{1, 4}, {1, 5}, {2, 2}, {2, 3}}, {1, 5});
    const auto [sp, tp] = swap_pair(s, t, u);
    CHECK(sp.entries == std::vector<std::vector<int>>{{0, 0, 0, 1, 2}, {2, 1, 2}, {4}});
    CHECK(tp.entries == std::vector<std::vector<int>>{{0, 0, 1, 3, 0}, {1, 3, 4}, {3}});
    CHECK(render_ascii(sp) == ". . . 1 2\n2 1 2\n4\n");

    const OneBoxSetting setting = OneBoxSetting::from_pair(s, t);
    std::vector<int> a, b;
    setting.swapped_values(setting.s_values(s), setting.t_values(t), setting.mask_from_region(u), a, b);
    CHECK_FALSE(setting.as_target_pair(a, b).has_value());
    CHECK_THROWS_AS(swap_pair(s, t, region({{1, 4}}, {1, 5})), std::invalid_argument);
}

TEST_CASE("regions for the greedy counterexample") {
    const auto tr1 = spanning_tree_region(s1(), t1());
    CHECK(tr1.final_region.cells == std::vector<Cell>{{1, 4}, {1, 5}});
    CHECK(tr1.steps.size() == 1);
    CHECK(tr1.steps[0] == SpanningTreeStep{{1, 4}, {1, 5}});
    CHECK(greedy_region(s1(), t1()).cells == std::vector<Cell>{{1, 3}, {1, 4}, {1, 5}});
    CHECK(spanning_tree_region(s2(), t2()).final_region.cells == std::vector<Cell>{{1, 4}, {1, 5}});
    CHECK(greedy_region(s2(), t2()).cells == std::vector<Cell>{{1, 4}, {1, 5}});
}

TEST_CASE("greedy map collides where phi separates") {
    const TableauPair bottom{tab(kRho, 2, 5, {{2, 3, 3}, {2, 3, 4, 5}}), tab(kLambda, 1, 5, {{2, 3, 4}, {2, 3, 4, 5}})};
    CHECK(greedy_map(s1(), t1()) == bottom);
    CHECK(greedy_map(s2(), t2()) == bottom);
    CHECK(phi(s2(), t2()) == bottom);
    const TableauPair other{tab(kRho, 2, 5, {{3, 3, 3}, {2, 3, 4, 5}}), tab(kLambda, 1, 5, {{2, 2, 4}, {2, 3, 4, 5}})};
    CHECK(phi(s1(), t1()) == other);
    CHECK(pair_monomial(phi(s1(), t1())) == pair_monomial({s1(), t1()}));
}

TEST_CASE("phi needs d < e") {
    const SkewTableau s = tab(Partition{2, 1}, 1, 2, {{1}, {2}});
    const SkewTableau t = tab(Partition{1, 1}, 1, 2, {{}, {1}});
    CHECK_THROWS_AS(phi(s, t), std::invalid_argument);
    CHECK_THROWS_AS(OneBoxSetting(Partition{2, 2}, Partition{1, 1}, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("seeds do not change the region") {
    for (const auto& [s, t] : pair_set(kRho, kLambda, 4, 1, 2)) {
        const auto base = spanning_tree_region(s, t, 0).final_region;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            REQUIRE(spanning_tree_region(s, t, seed).final_region == base);
        }
    }
}

TEST_CASE("injectivity report on the counterexample family") {
    InjectivityOptions opts;
    opts.compare_greedy = true;
    opts.seeds = 3;
    const auto r = verify_injectivity(kRho, kLambda, 5, 1, 2, opts);
    CHECK(r.ok());
    CHECK(r.image_size == r.domain_size);
    CHECK(r.domain_size <= r.codomain_size);
    CHECK_FALSE(r.greedy_injective);
    CHECK_FALSE(r.greedy_collisions.empty());
}

TEST_CASE("minimality over every valid region") {
    InjectivityOptions opts;
    opts.check_minimality = true;
    for (int n = 2; n <= 6; ++n) {
        for (const auto& rho : partitions_of(n)) {
            for (std::size_t row : removable_rows(rho)) {
                const auto lambda = remove_box(rho, row);
                for (int e = 1; e <= lambda.part(0); ++e) {
                    for (int d = 0; d < e; ++d) {
                        const auto r = verify_injectivity(rho, lambda, 3, d, e, opts);
                        REQUIRE(r.ok());
                        REQUIRE(r.minimal);
                    }
                }
            }
        }
    }
}

TEST_CASE("first-column swap") {
    const SkewTableau s(SkewShape(Partition{2, 1}), 2, {{1, 1}, {2}});
    const SkewTableau t(SkewShape::strip_first_row(Partition{1, 1}, 1), 2, {{}, {1}});
    const TableauPair out = psi(s, t);
    CHECK(out.s.shape() == SkewShape::strip_first_row(Partition{2, 1}, 1));
    CHECK(out.s.rows() == std::vector<std::vector<int>>{{1}, {1}});
    CHECK(out.t.rows() == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(psi_inverse(out.s, out.t) == TableauPair{s, t});
    CHECK_THROWS_AS(psi(SkewTableau(SkewShape(Partition{2, 1}), 3, {{1, 1}, {2}}),
                        SkewTableau(SkewShape::strip_first_row(Partition{1, 1}, 1), 3, {{}, {1}})),
                    std::invalid_argument);
}

TEST_CASE("first-column swap is a monomial-preserving bijection") {
    for (int size = 2; size <= 6; ++size) {
        for (const auto& rho : partitions_of(size)) {
            const int n = static_cast<int>(rho.length());
            if (n > 3) {
                continue;
            }
            for (std::size_t row : removable_rows(rho)) {
                const auto lambda = remove_box(rho, row);
                if (static_cast<int>(lambda.length()) != n) {
                    continue;
                }
                const auto domain = pair_set(rho, lambda, n, 0, 1);
                REQUIRE(domain.size() == pair_set_size(rho, lambda, n, 1, 0));
                std::set<std::vector<int>> images;
                for (const auto& p : domain) {
                    const auto q = psi(p.s, p.t);
                    REQUIRE(q.s.is_semistandard());
                    REQUIRE(q.t.is_semistandard());
                    REQUIRE(pair_monomial(q) == pair_monomial(p));
                    REQUIRE(psi_inverse(q.s, q.t) == p);
                    images.insert(pair_key(q));
                }
                REQUIRE(images.size() == domain.size());
            }
        }
    }
}

TEST_CASE("small exhaustive sweep") {
    InjectivityOptions opts;
    opts.seeds = 2;
    const auto r = sweep_injectivity(5, 3, opts, 2);
    CHECK(r.instances > 0);
    CHECK(r.failures == 0);
}
