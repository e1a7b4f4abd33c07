#ifndef SCHURRATIO_INJECTION_HPP
#define SCHURRATIO_INJECTION_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "polynomial.hpp"
#include "tableau.hpp"

// Swapping labelled boxes between a pair (S, T) of skew tableaux of shapes
// rho/d and lambda/e, where lambda is rho minus the box root = (r, rho_r) and
// d < e. Positions (1, j) with d < j <= e carry a virtual T entry 0, and a 0
// in a swapped diagram means the box is absent.

namespace schurratio {

struct TableauPair {
    SkewTableau s;
    SkewTableau t;
    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// Labels placed on the cells of an outer partition; 0 marks a missing box.
struct LabeledDiagram {
    Partition outer;
    std::vector<std::vector<int>> entries;  // entries[i][j] is cell (i+1, j+1)

    [[nodiscard]] int at(Cell c) const {
        return entries.at(static_cast<std::size_t>(c.row - 1)).at(static_cast<std::size_t>(c.col - 1));
    }
    friend bool operator==(const LabeledDiagram&, const LabeledDiagram&) = default;
};

inline std::string render_ascii(const LabeledDiagram& g) {
    int width = 1;
    for (const auto& row : g.entries) {
        for (int v : row) {
            width = std::max(width, static_cast<int>(std::to_string(v).size()));
        }
    }
    std::string out;
    for (const auto& row : g.entries) {
        std::string line;
        for (int v : row) {
            std::string s = v == 0 ? "." : std::to_string(v);
            s.insert(s.begin(), static_cast<std::size_t>(width) - s.size(), ' ');
            line += (line.empty() ? "" : " ") + s;
        }
        out += line + "\n";
    }
    return out;
}

/// Set of positions of rho/d containing the root (r, rho_r). Cells are kept
/// sorted in row-major order.
struct SwapRegion {
    std::vector<Cell> cells;
    Cell root;

    [[nodiscard]] bool contains(Cell c) const { return std::binary_search(cells.begin(), cells.end(), c); }
    [[nodiscard]] bool subset_of(const SwapRegion& other) const {
        return std::includes(other.cells.begin(), other.cells.end(), cells.begin(), cells.end());
    }
    friend bool operator==(const SwapRegion&, const SwapRegion&) = default;
};

/// One growth step: `added` (B_k) joins the region next to `anchor` (C_k).
struct SpanningTreeStep {
    Cell added;
    Cell anchor;
    friend bool operator==(const SpanningTreeStep&, const SpanningTreeStep&) = default;
};

struct SpanningTreeTrace {
    std::vector<SpanningTreeStep> steps;
    SwapRegion final_region;
};

/// Geometry shared by every pair in S_(d,e) for a fixed one-box (rho, lambda).
class OneBoxSetting {
public:
    static constexpr int kAbsent = -1;

    OneBoxSetting(Partition rho, Partition lambda, int d, int e, int nlabels)
        : rho_(std::move(rho)), lambda_(std::move(lambda)), d_(d), e_(e), nlabels_(nlabels) {
        auto r = one_box_row(rho_, lambda_);
        if (!r) {
            throw std::invalid_argument(lambda_.str() + " is not " + rho_.str() + " with one box removed");
        }
        if (d < 0 || e < 0 || d > rho_.part(0) || e > lambda_.part(0)) {
            throw std::invalid_argument("need 0 <= d <= rho_1 and 0 <= e <= lambda_1; got d = " + std::to_string(d) +
                                        ", e = " + std::to_string(e));
        }
        root_ = Cell{static_cast<int>(*r) + 1, rho_.part(*r)};
        cells_ = SkewShape::strip_first_row(rho_, d_).cells();
        index_.assign(rho_.length(), std::vector<int>(static_cast<std::size_t>(rho_.part(0)), -1));
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            index_[static_cast<std::size_t>(cells_[k].row - 1)][static_cast<std::size_t>(cells_[k].col - 1)] =
                static_cast<int>(k);
        }
        root_index_ = static_cast<std::size_t>(index_of(root_));
    }

    /// Derives (rho, lambda, d, e, nlabels) from a pair of tableaux.
    static OneBoxSetting from_pair(const SkewTableau& s, const SkewTableau& t) {
        if (s.shape().inner().length() > 1 || t.shape().inner().length() > 1) {
            throw std::invalid_argument("tableaux must have shapes rho/d and lambda/e");
        }
        if (s.nlabels() != t.nlabels()) {
            throw std::invalid_argument("tableaux use different label counts");
        }
        return OneBoxSetting(s.shape().outer(), t.shape().outer(), s.shape().inner().part(0),
                             t.shape().inner().part(0), s.nlabels());
    }

    [[nodiscard]] const Partition& rho() const { return rho_; }
    [[nodiscard]] const Partition& lambda() const { return lambda_; }
    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] int e() const { return e_; }
    [[nodiscard]] int nlabels() const { return nlabels_; }
    [[nodiscard]] Cell root() const { return root_; }
    [[nodiscard]] std::size_t root_index() const { return root_index_; }
    /// Cells of rho/d, row-major.
    [[nodiscard]] const std::vector<Cell>& cells() const { return cells_; }

    [[nodiscard]] int index_of(Cell c) const {
        if (c.row < 1 || c.col < 1 || c.row > static_cast<int>(rho_.length()) || c.col > rho_.part(0)) {
            return -1;
        }
        return index_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    }

    [[nodiscard]] SkewShape shape_s() const { return SkewShape::strip_first_row(rho_, d_); }
    [[nodiscard]] SkewShape shape_t() const { return SkewShape::strip_first_row(lambda_, e_); }

    void check_pair(const SkewTableau& s, const SkewTableau& t) const {
        if (s.shape() != shape_s() || t.shape() != shape_t()) {
            throw std::invalid_argument("pair has shapes " + s.shape().str() + ", " + t.shape().str() +
                                        "; expected " + shape_s().str() + ", " + shape_t().str());
        }
        if (s.nlabels() != nlabels_ || t.nlabels() != nlabels_) {
            throw std::invalid_argument("pair uses a different label count");
        }
    }

    /// S over the cells of rho/d.
    [[nodiscard]] std::vector<int> s_values(const SkewTableau& s) const {
        std::vector<int> out(cells_.size());
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            out[k] = s.at(cells_[k]);
        }
        return out;
    }

    /// T over the cells of rho/d: virtual 0 on (1, d+1..e), kAbsent at the root.
    [[nodiscard]] std::vector<int> t_values(const SkewTableau& t) const {
        std::vector<int> out(cells_.size());
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            const Cell c = cells_[k];
            if (c == root_) {
                out[k] = kAbsent;
            } else if (c.row == 1 && c.col <= e_) {
                out[k] = 0;
            } else {
                out[k] = t.at(c);
            }
        }
        return out;
    }

    /// (S'_U, T'_U) over the cells of rho/d for a membership mask of U.
    void swapped_values(const std::vector<int>& sv, const std::vector<int>& tv, const std::vector<char>& in_u,
                        std::vector<int>& s_prime, std::vector<int>& t_prime) const {
        s_prime.resize(cells_.size());
        t_prime.resize(cells_.size());
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            if (in_u[k]) {
                s_prime[k] = sv[k];
                t_prime[k] = tv[k];
            } else {
                s_prime[k] = tv[k];
                t_prime[k] = sv[k];
            }
        }
        t_prime[root_index_] = kAbsent;
    }

    /// True when the ordered adjacent pair (first left of / above second)
    /// breaks a row or column condition in either swapped diagram.
    [[nodiscard]] static bool breaks(const std::vector<int>& s_prime, const std::vector<int>& t_prime, std::size_t a,
                                     std::size_t b, bool vertical) {
        auto bad = [&](int x, int y) {
            if (x == kAbsent || y == kAbsent) {
                return false;
            }
            return vertical ? !(x < y) : !(x <= y);
        };
        return bad(s_prime[a], s_prime[b]) || bad(t_prime[a], t_prime[b]);
    }

    /// All (B, C) with C in U, B in rho/d outside U, adjacent, at which the
    /// swapped diagrams fail; ordered row-major by B, then up/left/right/down.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> violations(const std::vector<int>& s_prime,
                                                                              const std::vector<int>& t_prime,
                                                                              const std::vector<char>& in_u) const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            if (in_u[k]) {
                continue;
            }
            const Cell b = cells_[k];
            const Cell around[4] = {{b.row - 1, b.col}, {b.row, b.col - 1}, {b.row, b.col + 1}, {b.row + 1, b.col}};
            for (int dir = 0; dir < 4; ++dir) {
                const int m = index_of(around[dir]);
                if (m < 0 || !in_u[static_cast<std::size_t>(m)]) {
                    continue;
                }
                const auto mc = static_cast<std::size_t>(m);
                const bool vertical = dir == 0 || dir == 3;
                const bool broken =
                    (dir == 0 || dir == 1) ? breaks(s_prime, t_prime, mc, k, vertical) : breaks(s_prime, t_prime, k, mc, vertical);
                if (broken) {
                    out.emplace_back(k, mc);
                }
            }
        }
        return out;
    }

    /// Pairwise row/column conditions hold on every adjacent pair of rho/d in
    /// both swapped diagrams (virtual zeros compared literally).
    [[nodiscard]] bool region_is_valid(const std::vector<int>& sv, const std::vector<int>& tv,
                                       const std::vector<char>& in_u) const {
        std::vector<int> sp, tp;
        swapped_values(sv, tv, in_u, sp, tp);
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            const Cell c = cells_[k];
            const int right = index_of({c.row, c.col + 1});
            if (right >= 0 && breaks(sp, tp, k, static_cast<std::size_t>(right), false)) {
                return false;
            }
            const int below = index_of({c.row + 1, c.col});
            if (below >= 0 && breaks(sp, tp, k, static_cast<std::size_t>(below), true)) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] SwapRegion region_from_mask(const std::vector<char>& in_u) const {
        SwapRegion u{{}, root_};
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            if (in_u[k]) {
                u.cells.push_back(cells_[k]);
            }
        }
        return u;
    }

    [[nodiscard]] std::vector<char> mask_from_region(const SwapRegion& u) const {
        if (u.root != root_ || !u.contains(root_)) {
            throw std::invalid_argument("swap region must contain the root box");
        }
        std::vector<char> in_u(cells_.size(), 0);
        for (const Cell c : u.cells) {
            const int k = index_of(c);
            if (k < 0) {
                throw std::invalid_argument("swap region cell lies outside " + shape_s().str());
            }
            in_u[static_cast<std::size_t>(k)] = 1;
        }
        return in_u;
    }

    /// Swapped values laid out on rho (0 = no box).
    [[nodiscard]] std::pair<LabeledDiagram, LabeledDiagram> diagrams(const std::vector<int>& s_prime,
                                                                     const std::vector<int>& t_prime) const {
        LabeledDiagram a{rho_, {}}, b{rho_, {}};
        for (std::size_t i = 0; i < rho_.length(); ++i) {
            a.entries.emplace_back(static_cast<std::size_t>(rho_.part(i)), 0);
            b.entries.emplace_back(static_cast<std::size_t>(rho_.part(i)), 0);
        }
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            const auto i = static_cast<std::size_t>(cells_[k].row - 1);
            const auto j = static_cast<std::size_t>(cells_[k].col - 1);
            a.entries[i][j] = std::max(s_prime[k], 0);
            b.entries[i][j] = std::max(t_prime[k], 0);
        }
        return {a, b};
    }

    /// Reads the swapped values as a pair in S_(e,d): S' of shape rho/e and T'
    /// of shape lambda/d. nullopt when the boxes do not sit exactly on those
    /// shapes or either filling is not semistandard.
    [[nodiscard]] std::optional<TableauPair> as_target_pair(const std::vector<int>& s_prime,
                                                            const std::vector<int>& t_prime) const {
        const SkewShape target_s = SkewShape::strip_first_row(rho_, e_);
        const SkewShape target_t = SkewShape::strip_first_row(lambda_, d_);
        auto build = [&](const std::vector<int>& values, const SkewShape& shape) -> std::optional<SkewTableau> {
            std::vector<std::vector<int>> rows(shape.rows());
            for (std::size_t k = 0; k < cells_.size(); ++k) {
                const bool present = values[k] > 0;
                if (present != shape.contains(cells_[k])) {
                    return std::nullopt;
                }
                if (present) {
                    rows[static_cast<std::size_t>(cells_[k].row - 1)].push_back(values[k]);
                }
            }
            SkewTableau tab(shape, nlabels_, std::move(rows));
            if (!tab.is_semistandard()) {
                return std::nullopt;
            }
            return tab;
        };
        auto a = build(s_prime, target_s);
        auto b = build(t_prime, target_t);
        if (!a || !b) {
            return std::nullopt;
        }
        return TableauPair{std::move(*a), std::move(*b)};
    }

    /// U*: closure of the root under adding adjacent cells with S < T.
    [[nodiscard]] std::vector<char> greedy_mask(const std::vector<int>& sv, const std::vector<int>& tv) const {
        std::vector<char> in_u(cells_.size(), 0);
        in_u[root_index_] = 1;
        std::vector<std::size_t> queue{root_index_};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Cell c = cells_[queue[head]];
            const Cell around[4] = {{c.row - 1, c.col}, {c.row, c.col - 1}, {c.row, c.col + 1}, {c.row + 1, c.col}};
            for (const Cell n : around) {
                const int m = index_of(n);
                if (m < 0 || in_u[static_cast<std::size_t>(m)]) {
                    continue;
                }
                const auto mc = static_cast<std::size_t>(m);
                if (sv[mc] < tv[mc]) {
                    in_u[mc] = 1;
                    queue.push_back(mc);
                }
            }
        }
        return in_u;
    }

    /// Grows U from the root by repeatedly adding the B of one violating
    /// (B, C), picked among all current violations by `seed`.
    [[nodiscard]] std::pair<std::vector<char>, std::vector<SpanningTreeStep>>
    spanning_tree_mask(const std::vector<int>& sv, const std::vector<int>& tv, std::uint64_t seed) const {
        std::vector<char> in_u(cells_.size(), 0);
        in_u[root_index_] = 1;
        std::vector<SpanningTreeStep> steps;
        std::mt19937_64 rng(seed);
        std::vector<int> sp, tp;
        for (;;) {
            swapped_values(sv, tv, in_u, sp, tp);
            auto candidates = violations(sp, tp, in_u);
            if (candidates.empty()) {
                break;
            }
            std::size_t pick = 0;
            if (seed != 0 && candidates.size() > 1) {
                pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
            }
            const auto [b, c] = candidates[pick];
            in_u[b] = 1;
            steps.push_back({cells_[b], cells_[c]});
        }
        return {std::move(in_u), std::move(steps)};
    }

private:
    Partition rho_;
    Partition lambda_;
    int d_;
    int e_;
    int nlabels_;
    Cell root_;
    std::size_t root_index_ = 0;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> index_;
};

/// (S'_U, T'_U) as raw diagrams on rho: S'_U is T plus the root box carrying
/// S's root label with T replaced by S on U; T'_U is S minus the root with S
/// replaced by T on U.
inline std::pair<LabeledDiagram, LabeledDiagram> swap_pair(const SkewTableau& s, const SkewTableau& t,
                                                           const SwapRegion& u) {
    const OneBoxSetting setting = OneBoxSetting::from_pair(s, t);
    const auto in_u = setting.mask_from_region(u);
    std::vector<int> sp, tp;
    setting.swapped_values(setting.s_values(s), setting.t_values(t), in_u, sp, tp);
    return setting.diagrams(sp, tp);
}

namespace detail {

inline OneBoxSetting checked_setting(const SkewTableau& s, const SkewTableau& t) {
    OneBoxSetting setting = OneBoxSetting::from_pair(s, t);
    if (setting.d() >= setting.e()) {
        throw std::invalid_argument("the swap map is defined only for d < e; got d = " + std::to_string(setting.d()) +
                                    ", e = " + std::to_string(setting.e()));
    }
    if (!s.is_semistandard() || !t.is_semistandard()) {
        throw std::invalid_argument("input pair is not a pair of semistandard tableaux");
    }
    return setting;
}

} // namespace detail

/// U*(S,T).
inline SwapRegion greedy_region(const SkewTableau& s, const SkewTableau& t) {
    const OneBoxSetting setting = detail::checked_setting(s, t);
    return setting.region_from_mask(setting.greedy_mask(setting.s_values(s), setting.t_values(t)));
}

/// A spanning tree for (S,T) and the region U(S,T) it produces. seed 0
/// always takes the first violation in row-major order.
inline SpanningTreeTrace spanning_tree_region(const SkewTableau& s, const SkewTableau& t, std::uint64_t choice_seed = 0) {
    const OneBoxSetting setting = detail::checked_setting(s, t);
    auto [mask, steps] = setting.spanning_tree_mask(setting.s_values(s), setting.t_values(t), choice_seed);
    return {std::move(steps), setting.region_from_mask(mask)};
}

namespace detail {

inline TableauPair apply_mask(const OneBoxSetting& setting, const std::vector<int>& sv, const std::vector<int>& tv,
                              const std::vector<char>& mask, const char* what) {
    std::vector<int> sp, tp;
    setting.swapped_values(sv, tv, mask, sp, tp);
    auto pair = setting.as_target_pair(sp, tp);
    if (!pair) {
        throw std::logic_error(std::string(what) + " produced a pair outside S_(e,d)");
    }
    return std::move(*pair);
}

} // namespace detail

/// phi(S,T) = (S'_U, T'_U) with U = U(S,T); lands in S_(e,d).
inline TableauPair phi(const SkewTableau& s, const SkewTableau& t) {
    const OneBoxSetting setting = detail::checked_setting(s, t);
    const auto sv = setting.s_values(s);
    const auto tv = setting.t_values(t);
    return detail::apply_mask(setting, sv, tv, setting.spanning_tree_mask(sv, tv, 0).first, "phi");
}

/// The same swap using U*(S,T); well defined but not injective in general.
inline TableauPair greedy_map(const SkewTableau& s, const SkewTableau& t) {
    const OneBoxSetting setting = detail::checked_setting(s, t);
    const auto sv = setting.s_values(s);
    const auto tv = setting.t_values(t);
    return detail::apply_mask(setting, sv, tv, setting.greedy_mask(sv, tv), "greedy map");
}

namespace detail {

inline void check_psi_shapes(const Partition& rho, const Partition& lambda, int nlabels) {
    const std::size_t n = rho.length();
    if (n == 0 || lambda.length() != n) {
        throw std::invalid_argument("first-column swap needs rho and lambda with the same number of nonzero parts");
    }
    if (!partition_contains(lambda, rho) || lambda == rho) {
        throw std::invalid_argument(lambda.str() + " must be strictly contained in " + rho.str());
    }
    if (nlabels != static_cast<int>(n)) {
        throw std::invalid_argument("first-column swap needs exactly n = " + std::to_string(n) + " labels, got " +
                                    std::to_string(nlabels));
    }
}

} // namespace detail

/// Exchanges the first columns of S (shape rho) and T (shape lambda/1), giving
/// a pair of shapes (rho/1, lambda). Needs no zero parts and labels 1..n.
inline TableauPair psi(const SkewTableau& s, const SkewTableau& t) {
    const Partition& rho = s.shape().outer();
    const Partition& lambda = t.shape().outer();
    detail::check_psi_shapes(rho, lambda, s.nlabels());
    if (s.shape() != SkewShape(rho) || t.shape() != SkewShape::strip_first_row(lambda, 1) ||
        t.nlabels() != s.nlabels()) {
        throw std::invalid_argument("psi expects shapes rho and lambda/1");
    }
    if (!s.is_semistandard() || !t.is_semistandard()) {
        throw std::invalid_argument("psi input is not a pair of semistandard tableaux");
    }
    const std::size_t n = rho.length();
    std::vector<std::vector<int>> s_rows(n), t_rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& srow = s.rows()[i];
        const auto& trow = t.rows()[i];
        // S row i: first column entry then the rest; T row i: first column only for i >= 1.
        if (i == 0) {
            s_rows[i].assign(srow.begin() + 1, srow.end());
            t_rows[i].push_back(srow.front());
            t_rows[i].insert(t_rows[i].end(), trow.begin(), trow.end());
        } else {
            s_rows[i].push_back(trow.front());
            s_rows[i].insert(s_rows[i].end(), srow.begin() + 1, srow.end());
            t_rows[i].push_back(srow.front());
            t_rows[i].insert(t_rows[i].end(), trow.begin() + 1, trow.end());
        }
    }
    return {SkewTableau(SkewShape::strip_first_row(rho, 1), s.nlabels(), std::move(s_rows)),
            SkewTableau(SkewShape(lambda), s.nlabels(), std::move(t_rows))};
}

/// Inverse of psi: from (rho/1, lambda) back to (rho, lambda/1).
inline TableauPair psi_inverse(const SkewTableau& s, const SkewTableau& t) {
    const Partition& rho = s.shape().outer();
    const Partition& lambda = t.shape().outer();
    detail::check_psi_shapes(rho, lambda, s.nlabels());
    if (s.shape() != SkewShape::strip_first_row(rho, 1) || t.shape() != SkewShape(lambda)) {
        throw std::invalid_argument("psi_inverse expects shapes rho/1 and lambda");
    }
    const std::size_t n = rho.length();
    std::vector<std::vector<int>> s_rows(n), t_rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& srow = s.rows()[i];
        const auto& trow = t.rows()[i];
        if (i == 0) {
            s_rows[i].push_back(trow.front());
            s_rows[i].insert(s_rows[i].end(), srow.begin(), srow.end());
            t_rows[i].assign(trow.begin() + 1, trow.end());
        } else {
            s_rows[i].push_back(trow.front());
            s_rows[i].insert(s_rows[i].end(), srow.begin() + 1, srow.end());
            t_rows[i].push_back(srow.front());
            t_rows[i].insert(t_rows[i].end(), trow.begin() + 1, trow.end());
        }
    }
    return {SkewTableau(SkewShape(rho), s.nlabels(), std::move(s_rows)),
            SkewTableau(SkewShape::strip_first_row(lambda, 1), s.nlabels(), std::move(t_rows))};
}

/// x^(S,T) as one exponent vector.
inline ExponentVector pair_monomial(const TableauPair& p) {
    ExponentVector a = monomial(p.s);
    const ExponentVector b = monomial(p.t);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

/// All pairs of S_(d,e): S of shape rho/d, T of shape lambda/e, labels <= nlabels.
inline std::vector<TableauPair> pair_set(const Partition& rho, const Partition& lambda, int nlabels, int d, int e) {
    const auto ss = enumerate(SkewShape::strip_first_row(rho, d), nlabels);
    const auto ts = enumerate(SkewShape::strip_first_row(lambda, e), nlabels);
    std::vector<TableauPair> out;
    out.reserve(ss.size() * ts.size());
    for (const auto& s : ss) {
        for (const auto& t : ts) {
            out.push_back({s, t});
        }
    }
    return out;
}

inline std::uint64_t pair_set_size(const Partition& rho, const Partition& lambda, int nlabels, int d, int e) {
    return count(SkewShape::strip_first_row(rho, d), nlabels) * count(SkewShape::strip_first_row(lambda, e), nlabels);
}

inline std::vector<int> pair_key(const TableauPair& p) {
    std::vector<int> key = p.s.reading_word();
    key.push_back(-1);
    const auto w = p.t.reading_word();
    key.insert(key.end(), w.begin(), w.end());
    return key;
}

struct InjectivityOptions {
    int seeds = 0;                  // extra random spanning-tree seeds per pair
    bool compare_greedy = false;    // also test the U*-based map
    bool check_minimality = false;  // exhaustive subset check, small shapes only
    int minimality_max_cells = 9;
    std::size_t max_collisions = 8;
};

struct GreedyCollision {
    TableauPair first;
    TableauPair second;
    TableauPair image;
};

struct InjectivityReport {
    Partition rho;
    Partition lambda;
    int nlabels = 0;
    int d = 0;
    int e = 0;
    std::uint64_t domain_size = 0;
    std::uint64_t codomain_size = 0;
    std::uint64_t image_size = 0;
    bool injective = true;
    bool images_valid = true;
    bool monomials_preserved = true;
    bool seed_invariant = true;
    bool within_greedy = true;   // U(S,T) inside U*(S,T)
    bool within_rho_e = true;    // U*(S,T) avoids (1, d+1..e)
    bool minimal = true;         // U(S,T) inside every valid region W
    bool greedy_injective = true;
    std::vector<GreedyCollision> greedy_collisions;

    [[nodiscard]] bool ok() const {
        return injective && images_valid && monomials_preserved && seed_invariant && within_greedy && within_rho_e &&
               minimal;
    }
};

/// Applies phi to every pair of S_(d,e) and checks the claimed properties.
inline InjectivityReport verify_injectivity(const Partition& rho, const Partition& lambda, int nlabels, int d, int e,
                                            const InjectivityOptions& options = {}) {
    const OneBoxSetting setting(rho, lambda, d, e, nlabels);
    if (d >= e) {
        throw std::invalid_argument("injectivity check needs d < e");
    }
    InjectivityReport report;
    report.rho = rho;
    report.lambda = lambda;
    report.nlabels = nlabels;
    report.d = d;
    report.e = e;
    report.codomain_size = pair_set_size(rho, lambda, nlabels, e, d);

    const auto domain = pair_set(rho, lambda, nlabels, d, e);
    report.domain_size = domain.size();
    std::map<std::vector<int>, std::size_t> images;
    std::map<std::vector<int>, std::size_t> greedy_images;
    const std::size_t ncells = setting.cells().size();
    std::vector<int> sp, tp;
    for (std::size_t idx = 0; idx < domain.size(); ++idx) {
        const auto& [s, t] = domain[idx];
        const auto sv = setting.s_values(s);
        const auto tv = setting.t_values(t);
        const auto mask = setting.spanning_tree_mask(sv, tv, 0).first;

        for (int k = 1; k <= options.seeds && report.seed_invariant; ++k) {
            const auto other = setting.spanning_tree_mask(sv, tv, 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k)).first;
            report.seed_invariant = other == mask;
        }

        const auto greedy = setting.greedy_mask(sv, tv);
        for (std::size_t k = 0; k < ncells; ++k) {
            if (mask[k] && !greedy[k]) {
                report.within_greedy = false;
            }
            const Cell c = setting.cells()[k];
            if (greedy[k] && c.row == 1 && c.col > d && c.col <= e) {
                report.within_rho_e = false;
            }
        }

        if (options.check_minimality && static_cast<int>(ncells) <= options.minimality_max_cells) {
            // Every W with root in W and valid swapped diagrams contains U.
            const std::size_t others = ncells - 1;
            std::vector<char> w(ncells, 0);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << others); ++bits) {
                std::size_t bit = 0;
                for (std::size_t k = 0; k < ncells; ++k) {
                    if (k == setting.root_index()) {
                        w[k] = 1;
                    } else {
                        w[k] = static_cast<char>((bits >> bit++) & 1U);
                    }
                }
                if (!setting.region_is_valid(sv, tv, w)) {
                    continue;
                }
                for (std::size_t k = 0; k < ncells; ++k) {
                    if (mask[k] && !w[k]) {
                        report.minimal = false;
                    }
                }
            }
        }

        setting.swapped_values(sv, tv, mask, sp, tp);
        auto image = setting.as_target_pair(sp, tp);
        if (!image) {
            report.images_valid = false;
            continue;
        }
        if (pair_monomial(*image) != pair_monomial(domain[idx])) {
            report.monomials_preserved = false;
        }
        if (!images.emplace(pair_key(*image), idx).second) {
            report.injective = false;
        }

        if (options.compare_greedy) {
            setting.swapped_values(sv, tv, greedy, sp, tp);
            auto gimage = setting.as_target_pair(sp, tp);
            if (!gimage) {
                report.images_valid = false;
                continue;
            }
            auto [it, inserted] = greedy_images.emplace(pair_key(*gimage), idx);
            if (!inserted) {
                report.greedy_injective = false;
                if (report.greedy_collisions.size() < options.max_collisions) {
                    report.greedy_collisions.push_back({domain[it->second], domain[idx], *gimage});
                }
            }
        }
    }
    report.image_size = images.size();
    return report;
}

struct InjectionSweepReport {
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<InjectivityReport> failed;
};

/// verify_injectivity over every one-box (rho, lambda) with |rho| <= max_cells,
/// every label count 1..max_labels and every 0 <= d < e <= lambda_1.
inline InjectionSweepReport sweep_injectivity(int max_cells, int max_labels, const InjectivityOptions& options = {},
                                              unsigned jobs = 1) {
    struct Instance {
        Partition rho;
        Partition lambda;
        int nlabels;
        int d;
        int e;
    };
    std::vector<Instance> work;
    for (int size = 1; size <= max_cells; ++size) {
        for (const Partition& rho : partitions_of(size)) {
            for (std::size_t row : removable_rows(rho)) {
                const Partition lambda = remove_box(rho, row);
                for (int nlabels = 1; nlabels <= max_labels; ++nlabels) {
                    for (int e = 1; e <= lambda.part(0); ++e) {
                        for (int d = 0; d < e; ++d) {
                            work.push_back({rho, lambda, nlabels, d, e});
                        }
                    }
                }
            }
        }
    }
    std::vector<std::optional<InjectivityReport>> reports(work.size());
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            const auto& w = work[i];
            reports[i] = verify_injectivity(w.rho, w.lambda, w.nlabels, w.d, w.e, options);
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
    InjectionSweepReport out;
    for (auto& r : reports) {
        ++out.instances;
        out.pairs_checked += r->domain_size;
        if (!r->ok()) {
            ++out.failures;
            out.failed.push_back(std::move(*r));
        }
    }
    return out;
}

} // namespace schurratio

#endif // SCHURRATIO_INJECTION_HPP
