#ifndef SCHURRATIO_TABLEAU_HPP
#define SCHURRATIO_TABLEAU_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "partition.hpp"
#include "polynomial.hpp"

namespace schurratio {

/// A filling of a skew shape with labels. rows[i] holds the entries of row
/// i+1 from column inner_i + 1 to outer_i. Semistandardness is not enforced
/// here; see is_semistandard().
class SkewTableau {
public:
    SkewTableau() = default;
    SkewTableau(SkewShape shape, int nlabels, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), nlabels_(nlabels), rows_(std::move(rows)) {
        if (rows_.size() < shape_.rows()) {
            throw std::invalid_argument("tableau of shape " + shape_.str() + " is missing rows");
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const int expected = shape_.row_length(static_cast<int>(i) + 1);
            if (static_cast<int>(rows_[i].size()) != expected) {
                throw std::invalid_argument("row " + std::to_string(i + 1) + " of tableau has " +
                                            std::to_string(rows_[i].size()) + " entries, shape " + shape_.str() +
                                            " needs " + std::to_string(expected));
            }
        }
        while (!rows_.empty() && rows_.back().empty() && rows_.size() > shape_.rows()) {
            rows_.pop_back();
        }
        rows_.resize(shape_.rows());
    }

    [[nodiscard]] const SkewShape& shape() const { return shape_; }
    [[nodiscard]] int nlabels() const { return nlabels_; }
    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }

    [[nodiscard]] bool has(Cell c) const { return shape_.contains(c); }

    /// Entry at a 1-based cell of the shape.
    [[nodiscard]] int at(Cell c) const {
        if (!shape_.contains(c)) {
            throw std::out_of_range("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                    ") is outside shape " + shape_.str());
        }
        const auto i = static_cast<std::size_t>(c.row - 1);
        return rows_[i][static_cast<std::size_t>(c.col - shape_.inner().part(i) - 1)];
    }

    /// Rows weakly increase, columns strictly increase, labels in 1..nlabels.
    [[nodiscard]] bool is_semistandard() const {
        for (const Cell c : shape_.cells()) {
            const int v = at(c);
            if (v < 1 || v > nlabels_) {
                return false;
            }
            const Cell right{c.row, c.col + 1};
            if (shape_.contains(right) && at(right) < v) {
                return false;
            }
            const Cell below{c.row + 1, c.col};
            if (shape_.contains(below) && at(below) <= v) {
                return false;
            }
        }
        return true;
    }

    /// Entries in reading order (row by row).
    [[nodiscard]] std::vector<int> reading_word() const {
        std::vector<int> out;
        for (const auto& row : rows_) {
            out.insert(out.end(), row.begin(), row.end());
        }
        return out;
    }

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

private:
    SkewShape shape_;
    int nlabels_ = 0;
    std::vector<std::vector<int>> rows_;
};

inline bool validate(const SkewTableau& t) { return t.is_semistandard(); }

/// Exponent of x_i is the multiplicity of label i; length nlabels.
inline ExponentVector monomial(const SkewTableau& t) {
    ExponentVector e(static_cast<std::size_t>(std::max(t.nlabels(), 0)), 0);
    for (const auto& row : t.rows()) {
        for (int v : row) {
            if (v < 1 || v > t.nlabels()) {
                throw std::invalid_argument("label " + std::to_string(v) + " outside 1.." +
                                            std::to_string(t.nlabels()));
            }
            ++e[static_cast<std::size_t>(v - 1)];
        }
    }
    return e;
}

/// Calls visit(const SkewTableau&) for every semistandard filling of `shape`
/// with labels 1..nlabels, in lexicographic order of the reading word.
/// Returning false from visit stops the enumeration.
template <typename Visitor>
void for_each_tableau(const SkewShape& shape, int nlabels, Visitor&& visit) {
    const std::vector<Cell> cells = shape.cells();
    if (cells.empty()) {
        SkewTableau empty(shape, nlabels, std::vector<std::vector<int>>(shape.rows()));
        visit(empty);
        return;
    }
    if (nlabels < 1) {
        return;
    }
    // Work on a dense grid indexed by cell, with neighbour indices precomputed.
    const std::size_t n = cells.size();
    std::vector<std::ptrdiff_t> left(n, -1), above(n, -1);
    std::vector<int> below_count(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const Cell c = cells[k];
        for (std::size_t m = 0; m < k; ++m) {
            if (cells[m] == Cell{c.row, c.col - 1}) {
                left[k] = static_cast<std::ptrdiff_t>(m);
            }
            if (cells[m] == Cell{c.row - 1, c.col}) {
                above[k] = static_cast<std::ptrdiff_t>(m);
            }
        }
        int below = 0;
        while (shape.contains({c.row + below + 1, c.col})) {
            ++below;
        }
        below_count[k] = below;
    }
    std::vector<int> fill(n, 0);
    std::vector<std::vector<int>> rows(shape.rows());
    for (std::size_t i = 0; i < shape.rows(); ++i) {
        rows[i].assign(static_cast<std::size_t>(shape.row_length(static_cast<int>(i) + 1)), 0);
    }
    bool stop = false;
    auto emit = [&]() {
        std::size_t k = 0;
        for (auto& row : rows) {
            for (int& v : row) {
                v = fill[k++];
            }
        }
        SkewTableau t(shape, nlabels, rows);
        if constexpr (std::is_same_v<decltype(visit(t)), bool>) {
            if (!visit(t)) {
                stop = true;
            }
        } else {
            visit(t);
        }
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (stop) {
            return;
        }
        if (k == n) {
            emit();
            return;
        }
        int lo = 1;
        if (left[k] >= 0) {
            lo = std::max(lo, fill[static_cast<std::size_t>(left[k])]);
        }
        if (above[k] >= 0) {
            lo = std::max(lo, fill[static_cast<std::size_t>(above[k])] + 1);
        }
        const int hi = nlabels - below_count[k];
        for (int v = lo; v <= hi && !stop; ++v) {
            fill[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

inline std::vector<SkewTableau> enumerate(const SkewShape& shape, int nlabels) {
    std::vector<SkewTableau> out;
    for_each_tableau(shape, nlabels, [&](const SkewTableau& t) { out.push_back(t); });
    return out;
}

inline std::uint64_t count(const SkewShape& shape, int nlabels) {
    std::uint64_t total = 0;
    for_each_tableau(shape, nlabels, [&](const SkewTableau&) { ++total; });
    return total;
}

/// One line per row; '.' marks cells of the inner shape.
inline std::string render_ascii(const SkewTableau& t) {
    int width = 1;
    for (const auto& row : t.rows()) {
        for (int v : row) {
            width = std::max(width, static_cast<int>(std::to_string(v).size()));
        }
    }
    auto pad = [width](std::string s) {
        while (static_cast<int>(s.size()) < width) {
            s.insert(s.begin(), ' ');
        }
        return s;
    };
    std::string out;
    const auto& inner = t.shape().inner();
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        std::string line;
        for (int j = 0; j < inner.part(i); ++j) {
            line += (line.empty() ? "" : " ") + pad(".");
        }
        for (int v : t.rows()[i]) {
            line += (line.empty() ? "" : " ") + pad(std::to_string(v));
        }
        out += line + "\n";
    }
    return out;
}

} // namespace schurratio

#endif // SCHURRATIO_TABLEAU_HPP
