#ifndef SCHURRATIO_PARTITION_HPP
#define SCHURRATIO_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurratio {

/// Integer partition. Trailing zeros are accepted on input and stripped, so
/// (2,1,0) and (2,1) compare equal; part(i) returns 0 past the stored length.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) {
                throw std::invalid_argument("partition has a negative part: " + str_of(parts_));
            }
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
                throw std::invalid_argument("partition is not weakly decreasing: " + str_of(parts_));
            }
        }
        while (!parts_.empty() && parts_.back() == 0) {
            parts_.pop_back();
        }
    }

    /// Number of nonzero parts.
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    /// 0-based row index.
    [[nodiscard]] int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    [[nodiscard]] int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

    /// Parts padded with zeros to `n` entries (n must be >= length()).
    [[nodiscard]] std::vector<int> padded(std::size_t n) const {
        if (n < parts_.size()) {
            throw std::invalid_argument("cannot pad " + str() + " to " + std::to_string(n) + " parts");
        }
        std::vector<int> out(parts_);
        out.resize(n, 0);
        return out;
    }

    [[nodiscard]] std::string str() const { return str_of(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

private:
    static std::string str_of(const std::vector<int>& v) {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) {
            os << (i ? "," : "") << v[i];
        }
        os << ')';
        return os.str();
    }

    std::vector<int> parts_;
};

/// Board position, 1-based like the usual (i,j) tableau coordinates.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) { return os << '(' << c.row << ',' << c.col << ')'; }

/// lambda_i <= rho_i for every i.
inline bool partition_contains(const Partition& lambda, const Partition& rho) {
    const std::size_t n = std::max(lambda.length(), rho.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda.part(i) > rho.part(i)) {
            return false;
        }
    }
    return true;
}

/// Skew diagram outer/inner.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer, Partition inner = {}) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!partition_contains(inner_, outer_)) {
            throw std::invalid_argument("inner " + inner_.str() + " is not contained in outer " + outer_.str());
        }
    }

    /// rho/d: the first d boxes of row one removed.
    static SkewShape strip_first_row(const Partition& outer, int d) {
        if (d < 0 || d > outer.part(0)) {
            throw std::invalid_argument("cannot remove " + std::to_string(d) + " boxes from row one of " +
                                        outer.str());
        }
        return SkewShape(outer, Partition{d});
    }

    [[nodiscard]] const Partition& outer() const { return outer_; }
    [[nodiscard]] const Partition& inner() const { return inner_; }
    [[nodiscard]] std::size_t rows() const { return outer_.length(); }
    [[nodiscard]] int size() const { return outer_.size() - inner_.size(); }
    /// 1-based row; number of boxes of the skew shape in that row.
    [[nodiscard]] int row_length(int row) const { return outer_.part(row - 1) - inner_.part(row - 1); }

    [[nodiscard]] bool contains(Cell c) const {
        if (c.row < 1 || c.col < 1) {
            return false;
        }
        const auto i = static_cast<std::size_t>(c.row - 1);
        return c.col > inner_.part(i) && c.col <= outer_.part(i);
    }

    /// Cells in row-major order.
    [[nodiscard]] std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (std::size_t i = 0; i < outer_.length(); ++i) {
            for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) {
                out.push_back({static_cast<int>(i) + 1, j});
            }
        }
        return out;
    }

    [[nodiscard]] std::string str() const { return outer_.str() + "/" + inner_.str(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

/// Rows (0-based) whose last box can be removed leaving a partition.
inline std::vector<std::size_t> removable_rows(const Partition& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (p.part(i) > p.part(i + 1)) {
            out.push_back(i);
        }
    }
    return out;
}

inline Partition remove_box(const Partition& p, std::size_t row) {
    auto parts = p.parts();
    if (row >= parts.size() || parts[row] <= p.part(row + 1)) {
        throw std::invalid_argument("row " + std::to_string(row + 1) + " of " + p.str() + " has no removable box");
    }
    --parts[row];
    return Partition(std::move(parts));
}

/// If lambda is rho with exactly one box removed, the 0-based row of that box.
inline std::optional<std::size_t> one_box_row(const Partition& rho, const Partition& lambda) {
    if (!partition_contains(lambda, rho) || rho.size() != lambda.size() + 1) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < rho.length(); ++i) {
        if (rho.part(i) != lambda.part(i)) {
            return i;
        }
    }
    return std::nullopt;
}

/// mu^0 = rho, ..., mu^r = lambda, removing one box per step from the lowest
/// row whose part still exceeds lambda's. That row is always removable since
/// the row below it already agrees with lambda.
inline std::vector<Partition> one_box_chain(const Partition& rho, const Partition& lambda) {
    if (!partition_contains(lambda, rho)) {
        throw std::invalid_argument(lambda.str() + " is not contained in " + rho.str());
    }
    std::vector<Partition> chain{rho};
    Partition current = rho;
    while (current != lambda) {
        std::size_t i = current.length();
        while (current.part(i - 1) == lambda.part(i - 1)) {
            --i;
        }
        current = remove_box(current, i - 1);
        chain.push_back(current);
    }
    return chain;
}

/// All partitions of n, in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            parts.push_back(k);
            self(self, remaining - k, k);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All partitions mu with mu contained in rho (including the empty one and rho).
inline std::vector<Partition> subpartitions(const Partition& rho) {
    std::vector<Partition> out;
    std::vector<int> parts(rho.length(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == parts.size()) {
            out.emplace_back(parts);
            return;
        }
        const int hi = i == 0 ? rho.part(0) : std::min(rho.part(i), parts[i - 1]);
        for (int k = 0; k <= hi; ++k) {
            parts[i] = k;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace schurratio

#endif // SCHURRATIO_PARTITION_HPP
