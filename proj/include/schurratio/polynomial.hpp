#ifndef SCHURRATIO_POLYNOMIAL_HPP
#define SCHURRATIO_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace schurratio {

using ExponentVector = std::vector<int>;

inline int total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded lexicographic order, largest monomial first: higher total degree
/// wins, ties broken lexicographically with x1 > x2 > ... .
struct GradedLexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db) {
            return da > db;
        }
        return a > b;
    }
};

/// Sparse polynomial over the integers in a fixed number of variables.
/// Zero coefficients are never stored, so structural equality is ring equality.
class SparsePolynomial {
public:
    using TermMap = std::map<ExponentVector, BigInt, GradedLexDescending>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(std::size_t nvars) : nvars_(nvars) {}

    static SparsePolynomial constant(std::size_t nvars, const BigInt& c) {
        SparsePolynomial p(nvars);
        p.add_term(ExponentVector(nvars, 0), c);
        return p;
    }

    /// x_{index}, 0-based index.
    static SparsePolynomial variable(std::size_t nvars, std::size_t index) {
        if (index >= nvars) {
            throw std::invalid_argument("variable index out of range");
        }
        ExponentVector e(nvars, 0);
        e[index] = 1;
        SparsePolynomial p(nvars);
        p.add_term(e, 1);
        return p;
    }

    static SparsePolynomial monomial(ExponentVector e, const BigInt& c = 1) {
        SparsePolynomial p(e.size());
        p.add_term(std::move(e), c);
        return p;
    }

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] BigInt coefficient(const ExponentVector& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(ExponentVector e, const BigInt& c) {
        if (e.size() != nvars_) {
            throw std::invalid_argument("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                                        std::to_string(nvars_));
        }
        for (int x : e) {
            if (x < 0) {
                throw std::invalid_argument("negative exponent");
            }
        }
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& other) {
        check_compatible(other);
        for (const auto& [e, c] : other.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    SparsePolynomial& operator-=(const SparsePolynomial& other) {
        check_compatible(other);
        for (const auto& [e, c] : other.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_compatible(b);
        SparsePolynomial out(a.nvars_);
        ExponentVector e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend SparsePolynomial operator*(const BigInt& k, const SparsePolynomial& p) {
        SparsePolynomial out(p.nvars_);
        if (k == 0) {
            return out;
        }
        for (const auto& [e, c] : p.terms_) {
            out.terms_.emplace(e, k * c);
        }
        return out;
    }

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

    /// Largest coefficient; 0 for the zero polynomial.
    [[nodiscard]] BigInt max_coefficient() const {
        if (terms_.empty()) {
            return 0;
        }
        BigInt best = terms_.begin()->second;
        for (const auto& [e, c] : terms_) {
            if (c > best) {
                best = c;
            }
        }
        return best;
    }

    [[nodiscard]] bool all_coefficients_nonpositive() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second <= 0; });
    }

    [[nodiscard]] int degree_in(std::size_t var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            d = std::max(d, e[var]);
        }
        return d;
    }

    /// Formal partial derivative with respect to x_{var} (0-based).
    [[nodiscard]] SparsePolynomial derivative(std::size_t var) const {
        if (var >= nvars_) {
            throw std::invalid_argument("derivative variable out of range");
        }
        SparsePolynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) {
                continue;
            }
            ExponentVector f = e;
            --f[var];
            out.add_term(std::move(f), c * e[var]);
        }
        return out;
    }

    /// Renames variables: x_i becomes x_{perm[i]}.
    [[nodiscard]] SparsePolynomial permuted(std::span<const std::size_t> perm) const {
        if (perm.size() != nvars_) {
            throw std::invalid_argument("permutation length mismatch");
        }
        SparsePolynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            ExponentVector f(nvars_, 0);
            for (std::size_t i = 0; i < nvars_; ++i) {
                f[perm[i]] = e[i];
            }
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    [[nodiscard]] SparsePolynomial swapped(std::size_t i, std::size_t j) const {
        std::vector<std::size_t> perm(nvars_);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::swap(perm.at(i), perm.at(j));
        return permuted(perm);
    }

    /// Same polynomial viewed in `nvars` >= nvars() variables; the new ones
    /// are appended and absent from every term.
    [[nodiscard]] SparsePolynomial embedded(std::size_t nvars) const {
        if (nvars < nvars_) {
            throw std::invalid_argument("cannot embed into fewer variables");
        }
        SparsePolynomial out(nvars);
        for (const auto& [e, c] : terms_) {
            ExponentVector f = e;
            f.resize(nvars, 0);
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    /// Multiply by x_{var}^{power}.
    [[nodiscard]] SparsePolynomial shifted(std::size_t var, int power) const {
        if (power < 0) {
            throw std::invalid_argument("negative shift");
        }
        SparsePolynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            ExponentVector f = e;
            f.at(var) += power;
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    /// Exact evaluation. Scalar must be constructible from BigInt and closed
    /// under + and * (BigInt, BigRational).
    template <typename Scalar>
    [[nodiscard]] Scalar evaluate(std::span<const Scalar> point) const {
        if (point.size() != nvars_) {
            throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                        " coordinates, expected " + std::to_string(nvars_));
        }
        std::vector<std::vector<Scalar>> powers(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            const int deg = degree_in(i);
            powers[i].reserve(static_cast<std::size_t>(deg) + 1);
            powers[i].emplace_back(1);
            for (int k = 1; k <= deg; ++k) {
                powers[i].push_back(powers[i].back() * point[i]);
            }
        }
        Scalar total(0);
        for (const auto& [e, c] : terms_) {
            Scalar term(c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] != 0) {
                    term *= powers[i][static_cast<std::size_t>(e[i])];
                }
            }
            total += term;
        }
        return total;
    }

    template <typename Scalar>
    [[nodiscard]] Scalar evaluate(const std::vector<Scalar>& point) const {
        return evaluate(std::span<const Scalar>(point));
    }

    /// Human-readable form such as "x1^2 - x2^2".
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += "x" + std::to_string(i + 1);
                if (e[i] > 1) {
                    mono += "^" + std::to_string(e[i]);
                }
            }
            if (mono.empty()) {
                out += mag.str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.str() + "*" + mono;
            }
        }
        return out;
    }

private:
    void check_compatible(const SparsePolynomial& other) const {
        if (other.nvars_ != nvars_) {
            throw std::invalid_argument("polynomials have " + std::to_string(nvars_) + " and " +
                                        std::to_string(other.nvars_) + " variables");
        }
    }

    std::size_t nvars_ = 0;
    TermMap terms_;
};

} // namespace schurratio

#endif // SCHURRATIO_POLYNOMIAL_HPP
