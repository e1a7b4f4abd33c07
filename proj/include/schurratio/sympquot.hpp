#ifndef SCHURRATIO_SYMPQUOT_HPP
#define SCHURRATIO_SYMPQUOT_HPP

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "partition.hpp"
#include "schur.hpp"

namespace schurratio {

/// Weight vector of a unitary circle representation.
class CircleWeights {
public:
    explicit CircleWeights(std::vector<int> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) {
            throw std::invalid_argument("weight vector is empty");
        }
        bool pos = false, neg = false;
        std::int64_t g = 0;
        for (int w : weights_) {
            if (w == 0) {
                throw std::invalid_argument("zero weight in circle representation");
            }
            pos = pos || w > 0;
            neg = neg || w < 0;
            g = gcd_int(g, w);
        }
        if (g != 1) {
            throw std::invalid_argument("weights must have gcd 1, got gcd " + std::to_string(g));
        }
        if (!pos || !neg) {
            throw std::invalid_argument("weights all have the same sign; the quotient is a point");
        }
    }

    /// Canonical representative for sorted absolute weights: the first one
    /// negated. Requires n >= 2 and gcd 1.
    static CircleWeights from_abs(std::vector<int> alpha) {
        std::sort(alpha.begin(), alpha.end());
        if (!alpha.empty()) {
            alpha.front() = -alpha.front();
        }
        return CircleWeights(std::move(alpha));
    }

    [[nodiscard]] const std::vector<int>& weights() const { return weights_; }
    [[nodiscard]] std::size_t n() const { return weights_.size(); }
    [[nodiscard]] int dimension() const { return 2 * static_cast<int>(n()) - 2; }

    /// Absolute weights, ascending.
    [[nodiscard]] std::vector<int> abs_weights() const {
        std::vector<int> a;
        for (int w : weights_) {
            a.push_back(w < 0 ? -w : w);
        }
        std::sort(a.begin(), a.end());
        return a;
    }

private:
    std::vector<int> weights_;
};

/// V = V_{d_1} + ... + V_{d_r}; degrees stored ascending.
class SU2Rep {
public:
    explicit SU2Rep(std::vector<int> degrees) : degrees_(std::move(degrees)) {
        if (degrees_.empty()) {
            throw std::invalid_argument("SU2 representation needs at least one summand");
        }
        for (int d : degrees_) {
            if (d < 1) {
                throw std::invalid_argument("SU2 degrees must be positive, got " + std::to_string(d));
            }
        }
        std::sort(degrees_.begin(), degrees_.end());
    }

    [[nodiscard]] const std::vector<int>& degrees() const { return degrees_; }
    [[nodiscard]] int D() const {
        return static_cast<int>(degrees_.size()) + std::accumulate(degrees_.begin(), degrees_.end(), 0);
    }
    [[nodiscard]] int even_count() const {
        return static_cast<int>(std::count_if(degrees_.begin(), degrees_.end(), [](int d) { return d % 2 == 0; }));
    }
    [[nodiscard]] int C() const { return (D() - even_count()) / 2; }
    [[nodiscard]] int sigma() const { return even_count() == static_cast<int>(degrees_.size()) ? 2 : 1; }
    [[nodiscard]] int dimension() const { return 2 * D() - 6; }

    /// Positive weights d, d-2, ... > 0 of each summand, each listed twice.
    [[nodiscard]] std::vector<int> doubled_weights() const {
        std::vector<int> a;
        for (int d : degrees_) {
            for (int w = d; w > 0; w -= 2) {
                a.push_back(w);
                a.push_back(w);
            }
        }
        std::sort(a.begin(), a.end());
        return a;
    }

    /// V_1, V_2, V_3, V_4 or 2V_1.
    [[nodiscard]] bool exceptional() const {
        return (degrees_.size() == 1 && degrees_[0] <= 4) || degrees_ == std::vector<int>{1, 1};
    }

    [[nodiscard]] std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            s += (i ? "," : "") + std::to_string(degrees_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const SU2Rep&, const SU2Rep&) = default;
    friend auto operator<=>(const SU2Rep& a, const SU2Rep& b) { return a.degrees_ <=> b.degrees_; }

private:
    std::vector<int> degrees_;
};

enum class Gamma0Source { formula, override_table };
enum class Group { S1, SU2 };

struct Gamma0Value {
    BigRational value;
    Gamma0Source source = Gamma0Source::formula;
    Group group = Group::S1;
    int dimension = 0;
};

inline std::string to_string(Gamma0Source s) { return s == Gamma0Source::formula ? "formula" : "override-table"; }
inline std::string to_string(Group g) { return g == Group::S1 ? "S1" : "SU2"; }

namespace detail {

/// (n-2, n-2, n-3, ..., 1, 0) and (n-1, ..., 1, 0).
inline std::pair<Partition, Partition> s1_shapes(std::size_t n) {
    std::vector<int> num, den;
    for (std::size_t i = 0; i < n; ++i) {
        den.push_back(static_cast<int>(n - 1 - i));
        num.push_back(i == 0 ? static_cast<int>(n) - 2 : static_cast<int>(n - 1 - i));
    }
    return {Partition(num), Partition(den)};
}

inline std::vector<BigRational> to_point(const std::vector<int>& v) {
    return {v.begin(), v.end()};
}

} // namespace detail

/// s_{(n-2,n-2,n-3,..,0)}(alpha) / s_{(n-1,..,0)}(alpha) for sorted absolute
/// weights alpha.
inline BigRational gamma0_s1_abs(const std::vector<int>& alpha, SchurEvaluator& eval) {
    if (alpha.size() < 2) {
        throw std::invalid_argument("gamma0 for the circle needs at least two weights");
    }
    const auto [num, den] = detail::s1_shapes(alpha.size());
    const auto point = detail::to_point(alpha);
    return eval.evaluate(num, point) / eval.evaluate(den, point);
}

inline Gamma0Value gamma0_s1(const CircleWeights& w, SchurEvaluator& eval) {
    return {gamma0_s1_abs(w.abs_weights(), eval), Gamma0Source::formula, Group::S1, w.dimension()};
}

inline Gamma0Value gamma0_s1(const CircleWeights& w) {
    SchurEvaluator eval;
    return gamma0_s1(w, eval);
}

/// Values known for exceptional representations.
inline std::optional<BigRational> su2_override(const SU2Rep& rep) {
    const auto& d = rep.degrees();
    if (d == std::vector<int>{1, 1} || d == std::vector<int>{2}) {
        return BigRational(1, 2);
    }
    if (d == std::vector<int>{3}) {
        return BigRational(1, 4);
    }
    return std::nullopt;
}

/// 8 sigma (s_rhohat(a) + s_rhohat'(a)) / s_deltahat(a) for non-exceptional
/// reps, the stored value for (1,1), (2), (3); other exceptional reps throw.
inline Gamma0Value gamma0_su2(const SU2Rep& rep, SchurEvaluator& eval) {
    if (rep.exceptional()) {
        if (auto v = su2_override(rep)) {
            return {*v, Gamma0Source::override_table, Group::SU2, rep.degrees() == std::vector<int>{2} ? 2 : rep.dimension()};
        }
        throw std::domain_error("no known gamma0 value for exceptional representation " + rep.str());
    }
    const int c2 = 2 * rep.C();
    std::vector<int> delta, rho, rho_prime;
    for (int i = 0; i < c2; ++i) {
        delta.push_back(c2 - 1 - i);
        rho.push_back(i < 3 ? c2 - 3 : c2 - 1 - i);
        rho_prime.push_back(i == 0 ? c2 - 3 : (i < 4 ? c2 - 4 : c2 - 1 - i));
    }
    const auto point = detail::to_point(rep.doubled_weights());
    const BigRational num = eval.evaluate(Partition(rho), point) + eval.evaluate(Partition(rho_prime), point);
    const BigRational value = BigRational(8 * rep.sigma()) * num / eval.evaluate(Partition(delta), point);
    return {value, Gamma0Source::formula, Group::SU2, rep.dimension()};
}

inline Gamma0Value gamma0_su2(const SU2Rep& rep) {
    SchurEvaluator eval;
    return gamma0_su2(rep, eval);
}

enum class Ordering { less, equal, greater };

inline std::string to_string(Ordering o) {
    return o == Ordering::less ? "less" : (o == Ordering::equal ? "equal" : "greater");
}

struct S1Comparison {
    Ordering order = Ordering::equal;  // gamma0(a) compared to gamma0(b)
    BigRational value_a;
    BigRational value_b;
    bool hypotheses_met = false;  // sorted |a| <= sorted |b| with one strict
};

inline S1Comparison s1_compare(const CircleWeights& a, const CircleWeights& b, SchurEvaluator& eval) {
    S1Comparison out;
    out.value_a = gamma0_s1(a, eval).value;
    out.value_b = gamma0_s1(b, eval).value;
    out.order = out.value_a > out.value_b ? Ordering::greater
                                          : (out.value_a < out.value_b ? Ordering::less : Ordering::equal);
    const auto x = a.abs_weights();
    const auto y = b.abs_weights();
    if (x.size() == y.size()) {
        bool le = true, strict = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            le = le && x[i] <= y[i];
            strict = strict || x[i] < y[i];
        }
        out.hypotheses_met = le && strict;
    }
    return out;
}

inline S1Comparison s1_compare(const CircleWeights& a, const CircleWeights& b) {
    SchurEvaluator eval;
    return s1_compare(a, b, eval);
}

/// 1 / (sum of the two largest absolute weights).
inline BigRational s1_upper_bound(const CircleWeights& w) {
    const auto a = w.abs_weights();
    return BigRational(1, a[a.size() - 1] + a[a.size() - 2]);
}

/// 24 sigma / (D (D-2) (D+1) (D-1)^3).
inline BigRational su2_lower_bound(const SU2Rep& rep) {
    const int d = rep.D();
    if (d <= 2) {
        throw std::invalid_argument("lower bound needs D >= 3, got D = " + std::to_string(d));
    }
    const BigInt dm1 = d - 1;
    const BigInt den = BigInt(d) * (d - 2) * (d + 1) * dm1 * dm1 * dm1;
    return BigRational(BigInt(24 * rep.sigma()), den);
}

/// All reps with D = r + sum d_k, i.e. partitions of D into parts >= 2.
inline std::vector<SU2Rep> su2_reps_with_D(int D) {
    std::vector<SU2Rep> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            std::vector<int> degrees;
            for (int p : parts) {
                degrees.push_back(p - 1);
            }
            if (!degrees.empty()) {
                out.emplace_back(std::move(degrees));
            }
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 2; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, D, D);
    std::sort(out.begin(), out.end());
    return out;
}

struct SU2TableEntry {
    SU2Rep rep;
    std::optional<Gamma0Value> gamma0;  // empty for exceptional reps without a value
};

/// SU2 reps whose quotient has real dimension m, with their gamma0 values.
/// V_2 has a 2-dimensional quotient and is listed under m = 2.
inline std::vector<SU2TableEntry> su2_table(int m, SchurEvaluator& eval) {
    if (m < 2 || m % 2 != 0) {
        throw std::invalid_argument("quotient dimension must be a positive even integer, got " + std::to_string(m));
    }
    std::vector<SU2Rep> reps = su2_reps_with_D(m / 2 + 3);
    if (m == 2) {
        reps.emplace_back(std::vector<int>{2});
        std::sort(reps.begin(), reps.end());
    }
    std::vector<SU2TableEntry> out;
    for (const auto& rep : reps) {
        std::optional<Gamma0Value> v;
        if (!rep.exceptional() || su2_override(rep)) {
            v = gamma0_su2(rep, eval);
        }
        out.push_back({rep, v});
    }
    return out;
}

struct CoincidenceMatch {
    std::vector<int> alpha;  // sorted absolute circle weights
    SU2Rep rep;
    BigRational value;
    friend bool operator==(const CoincidenceMatch&, const CoincidenceMatch&) = default;
};

struct CoincidenceReport {
    int dimension = 0;
    std::vector<SU2TableEntry> su2_table;
    std::vector<CoincidenceMatch> matches;
    std::uint64_t pruned_count = 0;
    std::uint64_t evaluated = 0;
    int cut = 0;  // bound on the sum of the two largest weights
};

struct SearchOptions {
    unsigned jobs = 1;
    std::string checkpoint;  // empty: no checkpoint file
};

namespace detail {

/// gamma0 for the circle with n fixed. The numerator Schur polynomial is
/// expanded once; the denominator is the staircase product prod (x_i + x_j).
/// Points small enough for every value to fit in 128 bits take a fast path.
class S1Kernel {
public:
    S1Kernel(std::size_t n, int max_entry, SchurEvaluator& eval) : n_(n) {
        auto [num, den] = s1_shapes(n);
        num_shape_ = num;
        if (semistandard_count(num, n) <= eval.term_budget()) {
            num_ = eval.context().get(num, n);
            // Every value is at most the denominator, which is < (2 max)^(n(n-1)/2).
            const double bits = static_cast<double>(n * (n - 1) / 2) * std::log2(2.0 * std::max(max_entry, 1));
            fast_ = bits < 96.0 && num_->max_coefficient() < (BigInt(1) << 62);
            if (fast_) {
                for (const auto& [e, c] : num_->terms()) {
                    terms_.emplace_back(e, static_cast<std::int64_t>(c));
                    degree_ = std::max(degree_, *std::max_element(e.begin(), e.end()));
                }
            }
        }
    }

    [[nodiscard]] BigRational value(const std::vector<int>& alpha) const {
        BigInt den = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                den *= alpha[i] + alpha[j];
            }
        }
        if (num_) {
            const std::vector<BigInt> point(alpha.begin(), alpha.end());
            return BigRational(num_->evaluate(point), den);
        }
        return schur_eval_branching<BigRational>(num_shape_, to_point(alpha)) / den;
    }

    /// Sign of gamma0(alpha) - p/q, with 0 < p, q < 2^24.
    [[nodiscard]] int compare(const std::vector<int>& alpha, std::int64_t p, std::int64_t q) const {
        if (!fast_) {
            const BigRational v = value(alpha);
            const BigRational t(p, q);
            return v < t ? -1 : (v > t ? 1 : 0);
        }
        using i128 = __int128;
        i128 den = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                den *= alpha[i] + alpha[j];
            }
        }
        std::vector<i128> powers(n_ * static_cast<std::size_t>(degree_ + 1));
        for (std::size_t i = 0; i < n_; ++i) {
            i128 x = 1;
            for (int k = 0; k <= degree_; ++k) {
                powers[i * static_cast<std::size_t>(degree_ + 1) + static_cast<std::size_t>(k)] = x;
                x *= alpha[i];
            }
        }
        i128 num = 0;
        for (const auto& [e, c] : terms_) {
            i128 t = c;
            for (std::size_t i = 0; i < n_; ++i) {
                t *= powers[i * static_cast<std::size_t>(degree_ + 1) + static_cast<std::size_t>(e[i])];
            }
            num += t;
        }
        const i128 lhs = num * q;
        const i128 rhs = den * p;
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }

private:
    std::size_t n_;
    Partition num_shape_;
    std::optional<SparsePolynomial> num_;
    bool fast_ = false;
    int degree_ = 0;
    std::vector<std::pair<ExponentVector, std::int64_t>> terms_;
};

struct Checkpoint {
    std::set<int> completed;
    std::vector<CoincidenceMatch> matches;
    std::uint64_t pruned = 0;
    std::uint64_t evaluated = 0;
};

inline std::optional<Checkpoint> load_checkpoint(const std::string& path, int dimension) {
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("dimension").get<int>() != dimension) {
        throw std::invalid_argument("checkpoint " + path + " belongs to dimension " +
                                    std::to_string(j.at("dimension").get<int>()));
    }
    Checkpoint cp;
    for (int a : j.at("completed_alpha1")) {
        cp.completed.insert(a);
    }
    for (const auto& m : j.at("matches")) {
        cp.matches.push_back({m.at("alpha").get<std::vector<int>>(), SU2Rep(m.at("su2").get<std::vector<int>>()),
                              parse_rational(m.at("gamma0").get<std::string>())});
    }
    cp.pruned = j.at("pruned_count").get<std::uint64_t>();
    cp.evaluated = j.value("evaluated", std::uint64_t{0});
    return cp;
}

inline void save_checkpoint(const std::string& path, int dimension, const Checkpoint& cp) {
    nlohmann::json j;
    j["schema"] = "schurratio.search-checkpoint/1";
    j["dimension"] = dimension;
    j["completed_alpha1"] = std::vector<int>(cp.completed.begin(), cp.completed.end());
    j["matches"] = nlohmann::json::array();
    for (const auto& m : cp.matches) {
        j["matches"].push_back({{"alpha", m.alpha}, {"su2", m.rep.degrees()}, {"gamma0", to_string(m.value)}});
    }
    j["pruned_count"] = cp.pruned;
    j["evaluated"] = cp.evaluated;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw std::runtime_error("cannot write checkpoint " + tmp);
        }
        out << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("cannot move checkpoint into place at " + path);
    }
}

} // namespace detail

/// Circle weight vectors (n = m/2 + 1, gcd 1) whose gamma0 equals that of an
/// SU2 rep with an m-dimensional quotient. Branches are cut when the two
/// largest weights exceed 1/min gamma0, or when the largest gamma0 any
/// completion can reach already lies below min gamma0.
inline CoincidenceReport coincidence_search(int m, const SearchOptions& options = {}) {
    if (m < 2 || m % 2 != 0) {
        throw std::invalid_argument("search dimension must be a positive even integer, got " + std::to_string(m));
    }
    SchurEvaluator eval;
    CoincidenceReport report;
    report.dimension = m;
    report.su2_table = su2_table(m, eval);

    std::vector<std::pair<BigRational, SU2Rep>> targets;
    for (const auto& e : report.su2_table) {
        if (e.gamma0) {
            targets.emplace_back(e.gamma0->value, e.rep);
        }
    }
    if (targets.empty()) {
        return report;
    }
    BigRational gmin = targets.front().first;
    for (const auto& t : targets) {
        gmin = std::min(gmin, t.first);
    }
    const BigRational inv = 1 / gmin;
    report.cut = static_cast<int>(boost::multiprecision::numerator(inv) / boost::multiprecision::denominator(inv));

    const std::size_t n = static_cast<std::size_t>(m / 2 + 1);
    // Every weight but the last is at most cut / 2, and the last at most cut - 1.
    const int top = report.cut / 2;
    const detail::S1Kernel kernel(n, report.cut, eval);
    auto small = [](const BigInt& x) { return x < (BigInt(1) << 24); };
    for (const auto& [value, rep] : targets) {
        if (!small(boost::multiprecision::numerator(value)) || !small(boost::multiprecision::denominator(value))) {
            throw std::domain_error("gamma0 value " + to_string(value) + " is too large for the search kernel");
        }
    }
    const auto gmin_p = static_cast<std::int64_t>(boost::multiprecision::numerator(gmin));
    const auto gmin_q = static_cast<std::int64_t>(boost::multiprecision::denominator(gmin));

    detail::Checkpoint state;
    if (!options.checkpoint.empty()) {
        if (auto cp = detail::load_checkpoint(options.checkpoint, m)) {
            state = std::move(*cp);
        }
    }

    std::vector<int> firsts;
    for (int a1 = 1; a1 <= top; ++a1) {
        if (!state.completed.count(a1)) {
            firsts.push_back(a1);
        }
    }

    std::mutex mutex;
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= firsts.size()) {
                return;
            }
            std::vector<CoincidenceMatch> found;
            std::uint64_t pruned = 0, evaluated = 0;
            std::vector<int> alpha(n, 0);
            std::vector<int> point(n, 0);
            // gamma0 of alpha_1..alpha_{k-1}, a, a, ..., a compared with p/q. It is the
            // largest value any completion of the prefix can take, and it
            // strictly decreases in a.
            auto cmp_at = [&](std::size_t k, int a, std::int64_t p, std::int64_t q) {
                std::copy(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(k), point.begin());
                std::fill(point.begin() + static_cast<std::ptrdiff_t>(k), point.end(), a);
                ++evaluated;
                return kernel.compare(point, p, q);
            };
            // Largest a in [lo, limit] whose completion still reaches gmin, or lo - 1.
            auto reach = [&](std::size_t k, int lo, int limit) {
                int good = lo - 1, bad = limit + 1;
                while (bad - good > 1) {
                    const int mid = good + (bad - good) / 2;
                    (cmp_at(k, mid, gmin_p, gmin_q) >= 0 ? good : bad) = mid;
                }
                return good;
            };
            auto rec = [&](auto&& self, std::size_t k, int lo) -> void {
                const int limit = k + 1 < n ? top : report.cut - alpha[k - 1];
                const int hi = reach(k, lo, limit);
                if (hi < limit) {
                    ++pruned;
                }
                if (k + 1 < n) {
                    for (int a = lo; a <= hi; ++a) {
                        alpha[k] = a;
                        self(self, k + 1, a);
                    }
                    return;
                }
                for (const auto& [value, rep] : targets) {
                    const auto p = static_cast<std::int64_t>(boost::multiprecision::numerator(value));
                    const auto q = static_cast<std::int64_t>(boost::multiprecision::denominator(value));
                    int l = lo, h = hi;
                    while (l <= h) {
                        const int mid = l + (h - l) / 2;
                        const int c = cmp_at(k, mid, p, q);
                        if (c == 0) {
                            alpha[k] = mid;
                            std::int64_t g = 0;
                            for (int x : alpha) {
                                g = gcd_int(g, x);
                            }
                            if (g == 1) {
                                found.push_back({alpha, rep, value});
                            }
                            break;
                        }
                        (c > 0 ? l : h) = c > 0 ? mid + 1 : mid - 1;
                    }
                }
            };
            alpha[0] = firsts[idx];
            if (cmp_at(0, firsts[idx], gmin_p, gmin_q) >= 0) {
                rec(rec, 1, firsts[idx]);
            } else {
                ++pruned;
            }
            std::lock_guard lock(mutex);
            state.completed.insert(firsts[idx]);
            state.matches.insert(state.matches.end(), found.begin(), found.end());
            state.pruned += pruned;
            state.evaluated += evaluated;
            if (!options.checkpoint.empty()) {
                detail::save_checkpoint(options.checkpoint, m, state);
            }
        }
    };
    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    std::sort(state.matches.begin(), state.matches.end(), [](const auto& x, const auto& y) {
        return std::tie(x.alpha, x.rep) < std::tie(y.alpha, y.rep);
    });
    report.matches = std::move(state.matches);
    report.pruned_count = state.pruned;
    report.evaluated = state.evaluated;
    return report;
}

} // namespace schurratio

#endif // SCHURRATIO_SYMPQUOT_HPP
