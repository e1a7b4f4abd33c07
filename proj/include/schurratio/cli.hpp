#ifndef SCHURRATIO_CLI_HPP
#define SCHURRATIO_CLI_HPP

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arith.hpp"
#include "derivative.hpp"
#include "injection.hpp"
#include "partition.hpp"
#include "schur.hpp"
#include "serialize.hpp"
#include "sympquot.hpp"
#include "tableau.hpp"

namespace schurratio::cli {

using nlohmann::json;

inline constexpr int kOk = 0;
inline constexpr int kViolated = 1;
inline constexpr int kUsage = 2;

inline constexpr int kMaxCells = 12;
inline constexpr std::size_t kMaxVars = 8;

/// Bad flag values; reported with an example invocation and exit 2.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& what, std::string example)
        : std::runtime_error(what), example_(std::move(example)) {}
    [[nodiscard]] const std::string& example() const { return example_; }

private:
    std::string example_;
};

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        out.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        out.emplace_back();
    }
    return out;
}

inline std::vector<int> int_list(const std::string& text, const std::string& flag, const std::string& example) {
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    for (const auto& item : split(text, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + ": '" + item + "' is not an integer", example);
        }
    }
    return out;
}

inline Partition partition(const std::string& text, const std::string& flag, const std::string& example) {
    try {
        return Partition(int_list(text, flag, example));
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what(), example);
    }
}

inline std::vector<BigRational> point(const std::string& text, const std::string& example) {
    std::vector<BigRational> out;
    for (const auto& item : split(text, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--point: ") + e.what(), example);
        }
    }
    return out;
}

/// "2,2,3,3;2,3,4,5": rows separated by ';'.
inline std::vector<std::vector<int>> rows(const std::string& text, const std::string& flag, const std::string& example) {
    std::vector<std::vector<int>> out;
    for (const auto& row : split(text, ';')) {
        out.push_back(int_list(row, flag, example));
    }
    return out;
}

inline void check_nvars(std::size_t n, const std::string& example) {
    if (n < 1 || n > kMaxVars) {
        throw UsageError("--nvars must lie in 1.." + std::to_string(kMaxVars) + ", got " + std::to_string(n), example);
    }
}

inline void check_cells(int size, const std::string& flag, const std::string& example) {
    if (size > kMaxCells) {
        throw UsageError(flag + ": at most " + std::to_string(kMaxCells) + " cells are supported, got " +
                             std::to_string(size),
                         example);
    }
}

/// Text rendering: scalars as "key: value", everything else as compact JSON.
inline void print_text(std::ostream& out, const json& j) {
    for (const auto& [key, value] : j.items()) {
        if (key == "schema" || key == "ascii") {
            continue;
        }
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    if (j.contains("ascii")) {
        for (const auto& [key, value] : j["ascii"].items()) {
            out << key << ":\n" << value.get<std::string>();
        }
    }
}

} // namespace detail

struct Options {
    std::string format = "text";
    std::string outer, inner, rho, lambda, point_text, weights, degrees, checkpoint, s_rows, t_rows;
    std::size_t nvars = 3;
    std::size_t var = 0;
    bool emit_numerator = false;
    int max_size = 5;
    std::size_t min_nvars = 2;
    int nlabels = 0, d = 0, e = 1;
    std::uint64_t seed = 0;
    std::size_t index = 0;
    bool trace = false;
    bool compare_greedy = false;
    bool minimality = false;
    int seeds = 5;
    int max_cells = 0, max_labels = 0;
    int dim = 0;
    unsigned jobs = 1;
};

namespace detail {

inline int emit(std::ostream& out, const Options& o, const json& j, const std::string& bare = {}) {
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else if (!bare.empty()) {
        out << bare << "\n";
    } else {
        print_text(out, j);
    }
    return kOk;
}

inline SkewShape skew(const Options& o, const std::string& example) {
    const Partition outer = partition(o.outer, "--outer", example);
    const Partition inner = partition(o.inner, "--inner", example);
    if (!partition_contains(inner, outer)) {
        throw UsageError("--inner " + inner.str() + " is not contained in --outer " + outer.str(), example);
    }
    check_cells(outer.size(), "--outer", example);
    return SkewShape(outer, inner);
}

inline int schur_expand(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio schur expand --outer 3,2,1 --inner 1 --nvars 3";
    const SkewShape shape = skew(o, ex);
    check_nvars(o.nvars, ex);
    const SparsePolynomial p = schur_poly(shape, o.nvars);
    json j = io::to_json(p);
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << p.str() << "\n";
    }
    return kOk;
}

inline int schur_eval(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio schur eval --outer 2,1 --point 1,2,3";
    const SkewShape shape = skew(o, ex);
    const auto pt = point(o.point_text, ex);
    check_nvars(pt.size(), ex);
    BigRational value;
    std::string route;
    if (shape.inner().empty()) {
        SchurEvaluator eval;
        SchurEvaluator::Route r{};
        value = eval.evaluate(shape.outer(), pt, &r);
        route = r == SchurEvaluator::Route::expanded ? "expanded"
                                                      : (r == SchurEvaluator::Route::bialternant ? "bialternant" : "branching");
    } else {
        value = schur_poly(shape, pt.size()).evaluate(pt);
        route = "expanded";
    }
    json j = {{"schema", "schurratio.schur-eval/1"}, {"outer", shape.outer().parts()},
              {"inner", shape.inner().parts()},      {"value", to_string(value)},
              {"route", route}};
    return emit(out, o, j, to_string(value));
}

inline int schur_decompose(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio schur decompose --rho 2,1 --nvars 3";
    const Partition rho = partition(o.rho, "--rho", ex);
    check_cells(rho.size(), "--rho", ex);
    check_nvars(o.nvars, ex);
    SchurContext ctx;
    const auto parts = skew_decomposition(rho, o.nvars, &ctx);
    json list = json::array();
    for (const auto& [d, p] : parts) {
        list.push_back({{"d", d}, {"skew", p.str()}, {"polynomial", io::to_json(p)}});
    }
    const bool ok = reassemble(parts, o.nvars) == ctx.get(rho, o.nvars);
    json j = {{"schema", "schurratio.decompose/1"}, {"rho", rho.parts()}, {"nvars", o.nvars},
              {"parts", list}, {"reassembles", ok}};
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [d, p] : parts) {
            out << "d=" << d << ": " << p.str() << "\n";
        }
        out << "reassembles: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? kOk : kViolated;
}

inline int deriv_check(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio deriv check --rho 2,1 --lambda 1,1 --nvars 3";
    const Partition rho = partition(o.rho, "--rho", ex);
    const Partition lambda = partition(o.lambda, "--lambda", ex);
    check_cells(rho.size(), "--rho", ex);
    check_nvars(o.nvars, ex);
    if (o.nvars < rho.length() || o.nvars < lambda.length()) {
        throw UsageError("--nvars must be at least the number of rows of --rho and --lambda", ex);
    }
    if (o.var > o.nvars || o.var == 0) {
        throw UsageError("--var must lie in 1..nvars", ex);
    }
    SchurContext ctx;
    const DerivativeReport r = derivative_numerator(rho, lambda, o.nvars, o.var - 1, &ctx);
    json j = io::to_json(r, o.emit_numerator);
    j["var"] = o.var;
    const bool contained = partition_contains(lambda, rho);
    j["lambda_in_rho"] = contained;
    j["quotient_rule_agrees"] = r.numerator == quotient_rule_numerator(rho, lambda, o.nvars, o.var - 1, &ctx);
    emit(out, o, j);
    if (!j["quotient_rule_agrees"].get<bool>()) {
        return kViolated;
    }
    return contained && !r.all_nonpositive() ? kViolated : kOk;
}

inline int deriv_sweep(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio deriv sweep --max-size 5 --nvars 4";
    check_cells(o.max_size, "--max-size", ex);
    check_nvars(o.nvars, ex);
    const auto r = sweep_derivative(o.max_size, o.min_nvars, o.nvars, o.jobs);
    json j = {{"schema", "schurratio.deriv-sweep/1"}, {"max_size", o.max_size}, {"min_nvars", o.min_nvars},
              {"max_nvars", o.nvars},              {"instances", r.instances}, {"failures", r.failures},
              {"failed", r.failed}};
    emit(out, o, j);
    return r.failures == 0 ? kOk : kViolated;
}

inline int inject_run(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio inject run --rho 5,4 --lambda 4,4 --nlabels 5 --d 1 --e 2 --trace";
    const Partition rho = partition(o.rho, "--rho", ex);
    const Partition lambda = partition(o.lambda, "--lambda", ex);
    check_cells(rho.size(), "--rho", ex);
    if (o.d >= o.e) {
        throw UsageError("--d must be smaller than --e", ex);
    }
    std::optional<OneBoxSetting> setting;
    try {
        setting.emplace(rho, lambda, o.d, o.e, o.nlabels);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what(), ex);
    }
    TableauPair input;
    if (!o.s_rows.empty() || !o.t_rows.empty()) {
        input = {SkewTableau(setting->shape_s(), o.nlabels, rows(o.s_rows, "--s", ex)),
                 SkewTableau(setting->shape_t(), o.nlabels, rows(o.t_rows, "--t", ex))};
        if (!input.s.is_semistandard() || !input.t.is_semistandard()) {
            throw UsageError("--s/--t must be semistandard fillings of " + setting->shape_s().str() + " and " +
                                 setting->shape_t().str(),
                             ex);
        }
    } else {
        const auto all = pair_set(rho, lambda, o.nlabels, o.d, o.e);
        if (o.index >= all.size()) {
            throw UsageError("--index " + std::to_string(o.index) + " is past the " + std::to_string(all.size()) +
                                 " pairs of the domain",
                             ex);
        }
        input = all[o.index];
    }
    const SpanningTreeTrace trace = spanning_tree_region(input.s, input.t, o.seed);
    const SwapRegion greedy = greedy_region(input.s, input.t);
    const TableauPair output = phi(input.s, input.t);
    json j = {{"schema", "schurratio.inject-run/1"},
              {"rho", rho.parts()},
              {"lambda", lambda.parts()},
              {"nlabels", o.nlabels},
              {"d", o.d},
              {"e", o.e},
              {"seed", o.seed},
              {"input", io::to_json(input)},
              {"trace", io::to_json(trace)},
              {"greedy_region", io::to_json(greedy)},
              {"output", io::to_json(output)}};
    if (o.trace) {
        json ascii;
        ascii["S"] = render_ascii(input.s);
        ascii["T"] = render_ascii(input.t);
        SwapRegion partial{{trace.final_region.root}, trace.final_region.root};
        for (std::size_t k = 0; k < trace.steps.size(); ++k) {
            const auto& step = trace.steps[k];
            partial.cells.insert(std::upper_bound(partial.cells.begin(), partial.cells.end(), step.added), step.added);
            const auto [sp, tp] = swap_pair(input.s, input.t, partial);
            ascii["step " + std::to_string(k + 1) + " S'"] = render_ascii(sp);
            ascii["step " + std::to_string(k + 1) + " T'"] = render_ascii(tp);
        }
        ascii["phi S'"] = render_ascii(output.s);
        ascii["phi T'"] = render_ascii(output.t);
        j["ascii"] = ascii;
    }
    return emit(out, o, j);
}

inline int inject_verify(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio inject verify --rho 5,4 --lambda 4,4 --nlabels 5 --d 1 --e 2 --compare-greedy";
    InjectivityOptions opts;
    opts.seeds = o.seeds;
    opts.compare_greedy = o.compare_greedy;
    opts.check_minimality = o.minimality;
    if (o.max_cells > 0) {
        check_cells(o.max_cells, "--max-cells", ex);
        if (o.max_labels < 1) {
            throw UsageError("--max-labels must be positive", ex);
        }
        const auto r = sweep_injectivity(o.max_cells, o.max_labels, opts, o.jobs);
        json failed = json::array();
        for (const auto& f : r.failed) {
            failed.push_back(io::to_json(f));
        }
        json j = {{"schema", "schurratio.inject-sweep/1"}, {"max_cells", o.max_cells},
                  {"max_labels", o.max_labels},            {"instances", r.instances},
                  {"pairs_checked", r.pairs_checked},      {"failures", r.failures},
                  {"failed", failed}};
        emit(out, o, j);
        return r.failures == 0 ? kOk : kViolated;
    }
    const Partition rho = partition(o.rho, "--rho", ex);
    const Partition lambda = partition(o.lambda, "--lambda", ex);
    check_cells(rho.size(), "--rho", ex);
    if (o.d >= o.e) {
        throw UsageError("--d must be smaller than --e", ex);
    }
    InjectivityReport r;
    try {
        r = verify_injectivity(rho, lambda, o.nlabels, o.d, o.e, opts);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what(), ex);
    }
    json j = io::to_json(r);
    if (o.format != "json") {
        json brief = j;
        brief.erase("greedy_collisions");
        detail::print_text(out, brief);
        for (const auto& c : r.greedy_collisions) {
            out << "greedy collision:\n"
                << render_ascii(c.first.s) << "--\n" << render_ascii(c.first.t) << "and\n"
                << render_ascii(c.second.s) << "--\n" << render_ascii(c.second.t) << "both map to\n"
                << render_ascii(c.image.s) << "--\n" << render_ascii(c.image.t);
        }
    } else {
        out << j.dump(2) << "\n";
    }
    return r.ok() ? kOk : kViolated;
}

inline CircleWeights weights(const Options& o, const std::string& ex) {
    try {
        return CircleWeights(int_list(o.weights, "--weights", ex));
    } catch (const std::invalid_argument& err) {
        throw UsageError(std::string("--weights: ") + err.what(), ex);
    }
}

inline SU2Rep rep(const Options& o, const std::string& ex) {
    try {
        return SU2Rep(int_list(o.degrees, "--d", ex));
    } catch (const std::invalid_argument& err) {
        throw UsageError(std::string("--d: ") + err.what(), ex);
    }
}

inline int gamma0_s1_cmd(const Options& o, std::ostream& out) {
    const Gamma0Value v = gamma0_s1(weights(o, "schurratio gamma0 s1 --weights 1,-2,2"));
    return emit(out, o, io::to_json(v), to_string(v.value));
}

inline int gamma0_su2_cmd(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio gamma0 su2 --d 1,2";
    const SU2Rep r = rep(o, ex);
    try {
        const Gamma0Value v = gamma0_su2(r);
        return emit(out, o, io::to_json(v), to_string(v.value));
    } catch (const std::domain_error& err) {
        throw UsageError(err.what(), ex);
    }
}

inline int bound_s1_cmd(const Options& o, std::ostream& out) {
    const CircleWeights w = weights(o, "schurratio bound s1 --weights 1,-2,2");
    const BigRational g = gamma0_s1(w).value;
    const BigRational b = s1_upper_bound(w);
    const bool holds = g <= b;
    json j = {{"schema", "schurratio.bound/1"}, {"group", "S1"},         {"kind", "upper"},
              {"bound", to_string(b)},          {"gamma0", to_string(g)}, {"holds", holds},
              {"equal", g == b}};
    emit(out, o, j);
    return holds ? kOk : kViolated;
}

inline int bound_su2_cmd(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio bound su2 --d 1,2";
    const SU2Rep r = rep(o, ex);
    if (r.exceptional()) {
        throw UsageError("the lower bound is stated for non-exceptional representations; " + r.str() +
                             " is exceptional",
                         ex);
    }
    const BigRational g = gamma0_su2(r).value;
    const BigRational b = su2_lower_bound(r);
    const bool holds = g > b;
    json j = {{"schema", "schurratio.bound/1"}, {"group", "SU2"},        {"kind", "lower"},
              {"bound", to_string(b)},          {"gamma0", to_string(g)}, {"holds", holds}};
    emit(out, o, j);
    return holds ? kOk : kViolated;
}

inline int search_cmd(const Options& o, std::ostream& out) {
    const std::string ex = "schurratio search --dim 6 --jobs 2";
    if (o.dim < 2 || o.dim % 2 != 0) {
        throw UsageError("--dim must be a positive even integer", ex);
    }
    SearchOptions so;
    so.jobs = o.jobs;
    so.checkpoint = o.checkpoint;
    if (so.checkpoint.empty()) {
        if (const char* dir = std::getenv("SCHURRATIO_CHECKPOINT_DIR"); dir && *dir) {
            so.checkpoint = (std::filesystem::path(dir) / ("search-dim" + std::to_string(o.dim) + ".json")).string();
        }
    }
    const CoincidenceReport r = coincidence_search(o.dim, so);
    json j = io::to_json(r);
    if (!so.checkpoint.empty()) {
        j["checkpoint"] = so.checkpoint;
    }
    if (o.format == "json") {
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "dimension: " << r.dimension << "\n";
    for (const auto& e : r.su2_table) {
        out << "su2 " << e.rep.str() << ": " << (e.gamma0 ? to_string(e.gamma0->value) : "no value") << "\n";
    }
    for (const auto& m : r.matches) {
        out << "match: alpha=(";
        for (std::size_t i = 0; i < m.alpha.size(); ++i) {
            out << (i ? "," : "") << m.alpha[i];
        }
        out << ") su2=" << m.rep.str() << " gamma0=" << to_string(m.value) << "\n";
    }
    out << "matches: " << r.matches.size() << "\npruned_count: " << r.pruned_count << "\n";
    return kOk;
}

} // namespace detail

/// Parses argv-style arguments (without the program name) and runs one
/// subcommand. Returns 0 on success, 1 when a checked property fails and 2 on
/// a usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact Schur-ratio computations", "schurratio"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    // Subcommand options are also accepted after the subcommand.
    auto fmt = [&](CLI::App* sub) { sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"})); };

    auto* schur = app.add_subcommand("schur", "Schur polynomials")->require_subcommand(1);
    auto* expand = schur->add_subcommand("expand", "expand s_{outer/inner}");
    auto* eval = schur->add_subcommand("eval", "evaluate at a rational point");
    auto* decompose = schur->add_subcommand("decompose", "split off the last variable");
    for (auto* sub : {expand, eval}) {
        sub->add_option("--outer", o.outer)->required();
        sub->add_option("--inner", o.inner, "partition, or d for the first-row strip");
        fmt(sub);
    }
    expand->add_option("--nvars", o.nvars);
    eval->add_option("--point", o.point_text)->required();
    decompose->add_option("--rho", o.rho)->required();
    decompose->add_option("--nvars", o.nvars);
    fmt(decompose);

    auto* deriv = app.add_subcommand("deriv", "derivative numerators")->require_subcommand(1);
    auto* check = deriv->add_subcommand("check", "sign of one numerator");
    check->add_option("--rho", o.rho)->required();
    check->add_option("--lambda", o.lambda)->required();
    check->add_option("--nvars", o.nvars);
    o.var = 0;
    check->add_option("--var", o.var, "1-based variable (default: last)");
    check->add_flag("--emit-numerator", o.emit_numerator);
    fmt(check);
    auto* sweep = deriv->add_subcommand("sweep", "all lambda inside rho up to a size");
    sweep->add_option("--max-size", o.max_size);
    sweep->add_option("--nvars", o.nvars, "largest number of variables");
    sweep->add_option("--min-nvars", o.min_nvars);
    sweep->add_option("--jobs", o.jobs);
    fmt(sweep);

    auto* inject = app.add_subcommand("inject", "the pair-swap injection")->require_subcommand(1);
    auto* irun = inject->add_subcommand("run", "apply the map to one pair");
    auto* iverify = inject->add_subcommand("verify", "check injectivity exhaustively");
    for (auto* sub : {irun, iverify}) {
        sub->add_option("--rho", o.rho);
        sub->add_option("--lambda", o.lambda);
        sub->add_option("--nlabels", o.nlabels);
        sub->add_option("--d", o.d);
        sub->add_option("--e", o.e);
        fmt(sub);
    }
    irun->add_option("--s", o.s_rows, "rows of S separated by ';'");
    irun->add_option("--t", o.t_rows, "rows of T separated by ';'");
    irun->add_option("--index", o.index, "pick the k-th pair of the domain");
    irun->add_option("--seed", o.seed);
    irun->add_flag("--trace", o.trace);
    iverify->add_flag("--compare-greedy", o.compare_greedy);
    iverify->add_flag("--minimality", o.minimality);
    iverify->add_option("--seeds", o.seeds);
    iverify->add_option("--max-cells", o.max_cells);
    iverify->add_option("--max-labels", o.max_labels);
    iverify->add_option("--jobs", o.jobs);

    auto* gamma0 = app.add_subcommand("gamma0", "leading Laurent coefficient")->require_subcommand(1);
    auto* g_s1 = gamma0->add_subcommand("s1", "circle action");
    auto* g_su2 = gamma0->add_subcommand("su2", "SU2 action");
    auto* bound = app.add_subcommand("bound", "bounds on gamma0")->require_subcommand(1);
    auto* b_s1 = bound->add_subcommand("s1", "upper bound for the circle");
    auto* b_su2 = bound->add_subcommand("su2", "lower bound for SU2");
    for (auto* sub : {g_s1, b_s1}) {
        sub->add_option("--weights", o.weights)->required()->allow_extra_args(false);
        fmt(sub);
    }
    for (auto* sub : {g_su2, b_su2}) {
        sub->add_option("--d", o.degrees)->required();
        fmt(sub);
    }

    auto* search = app.add_subcommand("search", "circle/SU2 gamma0 coincidences");
    search->add_option("--dim", o.dim)->required();
    search->add_option("--checkpoint", o.checkpoint);
    search->add_option("--jobs", o.jobs);
    fmt(search);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        // Deepest subcommand reached so far picks the example.
        const std::vector<std::pair<CLI::App*, const char*>> examples{
            {expand, "schurratio schur expand --outer 3,2,1 --inner 1 --nvars 3"},
            {eval, "schurratio schur eval --outer 2,1 --point 1,2,3"},
            {decompose, "schurratio schur decompose --rho 2,1 --nvars 3"},
            {check, "schurratio deriv check --rho 2,1 --lambda 1,1 --nvars 3"},
            {sweep, "schurratio deriv sweep --max-size 5 --nvars 4"},
            {irun, "schurratio inject run --rho 5,4 --lambda 4,4 --nlabels 5 --d 1 --e 2 --trace"},
            {iverify, "schurratio inject verify --max-cells 6 --max-labels 3"},
            {g_su2, "schurratio gamma0 su2 --d 1,2"},
            {b_s1, "schurratio bound s1 --weights 1,-2,2"},
            {b_su2, "schurratio bound su2 --d 1,2"},
            {search, "schurratio search --dim 6 --jobs 2"},
        };
        const char* example = "schurratio gamma0 s1 --weights 1,-2,2";
        for (const auto& [sub, text] : examples) {
            if (sub->parsed()) {
                example = text;
            }
        }
        err << "error: " << e.what() << "\nexample: " << example << "\n";
        return kUsage;
    }
    if (o.var == 0) {
        o.var = o.nvars;
    }

    try {
        if (expand->parsed()) return detail::schur_expand(o, out);
        if (eval->parsed()) return detail::schur_eval(o, out);
        if (decompose->parsed()) return detail::schur_decompose(o, out);
        if (check->parsed()) return detail::deriv_check(o, out);
        if (sweep->parsed()) return detail::deriv_sweep(o, out);
        if (irun->parsed()) return detail::inject_run(o, out);
        if (iverify->parsed()) return detail::inject_verify(o, out);
        if (g_s1->parsed()) return detail::gamma0_s1_cmd(o, out);
        if (g_su2->parsed()) return detail::gamma0_su2_cmd(o, out);
        if (b_s1->parsed()) return detail::bound_s1_cmd(o, out);
        if (b_su2->parsed()) return detail::bound_su2_cmd(o, out);
        if (search->parsed()) return detail::search_cmd(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nexample: " << e.example() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "error: no command given\n";
    return kUsage;
}

} // namespace schurratio::cli

#endif // SCHURRATIO_CLI_HPP
