#ifndef SCHURRATIO_SERIALIZE_HPP
#define SCHURRATIO_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "derivative.hpp"
#include "injection.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "sympquot.hpp"
#include "tableau.hpp"

namespace schurratio::io {

using nlohmann::json;

inline constexpr const char* kPolynomialSchema = "schurratio.polynomial/1";
inline constexpr const char* kTableauSchema = "schurratio.tableau/1";

inline json to_json(const Partition& p) { return p.parts(); }
inline json to_json(const Cell& c) { return json::array({c.row, c.col}); }

/// Coefficients are decimal strings so arbitrary sizes survive the trip.
inline json to_json(const SparsePolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exp", e}, {"coef", to_string(c)}});
    }
    return {{"schema", kPolynomialSchema}, {"nvars", p.nvars()}, {"terms", terms}};
}

inline SparsePolynomial polynomial_from_json(const json& j) {
    SparsePolynomial p(j.at("nvars").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
        const json& c = t.at("coef");
        p.add_term(t.at("exp").get<ExponentVector>(),
                   c.is_string() ? parse_integer(c.get<std::string>()) : BigInt(c.get<long long>()));
    }
    return p;
}

inline json to_json(const SkewTableau& t) {
    return {{"schema", kTableauSchema},
            {"outer", t.shape().outer().parts()},
            {"inner", t.shape().inner().parts()},
            {"nlabels", t.nlabels()},
            {"rows", t.rows()}};
}

inline SkewTableau tableau_from_json(const json& j) {
    const Partition outer(j.at("outer").get<std::vector<int>>());
    const Partition inner(j.value("inner", std::vector<int>{}));
    return SkewTableau(SkewShape(outer, inner), j.at("nlabels").get<int>(),
                       j.at("rows").get<std::vector<std::vector<int>>>());
}

inline json to_json(const TableauPair& p) { return {{"s", to_json(p.s)}, {"t", to_json(p.t)}}; }

inline json to_json(const SwapRegion& u) {
    json cells = json::array();
    for (const Cell c : u.cells) {
        cells.push_back(to_json(c));
    }
    return {{"root", to_json(u.root)}, {"cells", cells}};
}

inline json to_json(const SpanningTreeTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"added", to_json(s.added)}, {"anchor", to_json(s.anchor)}});
    }
    return {{"steps", steps}, {"final_region", to_json(t.final_region)}};
}

inline json to_json(const DerivativeReport& r, bool with_numerator) {
    json j = {{"schema", "schurratio.derivative/1"},
              {"rho", to_json(r.rho)},
              {"lambda", to_json(r.lambda)},
              {"nvars", r.nvars},
              {"max_coefficient", to_string(r.max_coefficient)},
              {"term_count", r.term_count},
              {"all_nonpositive", r.all_nonpositive()}};
    if (with_numerator) {
        j["numerator"] = to_json(r.numerator);
    }
    return j;
}

inline json to_json(const InjectivityReport& r) {
    json j = {{"schema", "schurratio.injectivity/1"},
              {"rho", to_json(r.rho)},
              {"lambda", to_json(r.lambda)},
              {"nlabels", r.nlabels},
              {"d", r.d},
              {"e", r.e},
              {"domain_size", r.domain_size},
              {"codomain_size", r.codomain_size},
              {"image_size", r.image_size},
              {"injective", r.injective},
              {"images_valid", r.images_valid},
              {"monomials_preserved", r.monomials_preserved},
              {"seed_invariant", r.seed_invariant},
              {"within_greedy", r.within_greedy},
              {"within_rho_e", r.within_rho_e},
              {"minimal", r.minimal},
              {"greedy_injective", r.greedy_injective}};
    json collisions = json::array();
    for (const auto& c : r.greedy_collisions) {
        collisions.push_back({{"first", to_json(c.first)}, {"second", to_json(c.second)}, {"image", to_json(c.image)}});
    }
    j["greedy_collisions"] = collisions;
    return j;
}

inline json to_json(const Gamma0Value& v) {
    return {{"schema", "schurratio.gamma0/1"},
            {"group", to_string(v.group)},
            {"value", to_string(v.value)},
            {"source", to_string(v.source)},
            {"dimension", v.dimension}};
}

inline json to_json(const CoincidenceReport& r) {
    json table = json::array();
    for (const auto& e : r.su2_table) {
        table.push_back({{"d", e.rep.degrees()},
                         {"D", e.rep.D()},
                         {"gamma0", e.gamma0 ? json(to_string(e.gamma0->value)) : json(nullptr)},
                         {"source", e.gamma0 ? json(to_string(e.gamma0->source)) : json(nullptr)}});
    }
    json matches = json::array();
    for (const auto& m : r.matches) {
        matches.push_back({{"weights", CircleWeights::from_abs(m.alpha).weights()},
                           {"abs_weights", m.alpha},
                           {"su2", m.rep.degrees()},
                           {"gamma0", to_string(m.value)}});
    }
    return {{"schema", "schurratio.search/1"},
            {"dimension", r.dimension},
            {"su2_table", table},
            {"matches", matches},
            {"pruned_count", r.pruned_count},
            {"evaluated", r.evaluated},
            {"cut", r.cut}};
}

} // namespace schurratio::io

#endif // SCHURRATIO_SERIALIZE_HPP
