#include "gvs/json_io.hpp"

#include <limits>

namespace gvs {

json to_json(const RTuple& t) {
    return json{{"n", t.n()}, {"R", t.ctx.dividers}, {"entries", t.entries}};
}

RTuple rtuple_from_json(const json& j) {
    RTupleContext ctx(j.at("n").get<int>(), j.at("R").get<std::vector<int>>());
    return RTuple(ctx, j.at("entries").get<std::vector<int>>());
}

json to_json(const Shape& s) { return json{{"n", s.n}, {"parts", s.parts}}; }

Shape shape_from_json(const json& j) {
    return make_shape(j.at("n").get<int>(), j.at("parts").get<std::vector<int>>());
}

namespace {

json coeff_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return static_cast<std::int64_t>(c);
    return c.str();
}

Int coeff_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

} // namespace

json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [exps, coeff] : p.terms())
        terms.push_back(json{{"exps", exps}, {"coeff", coeff_to_json(coeff)}});
    return json{{"n_vars", p.n_vars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const json& j) {
    MultiPoly p(j.at("n_vars").get<int>());
    for (const auto& term : j.at("terms"))
        p.add_term(term.at("exps").get<std::vector<int>>(), coeff_from_json(term.at("coeff")));
    return p;
}

json to_json(const ClassFlags& f) {
    return json{{"is_upper", f.is_upper},
                {"is_flag", f.is_flag},
                {"is_r_increasing", f.is_r_increasing},
                {"is_gapless", f.is_gapless},
                {"is_gapless_core", f.is_gapless_core},
                {"is_bounded_by_platform", f.is_bounded_by_platform},
                {"is_ceiling_flag", f.is_ceiling_flag},
                {"has_flag_critical_list", f.has_flag_critical_list}};
}

json to_json(const CriticalList& cl) {
    json carrels = json::array();
    for (const auto& pairs : cl.carrel_pairs) {
        json carrel = json::array();
        for (const auto& pair : pairs)
            carrel.push_back(json{{"index", pair.index}, {"entry", pair.entry}});
        carrels.push_back(std::move(carrel));
    }
    return carrels;
}

json to_json(const NPath& p) {
    json components = json::array();
    for (const Path& path : p.components)
        components.push_back(json{{"source", {path.source_longitude, path.source_depth}},
                                  {"east_depths", path.east_depths},
                                  {"sink_depth", path.sink_depth}});
    return json{{"components", std::move(components)},
                {"sink_permutation", p.sink_assignment}};
}

json to_json(const EquivClass& cls, const Shape& shape) {
    return json{{"gamma", to_json(cls.gamma)},
                {"xi", to_json(cls.xi)},
                {"size_of_interval", cls.interval_size()},
                {"efficiency_count_at_gamma", efficiency_count(shape, cls.gamma)}};
}

json to_json(const MatchReport& report) {
    json matched = json::array();
    for (const auto& entry : report.matched) {
        json pis = json::array();
        for (const Permutation& pi : entry.matching_pis) pis.push_back(pi.one_line);
        matched.push_back(json{{"gamma", to_json(entry.gamma)}, {"pi_one_line", std::move(pis)}});
    }
    json unmatched = json::array();
    for (const RTuple& gamma : report.unmatched_gammas) unmatched.push_back(to_json(gamma));
    return json{{"matched", std::move(matched)},
                {"unmatched_gammas", std::move(unmatched)},
                {"count", report.matched.size()}};
}

} // namespace gvs
