#include "h2wav/json_io.hpp"

#include <stdexcept>

namespace h2wav {

Json to_json(const PiScalar& p) { return p.to_string(); }

Json to_json(const Interval& iv) {
    return Json::array({iv.lo.coeff_string(), iv.hi.coeff_string()});
}

Json to_json(const IntervalSet& s) {
    Json out = Json::array();
    for (const auto& iv : s.pieces()) out.push_back(to_json(iv));
    return out;
}

Json to_json(const StepFunction& f) {
    Json out = Json::array();
    for (const auto& p : f.pieces())
        out.push_back(Json::array({to_json(p.where), p.value.to_string()}));
    return out;
}

Json to_json(const TilingReport& r) {
    Json out{{"overlap_defect", r.overlap_defect.to_string()},
             {"gap_defect", r.gap_defect.to_string()}};
    if (r.witness_overlap) out["witness_overlap"] = to_json(*r.witness_overlap);
    if (r.witness_gap) out["witness_gap"] = to_json(*r.witness_gap);
    return out;
}

Json to_json(const WaveletSetCheck& c) {
    return Json{{"ok", c.ok},
                {"translation", to_json(c.translation)},
                {"dilation", to_json(c.dilation)}};
}

Json to_json(const SupportProfile& sp) {
    Json ek = Json::object();
    for (const auto& [k, set] : sp.shift_overlaps) ek[std::to_string(k)] = to_json(set);
    return Json{{"script_e", sp.shift_indices}, {"ek", std::move(ek)}};
}

Json to_json(const WaveletVerdict& v) {
    Json out{{"pass", v.pass()},
             {"norm_ok", v.norm_ok},
             {"rho_ok", v.rho_ok},
             {"tq_ok", v.tq_ok},
             {"norm_sq_pi", v.norm_sq_pi.to_string()},
             {"checked_q", v.checked_q}};
    if (v.failing_q) out["failing_q"] = *v.failing_q;
    if (v.witness)
        out["witness"] = Json::array({to_json(v.witness->where), v.witness->value.to_string()});
    return out;
}

Json to_json(const ClassLabel& label) {
    if (!label.r) return Json{{"kind", "M_infinity"}};
    return Json{{"kind", "M_r"}, {"r", *label.r}};
}

Json to_json(const EquivalenceResult& e) {
    Json out{{"equivalent", e.equivalent}};
    if (e.witness) {
        Json parts = Json::array();
        for (const auto& [iv, idx] : e.witness->parts)
            parts.push_back(Json::array({to_json(iv), idx}));
        out["witness"] = std::move(parts);
    }
    return out;
}

Json to_json(const GramReport& g) {
    Json grid = Json::array();
    for (const auto& [j, k] : g.index_grid) grid.push_back(Json::array({j, k}));
    return Json{{"index_grid", std::move(grid)},
                {"max_offdiag", g.max_offdiag},
                {"max_diag_err", g.max_diag_err}};
}

Json to_json(const KrepsBuild& b) {
    Json removed = Json::array(), near = Json::array();
    for (const auto& iv : b.removed) removed.push_back(to_json(iv));
    for (const auto& iv : b.near_origin) near.push_back(to_json(iv));
    return Json{{"set", to_json(b.set)},
                {"depth", b.depth},
                {"removed", std::move(removed)},
                {"near_origin", std::move(near)},
                {"seeds", Json::array({to_json(b.seeds[0]), to_json(b.seeds[1]), to_json(b.seeds[2])})},
                {"tail_defect", b.tail_defect.to_string()}};
}

PiScalar pi_scalar_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a coefficient string");
    return PiScalar::parse(j.get<std::string>());
}

Interval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected an interval [\"lo\",\"hi\"]");
    Interval iv{pi_scalar_from_json(j[0]), pi_scalar_from_json(j[1])};
    if (iv.empty()) throw std::invalid_argument("interval endpoints must satisfy lo < hi");
    return iv;
}

IntervalSet interval_set_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of intervals");
    std::vector<Interval> ivs;
    ivs.reserve(j.size());
    for (const auto& e : j) ivs.push_back(interval_from_json(e));
    return IntervalSet(std::move(ivs));
}

StepFunction step_function_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of [interval, value] pairs");
    std::vector<StepFunction::Piece> pieces;
    pieces.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[1].is_string())
            throw std::invalid_argument("expected [interval, \"a + b*sqrt2\"]");
        pieces.push_back({interval_from_json(e[0]), Q2Value::parse(e[1].get<std::string>())});
    }
    return StepFunction::from_pieces(std::move(pieces));
}

}  // namespace h2wav
