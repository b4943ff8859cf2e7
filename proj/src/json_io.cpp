#include "quatring/json_io.hpp"

#include "quatring/text.hpp"

namespace quatring {

namespace {

std::string unit_tag(const Quat& u) {
    if (u == Quat::h()) return "h";
    return format_quat(u);
}

Json quat_list_json(const std::vector<Quat>& elems) {
    Json arr = Json::array();
    for (const Quat& e : elems) arr.push_back(format_quat(e));
    return arr;
}

}  // namespace

Json quat_over_den_json(const Quat& q) {
    Quat num(q.raw_num(0), q.raw_num(1), q.raw_num(2), q.raw_num(3));
    return Json{{"num", format_quat(num)}, {"den", q.raw_den()}};
}

Json poly_json(const QPoly& f, Ring ring) {
    i64 den = least_ring_denominator(f, ring);
    Json num = Json::array();
    for (const Quat& c : f.coeffs()) num.push_back(format_quat(c.scaled(Rational(den))));
    return Json{{"num", std::move(num)}, {"den", den}};
}

Json min_poly_json(const MinPoly& m) {
    if (m.is_linear()) return Json{{"root", m.root().num()}};
    return Json{{"trace", m.trace()}, {"norm", m.norm()}};
}

Json witness_json(const Witness& w, Ring ring) {
    Json j;
    j["f"] = poly_json(w.f, ring);
    if (w.partner_is_unit())
        j["partner"] = Json{{"unit", unit_tag(w.partner_unit())}};
    else
        j["partner"] = Json{{"poly", poly_json(std::get<QPoly>(w.partner), ring)}};
    j["fail_at"] = format_quat(w.fail_at);
    j["fail_value"] = quat_over_den_json(w.fail_value);
    j["modulus"] = w.modulus;
    j["verified"] = w.verified;
    return j;
}

Json reduced_form_json(const ReducedForm& rf) {
    return Json{{"a", rf.a}, {"n", rf.n}, {"T", quat_list_json(rf.t_elems)}};
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["ring"] = ring_name(v.ring);
    j["is_ringset"] = v.is_ringset;
    Json classes = Json::array();
    for (const ClassReport& rep : v.classes) {
        Json c;
        c["min_poly"] = min_poly_json(rep.mpoly);
        c["reduced"] = rep.reduced ? reduced_form_json(*rep.reduced) : Json(nullptr);
        c["gamma"] = rep.gamma;
        c["rule"] = rule_name(rep.rule);
        c["is_ringset"] = rep.is_ringset;
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    j["witness"] = v.witness ? witness_json(*v.witness, v.ring) : Json(nullptr);
    return j;
}

Json delta_stats_json(const DeltaStats& stats) {
    Json j;
    j["gamma"] = stats.gamma;
    j["deltas"] = quat_list_json(stats.deltas);
    if (stats.gamma > 0) {
        Json comb = Json::array();
        for (const auto& [coef, delta] : gamma_combination(stats))
            comb.push_back(Json{{"coef", coef},
                                {"delta", format_quat(delta)},
                                {"norm", delta.norm().num()}});
        j["combination"] = std::move(comb);
    } else {
        j["combination"] = Json(nullptr);
    }
    return j;
}

Json oracle_result_json(const OracleResult& r, Ring ring) {
    Json j;
    j["is_ringset"] = r.is_ringset;
    j["cosets_scanned"] = r.cosets_scanned;
    j["admissible"] = r.admissible;
    j["witness"] = r.witness ? witness_json(*r.witness, ring) : Json(nullptr);
    return j;
}

}  // namespace quatring
