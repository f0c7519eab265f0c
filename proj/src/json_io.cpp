#include "effcone/json_io.hpp"

namespace effcone {

Json to_json(const DivisorClass& D) {
    Json j;
    j["s"] = D.s;
    j["d"] = rat_to_string(D.d);
    Json ms = Json::array();
    for (const auto& m : D.mults) ms.push_back(rat_to_string(m));
    j["mults"] = ms;
    return j;
}

DivisorClass divisor_from_json(const Json& j) {
    int s = j.at("s").get<int>();
    Rat d = parse_rational(j.at("d").get<std::string>());
    std::vector<Rat> mults;
    for (const auto& m : j.at("mults")) mults.push_back(parse_rational(m.get<std::string>()));
    return DivisorClass(s, d, std::move(mults));
}

static Json int_vectors(const std::vector<std::vector<Int>>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.str());
        out.push_back(row);
    }
    return out;
}

Json to_json(const ConeDesc& c) {
    Json j;
    j["dim"] = c.dim;
    j["rays"] = int_vectors(c.rays);
    j["inequalities"] = int_vectors(c.inequalities);
    return j;
}

Json to_json(const Certificate& cert) {
    Json j;
    j["target"] = to_json(cert.target);
    Json terms = Json::array();
    for (const auto& [g, coeff] : cert.terms) {
        Json t;
        t["generator"] = g.name();
        t["coeff"] = rat_to_string(coeff);
        terms.push_back(t);
    }
    j["terms"] = terms;
    j["violated"] = cert.violated ? Json(cert.violated->label) : Json(nullptr);
    return j;
}

Json to_json(const BaseLocusReport& r) {
    Json j;
    Json qs = Json::array();
    for (const auto& q : r.quadrics) {
        Json e;
        e["triple"] = q.triple;
        e["multiplicity"] = rat_to_string(q.multiplicity);
        qs.push_back(e);
    }
    j["quadrics"] = qs;
    Json ts = Json::array();
    for (const auto& t : r.transversal_pairs) {
        Json e;
        e["quadruple"] = t.quadruple;
        e["multiplicity"] = rat_to_string(t.multiplicity);
        e["count"] = t.count;
        ts.push_back(e);
    }
    j["transversal_pairs"] = ts;
    j["residual"] = to_json(r.residual);
    return j;
}

Json to_json(const FanoReport& r) {
    Json j;
    j["s"] = r.s;
    j["anticanonical_cube"] = rat_to_string(r.anticanonical_cube);
    j["is_nef"] = r.is_nef;
    j["is_big"] = r.is_big;
    j["is_weak_fano"] = r.is_weak_fano;
    return j;
}

Json to_json(const H0Estimate& e) {
    Json j;
    j["d"] = e.d;
    j["mults"] = e.mults;
    j["prime"] = e.prime;
    j["seeds"] = e.seeds;
    j["h0_per_trial"] = e.h0_per_trial;
    j["h0_generic_estimate"] = e.h0_generic_estimate;
    return j;
}

Json to_json(const std::vector<IncidenceEntry>& entries) {
    Json out = Json::array();
    for (const auto& e : entries) {
        Json j;
        j["generator"] = e.generator.name();
        Json ray = Json::array();
        for (const auto& x : e.ray) ray.push_back(rat_to_string(x));
        j["ray"] = ray;
        j["tight"] = e.tight_labels;
        j["extremal"] = e.extremal;
        out.push_back(j);
    }
    return out;
}

}  // namespace effcone
