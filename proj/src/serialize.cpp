#include "mfc/serialize.hpp"

#include <stdexcept>

namespace mfc {

Json to_json(const CycNum& x) {
    Json c = Json::array();
    for (long i = 0; i < static_cast<long>(x.numerators().size()); ++i) c.push_back(x.coeff(i).get_str());
    return Json{{"conductor", x.conductor()}, {"coeffs", c}};
}

CycNum cyc_from_json(const Json& j) {
    long n = j.at("conductor").get<long>();
    const Json& c = j.at("coeffs");
    if (static_cast<long>(c.size()) != euler_phi(n)) throw std::invalid_argument("coefficient count differs from phi(n)");
    std::vector<std::pair<long, mpq_class>> terms;
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpq_class q(c[i].get<std::string>());
        q.canonicalize();
        terms.emplace_back(static_cast<long>(i), q);
    }
    return CycNum::from_terms(n, terms);
}

Json to_json(const IntPoly& g) { return g.to_string(); }
IntPoly poly_from_json(const Json& j) { return IntPoly::parse(j.get<std::string>()); }

Json describe(const CycNum& x) {
    Json j = to_json(x);
    if (x.is_real()) j["numeric"] = numeric_string(x, 20);
    return j;
}

Json to_json(const ModularDatum& md) {
    Json S = Json::array();
    for (auto& row : md.S) {
        Json r = Json::array();
        for (auto& x : row) r.push_back(to_json(x));
        S.push_back(r);
    }
    Json t = Json::array();
    for (auto& x : md.twists) t.push_back(to_json(x));
    Json j{{"name", md.name}, {"S", S}, {"twists", t}, {"unit", md.unit}, {"metadata", md.metadata}};
    j["cube_root"] = md.cube_root ? to_json(*md.cube_root) : Json(nullptr);
    return j;
}

ModularDatum datum_from_json(const Json& j) {
    ModularDatum md;
    md.name = j.at("name").get<std::string>();
    for (auto& row : j.at("S")) {
        std::vector<CycNum> r;
        for (auto& x : row) r.push_back(cyc_from_json(x));
        md.S.push_back(r);
    }
    for (auto& x : j.at("twists")) md.twists.push_back(cyc_from_json(x));
    md.unit = j.at("unit").get<long>();
    if (j.contains("cube_root") && !j.at("cube_root").is_null()) md.cube_root = cyc_from_json(j.at("cube_root"));
    if (j.contains("metadata")) md.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    return md;
}

Json to_json(const FusionRing& fr) {
    Json N = Json::array();
    for (long x = 0; x < fr.rank; ++x) {
        Json a = Json::array();
        for (long y = 0; y < fr.rank; ++y) {
            Json b = Json::array();
            for (long z = 0; z < fr.rank; ++z) b.push_back(fr.at(x, y, z));
            a.push_back(b);
        }
        N.push_back(a);
    }
    return Json{{"rank", fr.rank}, {"unit", fr.unit}, {"dual", fr.dual}, {"N", N}};
}

FusionRing ring_from_json(const Json& j) {
    FusionRing fr(j.at("rank").get<long>(), j.at("unit").get<long>());
    fr.dual = j.at("dual").get<std::vector<long>>();
    const Json& N = j.at("N");
    for (long x = 0; x < fr.rank; ++x)
        for (long y = 0; y < fr.rank; ++y)
            for (long z = 0; z < fr.rank; ++z) fr.at(x, y, z) = N.at(x).at(y).at(z).get<long>();
    return fr;
}

Json to_json(const SearchCertificate& c) {
    Json surv = Json::array();
    for (auto& s : c.survivors) surv.push_back(to_json(s));
    Json elim = Json::array();
    for (auto& e : c.eliminations)
        elim.push_back(Json{{"candidate", e.candidate}, {"reason", reason_name(e.reason)}, {"detail", e.detail}});
    Json j{{"procedure", c.procedure},
           {"parameters", c.parameters},
           {"constraints", c.constraints},
           {"candidates_tested", c.candidates_tested},
           {"survivors", surv},
           {"surviving_cases", c.surviving_cases},
           {"eliminations", elim},
           {"reason_counts", c.reason_counts()},
           {"log", c.log},
           {"verified", c.verified}};
    j["fusion_ring"] = c.fusion_ring ? to_json(*c.fusion_ring) : Json(nullptr);
    return j;
}

SearchCertificate certificate_from_json(const Json& j) {
    SearchCertificate c;
    c.procedure = j.at("procedure").get<std::string>();
    c.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    c.constraints = j.at("constraints").get<std::vector<std::string>>();
    c.candidates_tested = j.at("candidates_tested").get<long>();
    for (auto& s : j.at("survivors")) c.survivors.push_back(poly_from_json(s));
    c.surviving_cases = j.at("surviving_cases").get<std::vector<std::string>>();
    for (auto& e : j.at("eliminations")) {
        auto r = reason_from_name(e.at("reason").get<std::string>());
        if (!r) throw std::invalid_argument("unknown elimination reason");
        c.eliminations.push_back({e.at("candidate").get<std::string>(), *r, e.at("detail").get<std::string>()});
    }
    c.log = j.at("log").get<std::vector<std::string>>();
    c.verified = j.at("verified").get<bool>();
    if (j.contains("fusion_ring") && !j.at("fusion_ring").is_null()) c.fusion_ring = ring_from_json(j.at("fusion_ring"));
    return c;
}

}  // namespace mfc
