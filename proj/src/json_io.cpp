#include "lgtoric/json_io.hpp"

namespace lgtoric {

nlohmann::json terms_to_json(const LaurentPolynomial& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) {
        nlohmann::json ev = nlohmann::json::array();
        for (int i = 0; i < f.dim(); ++i) ev.push_back(e[i]);
        out.push_back({c.get_str(), ev});
    }
    return out;
}

LaurentPolynomial terms_from_json(const nlohmann::json& j, int dim) {
    if (!j.is_array()) throw SchemaError("term list must be an array");
    LaurentPolynomial f(dim);
    for (const auto& tj : j) {
        if (!tj.is_array() || tj.size() != 2 || !tj[0].is_string() || !tj[1].is_array() ||
            static_cast<int>(tj[1].size()) != dim)
            throw SchemaError("term must be [coeff_string, exponent_vector]");
        Int c;
        try {
            c = Int(tj[0].get<std::string>());
        } catch (...) {
            throw SchemaError("bad coefficient string");
        }
        ExpVec e(dim);
        for (int i = 0; i < dim; ++i) e[i] = tj[1][static_cast<size_t>(i)].get<std::int32_t>();
        if (f.coefficient(e) != 0) throw SchemaError("duplicate exponent in term list");
        if (c != 0) f.set(e, c);
    }
    return f;
}

nlohmann::json mutation_to_json(const MutationData& d) {
    nlohmann::json j;
    j["pivot"] = d.pivot;
    j["g1"] = terms_to_json(d.g1);
    j["g2"] = terms_to_json(d.g2);
    j["g3"] = terms_to_json(d.g3);
    j["g4"] = terms_to_json(d.g4);
    if (d.conjugation) {
        nlohmann::json m = nlohmann::json::array();
        for (const auto& r : d.conjugation->rows()) {
            nlohmann::json mr = nlohmann::json::array();
            for (const Int& x : r) mr.push_back(x.get_si());
            m.push_back(mr);
        }
        j["conjugation"] = m;
    }
    return j;
}

MutationData mutation_from_json(const nlohmann::json& j) {
    MutationData d(3);
    if (!j.contains("pivot") || !j["pivot"].is_number_integer())
        throw SchemaError("decomposition needs an integer pivot");
    d.pivot = j["pivot"].get<int>();
    if (d.pivot < 0 || d.pivot > 2) throw SchemaError("pivot must be 0, 1 or 2");
    for (const char* k : {"g1", "g2", "g3", "g4"})
        if (!j.contains(k)) throw SchemaError(std::string("decomposition needs ") + k);
    d.g1 = terms_from_json(j["g1"]);
    d.g2 = terms_from_json(j["g2"]);
    d.g3 = terms_from_json(j["g3"]);
    d.g4 = terms_from_json(j["g4"]);
    if (j.contains("conjugation") && !j["conjugation"].is_null()) {
        std::vector<std::vector<Int>> m;
        for (const auto& rrow : j["conjugation"]) {
            std::vector<Int> r;
            for (const auto& x : rrow) r.push_back(Int(x.get<long>()));
            m.push_back(std::move(r));
        }
        UnimodularMap u = UnimodularMap::from_rows(m);
        if (!u.is_unimodular()) throw SchemaError("conjugation determinant is not +-1");
        d.conjugation = u;
    }
    return d;
}

} // namespace lgtoric
