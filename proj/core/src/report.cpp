#include "detrep/report.hpp"

namespace detrep {

Json make_envelope(const std::string& command_echo, Json results,
                   const std::vector<std::string>& warnings) {
    Json j;
    j["schema_version"] = 1;
    j["command"] = command_echo;
    j["results"] = std::move(results);
    j["warnings"] = warnings;
    return j;
}

Json model_json(const DeterminantalModel& model) {
    Json j;
    j["t"] = model.dm.t;
    j["c"] = model.dm.c;
    j["n"] = model.n;
    j["d"] = model.dim_x();
    j["b"] = model.dm.b;
    j["a"] = model.dm.a;
    j["prime"] = model.field.p;
    j["seed"] = model.seed;
    j["ell"] = model.dm.ell();
    j["mu"] = model.dm.mu();
    if (auto m1 = model.dm.mu1()) j["mu1"] = *m1;
    return j;
}

Json poly_json(const HomogPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms) {
        Json t;
        t["exps"] = std::vector<int>(e.begin(), e.end());
        t["coeff"] = c;
        terms.push_back(std::move(t));
    }
    Json j;
    j["degree"] = f.degree;
    j["terms"] = std::move(terms);
    return j;
}

Json matrix_json(const HomogMatrix& m) {
    Json rows = Json::array();
    for (int p = 0; p < m.target.rank(); ++p) {
        Json row = Json::array();
        for (int q = 0; q < m.source.rank(); ++q) row.push_back(poly_json(m.at(p, q)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["target_twists"] = m.target.twists;
    j["source_twists"] = m.source.twists;
    j["entries"] = std::move(rows);
    return j;
}

Json presentation_json(const ModulePresentation& mp) {
    Json j;
    j["label"] = mp.label;
    j["gens_twists"] = mp.gens.twists;
    j["rels"] = matrix_json(mp.rels);
    return j;
}

Json extension_json(const ExtensionPresentation& ext) {
    Json j;
    j["rank"] = ext.rank;
    j["split_input"] = ext.split_input;
    j["sub"] = presentation_json(ext.sub);
    j["quot"] = presentation_json(ext.quot);
    Json cocycles = Json::array();
    for (const auto& xi : ext.cocycles) cocycles.push_back(matrix_json(xi));
    j["cocycles"] = std::move(cocycles);
    j["assembled"] = presentation_json(ext.assembled);
    return j;
}

} // namespace detrep
