#include "stirlab/jsonio.hpp"

namespace stirlab {

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [v, e] : m.exponents()) exps[v] = e;
        terms.push_back({{"coeff", c.get_str()}, {"exps", exps}});
    }
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : p.vars()) vars.push_back(v);
    return {{"vars", vars}, {"terms", terms}};
}

nlohmann::json report_to_json(const IdentityReport& r) {
    nlohmann::json j = {{"id", r.id},
                        {"bound", r.bound},
                        {"pass", r.pass},
                        {"seconds", r.seconds}};
    if (!r.pass) j["counterexample"] = r.counterexample;
    if (r.sampling) j["sampling"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace stirlab
