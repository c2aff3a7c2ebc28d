#include "tango/certificate.hpp"

namespace tango {

Json field_to_json(const FieldCtx& ctx) {
    return Json{{"p", ctx.characteristic()},
                {"n", ctx.extension_degree()},
                {"modulus", ctx.modulus()}};
}

Json elem_to_json(const FieldElem& e) { return Json(e.digits()); }

Json poly_to_json(const Poly& f) {
    Json arr = Json::array();
    for (int i = 0; i <= f.degree(); ++i)
        arr.push_back(elem_to_json(f.coeff(static_cast<size_t>(i))));
    return arr;
}

Json rational_to_json(const RationalFn& r) {
    return Json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

Json differential_to_json(const Differential& w) {
    return rational_to_json(w.coefficient());
}

bool Certificate::all_steps_passed() const {
    for (const auto& s : steps)
        if (!s.passed) return false;
    return true;
}

Json Certificate::to_json() const {
    Json j;
    j["tool_version"] = kToolVersion;
    j["field"] = field ? field_to_json(*field) : Json();
    j["seed"] = seed;
    j["input"] = input;
    Json steps_json = Json::array();
    for (const auto& s : steps)
        steps_json.push_back(Json{{"name", s.name},
                                  {"verdict", s.passed},
                                  {"witness", s.witness}});
    j["steps"] = steps_json;
    j["verdict"] = verdict;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    return j;
}

}  // namespace tango
