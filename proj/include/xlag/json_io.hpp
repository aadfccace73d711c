#ifndef XLAG_JSON_IO_HPP
#define XLAG_JSON_IO_HPP

#include <json.hpp>

#include "xlag/eop.hpp"

namespace xlag {

using nlohmann::json;

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(to_string(p.coeff(k)));
    return arr;
}

inline Poly poly_from_json(const json& arr) {
    std::vector<Rational> cs;
    cs.reserve(arr.size());
    for (const auto& s : arr) cs.push_back(rat_parse(s.get<std::string>()));
    return Poly(std::move(cs));
}

inline Case case_from_name(const std::string& s) {
    if (s == "i") return Case::I;
    if (s == "ii") return Case::II;
    if (s == "iii") return Case::III;
    throw ConstraintViolation("unknown case '" + s + "' (expected i, ii, or iii)");
}

inline const char* convention_name(SpectrumConvention c) {
    return c == SpectrumConvention::Construction ? "construction" : "constant-dropped";
}

inline SpectrumConvention convention_from_name(const std::string& s) {
    if (s == "construction") return SpectrumConvention::Construction;
    if (s == "constant-dropped") return SpectrumConvention::ConstantDropped;
    throw ConstraintViolation("unknown convention '" + s + "'");
}

constexpr int kSchemaVersion = 1;

inline json descriptor_to_json(const ExtendedPotential& ext,
                               SpectrumConvention conv = SpectrumConvention::Construction) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["case"] = case_name(ext.spec.kase);
    j["l"] = ext.spec.l;
    j["m1"] = ext.spec.m1;
    j["m2"] = ext.spec.m2;
    j["omega"] = to_string(ext.spec.omega);
    j["alpha"] = to_string(ext.alpha);
    j["mu"] = ext.mu;
    j["C"] = to_string(ext.C);
    j["g_coeffs"] = poly_to_json(ext.g);
    j["E1"] = to_string(ext.E1);
    j["E2"] = to_string(ext.E2);
    j["convention"] = convention_name(conv);
    return j;
}

inline std::pair<ExtendedPotential, SpectrumConvention> descriptor_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw ConstraintViolation("unsupported descriptor schema version");
    ExtensionSpec spec{case_from_name(j.at("case").get<std::string>()),
                       j.at("l").get<int>(), j.at("m1").get<int>(), j.at("m2").get<int>(),
                       rat_parse(j.at("omega").get<std::string>())};
    ExtendedPotential ext = build_extension(spec);
    // the descriptor must agree with a fresh construction
    if (poly_from_json(j.at("g_coeffs")) != ext.g ||
        j.at("mu").get<int>() != ext.mu ||
        rat_parse(j.at("C").get<std::string>()) != ext.C ||
        rat_parse(j.at("E1").get<std::string>()) != ext.E1 ||
        rat_parse(j.at("E2").get<std::string>()) != ext.E2 ||
        rat_parse(j.at("alpha").get<std::string>()) != ext.alpha)
        throw ConstraintViolation("descriptor is inconsistent with its own parameters");
    return {ext, convention_from_name(j.at("convention").get<std::string>())};
}

inline json eop_to_json(const EopFamily& fam, const EopPolynomial& sol) {
    json j;
    j["family"] = family_name(fam.label);
    j["alpha"] = to_string(fam.alpha);
    j["m1"] = fam.m1;
    j["m2"] = fam.m2;
    j["n"] = sol.n;
    j["nu"] = sol.nu;
    j["coefficients"] = poly_to_json(sol.y);
    return j;
}

} // namespace xlag

#endif
