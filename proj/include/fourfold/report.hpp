#pragma once

#include <string>

#include <json.hpp>

#include "fourfold/certificate.hpp"

namespace fourfold {

enum class ReportFormat { json, text };

inline ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "text") return ReportFormat::text;
    throw std::invalid_argument("unknown format '" + s + "' (expected json or text)");
}

namespace detail {

inline nlohmann::ordered_json value_to_json(const CheckValue& v) {
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v);
    if (std::holds_alternative<Int>(v)) return std::get<Int>(v);
    return std::get<std::string>(v);
}

inline CheckValue value_from_json(const nlohmann::ordered_json& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer()) return j.get<Int>();
    if (j.is_string()) return j.get<std::string>();
    throw std::invalid_argument("check values must be booleans, integers, or strings");
}

}  // namespace detail

// Deterministic serialization: field order is fixed, params keep their
// declaration order, integers stay integers. Identical certificates render
// to identical bytes.
inline std::string report(const Certificate& cert, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["schema"] = "fourfold-cert/1";
        j["scenario"]["id"] = cert.scenario.id;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : cert.scenario.params) params[k] = v;
        j["scenario"]["params"] = std::move(params);
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const Check& c : cert.checks) {
            nlohmann::ordered_json jc;
            jc["desc"] = c.desc;
            jc["expected"] = detail::value_to_json(c.expected);
            jc["computed"] = detail::value_to_json(c.computed);
            jc["pass"] = c.pass;
            checks.push_back(std::move(jc));
        }
        j["checks"] = std::move(checks);
        j["overall"] = cert.overall;
        j["anchors"] = cert.anchors;
        return j.dump(2) + "\n";
    }

    std::string out = "certificate: " + cert.scenario.id + "\nparams:";
    for (const auto& [k, v] : cert.scenario.params) out += " " + k + "=" + std::to_string(v);
    out += "\n";
    std::size_t passed = 0;
    for (const Check& c : cert.checks) {
        out += c.pass ? "  [ok]   " : "  [FAIL] ";
        out += c.desc + ": expected " + to_text(c.expected) + ", computed " +
               to_text(c.computed) + "\n";
        if (c.pass) ++passed;
    }
    out += "anchors:";
    for (const std::string& a : cert.anchors) out += " " + a;
    out += "\n";
    out += std::string(cert.overall ? "PASS" : "FAIL") + " (" + std::to_string(passed) + "/" +
           std::to_string(cert.checks.size()) + " checks)\n";
    return out;
}

// Inverse of the JSON report, for consumers that archive certificates.
inline Certificate certificate_from_json(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    if (j.at("schema").get<std::string>() != "fourfold-cert/1")
        throw std::invalid_argument("unsupported certificate schema");
    Certificate cert;
    cert.scenario.id = j.at("scenario").at("id").get<std::string>();
    for (const auto& [k, v] : j.at("scenario").at("params").items())
        cert.scenario.params.emplace_back(k, v.get<Int>());
    for (const auto& jc : j.at("checks")) {
        Check c;
        c.desc = jc.at("desc").get<std::string>();
        c.expected = detail::value_from_json(jc.at("expected"));
        c.computed = detail::value_from_json(jc.at("computed"));
        c.pass = jc.at("pass").get<bool>();
        cert.checks.push_back(std::move(c));
    }
    cert.overall = j.at("overall").get<bool>();
    for (const auto& a : j.at("anchors")) cert.anchors.push_back(a.get<std::string>());
    return cert;
}

}  // namespace fourfold
