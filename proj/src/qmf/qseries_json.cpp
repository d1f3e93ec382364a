#include "qmf/qseries_json.hpp"

#include <json.hpp>

#include "qmf/error.hpp"

namespace qmf {

std::string qseries_to_json(const QSeries& s) {
    nlohmann::json j;
    j["valuation"] = s.valuation();
    j["precision"] = s.precision();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rat& c : s.coeffs()) coeffs.push_back(rat_to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("valuation") || !j.contains("precision") ||
        !j.contains("coeffs") || !j["coeffs"].is_array())
        throw Error(ErrorCode::BadArgument, "malformed series JSON");
    std::vector<Rat> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw Error(ErrorCode::BadArgument, "series coefficients must be strings");
        coeffs.push_back(rat_from_string(c.get<std::string>()));
    }
    return QSeries::from_coeffs(j["valuation"].get<std::int64_t>(), std::move(coeffs),
                                j["precision"].get<std::int64_t>());
}

}  // namespace qmf
