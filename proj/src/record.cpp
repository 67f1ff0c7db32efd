#include "selberg/record.hpp"

#include <sstream>

#include <json.hpp>

namespace selberg {

using ordered_json = nlohmann::ordered_json;

OutputRecord make_output_record(const MomentResult& result) {
    OutputRecord rec;
    rec.n = result.request.n;
    rec.mu = result.request.mu;
    rec.tau = result.request.tau;
    rec.a = result.request.a;
    rec.b = result.request.b;
    const long degree = rec.n * rec.mu;
    rec.coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (long k = 0; k <= degree; ++k) rec.coeffs.push_back(result.poly.coeff(static_cast<int>(k)));
    rec.endpoint0_ok = result.poly.eval(Rational(0)) == result.endpoint0;
    rec.endpoint1_ok = result.poly.eval(Rational(1)) == result.endpoint1;
    rec.monic_ok = result.poly.degree() == degree && result.poly.leading() == 1;
    return rec;
}

std::string to_json(const OutputRecord& record) {
    ordered_json j;
    j["n"] = record.n;
    j["mu"] = record.mu;
    j["tau"] = fraction_string(record.tau);
    j["a"] = fraction_string(record.a);
    j["b"] = fraction_string(record.b);
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : record.coeffs) {
        ordered_json entry;
        entry["num"] = c.get_num().get_str();
        entry["den"] = c.get_den().get_str();
        coeffs.push_back(entry);
    }
    j["coeffs"] = std::move(coeffs);
    ordered_json checks;
    checks["endpoint0"] = record.endpoint0_ok ? "pass" : "fail";
    checks["endpoint1"] = record.endpoint1_ok ? "pass" : "fail";
    checks["monic"] = record.monic_ok ? "pass" : "fail";
    j["checks"] = std::move(checks);
    return j.dump();
}

OutputRecord record_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    OutputRecord rec;
    rec.n = j.at("n").get<long>();
    rec.mu = j.at("mu").get<long>();
    rec.tau = rational_from_string(j.at("tau").get<std::string>());
    rec.a = rational_from_string(j.at("a").get<std::string>());
    rec.b = rational_from_string(j.at("b").get<std::string>());
    for (const auto& entry : j.at("coeffs")) {
        Rational num = rational_from_string(entry.at("num").get<std::string>());
        Rational den = rational_from_string(entry.at("den").get<std::string>());
        rec.coeffs.push_back(num / den);
    }
    rec.endpoint0_ok = j.at("checks").at("endpoint0").get<std::string>() == "pass";
    rec.endpoint1_ok = j.at("checks").at("endpoint1").get<std::string>() == "pass";
    rec.monic_ok = j.at("checks").at("monic").get<std::string>() == "pass";
    return rec;
}

std::string to_plain(const OutputRecord& record) {
    std::ostringstream os;
    for (std::size_t k = 0; k < record.coeffs.size(); ++k)
        os << k << " " << fraction_string(record.coeffs[k]) << "\n";
    return os.str();
}

} // namespace selberg
