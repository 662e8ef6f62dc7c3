#include "klyachko/report.hpp"

#include <sstream>

#include <json.hpp>

namespace klyachko {

std::string RunOptions::mode_string() const {
    if (!randomized) return "symbolic";
    std::ostringstream out;
    out << "randomized(points=" << points << ",seed=" << seed << ")";
    return out.str();
}

std::string VerificationReport::text() const {
    std::ostringstream out;
    out << suite;
    if (!params.empty()) {
        out << " [";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) out << ", ";
            out << params[i].first << "=" << params[i].second;
        }
        out << "]";
    }
    out << " mode=" << mode << ": " << verdict() << " (" << checks_run << " checks, "
        << failures.size() << " failures, " << elapsed_ms << " ms)";
    for (const auto& f : failures) {
        out << "\n  FAIL " << f.id << ": " << f.witness;
    }
    return out.str();
}

std::string VerificationReport::json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["mode"] = mode;
    j["checks_run"] = checks_run;
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        fs.push_back(nlohmann::ordered_json{{"id", f.id}, {"witness", f.witness}});
    }
    j["failures"] = fs;
    j["elapsed_ms"] = elapsed_ms;
    j["verdict"] = verdict();
    return j.dump(2) + "\n";
}

}  // namespace klyachko
