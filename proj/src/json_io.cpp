#include "cmlocus/json_io.hpp"

#include <fstream>

namespace cmlocus {

using nlohmann::json;

nlohmann::json arrangement_to_json(const Arrangement& a) {
    json j;
    j["multiplicities"] = a.multiplicities().values();
    j["thetas"] = a.ensemble().thetas();
    return j;
}

Arrangement arrangement_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::invalid_argument("arrangement: expected a JSON object");
    if (!j.contains("multiplicities") || !j["multiplicities"].is_array())
        throw std::invalid_argument("arrangement: missing \"multiplicities\" array");
    if (!j.contains("thetas") || !j["thetas"].is_array())
        throw std::invalid_argument("arrangement: missing \"thetas\" array");

    std::vector<int> m;
    for (const auto& v : j["multiplicities"]) {
        if (!v.is_number_integer())
            throw std::invalid_argument("arrangement: multiplicities must be integers");
        m.push_back(v.get<int>());
    }
    std::vector<double> th;
    for (const auto& v : j["thetas"]) {
        if (!v.is_number())
            throw std::invalid_argument("arrangement: thetas must be numbers");
        th.push_back(v.get<double>());
    }
    if (m.size() != th.size())
        throw std::invalid_argument("arrangement: multiplicities/thetas length mismatch");
    return Arrangement(MultiplicityList(std::move(m)), std::move(th));
}

nlohmann::json solve_result_to_json(const SolveResult& r) {
    json j = arrangement_to_json(r.arrangement);
    j["gradient_inf_norm"] = r.gradient_inf_norm;
    j["iterations"] = r.iterations;
    j["potential"] = r.potential_value;
    return j;
}

nlohmann::json locus_report_to_json(const LocusReport& r) {
    json lines = json::array();
    for (const LineLocusRecord& rec : r.lines) {
        lines.push_back({{"index", rec.index},
                         {"multiplicity", rec.multiplicity},
                         {"residuals", rec.residuals},
                         {"relative", rec.relative},
                         {"reflection_invariant", rec.reflection_invariant},
                         {"collision", rec.collision}});
    }
    return json{{"lines", std::move(lines)},
                {"first_locus_pass", r.first_locus_pass},
                {"all_locus_pass", r.all_locus_pass},
                {"coarsely_coxeter", r.coarsely_coxeter},
                {"tolerance",
                 {{"first", r.tolerance.first},
                  {"locus", r.tolerance.locus},
                  {"reflection", r.tolerance.reflection}}}};
}

Arrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return arrangement_from_json(j);
}

void save_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace cmlocus
