#include "graphzeta/report.hpp"

namespace graphzeta {

std::vector<std::string> coeff_strings(const Polynomial& p) {
    if (p.is_zero()) return {"0"};
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const Scalar& c : p.coeffs()) out.push_back(c.str());
    return out;
}

std::vector<std::string> coeff_strings(const TruncatedSeries& s) {
    std::vector<std::string> out;
    out.reserve(s.coeffs().size());
    for (const Scalar& c : s.coeffs()) out.push_back(c.str());
    return out;
}

nlohmann::ordered_json report_json(const ZetaReport& r) {
    nlohmann::ordered_json j;
    if (r.seed) j["seed"] = *r.seed;
    j["order"] = r.theorem.order;
    j["hashimoto"] = coeff_strings(r.theorem.hashimoto);
    j["ihara"] = coeff_strings(r.theorem.ihara);
    j["det_t"] = coeff_strings(r.theorem.det_t);
    j["exponential"] = coeff_strings(r.theorem.exponential);
    j["euler"] = coeff_strings(r.theorem.euler);
    auto& agreement = j["agreement"];
    agreement["determinants_match"] = r.theorem.determinants_match;
    agreement["series_match"] = r.theorem.series_match;
    if (r.theorem.first_divergence)
        agreement["first_divergence"] = *r.theorem.first_divergence;
    j["pass"] = r.theorem.pass();
    return j;
}

std::string report_text(const ZetaReport& r) {
    std::string out;
    auto line = [&out](const std::string& s) { out += s + "\n"; };
    if (r.seed) line("seed: " + std::to_string(*r.seed));
    line("order: " + std::to_string(r.theorem.order));
    auto coeff_line = [&](const char* name, const std::vector<std::string>& cs) {
        std::string s = name;
        s += ": ";
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i) s += ", ";
            s += cs[i];
        }
        line(s);
    };
    coeff_line("hashimoto", coeff_strings(r.theorem.hashimoto));
    coeff_line("ihara", coeff_strings(r.theorem.ihara));
    coeff_line("det_t", coeff_strings(r.theorem.det_t));
    coeff_line("exponential", coeff_strings(r.theorem.exponential));
    coeff_line("euler", coeff_strings(r.theorem.euler));
    line(std::string("determinants_match: ") +
         (r.theorem.determinants_match ? "true" : "false"));
    line(std::string("series_match: ") + (r.theorem.series_match ? "true" : "false"));
    if (r.theorem.first_divergence)
        line("first_divergence: t^" + std::to_string(*r.theorem.first_divergence));
    line(std::string("pass: ") + (r.theorem.pass() ? "true" : "false"));
    return out;
}

nlohmann::ordered_json matrix_json(const Matrix<Scalar>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json matrix_json(const Matrix<RationalFunction>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace graphzeta
