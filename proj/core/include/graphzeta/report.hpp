#ifndef GRAPHZETA_REPORT_HPP
#define GRAPHZETA_REPORT_HPP

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphzeta/ihara.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/polynomial.hpp"
#include "graphzeta/rational_function.hpp"
#include "graphzeta/series.hpp"

namespace graphzeta {

/// Exact coefficient strings in ascending power order. The zero
/// polynomial reports as ["0"].
std::vector<std::string> coeff_strings(const Polynomial& p);
std::vector<std::string> coeff_strings(const TruncatedSeries& s);

/// One verification run: the four-expression comparison, optionally
/// tagged with the seed that generated its weights.
struct ZetaReport {
    std::optional<std::uint64_t> seed;
    TheoremReport theorem;
};

nlohmann::ordered_json report_json(const ZetaReport& r);
std::string report_text(const ZetaReport& r);

nlohmann::ordered_json matrix_json(const Matrix<Scalar>& m);
nlohmann::ordered_json matrix_json(const Matrix<RationalFunction>& m);

}  // namespace graphzeta

#endif
