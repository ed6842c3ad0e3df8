#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vmlattice/rules.hpp"
#include "vmlattice/search.hpp"
#include "vmlattice/wce.hpp"

namespace vmlattice {

/// {"N", "s", "z", "scheme", "vertex_weights": [{"corner": [...], "w": ...}]}
nlohmann::json rule_to_json(const LatticeRule& rule, Scheme scheme, const VertexWeights& weights);

/// {"sq_total", "sq_korobov", "sq_multilinear", "mixture"}
nlohmann::json to_json(const WceBreakdown& breakdown);
WceBreakdown breakdown_from_json(const nlohmann::json& j);

inline constexpr const char* kSearchCsvHeader = "N,z,wce2_total,wce2_korobov,mixture";

/// Six significant digits in scientific notation.
std::string format_value(double v);

void write_search_row(std::ostream& out, Integer n, const SearchRow& row);
/// Header plus one row per result (the optimum), or every generator when
/// the result carries all rows.
void write_search_csv(std::ostream& out, const std::vector<SearchResult>& results, bool full);

}  // namespace vmlattice
