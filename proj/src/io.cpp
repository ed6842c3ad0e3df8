#include "vmlattice/io.hpp"

#include <fmt/format.h>

namespace vmlattice {

nlohmann::json rule_to_json(const LatticeRule& rule, Scheme scheme, const VertexWeights& weights) {
  nlohmann::json j;
  j["N"] = rule.size();
  j["s"] = rule.dimension();
  std::vector<Integer> z(rule.generator().data(), rule.generator().data() + rule.dimension());
  j["z"] = z;
  j["scheme"] = std::string(to_string(scheme));
  auto corners = nlohmann::json::array();
  for (unsigned c = 0; c < weights.corner_count(); ++c) {
    corners.push_back({{"corner", VertexWeights::corner_coordinates(c, weights.dimension)}, {"w", weights[c]}});
  }
  j["vertex_weights"] = std::move(corners);
  return j;
}

nlohmann::json to_json(const WceBreakdown& b) {
  return {{"sq_total", b.sq_total}, {"sq_korobov", b.sq_korobov}, {"sq_multilinear", b.sq_multilinear},
          {"mixture", b.mixture}};
}

WceBreakdown breakdown_from_json(const nlohmann::json& j) {
  WceBreakdown b;
  b.sq_total = j.at("sq_total").get<double>();
  b.sq_korobov = j.at("sq_korobov").get<double>();
  b.sq_multilinear = j.at("sq_multilinear").get<double>();
  b.mixture = j.at("mixture").get<double>();
  return b;
}

std::string format_value(double v) { return fmt::format("{:.5e}", v); }

void write_search_row(std::ostream& out, Integer n, const SearchRow& row) {
  out << n << ',' << row.z << ',' << format_value(row.sq_total) << ',' << format_value(row.sq_korobov) << ','
      << format_value(row.mixture) << '\n';
}

void write_search_csv(std::ostream& out, const std::vector<SearchResult>& results, bool full) {
  out << kSearchCsvHeader << '\n';
  for (const auto& r : results) {
    if (full && r.all_rows) {
      for (const auto& row : *r.all_rows) write_search_row(out, r.N, row);
    } else {
      write_search_row(out, r.N, {r.z_best, r.sq_total, r.sq_korobov, r.mixture});
    }
  }
}

}  // namespace vmlattice
