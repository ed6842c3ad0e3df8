#include <doctest.h>

#include <sstream>

#include "vmlattice/io.hpp"
#include "vmlattice/search.hpp"

using namespace vmlattice;
using doctest::Approx;

TEST_CASE("rule_to_json") {
  const LatticeRule r({1, 8}, 13);
  const auto w = optimal_vertex_weights(r);
  const nlohmann::json j = rule_to_json(r, Scheme::optimal, w);
  CHECK(j["N"] == 13);
  CHECK(j["s"] == 2);
  CHECK(j["z"] == nlohmann::json::array({1, 8}));
  CHECK(j["scheme"] == "optimal");
  REQUIRE(j["vertex_weights"].size() == 4);
  CHECK(j["vertex_weights"][1]["corner"] == nlohmann::json::array({1, 0}));
  double sum = 0.0;
  for (const auto& c : j["vertex_weights"]) sum += c["w"].get<double>();
  CHECK(sum == Approx(1.0 / 13.0).epsilon(1e-14));
}

TEST_CASE("breakdown round trip") {
  const WceBreakdown b{1e-5, 2e-4, 3e-6, 1e-5 + 2e-4 + 3e-6};
  const nlohmann::json j = to_json(b);
  for (const char* key : {"sq_total", "sq_korobov", "sq_multilinear", "mixture"}) CHECK(j.contains(key));
  const WceBreakdown c = breakdown_from_json(nlohmann::json::parse(j.dump()));
  CHECK(c.sq_total == b.sq_total);
  CHECK(c.sq_korobov == b.sq_korobov);
  CHECK(c.sq_multilinear == b.sq_multilinear);
  CHECK(c.mixture == b.mixture);
}

TEST_CASE("format_value keeps six significant digits") {
  CHECK(format_value(2.39461234e-4) == "2.39461e-04");
  CHECK(format_value(1.0) == "1.00000e+00");
  CHECK(format_value(0.0) == "0.00000e+00");
}

TEST_CASE("search csv") {
  const auto results = reproduce_table({17, 37}, ProductWeights::ones(2), 1, true);
  std::ostringstream summary;
  write_search_csv(summary, results, false);
  std::istringstream lines(summary.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "N,z,wce2_total,wce2_korobov,mixture");
  std::getline(lines, line);
  CHECK(line.rfind("17,5,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("37,", 0) == 0);
  CHECK_FALSE(std::getline(lines, line));

  std::ostringstream full;
  write_search_csv(full, results, true);
  std::istringstream all(full.str());
  int count = 0;
  while (std::getline(all, line)) ++count;
  CHECK(count == 1 + 16 + 36);
}
