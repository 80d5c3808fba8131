#ifndef NILCOH_REPORT_HPP
#define NILCOH_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nilcoh/root_system.hpp"

namespace nilcoh {

struct RunConfig {
  std::string preset;                      // named root system, or
  std::optional<CartanMatrix> cartan;      // an explicit matrix (exactly one of the two)
  int bound = 6;
  int genus = 2;
  std::optional<int> h1;
  std::vector<std::vector<int>> etas;      // fundamental-weight coordinates
  std::optional<std::vector<std::string>> suites;  // absent = all
  std::string out_path;
  int jobs = 1;

  void validate() const;  // throws naming the offending field
  RootSystem build() const;
  std::string type_name() const;

  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct CheckRecord {
  std::string id;
  nlohmann::json inputs;
  nlohmann::json expected;
  std::string provenance;  // "closed_form" | "enumeration" | "identity"
  nlohmann::json actual;
  bool pass = false;
  double millis = 0.0;
};

struct Report {
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  int passed() const;
  int failed() const;
  nlohmann::json to_json(bool include_timing = true) const;
};

}  // namespace nilcoh

#endif
