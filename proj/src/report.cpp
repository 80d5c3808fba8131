#include "nilcoh/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcoh {

void RunConfig::validate() const {
  if (preset.empty() == !cartan.has_value())
    throw std::invalid_argument("config: exactly one of 'type' and 'cartan' must be given");
  if (!preset.empty()) {
    const auto& names = CartanMatrix::preset_names();
    if (std::find(names.begin(), names.end(), preset) == names.end())
      throw std::invalid_argument("config: unknown type '" + preset + "'");
  }
  if (cartan) cartan->validate();
  if (bound < 0) throw std::invalid_argument("config: bound must be >= 0");
  if (h1) {
    if (*h1 < 0) throw std::invalid_argument("config: h1 must be >= 0");
  } else if (genus < 1) {
    throw std::invalid_argument("config: genus must be >= 1");
  }
  if (jobs < 1) throw std::invalid_argument("config: jobs must be >= 1");
}

RootSystem RunConfig::build() const {
  validate();
  return RootSystem(cartan ? *cartan : CartanMatrix::preset(preset));
}

std::string RunConfig::type_name() const { return preset.empty() ? "custom" : preset; }

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  if (j.contains("type")) c.preset = j["type"].get<std::string>();
  if (j.contains("cartan")) {
    CartanMatrix cm;
    cm.a = j["cartan"].get<std::vector<std::vector<int>>>();
    c.cartan = cm;
  }
  if (j.contains("bound")) c.bound = j["bound"].get<int>();
  if (j.contains("genus")) c.genus = j["genus"].get<int>();
  if (j.contains("h1")) c.h1 = j["h1"].get<int>();
  if (j.contains("etas")) c.etas = j["etas"].get<std::vector<std::vector<int>>>();
  if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
  if (j.contains("out")) c.out_path = j["out"].get<std::string>();
  if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
  return c;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  if (!preset.empty()) j["type"] = preset;
  if (cartan) j["cartan"] = cartan->a;
  j["bound"] = bound;
  if (h1)
    j["h1"] = *h1;
  else
    j["genus"] = genus;
  if (!etas.empty()) j["etas"] = etas;
  if (suites) j["suites"] = *suites;
  j["jobs"] = jobs;
  return j;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

int Report::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

nlohmann::json Report::to_json(bool include_timing) const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json r = {{"check_id", c.id},       {"inputs", c.inputs},
                        {"expected", c.expected}, {"provenance", c.provenance},
                        {"actual", c.actual},     {"pass", c.pass}};
    if (include_timing) r["millis"] = c.millis;
    j["checks"].push_back(r);
  }
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j;
}

}  // namespace nilcoh
