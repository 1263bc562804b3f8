#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sle {

struct CheckResult {
  std::string check;
  nlohmann::json inputs;
  double residual = 0.0;        // worst case over the sampled inputs
  std::optional<double> order;  // log2 of the worst h-halving ratio
  double tolerance = 0.0;
  bool pass = false;
};

// algebra, residual, spectrum, mfold, universal, all.
const std::vector<std::string>& suite_names();

// UsageError for unknown names.
std::vector<CheckResult> run_suite(std::string_view suite);

nlohmann::json to_json(const CheckResult& r);

}  // namespace sle
