#pragma once

#include <string>
#include <vector>

#include "cml/io.hpp"
#include "cml/theory_space.hpp"

namespace cml {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string status;  // PASS, FAIL or DISCREPANCY
  std::string detail;
  Json data = Json::object();
  double seconds = 0;
};

constexpr int kCriteria = 12;

CriterionResult run_criterion(int id, SpaceBudget budget = {});
Json criterion_to_json(const CriterionResult& r);

}  // namespace cml
