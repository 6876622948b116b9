#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cml/formula.hpp"
#include "cml/logic.hpp"
#include "cml/model.hpp"
#include "cml/theory_space.hpp"

namespace cml {

struct SatVerdict {
  bool sat = false;
  std::string method;  // "theory-space" or "symbolic"
  std::vector<std::string> vars;
  std::size_t rank = 0;
  std::size_t space_size = 0;  // |T_rank| when a space was built
  std::size_t theories = 0;    // satisfying theories
  std::optional<FiniteModel> model;
  std::size_t root = 0;
  bool round_trip = false;  // extracted model re-checked by direct evaluation
  std::string symbolic_witness;
};

/// Decides satisfiability over the space (variables(φ), rank(φ)). For rank ≤ 1
/// formulas of logics with a literal oracle, falls back to valuation-wise
/// one-step checking when the space exceeds the budget.
SatVerdict sat(const LogicPtr& l, const Formula& phi, SpaceBudget budget = {});
/// A counter-model, when present, is the model of the SAT verdict for ¬φ.
SatVerdict refute(const LogicPtr& l, const Formula& phi, SpaceBudget budget = {});
bool valid(const LogicPtr& l, const Formula& phi, SpaceBudget budget = {});
bool equivalent(const LogicPtr& l, const Formula& phi, const Formula& psi, SpaceBudget budget = {});

std::vector<std::string> joint_variables(const std::vector<Formula>& fs);

}  // namespace cml
