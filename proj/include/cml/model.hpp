#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cml/finset.hpp"
#include "cml/formula.hpp"
#include "cml/logic.hpp"

namespace cml {

/// A finite F-model (X, ξ, τ). States are indices of `states`; coalg[x] is an
/// element code of F(states).
struct FiniteModel {
  FinSet states;
  std::vector<Code> coalg;
  std::map<std::string, Mask> val;
  /// false when some leaf state had to point back into the model.
  bool dag = true;
};

/// Validates coalgebra codes against the functor; throws PreconditionError.
void check_model(const Logic& l, const FiniteModel& m);

/// ⟦φ⟧ in the model, by the semantic clauses (at most 63 states).
Mask eval_extension(const Logic& l, const FiniteModel& m, const Formula& phi);
bool eval_model(const Logic& l, const FiniteModel& m, std::size_t state, const Formula& phi);

struct SearchResult {
  std::optional<FiniteModel> model;
  std::size_t state = 0;
  std::uint64_t examined = 0;
  std::vector<std::string> skipped;  // carriers whose search space exceeded the cap
};

/// Enumerates every coalgebra map and valuation on carriers 1..max_states.
SearchResult brute_model_search(const Logic& l, const Formula& phi, std::size_t max_states,
                                std::uint64_t cap = 20'000'000, std::uint64_t budget = kDefaultElementBudget);

}  // namespace cml
