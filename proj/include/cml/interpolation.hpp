#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cml/formula.hpp"
#include "cml/logic.hpp"
#include "cml/theory_space.hpp"

namespace cml {

/// Composite projection T_k(src) → T_j(dst) for j ≤ k and dst.vars() ⊆ src.vars().
std::vector<std::size_t> project(const TheorySpace& src, std::size_t k, const TheorySpace& dst, std::size_t j);
Bits image(const std::vector<std::size_t>& map, const Bits& s, std::size_t target_size);

struct UniformResult {
  Formula interpolant = Formula::falsum();
  std::vector<std::string> keep;
  std::size_t rank = 0;
  Bits denotation;  // over T_rank(keep)
  std::string method;
};

/// i(φ) as the disjunction of characteristic formulas of the projection of ⟦φ⟧.
/// ⊨ φ → i(φ) is checked before returning.
UniformResult uniform_interpolant(const LogicPtr& l, const Formula& phi, std::vector<std::string> keep,
                                  SpaceBudget budget = {});

/// Conjunction of every denotation-distinct rank-n consequence of φ over keep
/// (enumerates all subsets of T_n(keep); at most 20 theories).
UniformResult uniform_interpolant_oracle(const LogicPtr& l, const Formula& phi, std::vector<std::string> keep,
                                         SpaceBudget budget = {});

struct VerifyReport {
  bool implication = false;  // ⊨ φ → ι
  bool passed = false;
  std::vector<std::string> v2;
  std::size_t psi_rank = 0;
  std::size_t psi_space = 0;          // |T_psi_rank(V₂)|
  std::size_t consequences_log2 = 0;  // ψ with ⊨ φ → ψ number 2^this
  std::size_t psi_checked_log2 = 0;   // every denotation-distinct ψ: 2^psi_space
  std::vector<std::string> failures;  // ψ with ⊨ φ → ψ but ⊭ ι → ψ
};

/// For every denotation-distinct ψ of rank ≤ psi_rank over V₂: ⊨ φ→ψ implies ⊨ ι→ψ.
/// Decided by comparing the projections of ⟦φ⟧ and ⟦ι⟧ onto T_psi_rank(V₂).
VerifyReport verify_uniform(const LogicPtr& l, const Formula& phi, const std::vector<std::string>& keep,
                            const Formula& iota, std::size_t psi_rank, std::vector<std::string> v2,
                            SpaceBudget budget = {});

struct CraigResult {
  bool implication_valid = false;
  std::optional<Formula> interpolant;
  std::vector<std::string> shared;
  std::size_t rank = 0;  // rank at which the interpolant was found, or the budget
  std::size_t candidates = 0;  // |R| for the last rank tried
  std::string method;    // "projection" or "search"
};

/// Searches shared-variable interpolants of rank ≤ max_rank. At each rank the
/// least candidate R = {τ | φ ∧ χ(τ) satisfiable} is tried; any interpolant
/// contains R, so NONE at that rank is exact. Throws PreconditionError when
/// φ → ψ is not valid.
CraigResult craig_search(const LogicPtr& l, const Formula& phi, const Formula& psi, std::size_t max_rank,
                         SpaceBudget budget = {});

}  // namespace cml
