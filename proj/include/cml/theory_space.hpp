#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cml/finset.hpp"
#include "cml/formula.hpp"
#include "cml/logic.hpp"
#include "cml/model.hpp"

namespace cml {

struct SpaceBudget {
  std::uint64_t elements = kDefaultElementBudget;
  std::uint64_t stratum = 4096;
};

/// Strata T₀…Tₙ of maximally satisfiable rank-k theories over a finite set of
/// variables. T₀ is the set of valuations; a member of T_{k+1} is a valuation
/// together with a one-step theory row realized by some element of F(T_k).
/// Theory index in T_k (k ≥ 1) is valuation · rows(k) + row.
class TheorySpace {
 public:
  TheorySpace(LogicPtr logic, std::vector<std::string> vars, std::size_t depth, SpaceBudget budget = {});

  const Logic& logic() const { return *logic_; }
  LogicPtr logic_ptr() const { return logic_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t depth() const { return strata_.size() - 1; }
  std::size_t valuations() const { return std::size_t{1} << vars_.size(); }
  std::size_t size(std::size_t k) const;
  std::size_t rows(std::size_t k) const { return strata_.at(k).rows.size(); }

  std::size_t valuation_of(std::size_t k, std::size_t theory) const;
  std::size_t row_of(std::size_t k, std::size_t theory) const;
  /// Realization witness (element of F(T_{k-1})) of a theory in T_k, k ≥ 1.
  Code witness(std::size_t k, std::size_t theory) const;
  /// Row bit of (op, args) where args are subsets of T_{k-1}.
  bool row_bit(std::size_t k, std::size_t row, std::size_t op, std::span<const Mask> args) const;

  /// Theories of T_k satisfying φ (rank(φ) ≤ k, variables(φ) ⊆ vars()).
  Bits denote(const Formula& phi, std::size_t k) const;
  Bits denote(const Formula& phi) const { return denote(phi, depth()); }

  /// Formula whose denotation in T_k is exactly {theory}.
  Formula characteristic(std::size_t k, std::size_t theory) const;
  /// Disjunction of characteristic formulas of a set of T_k theories.
  Formula characteristic_set(std::size_t k, const Bits& theories) const;

  /// T_k → T_{k-1}, forgetting the top modal layer.
  std::vector<std::size_t> project_depth(std::size_t k) const;
  /// T_k(this) → T_k(target) for target.vars() ⊆ vars().
  std::vector<std::size_t> project_vars(const TheorySpace& target, std::size_t k) const;

  /// Dag model whose root realizes the theory; states are the root and all of
  /// T_{k-1}, …, T₀.
  struct Extracted {
    FiniteModel model;
    std::size_t root = 0;
  };
  Extracted extract_model(std::size_t k, std::size_t theory) const;

 private:
  struct Stratum {
    std::size_t size = 0;
    std::vector<Bits> rows;
    std::vector<Code> witnesses;
    std::unordered_map<Bits, std::size_t, BitsHash> index;
    std::vector<std::size_t> offsets;  // first row bit of each operator
    std::size_t width = 0;
  };
  std::size_t position(std::size_t k, std::size_t op, std::span<const Mask> args) const;
  Bits row_for(std::size_t k, Code e) const;

  LogicPtr logic_;
  std::vector<std::string> vars_;
  std::vector<Stratum> strata_;
  mutable std::recursive_mutex memo_mutex_;
  mutable std::vector<std::unordered_map<std::size_t, Formula>> chi_memo_;
  mutable std::vector<std::unordered_map<Mask, Formula>> arg_memo_;
};

using SpacePtr = std::shared_ptr<const TheorySpace>;

/// Shared, memoized space construction keyed by (logic, vars, depth, budget).
SpacePtr theory_space(LogicPtr logic, std::vector<std::string> vars, std::size_t depth, SpaceBudget budget = {});

}  // namespace cml
