#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cml/finset.hpp"
#include "cml/functor.hpp"

namespace cml {

/// An n-ary predicate lifting, given pointwise: holds(|X|, e, A) decides
/// e ∈ λ_X(A₁,…,Aₙ).
struct Lifting {
  std::string name;
  std::size_t arity = 1;
  std::function<bool(std::size_t n, Code e, std::span<const Mask> args)> holds;
};

Lifting diamond_lifting();                        // A ∩ Y ≠ ∅
Lifting box_lifting();                            // Y ∈ α
Lifting graded_lifting(std::shared_ptr<const WeightedFunctor> w, std::size_t m);  // Σ_{x∈A} μ(x) = m
Lifting projection_lifting(std::size_t i);        // x_i ∈ A, over F32
Lifting constant_lifting(std::string name, bool value);

/// λ_X(args) as a subset of the tabulation of F n.
Bits extension(const Lifting& l, const Tabulation& tab, std::span<const Mask> args);

/// Calls fn(args) for every argument tuple over an n-element carrier.
void for_each_args(std::size_t n, std::size_t arity, const std::function<void(std::span<const Mask>)>& fn);

/// Transposite λ♭_X(e): the argument tuples (as indices of for_each_args) that e satisfies.
Bits transposite(const Lifting& l, std::size_t n, Code e);

/// Yoneda subset of F(2^arity): the elements satisfying λ at the projections.
std::vector<Code> yoneda(const Lifting& l, const Functor& F, std::uint64_t budget = kDefaultElementBudget);

struct LiftingVerdict {
  bool holds = true;
  std::string witness;  // first violation, empty when `holds`
  std::size_t checked = 0;
};

LiftingVerdict check_naturality(const Lifting& l, const Functor& F, std::size_t max_carrier,
                                std::uint64_t budget = kDefaultElementBudget);
LiftingVerdict check_monotone(const Lifting& l, const Functor& F, std::size_t max_carrier,
                              std::uint64_t budget = kDefaultElementBudget);
/// Checks λ_X(A) = {t | act(χ_A, t) ∈ yoneda(λ)} on all carriers ≤ max_carrier.
LiftingVerdict check_yoneda(const Lifting& l, const Functor& F, std::size_t max_carrier,
                            std::uint64_t budget = kDefaultElementBudget);

struct SeparationVerdict {
  bool separating = true;
  std::optional<std::size_t> carrier;  // carrier of the indistinguishable pair
  std::optional<std::pair<Code, Code>> pair;
  std::string witness;
};

SeparationVerdict check_separating(std::span<const Lifting> ls, const Functor& F, std::size_t max_carrier,
                                   std::uint64_t budget = kDefaultElementBudget);

}  // namespace cml
