#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cml/finset.hpp"
#include "cml/functor.hpp"

namespace cml {

struct LiftVerdict {
  bool lifts = true;
  /// First non-liftable pair (s,t) in (s,t)-lexicographic tabulation order, or
  /// the queried pair.
  std::optional<std::pair<Code, Code>> witness;
  std::size_t compatible_pairs = 0;
  std::size_t failing_pairs = 0;
  std::vector<std::pair<Code, Code>> failures;  // up to `max_failures`
  /// Specialized lifter agreement (only when the functor has one).
  bool specialized_used = false;
  std::size_t specialized_disagreements = 0;
};

/// Decides whether every (s,t) with F f(s) = F g(t) has a mediating u ∈ F pb(f,g).
/// With `query`, only that pair is examined (it must be compatible).
LiftVerdict check_weak_lift(const Functor& F, const FinFun& f, const FinFun& g,
                            std::uint64_t budget = kDefaultElementBudget,
                            std::optional<std::pair<Code, Code>> query = std::nullopt, std::size_t max_failures = 16);

enum class PreservationProperty { WPB, SWPB };

struct CospanReport {
  FinFun f, g;
  enum class Status { Lifts, Fails, Skipped } status = Status::Lifts;
  LiftVerdict verdict;
  std::string skip_reason;
};

struct SweepReport {
  std::string functor;
  PreservationProperty property = PreservationProperty::SWPB;
  std::size_t max_carrier = 0;
  std::vector<CospanReport> cospans;
  std::size_t lifts = 0, fails = 0, skipped = 0;
  std::size_t specialized_disagreements = 0;
};

/// Cospans over carriers 1..max_carrier, one per simultaneous-relabeling class
/// (the lexicographically least table pair).
std::vector<std::pair<FinFun, FinFun>> canonical_cospans(std::size_t max_carrier, bool surjective);

SweepReport sweep_preservation(const Functor& F, PreservationProperty p, std::size_t max_carrier,
                               std::uint64_t budget = kDefaultElementBudget);

struct CompatibilityVerdict {
  bool compatible = false;
  bool images_equal = false;
};

/// M-specific: α₁ ∈ M X, α₂ ∈ M Y over a surjective cospan.
CompatibilityVerdict compatibility_check(const NeighbourhoodFunctor& M, Code a1, Code a2, const FinFun& f,
                                         const FinFun& g);

/// β = Up({π₁⁻¹U | U ∈ α₁} ∪ {π₂⁻¹V | V ∈ α₂}) over pb(f,g).
Code up_construction(const FinFun& f, const FinFun& g, Code a1, Code a2);

/// Forced-membership analysis for N: a lift of (s,t) exists iff no subset of
/// pb(f,g) is both π₁⁻¹A and π₂⁻¹B with A ∈ s and B ∉ t (or vice versa).
/// Returns the first conflicting pair in tabulation order, if any.
struct ConstraintVerdict {
  bool lifts = true;
  std::optional<std::pair<Code, Code>> witness;
  std::size_t compatible_pairs = 0;
};
ConstraintVerdict neighbourhood_constraint_analysis(const FinFun& f, const FinFun& g,
                                                   std::uint64_t budget = kDefaultElementBudget);

}  // namespace cml
