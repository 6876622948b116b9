#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cml/formula.hpp"
#include "cml/functor.hpp"
#include "cml/lifting.hpp"
#include "cml/monoid.hpp"

namespace cml {

/// A rank-1 logic: functor, signature and one lifting per operator.
struct Logic {
  std::string name;
  Signature sig;
  FunctorPtr functor;
  std::vector<Lifting> liftings;  // parallel to sig.operators()
  /// For single-operator unary logics: consistency of {♥P | P ∈ pos} ∪
  /// {¬♥Q | Q ∈ neg} over an n-element carrier, decided without tabulating F.
  std::function<bool(std::size_t n, std::span<const Mask> pos, std::span<const Mask> neg)> literal_oracle;

  const Lifting& lifting(const std::string& op) const;
  std::size_t op_index(const std::string& op) const;
};

using LogicPtr = std::shared_ptr<const Logic>;

/// K, KD, N, M, NVEE, F32, W (= W:Z/2), W:Z/2, W:Z/3. Instances are shared, so
/// functor tabulations are computed once per process. Naturality of every
/// lifting is checked on carriers ≤ 2 at first use.
LogicPtr logic_by_name(const std::string& name);
/// Graded logic over an arbitrary finite commutative monoid.
LogicPtr weighted_logic(const Monoid& m);
std::vector<std::string> registered_logics();

/// N_∨ consistency of a set of literals □P (P ∈ positives) and ¬□Q (Q ∈ negatives)
/// over an n-element carrier: no set is both positive and negative, and no two
/// negatives (possibly equal) cover the carrier.
bool vee_literals_consistent(std::size_t n, std::span<const Mask> positives, std::span<const Mask> negatives);
/// ◇-literals over P (nonempty: over P⁺).
bool diamond_literals_consistent(std::size_t n, bool nonempty, std::span<const Mask> positives,
                                 std::span<const Mask> negatives);
/// □-literals over N (monotone: over M).
bool box_literals_consistent(bool monotone, std::span<const Mask> positives, std::span<const Mask> negatives);

}  // namespace cml
