#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cml/finset.hpp"

namespace cml {

/// Finite Boolean subalgebra of P(X), stored as its atom partition. Blocks are
/// ordered by least element.
class Subalgebra {
 public:
  Subalgebra() = default;
  Subalgebra(std::size_t n, std::vector<Mask> blocks);

  static Subalgebra full(std::size_t n);
  static Subalgebra trivial(std::size_t n);
  /// The subalgebra generated by `sets`: atoms are the classes of points
  /// with equal membership in every generator.
  static Subalgebra generated(std::size_t n, std::span<const Mask> sets);
  /// From a restricted growth string (block index per point).
  static Subalgebra from_rgs(const std::vector<std::size_t>& rgs);

  std::size_t carrier() const { return n_; }
  const std::vector<Mask>& atoms() const { return blocks_; }
  std::size_t atom_count() const { return blocks_.size(); }
  std::vector<std::size_t> rgs() const;

  bool contains(Mask a) const;
  /// All members, indexed by the atom set they are the union of.
  std::vector<Mask> members() const;
  /// Canonical isomorphism 𝔄 → P(S(𝔄)): the atoms below `member`, as a mask over atom indices.
  Mask can_iso(Mask member) const;
  /// Inverse of can_iso.
  Mask from_atoms(Mask atom_set) const;
  /// Is every member of `coarser` a member of this algebra?
  bool refines(const Subalgebra& coarser) const;

  std::string render(const FinSet& x) const;
  bool operator==(const Subalgebra& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }

 private:
  std::size_t n_ = 0;
  std::vector<Mask> blocks_;
};

/// S(𝔄₁) → S(𝔄₀) sending an atom to the unique coarser atom containing it.
FinFun canonical_projection(const Subalgebra& finer, const Subalgebra& coarser);

/// 𝔄₁ ∩ 𝔄₂: connected components of the block-overlap graph.
Subalgebra meet(const Subalgebra& a, const Subalgebra& b);

/// First pair A ⊆ B (A ∈ a, B ∈ b) with no C ∈ a∩b in between, if any.
std::optional<std::pair<Mask, Mask>> interpolable_violation(const Subalgebra& a, const Subalgebra& b);

/// Algebra of f-invariant sets: blocks are the nonempty fibers of f.
Subalgebra invariant_subalgebra(const FinFun& f);

/// Pairs of partitions of {0..n-1}, one per simultaneous-relabeling class.
std::vector<std::pair<Subalgebra, Subalgebra>> canonical_partition_pairs(std::size_t n);

}  // namespace cml
