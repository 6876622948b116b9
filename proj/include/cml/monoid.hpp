#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cml {

/// Finite commutative monoid, written additively. Associativity,
/// commutativity and the unit laws are checked on construction.
class Monoid {
 public:
  Monoid(std::vector<std::string> elements, std::size_t unit, std::vector<std::vector<std::size_t>> table);

  /// Z/n with labels "0".."n-1".
  static Monoid cyclic(std::size_t n);
  /// ({bot, top}, ∨).
  static Monoid join_semilattice();
  /// The one-element monoid.
  static Monoid trivial();

  std::size_t size() const { return labels_.size(); }
  std::size_t zero() const { return unit_; }
  std::size_t add(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t sum(std::span<const std::size_t> xs) const;
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index(const std::string& label) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::string name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

 private:
  std::vector<std::string> labels_;
  std::size_t unit_;
  std::vector<std::vector<std::size_t>> table_;
  std::string name_ = "M";
};

/// Refinability restricted to n, k ≤ bound. A failure carries the row-sum
/// tuple `a` and column-sum tuple `b` that admit no refining matrix.
struct RefinabilityVerdict {
  bool refinable = true;
  std::size_t bound = 0;
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

RefinabilityVerdict check_refinable(const Monoid& m, std::size_t bound);

/// Searches an n×k matrix with the given row and column sums.
std::optional<std::vector<std::vector<std::size_t>>> refine(const Monoid& m, std::span<const std::size_t> rows,
                                                           std::span<const std::size_t> cols);

struct PositivityVerdict {
  bool positive = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // a + b = 0, not both 0
};

PositivityVerdict check_positive(const Monoid& m);

/// All commutative monoids with at most `max_size` elements, one per
/// isomorphism class, in canonical order.
std::vector<Monoid> commutative_monoids(std::size_t max_size);

/// One ≲-step witness: f : {x,y} → 2^n given by the images of x and y, and
/// the chain a·f(x) = a·f(x) + a·⊥ + b·⊥ ≲ a·f(x) + a·f(y) + b·f(x) = a·f(y).
struct IndistinguishabilityStep {
  std::size_t fx = 0;
  std::size_t fy = 0;
  bool forward = false;   // Tf(a·x) ≲ Tf(a·y) via the chain
  bool backward = false;  // Tf(a·y) ≲ Tf(a·x) via the mirrored chain
};

struct IndistinguishabilityVerdict {
  bool indistinguishable = true;
  std::size_t closed_sets_checked = 0;
  std::vector<IndistinguishabilityStep> steps;
  /// Set when some ≲-closed subset separates a·x from a·y.
  std::optional<std::size_t> separating_arity;
};

/// Checks that no monotone predicate lifting of arity ≤ max_arity separates
/// a·x from a·y in W_M{x,y}. Requires a ≠ 0 with a + b = 0 for some b.
IndistinguishabilityVerdict monotone_indistinguishable(const Monoid& m, std::size_t a, std::size_t max_arity);

}  // namespace cml
