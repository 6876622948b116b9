#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cml/finset.hpp"
#include "cml/monoid.hpp"

namespace cml {

/// Opaque element code of some F X; meaning depends on the functor and |X|.
using Code = std::uint64_t;

inline constexpr std::uint64_t kDefaultElementBudget = 65536;

/// The elements of F X for one carrier size, in canonical order.
struct Tabulation {
  std::size_t carrier = 0;
  std::vector<Code> elements;
  std::unordered_map<Code, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(Code c) const;
};

/// A set functor restricted to finite carriers {0..n-1}. Tabulations are
/// memoized behind an internal mutex.
class Functor {
 public:
  virtual ~Functor() = default;

  virtual std::string name() const = 0;
  /// |F n|, saturating at UINT64_MAX when it cannot be represented.
  virtual std::uint64_t count(std::size_t n) const = 0;
  /// Largest carrier whose elements fit into a Code.
  virtual std::size_t max_carrier() const = 0;
  virtual bool contains(std::size_t n, Code e) const = 0;
  virtual Code act(const FinFun& f, Code e) const = 0;
  virtual std::string render(Code e, const FinSet& x) const = 0;
  virtual Code parse_element(const std::string& text, const FinSet& x) const = 0;

  /// Answer of an optional specialized lifter for a pair (s,t) over a pullback:
  /// nullopt when the functor has none, otherwise the mediating element (or
  /// nullopt inside when the lifter finds none).
  virtual std::optional<std::optional<Code>> specialized_lift(const FinFun& f, const FinFun& g, const Pullback& pb,
                                                              Code s, Code t) const;

  /// Elements of F n within `budget`; throws BudgetExceeded otherwise.
  std::shared_ptr<const Tabulation> tabulate(std::size_t n, std::uint64_t budget = kDefaultElementBudget) const;

 protected:
  virtual std::vector<Code> enumerate(std::size_t n) const = 0;

 private:
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::shared_ptr<const Tabulation>> cache_;
};

using FunctorPtr = std::shared_ptr<const Functor>;

/// Powerset P, or the nonempty-powerset subfunctor when `nonempty`.
class PowersetFunctor final : public Functor {
 public:
  explicit PowersetFunctor(bool nonempty = false) : nonempty_(nonempty) {}
  std::string name() const override { return nonempty_ ? "P+" : "P"; }
  std::uint64_t count(std::size_t n) const override;
  std::size_t max_carrier() const override { return 63; }
  bool contains(std::size_t n, Code e) const override;
  Code act(const FinFun& f, Code e) const override;
  std::string render(Code e, const FinSet& x) const override;
  Code parse_element(const std::string& text, const FinSet& x) const override;

 protected:
  std::vector<Code> enumerate(std::size_t n) const override;

 private:
  bool nonempty_;
};

/// Neighbourhood-style functors: an element of F X is a set of subsets of X,
/// coded as a bit mask over the 2^|X| subsets.
class NeighbourhoodFunctor final : public Functor {
 public:
  enum class Variant {
    Full,      // N = QQ
    Monotone,  // M: upward closed
    Vee,       // N_∨: A ∪ B = X implies A ∈ α or B ∈ α
  };
  explicit NeighbourhoodFunctor(Variant v) : variant_(v) {}
  std::string name() const override;
  std::uint64_t count(std::size_t n) const override;
  std::size_t max_carrier() const override { return 6; }
  bool contains(std::size_t n, Code e) const override;
  Code act(const FinFun& f, Code e) const override;
  std::string render(Code e, const FinSet& x) const override;
  Code parse_element(const std::string& text, const FinSet& x) const override;
  std::optional<std::optional<Code>> specialized_lift(const FinFun& f, const FinFun& g, const Pullback& pb, Code s,
                                                      Code t) const override;
  Variant variant() const { return variant_; }

  /// Upward closure of a set of subsets of an n-element carrier.
  static Code up_closure(std::size_t n, Code alpha);

 protected:
  std::vector<Code> enumerate(std::size_t n) const override;

 private:
  Variant variant_;
};

/// F³₂: triples over X with at most two distinct entries.
class TripleFunctor final : public Functor {
 public:
  static constexpr unsigned kShift = 21;
  std::string name() const override { return "F32"; }
  std::uint64_t count(std::size_t n) const override;
  std::size_t max_carrier() const override { return (std::size_t{1} << kShift) - 1; }
  bool contains(std::size_t n, Code e) const override;
  Code act(const FinFun& f, Code e) const override;
  std::string render(Code e, const FinSet& x) const override;
  Code parse_element(const std::string& text, const FinSet& x) const override;

  static Code make(std::size_t a, std::size_t b, std::size_t c);
  static std::size_t component(Code e, std::size_t i);

 protected:
  std::vector<Code> enumerate(std::size_t n) const override;
};

/// Monoid-weighted functor W_M: functions X → M, coded base |M| with the
/// weight of element x as digit x.
class WeightedFunctor final : public Functor {
 public:
  explicit WeightedFunctor(Monoid m) : monoid_(std::move(m)) {}
  std::string name() const override { return "W_" + monoid_.name(); }
  std::uint64_t count(std::size_t n) const override;
  std::size_t max_carrier() const override;
  bool contains(std::size_t n, Code e) const override;
  Code act(const FinFun& f, Code e) const override;
  std::string render(Code e, const FinSet& x) const override;
  Code parse_element(const std::string& text, const FinSet& x) const override;
  std::optional<std::optional<Code>> specialized_lift(const FinFun& f, const FinFun& g, const Pullback& pb, Code s,
                                                      Code t) const override;

  const Monoid& monoid() const { return monoid_; }
  std::size_t weight(Code e, std::size_t x) const;
  Code encode(const std::vector<std::size_t>& weights) const;

 protected:
  std::vector<Code> enumerate(std::size_t n) const override;

 private:
  Monoid monoid_;
};

/// Checks act(id, e) = e and act(g∘f, e) = act(g, act(f, e)) exhaustively over
/// carriers ≤ max_carrier; returns a description of the first violation.
std::optional<std::string> check_functor_laws(const Functor& F, std::size_t max_carrier,
                                              std::uint64_t budget = kDefaultElementBudget);

/// Checks that act(f, ·) maps F X into F Y for all maps between carriers ≤ max_carrier.
std::optional<std::string> check_closure(const Functor& F, std::size_t max_carrier,
                                         std::uint64_t budget = kDefaultElementBudget);

}  // namespace cml
