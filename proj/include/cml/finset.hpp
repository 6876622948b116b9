#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cml {

/// Subset of a carrier {0..n-1} with n ≤ 64, one bit per element.
using Mask = std::uint64_t;
/// Subset of a large enumerated set (e.g. the elements of F X).
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kMaxMaskCarrier = 64;

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }
inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

std::size_t hash_bits(const Bits& b);

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return hash_bits(b); }
};

/// Calls `fn(i)` for every set bit of `b`, in increasing order.
template <class Fn>
void for_each_bit(const Bits& b, Fn&& fn) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) fn(i);
}

/// Finite carrier with display labels; elements are the indices 0..size-1.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::size_t n);  // labels "0", "1", ...
  explicit FinSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of a label; throws PreconditionError when absent.
  std::size_t index(const std::string& label) const;
  /// Renders a subset as `{a,b}`.
  std::string render(Mask m) const;
  /// Parses `{a,b}` into a mask over this carrier.
  Mask parse_subset(const std::string& literal) const;

  bool operator==(const FinSet& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
};

/// A total function between finite sets, given by its table.
class FinFun {
 public:
  FinFun() = default;
  FinFun(FinSet dom, FinSet cod, std::vector<std::size_t> table);
  FinFun(std::size_t dom, std::size_t cod, std::vector<std::size_t> table);

  static FinFun identity(const FinSet& x);
  /// Characteristic map X → 2 of `a` (1 = member).
  static FinFun characteristic(std::size_t n, Mask a);
  /// Inclusion {0..m-1} → {0..n-1} sending i to offset + i.
  static FinFun inclusion(std::size_t m, std::size_t n, std::size_t offset = 0);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }

  bool surjective() const;
  bool injective() const;
  /// this ∘ first: apply `first`, then this.
  FinFun after(const FinFun& first) const;

  Mask image(Mask a) const;
  Mask preimage(Mask b) const;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> table_;
};

struct Pullback {
  FinSet carrier;  // labels "(x,y)"
  FinFun pi1;
  FinFun pi2;
  /// The matching pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// pb(f,g) = {(x,y) | f(x) = g(y)} with its two projections.
Pullback pullback(const FinFun& f, const FinFun& g);

/// Calls `fn(table)` for every function {0..n-1} → {0..m-1}, in lexicographic order.
void for_each_function(std::size_t n, std::size_t m, const std::function<void(const std::vector<std::size_t>&)>& fn);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

/// Set partitions of {0..n-1} as block masks, each sorted by least element.
std::vector<std::vector<Mask>> set_partitions(std::size_t n);

}  // namespace cml
