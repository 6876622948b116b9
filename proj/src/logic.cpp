#include "cml/logic.hpp"

#include <map>
#include <mutex>

#include "cml/errors.hpp"

namespace cml {

const Lifting& Logic::lifting(const std::string& op) const { return liftings.at(op_index(op)); }

std::size_t Logic::op_index(const std::string& op) const {
  auto i = sig.find(op);
  if (!i) throw PreconditionError("logic " + name + " has no operator '" + op + "'");
  return *i;
}

namespace {

LogicPtr finish(Logic l) {
  for (const auto& lift : l.liftings) {
    auto v = check_naturality(lift, *l.functor, 2);
    if (!v.holds) throw PreconditionError("lifting " + lift.name + " of " + l.name + " is not natural: " + v.witness);
  }
  return std::make_shared<const Logic>(std::move(l));
}

Logic unary(std::string name, FunctorPtr f, std::vector<Lifting> ls) {
  std::vector<Operator> ops;
  for (const auto& l : ls) ops.push_back({l.name, l.arity});
  return Logic{std::move(name), Signature(std::move(ops)), std::move(f), std::move(ls), {}};
}

LogicPtr build(const std::string& name) {
  using V = NeighbourhoodFunctor::Variant;
  using Span = std::span<const Mask>;
  if (name == "K" || name == "KD") {
    const bool d = name == "KD";
    auto l = unary(name, std::make_shared<PowersetFunctor>(d), {diamond_lifting()});
    l.literal_oracle = [d](std::size_t n, Span p, Span q) { return diamond_literals_consistent(n, d, p, q); };
    return finish(std::move(l));
  }
  if (name == "N" || name == "M") {
    const bool m = name == "M";
    auto l = unary(name, std::make_shared<NeighbourhoodFunctor>(m ? V::Monotone : V::Full), {box_lifting()});
    l.literal_oracle = [m](std::size_t, Span p, Span q) { return box_literals_consistent(m, p, q); };
    return finish(std::move(l));
  }
  if (name == "NVEE") {
    auto l = unary("NVEE", std::make_shared<NeighbourhoodFunctor>(V::Vee), {box_lifting()});
    l.literal_oracle = vee_literals_consistent;
    return finish(std::move(l));
  }
  if (name == "F32")
    return finish(unary("F32", std::make_shared<TripleFunctor>(),
                        {projection_lifting(0), projection_lifting(1), projection_lifting(2)}));
  if (name == "W" || name == "W:Z/2") return weighted_logic(Monoid::cyclic(2));
  if (name == "W:Z/3") return weighted_logic(Monoid::cyclic(3));
  throw PreconditionError("unknown logic '" + name + "'");
}

}  // namespace

LogicPtr weighted_logic(const Monoid& m) {
  auto w = std::make_shared<const WeightedFunctor>(m);
  std::vector<Lifting> ls;
  for (std::size_t i = 0; i < m.size(); ++i) ls.push_back(graded_lifting(w, i));
  return finish(unary("W:" + m.name(), w, std::move(ls)));
}

LogicPtr logic_by_name(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, LogicPtr> cache;
  const std::string key = name == "W" ? "W:Z/2" : name;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto l = build(key);
  cache.emplace(key, l);
  return l;
}

std::vector<std::string> registered_logics() { return {"K", "KD", "N", "M", "NVEE", "F32", "W:Z/2", "W:Z/3"}; }

bool diamond_literals_consistent(std::size_t n, bool nonempty, std::span<const Mask> positives,
                                 std::span<const Mask> negatives) {
  Mask excluded = 0;
  for (auto q : negatives) excluded |= q;
  if (nonempty && excluded == full_mask(n)) return false;
  for (auto p : positives)
    if ((p & ~excluded) == 0) return false;
  return true;
}

bool box_literals_consistent(bool monotone, std::span<const Mask> positives, std::span<const Mask> negatives) {
  for (auto p : positives)
    for (auto q : negatives)
      if (monotone ? (p & ~q) == 0 : p == q) return false;
  return true;
}

bool vee_literals_consistent(std::size_t n, std::span<const Mask> positives, std::span<const Mask> negatives) {
  const Mask all = full_mask(n);
  for (auto p : positives)
    for (auto q : negatives)
      if (p == q) return false;
  for (std::size_t i = 0; i < negatives.size(); ++i)
    for (std::size_t j = i; j < negatives.size(); ++j)
      if ((negatives[i] | negatives[j]) == all) return false;
  return true;
}

}  // namespace cml
