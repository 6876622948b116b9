#include "cml/theory_space.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "cml/errors.hpp"
#include "cml/lifting.hpp"

namespace cml {

namespace {

constexpr std::size_t kMaxRowExponent = 24;

}  // namespace

TheorySpace::TheorySpace(LogicPtr logic, std::vector<std::string> vars, std::size_t depth, SpaceBudget budget)
    : logic_(std::move(logic)), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.size() > 20) throw BudgetExceeded("valuations 2^|V|", std::uint64_t{1} << std::min<std::size_t>(vars_.size(), 63), 1u << 20);
  strata_.resize(1);
  strata_[0].size = valuations();
  if (strata_[0].size > budget.stratum) throw BudgetExceeded("stratum T_0", strata_[0].size, budget.stratum);
  const Functor& F = *logic_->functor;
  for (std::size_t k = 1; k <= depth; ++k) {
    const std::size_t t = strata_[k - 1].size;
    Stratum s;
    for (const auto& op : logic_->sig.operators()) {
      if (t * op.arity > kMaxRowExponent || t > 63)
        throw BudgetExceeded("row width of stratum T_" + std::to_string(k), t * op.arity, kMaxRowExponent);
      s.offsets.push_back(s.width);
      s.width += std::size_t{1} << (t * op.arity);
    }
    if (t > F.max_carrier()) throw BudgetExceeded(F.name() + " over T_" + std::to_string(k - 1), t, F.max_carrier());
    auto tab = F.tabulate(t, budget.elements);
    strata_.push_back(std::move(s));
    Stratum& cur = strata_.back();
    for (auto e : tab->elements) {
      Bits row = row_for(k, e);
      auto [it, inserted] = cur.index.emplace(row, cur.rows.size());
      if (inserted) {
        cur.rows.push_back(std::move(row));
        cur.witnesses.push_back(e);
      }
    }
    cur.size = valuations() * cur.rows.size();
    if (cur.size > budget.stratum) throw BudgetExceeded("stratum T_" + std::to_string(k), cur.size, budget.stratum);
  }
  chi_memo_.resize(strata_.size());
  arg_memo_.resize(strata_.size());
}

std::size_t TheorySpace::size(std::size_t k) const { return strata_.at(k).size; }

std::size_t TheorySpace::valuation_of(std::size_t k, std::size_t theory) const {
  return k == 0 ? theory : theory / strata_.at(k).rows.size();
}

std::size_t TheorySpace::row_of(std::size_t k, std::size_t theory) const {
  if (k == 0) throw PreconditionError("T_0 theories have no modal row");
  return theory % strata_.at(k).rows.size();
}

Code TheorySpace::witness(std::size_t k, std::size_t theory) const { return strata_.at(k).witnesses.at(row_of(k, theory)); }

std::size_t TheorySpace::position(std::size_t k, std::size_t op, std::span<const Mask> args) const {
  const std::size_t t = strata_.at(k - 1).size;
  std::size_t pos = 0;
  for (std::size_t i = args.size(); i-- > 0;) pos = (pos << t) | static_cast<std::size_t>(args[i]);
  return strata_[k].offsets[op] + pos;
}

bool TheorySpace::row_bit(std::size_t k, std::size_t row, std::size_t op, std::span<const Mask> args) const {
  return strata_.at(k).rows.at(row).test(position(k, op, args));
}

Bits TheorySpace::row_for(std::size_t k, Code e) const {
  const std::size_t t = strata_.at(k - 1).size;
  Bits row(strata_[k].width);
  for (std::size_t op = 0; op < logic_->liftings.size(); ++op) {
    const auto& lift = logic_->liftings[op];
    for_each_args(t, lift.arity, [&](std::span<const Mask> a) {
      if (lift.holds(t, e, a)) row.set(position(k, op, a));
    });
  }
  return row;
}

Bits TheorySpace::denote(const Formula& phi, std::size_t k) const {
  if (k > depth()) throw PreconditionError("denotation requested above the space depth");
  std::map<std::pair<const void*, std::size_t>, Bits> memo;
  std::function<Bits(const Formula&, std::size_t)> go = [&](const Formula& f, std::size_t j) -> Bits {
    auto key = std::make_pair(f.id(), j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t n = size(j);
    Bits r(n);
    switch (f.kind()) {
      case Kind::Var: {
        auto it = std::find(vars_.begin(), vars_.end(), f.name());
        if (it == vars_.end()) throw PreconditionError("variable '" + f.name() + "' is outside the theory space");
        const auto bit = static_cast<std::size_t>(it - vars_.begin());
        const std::size_t width = j == 0 ? 1 : rows(j);
        for (std::size_t v = 0; v < valuations(); ++v)
          if (has(v, bit)) r.set(v * width, width, true);
        break;
      }
      case Kind::Falsum:
        break;
      case Kind::Neg:
        r = ~go(f.child(0), j);
        break;
      case Kind::And:
        r = go(f.child(0), j) & go(f.child(1), j);
        break;
      case Kind::Modal: {
        if (j == 0) throw PreconditionError("formula rank exceeds the space depth");
        const std::size_t op = logic_->op_index(f.name());
        std::vector<Mask> args;
        for (const auto& c : f.children()) {
          Bits b = go(c, j - 1);
          Mask m = 0;
          for_each_bit(b, [&](std::size_t i) { m |= Mask{1} << i; });
          args.push_back(m);
        }
        const std::size_t pos = position(j, op, args);
        const auto& rs = strata_[j].rows;
        for (std::size_t row = 0; row < rs.size(); ++row)
          if (rs[row].test(pos)) r.set(row);
        for (std::size_t v = 1; v < valuations(); ++v) r |= r << rs.size();
        break;
      }
    }
    memo.emplace(key, r);
    return r;
  };
  return go(phi, k);
}

Formula TheorySpace::characteristic(std::size_t k, std::size_t theory) const {
  std::lock_guard<std::recursive_mutex> lock(memo_mutex_);
  if (auto it = chi_memo_.at(k).find(theory); it != chi_memo_[k].end()) return it->second;
  std::vector<Formula> lits;
  const std::size_t v = valuation_of(k, theory);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    lits.push_back(has(v, i) ? Formula::var(vars_[i]) : Formula::neg(Formula::var(vars_[i])));
  if (k > 0) {
    const std::size_t t = size(k - 1);
    const std::size_t row = row_of(k, theory);
    auto arg_formula = [&](Mask m) -> Formula {
      auto& memo = arg_memo_[k - 1];
      if (auto it = memo.find(m); it != memo.end()) return it->second;
      std::vector<Formula> terms;
      for (std::size_t s = 0; s < t; ++s)
        if (has(m, s)) terms.push_back(characteristic(k - 1, s));
      Formula f = m == full_mask(t) ? Formula::truth() : Formula::disj_all(terms);
      memo.emplace(m, f);
      return f;
    };
    for (std::size_t op = 0; op < logic_->sig.size(); ++op) {
      const auto& o = logic_->sig.at(op);
      for_each_args(t, o.arity, [&](std::span<const Mask> a) {
        std::vector<Formula> args;
        for (auto m : a) args.push_back(arg_formula(m));
        Formula lit = Formula::modal(o.name, std::move(args));
        lits.push_back(row_bit(k, row, op, a) ? lit : Formula::neg(lit));
      });
    }
  }
  Formula f = Formula::conj_all(lits);
  if (k < depth()) chi_memo_[k].emplace(theory, f);
  return f;
}

Formula TheorySpace::characteristic_set(std::size_t k, const Bits& theories) const {
  if (theories.none()) return Formula::falsum();
  if (theories.all()) return Formula::truth();
  std::vector<Formula> terms;
  for_each_bit(theories, [&](std::size_t t) { terms.push_back(characteristic(k, t)); });
  return Formula::disj_all(terms);
}

std::vector<std::size_t> TheorySpace::project_depth(std::size_t k) const {
  if (k == 0 || k > depth()) throw PreconditionError("depth projection needs 1 ≤ k ≤ depth");
  std::vector<std::size_t> out(size(k));
  if (k == 1) {
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = valuation_of(1, t);
    return out;
  }
  const auto q = project_depth(k - 1);
  const std::size_t lower = size(k - 2);
  std::vector<std::size_t> row_map(rows(k));
  for (std::size_t r = 0; r < rows(k); ++r) {
    Bits row(strata_[k - 1].width);
    for (std::size_t op = 0; op < logic_->sig.size(); ++op)
      for_each_args(lower, logic_->sig.at(op).arity, [&](std::span<const Mask> a) {
        std::vector<Mask> pre(a.size(), 0);
        for (std::size_t s = 0; s < q.size(); ++s)
          for (std::size_t i = 0; i < a.size(); ++i)
            if (has(a[i], q[s])) pre[i] |= Mask{1} << s;
        if (strata_[k].rows[r].test(position(k, op, pre))) row.set(position(k - 1, op, a));
      });
    auto it = strata_[k - 1].index.find(row);
    if (it == strata_[k - 1].index.end()) throw Error("projected theory row is not realized");
    row_map[r] = it->second;
  }
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = valuation_of(k, t) * rows(k - 1) + row_map[row_of(k, t)];
  return out;
}

std::vector<std::size_t> TheorySpace::project_vars(const TheorySpace& target, std::size_t k) const {
  if (target.logic_->name != logic_->name) throw PreconditionError("projection between spaces of different logics");
  if (k > depth() || k > target.depth()) throw PreconditionError("projection above the space depth");
  std::vector<std::size_t> src_index;
  for (const auto& v : target.vars_) {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) throw PreconditionError("target variables must be a subset of the source variables");
    src_index.push_back(static_cast<std::size_t>(it - vars_.begin()));
  }
  auto project_valuation = [&](std::size_t u) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < src_index.size(); ++j)
      if (has(u, src_index[j])) w |= std::size_t{1} << j;
    return w;
  };
  std::vector<std::size_t> out(size(k));
  if (k == 0) {
    for (std::size_t u = 0; u < out.size(); ++u) out[u] = project_valuation(u);
    return out;
  }
  const auto p = project_vars(target, k - 1);
  const std::size_t lower = target.size(k - 1);
  std::vector<std::size_t> row_map(rows(k));
  for (std::size_t r = 0; r < rows(k); ++r) {
    Bits row(target.strata_[k].width);
    for (std::size_t op = 0; op < logic_->sig.size(); ++op)
      for_each_args(lower, logic_->sig.at(op).arity, [&](std::span<const Mask> a) {
        std::vector<Mask> pre(a.size(), 0);
        for (std::size_t s = 0; s < p.size(); ++s)
          for (std::size_t i = 0; i < a.size(); ++i)
            if (has(a[i], p[s])) pre[i] |= Mask{1} << s;
        if (strata_[k].rows[r].test(position(k, op, pre))) row.set(target.position(k, op, a));
      });
    auto it = target.strata_[k].index.find(row);
    if (it == target.strata_[k].index.end()) throw Error("projected theory row is not realized");
    row_map[r] = it->second;
  }
  for (std::size_t t = 0; t < out.size(); ++t)
    out[t] = project_valuation(valuation_of(k, t)) * target.rows(k) + row_map[row_of(k, t)];
  return out;
}

TheorySpace::Extracted TheorySpace::extract_model(std::size_t k, std::size_t theory) const {
  const Functor& F = *logic_->functor;
  std::vector<std::string> labels{"root"};
  std::vector<std::size_t> offset(k, 0);
  for (std::size_t j = k; j-- > 0;) {
    offset[j] = labels.size();
    for (std::size_t s = 0; s < size(j); ++s) labels.push_back("t" + std::to_string(j) + "." + std::to_string(s));
  }
  Extracted ex;
  FiniteModel& m = ex.model;
  const std::size_t n = labels.size();
  m.states = FinSet(labels);
  m.coalg.assign(n, 0);
  auto leaf = [&](std::size_t state) -> Code {
    auto t0 = F.tabulate(0);
    if (t0->size() > 0) return F.act(FinFun(0, n, {}), t0->elements[0]);
    m.dag = false;
    return F.act(FinFun(1, n, {state}), F.tabulate(1)->elements[0]);
  };
  auto place = [&](std::size_t state, std::size_t j, std::size_t t) {
    if (j == 0) {
      m.coalg[state] = leaf(state);
    } else {
      m.coalg[state] = F.act(FinFun::inclusion(size(j - 1), n, offset[j - 1]), witness(j, t));
    }
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (has(valuation_of(j, t), i)) m.val[vars_[i]] |= Mask{1} << state;
  };
  for (const auto& v : vars_) m.val[v] = 0;
  place(0, k, theory);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t s = 0; s < size(j); ++s) place(offset[j] + s, j, s);
  ex.root = 0;
  return ex;
}

SpacePtr theory_space(LogicPtr logic, std::vector<std::string> vars, std::size_t depth, SpaceBudget budget) {
  static std::mutex mutex;
  static std::map<std::string, SpacePtr> cache;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::string key = logic->name + "|" + std::to_string(depth) + "|" + std::to_string(budget.elements) + "|" +
                    std::to_string(budget.stratum) + "|";
  for (const auto& v : vars) key += v + ",";
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto space = std::make_shared<const TheorySpace>(logic, vars, depth, budget);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, space).first->second;
}

}  // namespace cml
