#include "cml/model.hpp"

#include <functional>
#include <unordered_map>

#include "cml/errors.hpp"

namespace cml {

void check_model(const Logic& l, const FiniteModel& m) {
  const std::size_t n = m.states.size();
  if (m.coalg.size() != n) throw PreconditionError("model needs one coalgebra value per state");
  for (std::size_t x = 0; x < n; ++x)
    if (!l.functor->contains(n, m.coalg[x]))
      throw PreconditionError("coalgebra value of state " + m.states.label(x) + " is not in " + l.functor->name());
  for (auto& [v, s] : m.val)
    if (s & ~full_mask(n)) throw PreconditionError("valuation of " + v + " mentions unknown states");
}

Mask eval_extension(const Logic& l, const FiniteModel& m, const Formula& phi) {
  const std::size_t n = m.states.size();
  if (n > 63) throw PreconditionError("model evaluation supports at most 63 states");
  const Mask all = full_mask(n);
  std::unordered_map<const void*, Mask> memo;
  std::function<Mask(const Formula&)> go = [&](const Formula& f) -> Mask {
    if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
    Mask r = 0;
    switch (f.kind()) {
      case Kind::Var: {
        auto it = m.val.find(f.name());
        r = it == m.val.end() ? 0 : it->second;
        break;
      }
      case Kind::Falsum:
        r = 0;
        break;
      case Kind::Neg:
        r = all & ~go(f.child(0));
        break;
      case Kind::And:
        r = go(f.child(0)) & go(f.child(1));
        break;
      case Kind::Modal: {
        const auto& lift = l.lifting(f.name());
        std::vector<Mask> args;
        for (const auto& c : f.children()) args.push_back(go(c));
        for (std::size_t x = 0; x < n; ++x)
          if (lift.holds(n, m.coalg[x], args)) r |= Mask{1} << x;
        break;
      }
    }
    memo.emplace(f.id(), r);
    return r;
  };
  return go(phi);
}

bool eval_model(const Logic& l, const FiniteModel& m, std::size_t state, const Formula& phi) {
  if (state >= m.states.size()) throw PreconditionError("state out of range");
  return has(eval_extension(l, m, phi), state);
}

SearchResult brute_model_search(const Logic& l, const Formula& phi, std::size_t max_states, std::uint64_t cap,
                                std::uint64_t budget) {
  check_signature(phi, l.sig);
  const auto vs = variables(phi);
  const std::vector<std::string> vars(vs.begin(), vs.end());
  SearchResult r;
  for (std::size_t n = 1; n <= max_states; ++n) {
    std::shared_ptr<const Tabulation> tab;
    try {
      tab = l.functor->tabulate(n, budget);
    } catch (const BudgetExceeded& e) {
      r.skipped.push_back(e.what());
      continue;
    }
    if (tab->size() == 0) continue;
    // search space |F n|^n · 2^(n·|V|)
    long double space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= static_cast<long double>(tab->size());
    const std::size_t vbits = n * vars.size();
    space *= static_cast<long double>(std::uint64_t{1} << std::min<std::size_t>(vbits, 63));
    if (vbits >= 63 || space > static_cast<long double>(cap)) {
      r.skipped.push_back("carrier " + std::to_string(n) + ": search space exceeds cap");
      continue;
    }
    FiniteModel m;
    m.states = FinSet(n);
    m.coalg.assign(n, tab->elements[0]);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      for (std::size_t x = 0; x < n; ++x) m.coalg[x] = tab->elements[idx[x]];
      for (std::uint64_t vv = 0; vv < (std::uint64_t{1} << vbits); ++vv) {
        for (std::size_t i = 0; i < vars.size(); ++i) m.val[vars[i]] = (vv >> (i * n)) & full_mask(n);
        ++r.examined;
        const Mask ext = eval_extension(l, m, phi);
        if (ext) {
          r.model = m;
          r.state = static_cast<std::size_t>(std::countr_zero(ext));
          return r;
        }
      }
      std::size_t i = n;
      bool done = true;
      while (i > 0) {
        --i;
        if (++idx[i] < tab->size()) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (done) break;
    }
  }
  return r;
}

}  // namespace cml
