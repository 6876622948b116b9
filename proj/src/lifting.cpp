#include "cml/lifting.hpp"

#include <set>
#include <unordered_map>

#include "cml/errors.hpp"

namespace cml {

Lifting diamond_lifting() {
  return {"<>", 1, [](std::size_t, Code e, std::span<const Mask> a) { return (e & a[0]) != 0; }};
}

Lifting box_lifting() {
  return {"[]", 1, [](std::size_t, Code e, std::span<const Mask> a) { return has(e, a[0]); }};
}

Lifting graded_lifting(std::shared_ptr<const WeightedFunctor> w, std::size_t m) {
  std::string name = "m" + w->monoid().label(m);
  return {std::move(name), 1, [w, m](std::size_t n, Code e, std::span<const Mask> a) {
            std::size_t acc = w->monoid().zero();
            for (std::size_t x = 0; x < n; ++x)
              if (has(a[0], x)) acc = w->monoid().add(acc, w->weight(e, x));
            return acc == m;
          }};
}

Lifting projection_lifting(std::size_t i) {
  return {"c" + std::to_string(i + 1), 1,
          [i](std::size_t, Code e, std::span<const Mask> a) { return has(a[0], TripleFunctor::component(e, i)); }};
}

Lifting constant_lifting(std::string name, bool value) {
  return {std::move(name), 1, [value](std::size_t, Code, std::span<const Mask>) { return value; }};
}

Bits extension(const Lifting& l, const Tabulation& tab, std::span<const Mask> args) {
  Bits out(tab.size());
  for (std::size_t i = 0; i < tab.size(); ++i)
    if (l.holds(tab.carrier, tab.elements[i], args)) out.set(i);
  return out;
}

void for_each_args(std::size_t n, std::size_t arity, const std::function<void(std::span<const Mask>)>& fn) {
  if (n >= 64) throw PreconditionError("argument enumeration needs a carrier below 64");
  const Mask subsets = Mask{1} << n;
  std::vector<Mask> args(arity, 0);
  while (true) {
    fn(args);
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++args[i] < subsets) break;
      args[i] = 0;
      if (i == 0) return;
    }
    if (arity == 0) return;
  }
}

Bits transposite(const Lifting& l, std::size_t n, Code e) {
  std::vector<bool> bits;
  for_each_args(n, l.arity, [&](std::span<const Mask> a) { bits.push_back(l.holds(n, e, a)); });
  Bits out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out.set(i);
  return out;
}

std::vector<Code> yoneda(const Lifting& l, const Functor& F, std::uint64_t budget) {
  const std::size_t n = std::size_t{1} << l.arity;
  std::vector<Mask> proj(l.arity, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < l.arity; ++i)
      if (has(j, i)) proj[i] |= Mask{1} << j;
  std::vector<Code> out;
  for (auto e : F.tabulate(n, budget)->elements)
    if (l.holds(n, e, proj)) out.push_back(e);
  return out;
}

LiftingVerdict check_naturality(const Lifting& l, const Functor& F, std::size_t max_carrier, std::uint64_t budget) {
  LiftingVerdict v;
  for (std::size_t n = 0; n <= max_carrier && v.holds; ++n) {
    auto tn = F.tabulate(n, budget);
    for (std::size_t m = 0; m <= max_carrier && v.holds; ++m) {
      for_each_function(n, m, [&](const std::vector<std::size_t>& table) {
        if (!v.holds) return;
        const FinFun f(n, m, table);
        for_each_args(m, l.arity, [&](std::span<const Mask> a) {
          if (!v.holds) return;
          std::vector<Mask> pre(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) pre[i] = f.preimage(a[i]);
          for (auto e : tn->elements) {
            ++v.checked;
            if (l.holds(n, e, pre) != l.holds(m, F.act(f, e), a)) {
              v.holds = false;
              std::string t;
              for (auto y : table) t += std::to_string(y);
              v.witness = "map " + std::to_string(n) + "->" + std::to_string(m) + " [" + t + "] at element " +
                          F.render(e, FinSet(n));
              return;
            }
          }
        });
      });
    }
  }
  return v;
}

LiftingVerdict check_monotone(const Lifting& l, const Functor& F, std::size_t max_carrier, std::uint64_t budget) {
  LiftingVerdict v;
  for (std::size_t n = 0; n <= max_carrier && v.holds; ++n) {
    auto tn = F.tabulate(n, budget);
    const FinSet x(n);
    for_each_args(n, l.arity, [&](std::span<const Mask> a) {
      if (!v.holds) return;
      std::vector<Mask> bigger(a.begin(), a.end());
      for (std::size_t i = 0; i < l.arity && v.holds; ++i) {
        for (std::size_t y = 0; y < n && v.holds; ++y) {
          if (has(a[i], y)) continue;
          bigger[i] = a[i] | (Mask{1} << y);
          for (auto e : tn->elements) {
            ++v.checked;
            if (l.holds(n, e, a) && !l.holds(n, e, bigger)) {
              v.holds = false;
              v.witness = "element " + F.render(e, x) + " satisfies " + l.name + x.render(a[i]) + " but not " +
                          l.name + x.render(bigger[i]);
              break;
            }
          }
          bigger[i] = a[i];
        }
      }
    });
  }
  return v;
}

LiftingVerdict check_yoneda(const Lifting& l, const Functor& F, std::size_t max_carrier, std::uint64_t budget) {
  LiftingVerdict v;
  const auto y = yoneda(l, F, budget);
  const std::set<Code> ys(y.begin(), y.end());
  const std::size_t two_n = std::size_t{1} << l.arity;
  for (std::size_t n = 0; n <= max_carrier && v.holds; ++n) {
    auto tn = F.tabulate(n, budget);
    for_each_args(n, l.arity, [&](std::span<const Mask> a) {
      if (!v.holds) return;
      std::vector<std::size_t> chi(n, 0);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < l.arity; ++i)
          if (has(a[i], x)) chi[x] |= std::size_t{1} << i;
      const FinFun f(n, two_n, chi);
      for (auto e : tn->elements) {
        ++v.checked;
        if (l.holds(n, e, a) != (ys.count(F.act(f, e)) > 0)) {
          v.holds = false;
          v.witness = "Yoneda mismatch at " + F.render(e, FinSet(n));
          return;
        }
      }
    });
  }
  return v;
}

SeparationVerdict check_separating(std::span<const Lifting> ls, const Functor& F, std::size_t max_carrier,
                                   std::uint64_t budget) {
  SeparationVerdict v;
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    auto tn = F.tabulate(n, budget);
    std::unordered_map<Bits, Code, BitsHash> seen;
    for (auto e : tn->elements) {
      Bits sig;
      for (const auto& l : ls) {
        auto t = transposite(l, n, e);
        for (std::size_t i = 0; i < t.size(); ++i) sig.push_back(t[i]);
      }
      auto [it, inserted] = seen.emplace(std::move(sig), e);
      if (!inserted) {
        const FinSet x(n);
        v.separating = false;
        v.carrier = n;
        v.pair = std::make_pair(it->second, e);
        v.witness = F.render(it->second, x) + " and " + F.render(e, x) + " are indistinguishable";
        return v;
      }
    }
  }
  return v;
}

}  // namespace cml
