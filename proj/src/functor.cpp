#include "cml/functor.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "cml/errors.hpp"

namespace cml {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

// Splits "a,b,c" at top-level commas (ignoring commas nested in braces/parens).
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == ' ') continue;
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string strip(const std::string& s, char open, char close) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.size() < 2 || t.front() != open || t.back() != close)
    throw PreconditionError("malformed element '" + s + "'");
  return t.substr(1, t.size() - 2);
}

}  // namespace

std::size_t Tabulation::index_of(Code c) const {
  auto it = index.find(c);
  if (it == index.end()) throw PreconditionError("element code not in tabulation");
  return it->second;
}

std::optional<std::optional<Code>> Functor::specialized_lift(const FinFun&, const FinFun&, const Pullback&, Code,
                                                            Code) const {
  return std::nullopt;
}

std::shared_ptr<const Tabulation> Functor::tabulate(std::size_t n, std::uint64_t budget) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(n); it != cache_.end()) {
      if (it->second->size() > budget)
        throw BudgetExceeded(name() + "(" + std::to_string(n) + ")", it->second->size(), budget);
      return it->second;
    }
  }
  const std::uint64_t c = n > max_carrier() ? kSaturated : count(n);
  if (c > budget) throw BudgetExceeded(name() + "(" + std::to_string(n) + ")", c, budget);
  auto tab = std::make_shared<Tabulation>();
  tab->carrier = n;
  tab->elements = enumerate(n);
  tab->index.reserve(tab->elements.size());
  for (std::size_t i = 0; i < tab->elements.size(); ++i) tab->index.emplace(tab->elements[i], i);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = cache_.emplace(n, std::move(tab));
  return it->second;
}

// --- powerset ---------------------------------------------------------------

std::uint64_t PowersetFunctor::count(std::size_t n) const {
  const std::uint64_t all = sat_pow(2, n);
  return nonempty_ && all != kSaturated ? all - 1 : all;
}

bool PowersetFunctor::contains(std::size_t n, Code e) const {
  if ((e & ~full_mask(n)) != 0) return false;
  return !nonempty_ || e != 0;
}

Code PowersetFunctor::act(const FinFun& f, Code e) const { return f.image(e); }

std::string PowersetFunctor::render(Code e, const FinSet& x) const { return x.render(e); }

Code PowersetFunctor::parse_element(const std::string& text, const FinSet& x) const {
  Code e = x.parse_subset(text);
  if (!contains(x.size(), e)) throw PreconditionError("not an element of " + name() + ": " + text);
  return e;
}

std::vector<Code> PowersetFunctor::enumerate(std::size_t n) const {
  std::vector<Code> out;
  const Code limit = Code{1} << n;
  for (Code e = nonempty_ ? 1 : 0; e < limit; ++e) out.push_back(e);
  return out;
}

// --- neighbourhood family ------------------------------------------------------

std::string NeighbourhoodFunctor::name() const {
  switch (variant_) {
    case Variant::Full:
      return "N";
    case Variant::Monotone:
      return "M";
    case Variant::Vee:
      return "NVEE";
  }
  return "N";
}

std::uint64_t NeighbourhoodFunctor::count(std::size_t n) const {
  if (n > max_carrier()) return kSaturated;
  switch (variant_) {
    case Variant::Full:
      return sat_pow(2, std::uint64_t{1} << n);
    case Variant::Monotone: {
      // Dedekind numbers
      static const std::uint64_t dedekind[] = {2, 3, 6, 20, 168, 7581, 7828354};
      return dedekind[n];
    }
    case Variant::Vee:
      if (n <= 4) return enumerate(n).size();
      return sat_pow(2, std::uint64_t{1} << n);  // upper bound
  }
  return kSaturated;
}

Code NeighbourhoodFunctor::up_closure(std::size_t n, Code alpha) {
  const std::size_t subsets = std::size_t{1} << n;
  Code out = 0;
  for (std::size_t a = 0; a < subsets; ++a) {
    if (!has(alpha, a)) continue;
    for (std::size_t b = 0; b < subsets; ++b)
      if ((a & b) == a) out |= Code{1} << b;
  }
  return out;
}

bool NeighbourhoodFunctor::contains(std::size_t n, Code e) const {
  if (n > max_carrier()) return false;
  const std::size_t subsets = std::size_t{1} << n;
  if ((e & ~full_mask(subsets)) != 0) return false;
  switch (variant_) {
    case Variant::Full:
      return true;
    case Variant::Monotone:
      return up_closure(n, e) == e;
    case Variant::Vee: {
      const Mask all = full_mask(n);
      for (std::size_t a = 0; a < subsets; ++a)
        for (std::size_t b = 0; b < subsets; ++b)
          if ((a | b) == all && !has(e, a) && !has(e, b)) return false;
      return true;
    }
  }
  return false;
}

Code NeighbourhoodFunctor::act(const FinFun& f, Code e) const {
  const std::size_t m = f.cod().size();
  if (m > max_carrier()) throw BudgetExceeded(name() + " element over carrier", m, max_carrier());
  Code out = 0;
  for (std::size_t b = 0; b < (std::size_t{1} << m); ++b)
    if (has(e, f.preimage(b))) out |= Code{1} << b;
  return out;
}

std::string NeighbourhoodFunctor::render(Code e, const FinSet& x) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t a = 0; a < (std::size_t{1} << x.size()); ++a) {
    if (!has(e, a)) continue;
    if (!first) out += ',';
    out += x.render(a);
    first = false;
  }
  return out + "}";
}

Code NeighbourhoodFunctor::parse_element(const std::string& text, const FinSet& x) const {
  Code e = 0;
  for (const auto& part : split_top(strip(text, '{', '}'))) e |= Code{1} << x.parse_subset(part);
  if (!contains(x.size(), e)) throw PreconditionError("not an element of " + name() + ": " + text);
  return e;
}

std::vector<Code> NeighbourhoodFunctor::enumerate(std::size_t n) const {
  std::vector<Code> out;
  const std::size_t subsets = std::size_t{1} << n;
  if (variant_ == Variant::Monotone) {
    // an upset U of P(n) is a pair U0 ⊆ U1 of upsets of P(n-1)
    std::function<std::vector<Code>(std::size_t)> upsets = [&](std::size_t k) -> std::vector<Code> {
      if (k == 0) return {0, 1};
      auto lower = upsets(k - 1);
      const std::size_t half = std::size_t{1} << (k - 1);
      std::vector<Code> res;
      for (auto u0 : lower)
        for (auto u1 : lower)
          if ((u0 & u1) == u0) res.push_back(u0 | (u1 << half));
      return res;
    };
    out = upsets(n);
    std::sort(out.begin(), out.end());
    return out;
  }
  if (subsets >= 64 || (variant_ == Variant::Vee && n > 4))
    throw BudgetExceeded(name() + "(" + std::to_string(n) + ") enumeration", kSaturated, kDefaultElementBudget);
  const Code limit = Code{1} << subsets;
  for (Code e = 0; e < limit; ++e)
    if (variant_ == Variant::Full || contains(n, e)) out.push_back(e);
  return out;
}

std::optional<std::optional<Code>> NeighbourhoodFunctor::specialized_lift(const FinFun& f, const FinFun& g,
                                                                         const Pullback& pb, Code s, Code t) const {
  if (variant_ != Variant::Monotone || !f.surjective() || !g.surjective()) return std::nullopt;
  const std::size_t nx = f.dom().size(), ny = g.dom().size(), np = pb.carrier.size();
  if (np > max_carrier()) return std::nullopt;
  Code generators = 0;
  for (std::size_t u = 0; u < (std::size_t{1} << nx); ++u)
    if (has(s, u)) generators |= Code{1} << pb.pi1.preimage(u);
  for (std::size_t v = 0; v < (std::size_t{1} << ny); ++v)
    if (has(t, v)) generators |= Code{1} << pb.pi2.preimage(v);
  const Code beta = up_closure(np, generators);
  if (act(pb.pi1, beta) == s && act(pb.pi2, beta) == t) return std::optional<Code>(beta);
  return std::optional<Code>();
}

// --- F³₂ -------------------------------------------------------------------

Code TripleFunctor::make(std::size_t a, std::size_t b, std::size_t c) {
  return (Code{a} << (2 * kShift)) | (Code{b} << kShift) | Code{c};
}

std::size_t TripleFunctor::component(Code e, std::size_t i) {
  const unsigned shift = static_cast<unsigned>((2 - i) * kShift);
  return static_cast<std::size_t>((e >> shift) & ((Code{1} << kShift) - 1));
}

std::uint64_t TripleFunctor::count(std::size_t n) const {
  const std::uint64_t k = n;
  return k * k * k - k * (k > 0 ? k - 1 : 0) * (k > 1 ? k - 2 : 0);
}

bool TripleFunctor::contains(std::size_t n, Code e) const {
  const std::size_t a = component(e, 0), b = component(e, 1), c = component(e, 2);
  if (a >= n || b >= n || c >= n) return false;
  if (make(a, b, c) != e) return false;
  return a == b || b == c || a == c;
}

Code TripleFunctor::act(const FinFun& f, Code e) const {
  return make(f(component(e, 0)), f(component(e, 1)), f(component(e, 2)));
}

std::string TripleFunctor::render(Code e, const FinSet& x) const {
  return "(" + x.label(component(e, 0)) + "," + x.label(component(e, 1)) + "," + x.label(component(e, 2)) + ")";
}

Code TripleFunctor::parse_element(const std::string& text, const FinSet& x) const {
  auto parts = split_top(strip(text, '(', ')'));
  if (parts.size() != 3) throw PreconditionError("F32 element needs three components: " + text);
  Code e = make(x.index(parts[0]), x.index(parts[1]), x.index(parts[2]));
  if (!contains(x.size(), e)) throw PreconditionError("not an element of F32: " + text);
  return e;
}

std::vector<Code> TripleFunctor::enumerate(std::size_t n) const {
  std::vector<Code> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (a == b || b == c || a == c) out.push_back(make(a, b, c));
  return out;
}

// --- W_M -----------------------------------------------------------------------

std::uint64_t WeightedFunctor::count(std::size_t n) const { return sat_pow(monoid_.size(), n); }

std::size_t WeightedFunctor::max_carrier() const {
  const std::uint64_t q = monoid_.size();
  if (q <= 1) return 63;
  std::size_t n = 0;
  std::uint64_t acc = 1;
  while (acc <= kSaturated / q) {
    acc *= q;
    ++n;
  }
  return n;
}

std::size_t WeightedFunctor::weight(Code e, std::size_t x) const {
  const std::uint64_t q = monoid_.size();
  for (std::size_t i = 0; i < x; ++i) e /= q;
  return static_cast<std::size_t>(e % q);
}

Code WeightedFunctor::encode(const std::vector<std::size_t>& weights) const {
  const std::uint64_t q = monoid_.size();
  Code e = 0;
  for (std::size_t i = weights.size(); i-- > 0;) e = e * q + weights[i];
  return e;
}

bool WeightedFunctor::contains(std::size_t n, Code e) const {
  if (n > max_carrier()) return false;
  const std::uint64_t q = monoid_.size();
  if (q == 1) return e == 0;
  for (std::size_t i = 0; i < n; ++i) e /= q;
  return e == 0;
}

Code WeightedFunctor::act(const FinFun& f, Code e) const {
  std::vector<std::size_t> out(f.cod().size(), monoid_.zero());
  for (std::size_t x = 0; x < f.dom().size(); ++x) out[f(x)] = monoid_.add(out[f(x)], weight(e, x));
  return encode(out);
}

std::string WeightedFunctor::render(Code e, const FinSet& x) const {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += x.label(i) + ":" + monoid_.label(weight(e, i));
  }
  return out + ")";
}

Code WeightedFunctor::parse_element(const std::string& text, const FinSet& x) const {
  std::vector<std::size_t> w(x.size(), monoid_.zero());
  for (const auto& part : split_top(strip(text, '(', ')'))) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw PreconditionError("weight entries are written label:value");
    w[x.index(part.substr(0, colon))] = monoid_.index(part.substr(colon + 1));
  }
  return encode(w);
}

std::vector<Code> WeightedFunctor::enumerate(std::size_t n) const {
  const std::uint64_t total = count(n);
  std::vector<Code> out;
  out.reserve(total);
  for (Code e = 0; e < total; ++e) out.push_back(e);
  return out;
}

std::optional<std::optional<Code>> WeightedFunctor::specialized_lift(const FinFun& f, const FinFun& g,
                                                                    const Pullback& pb, Code s, Code t) const {
  // W_M is additive: the lift decomposes into one matrix refinement per fiber
  const std::size_t nz = f.cod().size();
  std::vector<std::size_t> u(pb.carrier.size(), monoid_.zero());
  for (std::size_t z = 0; z < nz; ++z) {
    std::vector<std::size_t> xs, ys, rows, cols;
    for (std::size_t x = 0; x < f.dom().size(); ++x)
      if (f(x) == z) {
        xs.push_back(x);
        rows.push_back(weight(s, x));
      }
    for (std::size_t y = 0; y < g.dom().size(); ++y)
      if (g(y) == z) {
        ys.push_back(y);
        cols.push_back(weight(t, y));
      }
    auto mat = refine(monoid_, rows, cols);
    if (!mat) return std::optional<Code>();
    for (std::size_t p = 0; p < pb.pairs.size(); ++p) {
      const auto [x, y] = pb.pairs[p];
      if (f(x) != z) continue;
      const auto i = static_cast<std::size_t>(std::find(xs.begin(), xs.end(), x) - xs.begin());
      const auto j = static_cast<std::size_t>(std::find(ys.begin(), ys.end(), y) - ys.begin());
      u[p] = (*mat)[i][j];
    }
  }
  return std::optional<Code>(encode(u));
}

// --- law checks ------------------------------------------------------------------

std::optional<std::string> check_functor_laws(const Functor& F, std::size_t max_carrier, std::uint64_t budget) {
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    auto tn = F.tabulate(n, budget);
    const FinFun id = FinFun::identity(FinSet(n));
    for (auto e : tn->elements)
      if (F.act(id, e) != e) return F.name() + ": identity law fails on carrier " + std::to_string(n);
    for (std::size_t m = 0; m <= max_carrier; ++m) {
      for (std::size_t k = 0; k <= max_carrier; ++k) {
        std::optional<std::string> failure;
        for_each_function(n, m, [&](const std::vector<std::size_t>& ft) {
          if (failure) return;
          const FinFun f(n, m, ft);
          for_each_function(m, k, [&](const std::vector<std::size_t>& gt) {
            if (failure) return;
            const FinFun g(m, k, gt);
            const FinFun gf = g.after(f);
            for (auto e : tn->elements)
              if (F.act(gf, e) != F.act(g, F.act(f, e))) {
                failure = F.name() + ": composition law fails for carriers " + std::to_string(n) + "→" +
                          std::to_string(m) + "→" + std::to_string(k);
                return;
              }
          });
        });
        if (failure) return failure;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_closure(const Functor& F, std::size_t max_carrier, std::uint64_t budget) {
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    auto tn = F.tabulate(n, budget);
    for (std::size_t m = 0; m <= max_carrier; ++m) {
      std::optional<std::string> failure;
      for_each_function(n, m, [&](const std::vector<std::size_t>& ft) {
        if (failure) return;
        const FinFun f(n, m, ft);
        for (auto e : tn->elements)
          if (!F.contains(m, F.act(f, e))) {
            failure = F.name() + ": act leaves the functor on a map " + std::to_string(n) + "→" + std::to_string(m);
            return;
          }
      });
      if (failure) return failure;
    }
  }
  return std::nullopt;
}

}  // namespace cml
