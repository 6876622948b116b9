#include "cml/finset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/functional/hash.hpp>

#include "cml/errors.hpp"

namespace cml {

std::size_t hash_bits(const Bits& b) {
  std::size_t seed = b.size();
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(b, std::back_inserter(blocks));
  for (auto w : blocks) boost::hash_combine(seed, w);
  return seed;
}

FinSet::FinSet(std::size_t n) {
  labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
}

FinSet::FinSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw PreconditionError("FinSet labels must be pairwise distinct");
}

std::size_t FinSet::index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw PreconditionError("unknown element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string FinSet::render(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!has(m, i)) continue;
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  }
  return out + "}";
}

Mask FinSet::parse_subset(const std::string& literal) const {
  if (literal.size() < 2 || literal.front() != '{' || literal.back() != '}')
    throw PreconditionError("malformed subset literal '" + literal + "'");
  if (size() > kMaxMaskCarrier) throw PreconditionError("carrier too large for subset literals");
  Mask m = 0;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) m |= Mask{1} << index(cur);
    cur.clear();
  };
  for (std::size_t i = 1; i + 1 < literal.size(); ++i) {
    if (literal[i] == ',') {
      flush();
    } else if (literal[i] != ' ') {
      cur.push_back(literal[i]);
    }
  }
  flush();
  return m;
}

FinFun::FinFun(FinSet dom, FinSet cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) throw PreconditionError("function table size differs from domain size");
  for (auto y : table_)
    if (y >= cod_.size()) throw PreconditionError("function table entry outside codomain");
}

FinFun::FinFun(std::size_t dom, std::size_t cod, std::vector<std::size_t> table)
    : FinFun(FinSet(dom), FinSet(cod), std::move(table)) {}

FinFun FinFun::identity(const FinSet& x) {
  std::vector<std::size_t> t(x.size());
  std::iota(t.begin(), t.end(), 0);
  return FinFun(x, x, std::move(t));
}

FinFun FinFun::characteristic(std::size_t n, Mask a) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = has(a, i) ? 1 : 0;
  return FinFun(n, 2, std::move(t));
}

FinFun FinFun::inclusion(std::size_t m, std::size_t n, std::size_t offset) {
  std::vector<std::size_t> t(m);
  std::iota(t.begin(), t.end(), offset);
  return FinFun(m, n, std::move(t));
}

bool FinFun::surjective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (auto y : table_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool FinFun::injective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (auto y : table_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

FinFun FinFun::after(const FinFun& first) const {
  if (first.cod_.size() != dom_.size()) throw PreconditionError("composition of incompatible functions");
  std::vector<std::size_t> t(first.table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = table_[first.table_[i]];
  return FinFun(first.dom_, cod_, std::move(t));
}

Mask FinFun::image(Mask a) const {
  Mask out = 0;
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (has(a, i)) out |= Mask{1} << table_[i];
  return out;
}

Mask FinFun::preimage(Mask b) const {
  Mask out = 0;
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (has(b, table_[i])) out |= Mask{1} << i;
  return out;
}

Pullback pullback(const FinFun& f, const FinFun& g) {
  if (!(f.cod().size() == g.cod().size())) throw PreconditionError("pullback: codomains of f and g differ");
  Pullback pb;
  std::vector<std::string> labels;
  std::vector<std::size_t> t1, t2;
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    for (std::size_t y = 0; y < g.dom().size(); ++y) {
      if (f(x) != g(y)) continue;
      pb.pairs.emplace_back(x, y);
      labels.push_back("(" + f.dom().label(x) + "," + g.dom().label(y) + ")");
      t1.push_back(x);
      t2.push_back(y);
    }
  }
  pb.carrier = FinSet(std::move(labels));
  pb.pi1 = FinFun(pb.carrier, f.dom(), std::move(t1));
  pb.pi2 = FinFun(pb.carrier, g.dom(), std::move(t2));
  return pb;
}

void for_each_function(std::size_t n, std::size_t m, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (m == 0 && n > 0) return;
  std::vector<std::size_t> t(n, 0);
  while (true) {
    fn(t);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++t[i] < m) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<Mask>> set_partitions(std::size_t n) {
  std::vector<std::vector<Mask>> out;
  // restricted growth strings
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      std::vector<Mask> part(blocks, 0);
      for (std::size_t j = 0; j < n; ++j) part[rgs[j]] |= Mask{1} << j;
      out.push_back(std::move(part));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      go(i + 1, std::max(blocks, b + 1));
    }
  };
  go(0, 0);
  return out;
}

}  // namespace cml
