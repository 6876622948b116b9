#include "cml/subalgebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cml/errors.hpp"

namespace cml {

namespace {

void sort_blocks(std::vector<Mask>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

}  // namespace

Subalgebra::Subalgebra(std::size_t n, std::vector<Mask> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n_ > 63) throw PreconditionError("subalgebra carrier too large");
  Mask seen = 0;
  for (auto b : blocks_) {
    if (b == 0) throw PreconditionError("subalgebra atoms must be nonempty");
    if (seen & b) throw PreconditionError("subalgebra atoms must be disjoint");
    seen |= b;
  }
  if (seen != full_mask(n_)) throw PreconditionError("subalgebra atoms must cover the carrier");
  sort_blocks(blocks_);
}

Subalgebra Subalgebra::full(std::size_t n) {
  std::vector<Mask> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(Mask{1} << i);
  return Subalgebra(n, std::move(b));
}

Subalgebra Subalgebra::trivial(std::size_t n) {
  if (n == 0) return Subalgebra(0, {});
  return Subalgebra(n, {full_mask(n)});
}

Subalgebra Subalgebra::generated(std::size_t n, std::span<const Mask> sets) {
  std::map<std::vector<bool>, Mask> classes;
  std::vector<Mask> order;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> sig;
    for (auto s : sets) sig.push_back(has(s, x));
    classes[sig] |= Mask{1} << x;
  }
  std::vector<Mask> blocks;
  for (auto& [sig, b] : classes) blocks.push_back(b);
  return Subalgebra(n, std::move(blocks));
}

Subalgebra Subalgebra::from_rgs(const std::vector<std::size_t>& rgs) {
  std::size_t k = 0;
  for (auto r : rgs) k = std::max(k, r + 1);
  std::vector<Mask> blocks(k, 0);
  for (std::size_t x = 0; x < rgs.size(); ++x) blocks[rgs[x]] |= Mask{1} << x;
  return Subalgebra(rgs.size(), std::move(blocks));
}

std::vector<std::size_t> Subalgebra::rgs() const {
  std::vector<std::size_t> r(n_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t x = 0; x < n_; ++x)
      if (has(blocks_[i], x)) r[x] = i;
  return r;
}

bool Subalgebra::contains(Mask a) const {
  if (a & ~full_mask(n_)) return false;
  for (auto b : blocks_)
    if ((a & b) != 0 && (a & b) != b) return false;
  return true;
}

std::vector<Mask> Subalgebra::members() const {
  if (blocks_.size() > 20) throw BudgetExceeded("subalgebra members", std::uint64_t{1} << blocks_.size(), 1u << 20);
  std::vector<Mask> out(std::size_t{1} << blocks_.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = from_atoms(s);
  return out;
}

Mask Subalgebra::can_iso(Mask member) const {
  if (!contains(member)) throw PreconditionError("set is not a member of the subalgebra");
  Mask out = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] & member) out |= Mask{1} << i;
  return out;
}

Mask Subalgebra::from_atoms(Mask atom_set) const {
  Mask out = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (has(atom_set, i)) out |= blocks_[i];
  return out;
}

bool Subalgebra::refines(const Subalgebra& coarser) const {
  if (coarser.n_ != n_) return false;
  for (auto b : coarser.blocks_)
    if (!contains(b)) return false;
  return true;
}

std::string Subalgebra::render(const FinSet& x) const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += x.render(blocks_[i]);
  }
  return out + "}";
}

FinFun canonical_projection(const Subalgebra& finer, const Subalgebra& coarser) {
  if (!finer.refines(coarser)) throw PreconditionError("canonical projection: target is not a subalgebra of the source");
  std::vector<std::size_t> t(finer.atom_count());
  for (std::size_t i = 0; i < finer.atom_count(); ++i)
    for (std::size_t j = 0; j < coarser.atom_count(); ++j)
      if ((finer.atoms()[i] & coarser.atoms()[j]) != 0) t[i] = j;
  return FinFun(finer.atom_count(), coarser.atom_count(), std::move(t));
}

Subalgebra meet(const Subalgebra& a, const Subalgebra& b) {
  if (a.carrier() != b.carrier()) throw PreconditionError("meet of subalgebras over different carriers");
  std::vector<Mask> comps;
  Mask done = 0;
  for (std::size_t x = 0; x < a.carrier(); ++x) {
    if (has(done, x)) continue;
    Mask comp = Mask{1} << x, prev = 0;
    while (comp != prev) {
      prev = comp;
      for (auto blk : a.atoms())
        if (blk & comp) comp |= blk;
      for (auto blk : b.atoms())
        if (blk & comp) comp |= blk;
    }
    comps.push_back(comp);
    done |= comp;
  }
  return Subalgebra(a.carrier(), std::move(comps));
}

std::optional<std::pair<Mask, Mask>> interpolable_violation(const Subalgebra& a, const Subalgebra& b) {
  if (a.carrier() != b.carrier()) throw PreconditionError("interpolability of subalgebras over different carriers");
  const auto m = meet(a, b).members();
  const auto am = a.members(), bm = b.members();
  for (auto x : am)
    for (auto y : bm) {
      if ((x & ~y) != 0) continue;
      bool found = false;
      for (auto c : m)
        if ((x & ~c) == 0 && (c & ~y) == 0) {
          found = true;
          break;
        }
      if (!found) return std::make_pair(x, y);
    }
  return std::nullopt;
}

Subalgebra invariant_subalgebra(const FinFun& f) {
  std::vector<Mask> blocks;
  for (std::size_t y = 0; y < f.cod().size(); ++y) {
    Mask fib = f.preimage(Mask{1} << y);
    if (fib) blocks.push_back(fib);
  }
  return Subalgebra(f.dom().size(), std::move(blocks));
}

std::vector<std::pair<Subalgebra, Subalgebra>> canonical_partition_pairs(std::size_t n) {
  const auto parts = set_partitions(n);
  const auto perms = permutations(n);
  auto relabel = [&](const std::vector<Mask>& blocks, const std::vector<std::size_t>& p) {
    std::vector<Mask> out;
    for (auto b : blocks) {
      Mask nb = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (has(b, x)) nb |= Mask{1} << p[x];
      out.push_back(nb);
    }
    return Subalgebra(n, std::move(out)).rgs();
  };
  std::vector<std::pair<Subalgebra, Subalgebra>> out;
  for (const auto& p1 : parts)
    for (const auto& p2 : parts) {
      const auto r1 = Subalgebra(n, p1).rgs(), r2 = Subalgebra(n, p2).rgs();
      bool canonical = true;
      for (const auto& p : perms) {
        const auto s1 = relabel(p1, p), s2 = relabel(p2, p);
        if (s1 < r1 || (s1 == r1 && s2 < r2)) {
          canonical = false;
          break;
        }
      }
      if (canonical) out.emplace_back(Subalgebra(n, p1), Subalgebra(n, p2));
    }
  return out;
}

}  // namespace cml
