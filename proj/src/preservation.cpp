#include "cml/preservation.hpp"

#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "cml/errors.hpp"

namespace cml {

namespace {

using CodePair = std::pair<Code, Code>;
using PairHash = boost::hash<CodePair>;

}  // namespace

LiftVerdict check_weak_lift(const Functor& F, const FinFun& f, const FinFun& g, std::uint64_t budget,
                            std::optional<std::pair<Code, Code>> query, std::size_t max_failures) {
  const Pullback pb = pullback(f, g);
  auto tp = F.tabulate(pb.carrier.size(), budget);
  auto tx = F.tabulate(f.dom().size(), budget);
  auto ty = F.tabulate(g.dom().size(), budget);

  std::unordered_map<CodePair, Code, PairHash> reach;
  reach.reserve(tp->size());
  for (auto u : tp->elements) reach.emplace(CodePair{F.act(pb.pi1, u), F.act(pb.pi2, u)}, u);

  LiftVerdict v;
  auto examine = [&](Code s, Code t) {
    ++v.compatible_pairs;
    auto it = reach.find({s, t});
    const bool ok = it != reach.end();
    if (auto spec = F.specialized_lift(f, g, pb, s, t)) {
      v.specialized_used = true;
      bool spec_ok = spec->has_value();
      if (spec_ok && (F.act(pb.pi1, **spec) != s || F.act(pb.pi2, **spec) != t)) spec_ok = false;
      if (spec_ok != ok) ++v.specialized_disagreements;
    }
    if (!ok) {
      ++v.failing_pairs;
      if (v.lifts) v.witness = CodePair{s, t};
      v.lifts = false;
      if (v.failures.size() < max_failures) v.failures.emplace_back(s, t);
    }
  };

  if (query) {
    if (!F.contains(f.dom().size(), query->first) || !F.contains(g.dom().size(), query->second))
      throw PreconditionError("queried pair is not made of functor elements");
    if (F.act(f, query->first) != F.act(g, query->second))
      throw PreconditionError("queried pair is not compatible: F f(s) differs from F g(t)");
    examine(query->first, query->second);
    return v;
  }

  std::unordered_map<Code, std::vector<Code>> by_image;
  for (auto t : ty->elements) by_image[F.act(g, t)].push_back(t);
  for (auto s : tx->elements) {
    auto it = by_image.find(F.act(f, s));
    if (it == by_image.end()) continue;
    for (auto t : it->second) examine(s, t);
  }
  return v;
}

std::vector<std::pair<FinFun, FinFun>> canonical_cospans(std::size_t max_carrier, bool surjective) {
  std::vector<std::pair<FinFun, FinFun>> out;
  for (std::size_t nx = 1; nx <= max_carrier; ++nx)
    for (std::size_t ny = 1; ny <= max_carrier; ++ny)
      for (std::size_t nz = 1; nz <= max_carrier; ++nz) {
        const auto px = permutations(nx), py = permutations(ny), pz = permutations(nz);
        for_each_function(nx, nz, [&](const std::vector<std::size_t>& ft) {
          const FinFun f(nx, nz, ft);
          if (surjective && !f.surjective()) return;
          for_each_function(ny, nz, [&](const std::vector<std::size_t>& gt) {
            const FinFun g(ny, nz, gt);
            if (surjective && !g.surjective()) return;
            std::vector<std::size_t> f2(nx), g2(ny);
            for (const auto& sz : pz)
              for (const auto& sx : px) {
                for (std::size_t x = 0; x < nx; ++x) f2[sx[x]] = sz[ft[x]];
                if (f2 > ft) continue;
                for (const auto& sy : py) {
                  for (std::size_t y = 0; y < ny; ++y) g2[sy[y]] = sz[gt[y]];
                  if (f2 < ft || (f2 == ft && g2 < gt)) return;
                }
              }
            out.emplace_back(f, g);
          });
        });
      }
  return out;
}

SweepReport sweep_preservation(const Functor& F, PreservationProperty p, std::size_t max_carrier,
                               std::uint64_t budget) {
  if (max_carrier < 1) throw PreconditionError("sweep needs max_carrier ≥ 1");
  SweepReport r;
  r.functor = F.name();
  r.property = p;
  r.max_carrier = max_carrier;
  for (auto& [f, g] : canonical_cospans(max_carrier, p == PreservationProperty::SWPB)) {
    CospanReport c;
    c.f = f;
    c.g = g;
    try {
      c.verdict = check_weak_lift(F, f, g, budget);
      c.status = c.verdict.lifts ? CospanReport::Status::Lifts : CospanReport::Status::Fails;
      r.specialized_disagreements += c.verdict.specialized_disagreements;
      (c.verdict.lifts ? r.lifts : r.fails)++;
    } catch (const BudgetExceeded& e) {
      c.status = CospanReport::Status::Skipped;
      c.skip_reason = e.what();
      ++r.skipped;
    }
    r.cospans.push_back(std::move(c));
  }
  return r;
}

CompatibilityVerdict compatibility_check(const NeighbourhoodFunctor& M, Code a1, Code a2, const FinFun& f,
                                         const FinFun& g) {
  if (!f.surjective() || !g.surjective()) throw PreconditionError("compatibility check needs a surjective cospan");
  const std::size_t nx = f.dom().size(), ny = g.dom().size();
  if (!M.contains(nx, a1) || !M.contains(ny, a2)) throw PreconditionError("arguments are not elements of the functor");
  const Pullback pb = pullback(f, g);
  CompatibilityVerdict v;
  v.compatible = true;
  for (Mask u = 0; u < (Mask{1} << nx) && v.compatible; ++u)
    if (has(a1, u) && !has(a2, pb.pi2.image(pb.pi1.preimage(u)))) v.compatible = false;
  for (Mask w = 0; w < (Mask{1} << ny) && v.compatible; ++w)
    if (has(a2, w) && !has(a1, pb.pi1.image(pb.pi2.preimage(w)))) v.compatible = false;
  v.images_equal = M.act(f, a1) == M.act(g, a2);
  return v;
}

Code up_construction(const FinFun& f, const FinFun& g, Code a1, Code a2) {
  const Pullback pb = pullback(f, g);
  const std::size_t nx = f.dom().size(), ny = g.dom().size(), np = pb.carrier.size();
  if (np > 6) throw BudgetExceeded("Up construction over pullback", np, 6);
  Code gens = 0;
  for (Mask u = 0; u < (Mask{1} << nx); ++u)
    if (has(a1, u)) gens |= Code{1} << pb.pi1.preimage(u);
  for (Mask w = 0; w < (Mask{1} << ny); ++w)
    if (has(a2, w)) gens |= Code{1} << pb.pi2.preimage(w);
  return NeighbourhoodFunctor::up_closure(np, gens);
}

ConstraintVerdict neighbourhood_constraint_analysis(const FinFun& f, const FinFun& g, std::uint64_t budget) {
  const NeighbourhoodFunctor N(NeighbourhoodFunctor::Variant::Full);
  const Pullback pb = pullback(f, g);
  const std::size_t nx = f.dom().size(), ny = g.dom().size();
  // memberships of pb-subsets forced by s (side 0) and t (side 1)
  struct Force {
    int side;
    Mask set;
  };
  std::unordered_map<Mask, std::vector<Force>> forced;
  for (Mask a = 0; a < (Mask{1} << nx); ++a) forced[pb.pi1.preimage(a)].push_back({0, a});
  for (Mask b = 0; b < (Mask{1} << ny); ++b) forced[pb.pi2.preimage(b)].push_back({1, b});
  std::vector<std::vector<Force>> clashes;
  for (auto& [w, fs] : forced)
    if (fs.size() > 1) clashes.push_back(fs);

  auto tx = N.tabulate(nx, budget);
  auto ty = N.tabulate(ny, budget);
  std::unordered_map<Code, std::vector<Code>> by_image;
  for (auto t : ty->elements) by_image[N.act(g, t)].push_back(t);
  ConstraintVerdict v;
  for (auto s : tx->elements) {
    auto it = by_image.find(N.act(f, s));
    if (it == by_image.end()) continue;
    for (auto t : it->second) {
      ++v.compatible_pairs;
      bool conflict = false;
      for (const auto& fs : clashes) {
        auto member = [&](const Force& x) { return has(x.side == 0 ? s : t, x.set); };
        const bool first = member(fs.front());
        for (const auto& x : fs)
          if (member(x) != first) conflict = true;
        if (conflict) break;
      }
      if (conflict && v.lifts) {
        v.lifts = false;
        v.witness = std::make_pair(s, t);
      }
    }
  }
  return v;
}

}  // namespace cml
