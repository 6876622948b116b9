#include "cml/interpolation.hpp"

#include <algorithm>
#include <set>

#include "cml/errors.hpp"
#include "cml/satisfiability.hpp"

namespace cml {

namespace {

std::vector<std::string> normalize(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::string> merged(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return normalize(std::move(a));
}

}  // namespace

std::vector<std::size_t> project(const TheorySpace& src, std::size_t k, const TheorySpace& dst, std::size_t j) {
  if (j > k) throw PreconditionError("projection cannot raise the depth");
  std::vector<std::size_t> map(src.size(k));
  for (std::size_t t = 0; t < map.size(); ++t) map[t] = t;
  for (std::size_t d = k; d > j; --d) {
    const auto q = src.project_depth(d);
    for (auto& t : map) t = q[t];
  }
  const auto p = src.project_vars(dst, j);
  for (auto& t : map) t = p[t];
  return map;
}

Bits image(const std::vector<std::size_t>& map, const Bits& s, std::size_t target_size) {
  Bits out(target_size);
  for_each_bit(s, [&](std::size_t t) { out.set(map[t]); });
  return out;
}

UniformResult uniform_interpolant(const LogicPtr& l, const Formula& phi, std::vector<std::string> keep,
                                  SpaceBudget budget) {
  check_signature(phi, l->sig);
  keep = normalize(std::move(keep));
  const auto v1 = merged(joint_variables({phi}), keep);
  const std::size_t n = rank(phi);
  auto s1 = theory_space(l, v1, n, budget);
  auto s0 = theory_space(l, keep, n, budget);
  const Bits d = s1->denote(phi, n);
  const auto p = s1->project_vars(*s0, n);
  UniformResult r;
  r.keep = keep;
  r.rank = n;
  r.method = "projection";
  r.denotation = image(p, d, s0->size(n));
  r.interpolant = s0->characteristic_set(n, r.denotation);
  if (!d.is_subset_of(s1->denote(r.interpolant, n))) throw Error("projected interpolant is not implied by the formula");
  return r;
}

UniformResult uniform_interpolant_oracle(const LogicPtr& l, const Formula& phi, std::vector<std::string> keep,
                                         SpaceBudget budget) {
  check_signature(phi, l->sig);
  keep = normalize(std::move(keep));
  const auto v1 = merged(joint_variables({phi}), keep);
  const std::size_t n = rank(phi);
  auto s1 = theory_space(l, v1, n, budget);
  auto s0 = theory_space(l, keep, n, budget);
  const std::size_t m = s0->size(n);
  if (m > 20) throw BudgetExceeded("definitional oracle over T_n(V0)", m, 20);
  const Bits d = s1->denote(phi, n);
  const auto p = s1->project_vars(*s0, n);
  Bits meet(m);
  meet.set();
  // ψ over V₀ with denotation S is a consequence iff every φ-theory restricts into S.
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    bool consequence = true;
    for_each_bit(d, [&](std::size_t t) { consequence = consequence && has(s, p[t]); });
    if (!consequence) continue;
    for (std::size_t i = 0; i < m; ++i)
      if (!has(s, i)) meet.reset(i);
  }
  UniformResult r;
  r.keep = keep;
  r.rank = n;
  r.method = "definitional-oracle";
  r.denotation = meet;
  r.interpolant = s0->characteristic_set(n, meet);
  return r;
}

VerifyReport verify_uniform(const LogicPtr& l, const Formula& phi, const std::vector<std::string>& keep,
                            const Formula& iota, std::size_t psi_rank, std::vector<std::string> v2,
                            SpaceBudget budget) {
  check_signature(phi, l->sig);
  check_signature(iota, l->sig);
  v2 = normalize(std::move(v2));
  const auto v1 = merged(joint_variables({phi}), keep);
  const auto k0 = normalize(keep);
  for (const auto& v : v2)
    if (std::binary_search(v1.begin(), v1.end(), v) && !std::binary_search(k0.begin(), k0.end(), v))
      throw PreconditionError("V1 ∩ V2 must lie inside the kept variables");
  for (const auto& v : joint_variables({iota}))
    if (!std::binary_search(k0.begin(), k0.end(), v)) throw PreconditionError("interpolant mentions a variable outside V0");
  const auto u = merged(v1, v2);
  const std::size_t n = std::max({rank(phi), rank(iota), psi_rank});
  auto big = theory_space(l, u, n, budget);
  auto target = theory_space(l, v2, psi_rank, budget);
  const Bits dphi = big->denote(phi, n);
  const Bits diota = big->denote(iota, n);
  VerifyReport r;
  r.v2 = v2;
  r.psi_rank = psi_rank;
  r.implication = dphi.is_subset_of(diota);
  const auto p = project(*big, n, *target, psi_rank);
  const Bits pphi = image(p, dphi, target->size(psi_rank));
  const Bits piota = image(p, diota, target->size(psi_rank));
  r.psi_space = target->size(psi_rank);
  r.psi_checked_log2 = r.psi_space;
  r.consequences_log2 = r.psi_space - pphi.count();
  if (!piota.is_subset_of(pphi)) {
    // the strongest V₂-consequence of φ separates
    r.failures.push_back(print(target->characteristic_set(psi_rank, pphi)));
  }
  r.passed = r.implication && r.failures.empty();
  return r;
}

CraigResult craig_search(const LogicPtr& l, const Formula& phi, const Formula& psi, std::size_t max_rank,
                         SpaceBudget budget) {
  check_signature(phi, l->sig);
  check_signature(psi, l->sig);
  CraigResult r;
  r.implication_valid = valid(l, Formula::implies(phi, psi), budget);
  if (!r.implication_valid) throw PreconditionError("the implication is not valid; no interpolant is defined");
  const auto a = joint_variables({phi});
  const auto b = joint_variables({psi});
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.shared));
  for (std::size_t k = 0; k <= max_rank; ++k) {
    r.rank = k;
    auto s0 = theory_space(l, r.shared, k, budget);
    Bits cand(s0->size(k));
    try {
      const std::size_t n = std::max(rank(phi), k);
      auto s1 = theory_space(l, a, n, budget);
      cand = image(project(*s1, n, *s0, k), s1->denote(phi, n), s0->size(k));
      r.method = "projection";
    } catch (const BudgetExceeded&) {
      for (std::size_t t = 0; t < s0->size(k); ++t)
        if (sat(l, Formula::conj(phi, s0->characteristic(k, t)), budget).sat) cand.set(t);
      r.method = "search";
    }
    r.candidates = cand.count();
    const Formula rho = s0->characteristic_set(k, cand);
    if (!valid(l, Formula::implies(rho, psi), budget)) continue;
    if (!valid(l, Formula::implies(phi, rho), budget)) throw Error("candidate interpolant is not implied by the antecedent");
    r.interpolant = rho;
    return r;
  }
  return r;
}

}  // namespace cml
