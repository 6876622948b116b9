#include "cml/repro.hpp"

#include <chrono>
#include <random>

#include "cml/errors.hpp"
#include "cml/interpolation.hpp"
#include "cml/lifting.hpp"
#include "cml/logic.hpp"
#include "cml/monoid.hpp"
#include "cml/onestep.hpp"
#include "cml/preservation.hpp"
#include "cml/satisfiability.hpp"

namespace cml {

namespace {

const char* pass(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string show_pair(const Functor& F, const FinSet& x, const FinSet& y, std::pair<Code, Code> p) {
  return "u=" + F.render(p.first, x) + ", v=" + F.render(p.second, y);
}

CriterionResult c1(SpaceBudget) {
  CriterionResult r{1, "F32 counterexample on f = g: {a,b} -> {b}"};
  TripleFunctor F;
  const FinSet x({"a", "b"}), z({"b"});
  const FinFun f(x, z, {0, 0});
  const Code u = F.parse_element("(b,b,a)", x), v = F.parse_element("(a,b,b)", x);
  const auto q = check_weak_lift(F, f, f, kDefaultElementBudget, std::make_pair(u, v));
  const auto all = check_weak_lift(F, f, f);
  const bool exact = !q.lifts && q.witness && q.witness->first == u && q.witness->second == v;
  bool listed = false;
  for (const auto& p : all.failures) listed = listed || p == std::make_pair(u, v);
  r.status = pass(exact && !all.lifts);
  r.detail = exact ? "FAILS with witness " + show_pair(F, x, x, *q.witness) : "queried pair lifts";
  r.data = {{"verdict", q.lifts ? "LIFTS" : "FAILS"},
            {"witness", {F.render(u, x), F.render(v, x)}},
            {"compatible_pairs", all.compatible_pairs},
            {"failing_pairs", all.failing_pairs},
            {"first_failure_in_order", all.witness ? show_pair(F, x, x, *all.witness) : ""},
            {"witness_among_listed_failures", listed}};
  return r;
}

CriterionResult c2(SpaceBudget) {
  CriterionResult r{2, "M preserves surjective weak pullbacks up to carrier 2"};
  NeighbourhoodFunctor M(NeighbourhoodFunctor::Variant::Monotone);
  const auto s = sweep_preservation(M, PreservationProperty::SWPB, 2);
  std::size_t specialized = 0;
  for (const auto& c : s.cospans) specialized += c.verdict.specialized_used ? 1 : 0;
  r.status = pass(s.fails == 0 && s.skipped == 0 && s.specialized_disagreements == 0 && specialized == s.cospans.size());
  r.detail = std::to_string(s.lifts) + " cospans lift, " + std::to_string(s.fails) + " fail, " +
             std::to_string(s.specialized_disagreements) + " Up-construction disagreements";
  r.data = {{"cospans", s.cospans.size()},     {"lifts", s.lifts},
            {"fails", s.fails},                {"skipped", s.skipped},
            {"specialized_checked", specialized}, {"specialized_disagreements", s.specialized_disagreements}};
  return r;
}

CriterionResult c3(SpaceBudget) {
  CriterionResult r{3, "N on the 3-3-2 cospan: definite, deterministic, cross-validated"};
  NeighbourhoodFunctor N(NeighbourhoodFunctor::Variant::Full);
  const FinSet x({"a1", "a2", "a3"}), y({"b1", "b2", "b3"}), z({"c1", "c2"});
  const FinFun f(x, z, {0, 0, 1}), g(y, z, {0, 1, 1});
  const auto first = check_weak_lift(N, f, g);
  const auto second = check_weak_lift(N, f, g);
  const auto constraint = neighbourhood_constraint_analysis(f, g);
  const bool stable = first.lifts == second.lifts && first.witness == second.witness &&
                      first.compatible_pairs == second.compatible_pairs && first.failing_pairs == second.failing_pairs;
  const bool agree = constraint.lifts == first.lifts && constraint.witness == first.witness &&
                     constraint.compatible_pairs == first.compatible_pairs;
  const auto pb = pullback(f, g);
  if (!stable || !agree)
    r.status = "FAIL";
  else
    r.status = first.lifts ? "DISCREPANCY" : "PASS";
  r.detail = std::string(first.lifts ? "LIFTS" : "FAILS") + " over " + std::to_string(first.compatible_pairs) +
             " compatible pairs; stable=" + (stable ? "yes" : "no") + ", constraint analysis " +
             (agree ? "agrees" : "disagrees");
  if (first.lifts) r.detail += "; the claimed failure is not reproduced";
  r.data = {{"verdict", first.lifts ? "LIFTS" : "FAILS"},
            {"pullback_size", pb.carrier.size()},
            {"candidates_per_pair", std::uint64_t{1} << (std::size_t{1} << pb.carrier.size())},
            {"compatible_pairs", first.compatible_pairs},
            {"failing_pairs", first.failing_pairs},
            {"stable", stable},
            {"constraint_analysis", constraint.lifts ? "LIFTS" : "FAILS"},
            {"constraint_agrees", agree}};
  if (first.witness) r.data["witness"] = show_pair(N, x, y, *first.witness);
  return r;
}

CriterionResult c4(SpaceBudget) {
  CriterionResult r{4, "M compatibility: images equal iff compatible"};
  NeighbourhoodFunctor M(NeighbourhoodFunctor::Variant::Monotone);
  std::size_t cospans = 0, pairs = 0, mismatches = 0, up_checked = 0, up_failures = 0;
  for (std::size_t nz = 1; nz <= 2; ++nz)
    for (std::size_t nx = 1; nx <= 2; ++nx)
      for (std::size_t ny = 1; ny <= 2; ++ny)
        for_each_function(nx, nz, [&](const std::vector<std::size_t>& ft) {
          const FinFun f(nx, nz, ft);
          if (!f.surjective()) return;
          for_each_function(ny, nz, [&](const std::vector<std::size_t>& gt) {
            const FinFun g(ny, nz, gt);
            if (!g.surjective()) return;
            ++cospans;
            const auto pb = pullback(f, g);
            for (auto a1 : M.tabulate(nx)->elements)
              for (auto a2 : M.tabulate(ny)->elements) {
                ++pairs;
                const auto v = compatibility_check(M, a1, a2, f, g);
                if (v.compatible != v.images_equal) ++mismatches;
                if (!v.compatible) continue;
                ++up_checked;
                const Code beta = up_construction(f, g, a1, a2);
                if (M.act(pb.pi1, beta) != a1 || M.act(pb.pi2, beta) != a2) ++up_failures;
              }
          });
        });
  r.status = pass(mismatches == 0 && up_failures == 0);
  r.detail = std::to_string(pairs) + " pairs over " + std::to_string(cospans) + " surjective cospans, " +
             std::to_string(mismatches) + " mismatches";
  r.data = {{"cospans", cospans},
            {"pairs", pairs},
            {"mismatches", mismatches},
            {"up_construction_checked", up_checked},
            {"up_construction_failures", up_failures}};
  return r;
}

CriterionResult c5(SpaceBudget) {
  CriterionResult r{5, "Monoid suite"};
  const auto z2 = Monoid::cyclic(2), z3 = Monoid::cyclic(3);
  const auto r2 = check_refinable(z2, 3), r3 = check_refinable(z3, 3);
  const auto pos = check_positive(z2);
  const bool witness11 = pos.witness && pos.witness->first == 1 && pos.witness->second == 1;
  Json failures = Json::array();
  const auto monoids = commutative_monoids(4);
  for (const auto& m : monoids) {
    const auto v = check_refinable(m, 3);
    if (!v.refinable)
      failures.push_back({{"monoid", monoid_to_json(m)}, {"row_sums", v.a}, {"col_sums", v.b}});
  }
  const auto ind = monotone_indistinguishable(z2, 1, 2);
  r.status = pass(r2.refinable && r3.refinable && !pos.positive && witness11 && ind.indistinguishable);
  r.detail = "Z/2, Z/3 refinable up to 3; Z/2 not positive (1+1=0); " + std::to_string(failures.size()) + " of " +
             std::to_string(monoids.size()) + " monoids of size <= 4 not refinable up to 3; Z/2 a=1 " +
             (ind.indistinguishable ? "INDISTINGUISHABLE" : "SEPARATED");
  r.data = {{"Z/2_refinable_up_to_3", r2.refinable},
            {"Z/3_refinable_up_to_3", r3.refinable},
            {"Z/2_positive", pos.positive},
            {"Z/2_positivity_witness", pos.witness ? Json{z2.label(pos.witness->first), z2.label(pos.witness->second)} : Json()},
            {"monoids_size_le_4", monoids.size()},
            {"not_refinable_up_to_3", failures},
            {"indistinguishable", ind.indistinguishable},
            {"closed_sets_checked", ind.closed_sets_checked}};
  return r;
}

CriterionResult c6(SpaceBudget) {
  CriterionResult r{6, "Separation and MSS iso"};
  struct Case {
    std::string logic;
    std::size_t max;
  };
  const std::vector<Case> cases{{"K", 4}, {"N", 3}, {"M", 3}, {"W:Z/2", 3}};
  bool ok = true;
  Json rows = Json::array();
  for (const auto& c : cases) {
    auto l = logic_by_name(c.logic);
    const auto sep = check_separating(l->liftings, *l->functor, c.max);
    Json mss = Json::array();
    bool iso = true;
    for (std::size_t n = 0; n <= 2; ++n) {
      const auto m = check_mss_iso(*l, n);
      iso = iso && m.consistent() && m.injective;
      mss.push_back({{"carrier", n}, {"elements", m.elements}, {"theories", m.theories}, {"injective", m.injective},
                     {"surjective", m.surjective}});
    }
    ok = ok && sep.separating && iso;
    rows.push_back({{"logic", c.logic}, {"max_carrier", c.max}, {"separating", sep.separating}, {"mss", mss}});
  }
  r.status = pass(ok);
  r.detail = ok ? "all separating, MSS iso at carriers <= 2" : "a separation or MSS check failed";
  r.data = {{"cases", rows}};
  return r;
}

CriterionResult c7(SpaceBudget) {
  CriterionResult r{7, "One-step interpolation"};
  bool ok = true;
  Json holds = Json::array();
  for (std::string name : {"K", "KD", "N", "M", "W:Z/2"}) {
    const auto rep = check_onestep_interpolation(*logic_by_name(name), 3);
    ok = ok && rep.holds && rep.skipped.empty();
    holds.push_back({{"logic", name}, {"holds", rep.holds}, {"pairs", rep.pairs_checked}, {"skipped", rep.skipped.size()}});
  }
  auto nv = logic_by_name("NVEE");
  const auto ctx = valuation_context({"p", "q", "r"});
  const Mask pm = ctx.leaf("p");
  const auto a0 = Subalgebra::generated(ctx.size(), std::vector<Mask>{pm});
  const auto inst = onestep_interpolation_instance(*nv, parse("~[](p|q)", nv->sig), parse("[](~p|r)", nv->sig), ctx, a0);
  const bool nvee_fails = inst.implication_valid && !inst.interpolant_exists;
  ok = ok && nvee_fails;
  std::size_t compared = 0, mismatches = 0;
  for (const auto& name : registered_logics()) {
    auto l = logic_by_name(name);
    for (std::size_t n = 1; n <= 2; ++n)
      for (const auto& [a1, a2] : canonical_partition_pairs(n)) {
        if (interpolable_violation(a1, a2)) continue;
        ++compared;
        const bool atom_ok = !atom_criterion(*l, n, a1, a2).has_value();
        if (atom_ok != literal_interpolation(*l, n, a1, a2).holds) ++mismatches;
      }
  }
  ok = ok && mismatches == 0;
  r.status = pass(ok);
  r.detail = std::string("HOLDS at carriers <= 3 for K, KD, N, M, W:Z/2; NVEE instance ") +
             (nvee_fails ? "FAILS" : "does not fail") + "; atom vs literal mismatches: " + std::to_string(mismatches);
  r.data = {{"holds", holds},
            {"nvee_instance", {{"implication_valid", inst.implication_valid},
                               {"interpolant_exists", inst.interpolant_exists},
                               {"blocking_atom", inst.blocking_atom}}},
            {"literal_agreement", {{"pairs", compared}, {"mismatches", mismatches}}}};
  return r;
}

CriterionResult c8(SpaceBudget) {
  CriterionResult r{8, "Lemma-level invariants at carriers <= 3"};
  bool ok = true;
  Json rows = Json::array();
  for (const auto& name : registered_logics()) {
    const auto& l = *logic_by_name(name);
    const auto a = check_can_mod(l, 3), b = check_restriction(l, 3), c = check_invariance(l, 3);
    ok = ok && a.ok() && b.ok() && c.ok();
    auto js = [](const LemmaReport& x) {
      return Json{{"checked", x.checked}, {"failures", x.failures}, {"skipped", x.skipped}, {"first_failure", x.first_failure}};
    };
    rows.push_back({{"logic", name}, {"can_mod", js(a)}, {"restriction", js(b)}, {"invariance", js(c)}});
  }
  r.status = pass(ok);
  r.detail = ok ? "can-mod, restriction and invariance hold for every logic" : "a lemma check failed";
  r.data = {{"logics", rows}};
  return r;
}

struct UniformSuite {
  std::size_t phis = 0, oracle_mismatches = 0, verify_failures = 0;
  bool exhaustive = false, oracle = false;
  std::vector<std::string> v2;
};

UniformSuite uniform_suite(const LogicPtr& l, SpaceBudget budget, std::size_t random_samples) {
  UniformSuite u;
  const std::vector<std::string> v1{"p", "q"}, v0{"p"};
  auto s1 = theory_space(l, v1, 1, budget);
  auto s0 = theory_space(l, v0, 1, budget);
  const auto p = s1->project_vars(*s0, 1);
  std::vector<Formula> pre(s0->size(1), Formula::falsum());
  std::vector<bool> found(s0->size(1), false);
  for (std::size_t t = 0; t < p.size(); ++t)
    if (!found[p[t]]) {
      found[p[t]] = true;
      pre[p[t]] = s1->characteristic(1, t);
    }
  std::vector<Formula> phis;
  std::mt19937_64 rng(20240917);
  auto from_mask = [&](auto bit) {
    std::vector<Formula> terms;
    for (std::size_t i = 0; i < pre.size(); ++i)
      if (bit(i)) terms.push_back(pre[i]);
    phis.push_back(Formula::disj_all(terms));
  };
  u.exhaustive = s0->size(1) <= 8;
  if (u.exhaustive) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s0->size(1)); ++mask)
      from_mask([&](std::size_t i) { return has(mask, i); });
  } else {
    for (std::size_t k = 0; k < 64; ++k) {
      const auto r = rng();
      from_mask([&](std::size_t i) { return ((r >> (i % 64)) & 1) != 0; });
    }
  }
  for (std::size_t i = 0; i < random_samples; ++i) {
    Bits s(s1->size(1));
    for (std::size_t t = 0; t < s.size(); ++t)
      if (rng() & 1) s.set(t);
    phis.push_back(s1->characteristic_set(1, s));
  }
  u.oracle = s0->size(1) <= 20;
  u.v2 = {"p", "r"};
  try {
    theory_space(l, {"p", "q", "r"}, 1, budget);
  } catch (const BudgetExceeded&) {
    u.v2 = {"p"};
  }
  for (const auto& phi : phis) {
    ++u.phis;
    const auto a = uniform_interpolant(l, phi, v0, budget);
    if (u.oracle) {
      const auto b = uniform_interpolant_oracle(l, phi, v0, budget);
      if (a.denotation != b.denotation) ++u.oracle_mismatches;
    }
    if (!verify_uniform(l, phi, v0, a.interpolant, 1, u.v2, budget).passed) ++u.verify_failures;
  }
  return u;
}

CriterionResult c9(SpaceBudget budget) {
  CriterionResult r{9, "Uniform interpolation by projection, K and W:Z/2"};
  bool ok = true;
  Json rows = Json::array();
  for (std::string name : {"K", "W:Z/2"}) {
    const auto u = uniform_suite(logic_by_name(name), budget, 32);
    ok = ok && u.exhaustive && u.oracle && u.oracle_mismatches == 0 && u.verify_failures == 0 && u.v2.size() == 2;
    rows.push_back({{"logic", name},
                    {"V1", {"p", "q"}},
                    {"V0", {"p"}},
                    {"V2", u.v2},
                    {"formulas", u.phis},
                    {"oracle_mismatches", u.oracle_mismatches},
                    {"verify_failures", u.verify_failures}});
  }
  r.status = pass(ok);
  r.detail = ok ? "projection = definitional oracle and verified against every rank-1 psi over {p,r}"
                : "a mismatch or verification failure occurred";
  r.data = {{"logics", rows}};
  return r;
}

CriterionResult c10(SpaceBudget budget) {
  CriterionResult r{10, "NVEE Craig interpolation fails"};
  auto l = logic_by_name("NVEE");
  const Formula phi = parse("~[](p|q)", l->sig), psi = parse("[](~p|r)", l->sig);
  const bool implication = valid(l, Formula::implies(phi, psi), budget);
  CraigResult c;
  if (implication) c = craig_search(l, phi, psi, 1, budget);
  r.status = pass(implication && !c.interpolant);
  r.detail = std::string("implication ") + (implication ? "valid" : "not valid") + "; interpolant over {p} at rank 1: " +
             (c.interpolant ? print(*c.interpolant) : "NONE");
  r.data = {{"implication_valid", implication},
            {"shared", c.shared},
            {"rank", c.rank},
            {"least_candidate_size", c.candidates},
            {"method", c.method},
            {"interpolant", c.interpolant ? Json(print(*c.interpolant)) : Json()}};
  return r;
}

std::vector<Formula> sample_formulas(const Logic& l) {
  const auto p = Formula::var("p"), q = Formula::var("q");
  std::vector<Formula> out;
  for (const auto& op : l.sig.operators()) {
    auto m = [&](Formula a) { return Formula::modal(op.name, std::vector<Formula>(op.arity, a)); };
    out.push_back(Formula::conj(m(p), m(Formula::neg(p))));
    out.push_back(Formula::conj(m(p), Formula::neg(m(p))));
    out.push_back(Formula::neg(m(Formula::truth())));
    out.push_back(Formula::conj(m(p), Formula::neg(m(Formula::disj(p, q)))));
    out.push_back(Formula::conj_all({p, m(Formula::neg(p)), Formula::neg(m(Formula::falsum()))}));
    out.push_back(Formula::conj(m(m(p)), Formula::neg(m(p))));
  }
  return out;
}

CriterionResult c11(SpaceBudget budget) {
  CriterionResult r{11, "Model round-trip and brute-force agreement"};
  struct Case {
    std::string logic;
    std::vector<std::string> vars;
    std::size_t depth;
  };
  const std::vector<Case> cases{{"K", {"p"}, 1},      {"K", {"p"}, 2},      {"W:Z/2", {"p"}, 1}, {"W:Z/2", {"p"}, 2},
                                {"N", {"p"}, 1},      {"N", {"p", "q"}, 1}, {"M", {"p"}, 1},     {"M", {"p", "q"}, 1}};
  SpaceBudget big = budget;
  big.stratum = std::max<std::uint64_t>(budget.stratum, std::uint64_t{1} << 18);
  bool ok = true;
  Json spaces = Json::array();
  for (const auto& c : cases) {
    auto l = logic_by_name(c.logic);
    auto s = std::make_shared<TheorySpace>(l, c.vars, c.depth, big);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < s->size(c.depth); ++t) {
      const Formula chi = s->characteristic(c.depth, t);
      const auto ex = s->extract_model(c.depth, t);
      if (!eval_model(*l, ex.model, ex.root, chi)) ++failures;
    }
    ok = ok && failures == 0;
    spaces.push_back({{"logic", c.logic}, {"vars", c.vars}, {"depth", c.depth}, {"theories", s->size(c.depth)},
                      {"failures", failures}});
  }
  std::size_t formulas = 0, brute_found = 0, disagreements = 0;
  for (const auto& name : registered_logics()) {
    auto l = logic_by_name(name);
    for (const auto& phi : sample_formulas(*l)) {
      SatVerdict v;
      try {
        v = sat(l, phi, budget);
      } catch (const BudgetExceeded&) {
        continue;
      }
      ++formulas;
      const auto b = brute_model_search(*l, phi, 4, 2'000'000);
      if (b.model) {
        ++brute_found;
        if (!v.sat) ++disagreements;
      }
      if (v.sat && v.method == "theory-space" && !v.round_trip) ++disagreements;
    }
  }
  ok = ok && disagreements == 0;
  r.status = pass(ok);
  r.detail = "round-trip over " + std::to_string(spaces.size()) + " spaces; " + std::to_string(brute_found) +
             " brute-force models, " + std::to_string(disagreements) + " disagreements";
  r.data = {{"spaces", spaces},
            {"sat_formulas", formulas},
            {"brute_models", brute_found},
            {"disagreements", disagreements}};
  return r;
}

CriterionResult c12(SpaceBudget budget) {
  CriterionResult r{12, "Implication matrix consistency"};
  SpaceBudget big = budget;
  big.stratum = std::max<std::uint64_t>(budget.stratum, std::uint64_t{1} << 18);
  bool ok = true;
  Json rows = Json::array();
  for (const auto& name : registered_logics()) {
    auto l = logic_by_name(name);
    const auto& F = *l->functor;
    const bool separating = check_separating(l->liftings, F, 3).separating;
    bool monotone = true;
    for (const auto& lift : l->liftings) monotone = monotone && check_monotone(lift, F, 3).holds;
    const auto sweep = sweep_preservation(F, PreservationProperty::SWPB, 2);
    const bool swpb = sweep.fails == 0 && sweep.skipped == 0;
    const auto osi2 = check_onestep_interpolation(*l, 2);
    const auto osi = check_onestep_interpolation(*l, 4);
    Json violated = Json::array();
    Json cospan = Json();
    if (!osi.holds && osi.violation) {
      // the interpolation problem sits over S(A1) -> S(A1 ∩ A2) <- S(A2)
      const auto& v = *osi.violation;
      const auto a0 = meet(v.a1, v.a2);
      const FinFun f = canonical_projection(v.a1, a0), g = canonical_projection(v.a2, a0);
      const auto lift = check_weak_lift(F, f, g);
      const FinSet x(v.carrier);
      cospan = {{"A1", partition_to_json(v.a1, x)},
                {"A2", partition_to_json(v.a2, x)},
                {"sizes", {f.dom().size(), g.dom().size(), f.cod().size()}},
                {"weak_lift", lift.lifts ? "LIFTS" : "FAILS"}};
      if (separating && lift.lifts) violated.push_back("separating & SWPB => one-step interpolation");
    }
    Json ui = Json();
    bool ui_ok = true;
    if (osi.holds) {
      const auto u = uniform_suite(l, big, 0);
      ui_ok = u.oracle_mismatches == 0 && u.verify_failures == 0;
      ui = {{"V2", u.v2},
            {"formulas", u.phis},
            {"exhaustive", u.exhaustive},
            {"verify_failures", u.verify_failures},
            {"oracle_checked", u.oracle},
            {"oracle_mismatches", u.oracle_mismatches}};
    }
    if (osi.holds && !ui_ok) violated.push_back("one-step interpolation => uniform interpolation");
    if (monotone && separating && osi.holds && sweep.fails > 0)
      violated.push_back("monotone & separating & one-step interpolation => SWPB");
    ok = ok && violated.empty();
    rows.push_back({{"logic", name},
                    {"separating", separating},
                    {"monotone", monotone},
                    {"swpb_at_2", swpb},
                    {"swpb_fails", sweep.fails},
                    {"onestep_interpolation_at_2", osi2.holds},
                    {"onestep_interpolation_at_4", osi.holds},
                    {"violation_cospan", cospan},
                    {"uniform", ui},
                    {"violated_edges", violated}});
  }
  r.status = pass(ok);
  r.detail = ok ? "no violated edge" : "an edge of the implication matrix is violated";
  r.data = {{"onestep_scale", 4}, {"swpb_scale", 2}, {"logics", rows}};
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, SpaceBudget budget) {
  using Fn = CriterionResult (*)(SpaceBudget);
  static const Fn table[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  if (id < 1 || id > kCriteria) throw PreconditionError("no criterion " + std::to_string(id));
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](budget);
  } catch (const std::exception& e) {
    r.id = id;
    r.status = "FAIL";
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json criterion_to_json(const CriterionResult& r) {
  return {{"criterion", r.id}, {"title", r.title}, {"status", r.status}, {"detail", r.detail}, {"data", r.data}};
}

}  // namespace cml
