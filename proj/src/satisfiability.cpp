#include "cml/satisfiability.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cml/errors.hpp"
#include "cml/onestep.hpp"

namespace cml {

namespace {

Formula fix_outer(const Formula& f, const std::vector<std::string>& vars, std::size_t u) {
  switch (f.kind()) {
    case Kind::Var: {
      auto it = std::find(vars.begin(), vars.end(), f.name());
      return has(u, static_cast<std::size_t>(it - vars.begin())) ? Formula::truth() : Formula::falsum();
    }
    case Kind::Falsum:
    case Kind::Modal:
      return f;
    case Kind::Neg:
      return Formula::neg(fix_outer(f.child(0), vars, u));
    case Kind::And:
      return Formula::conj(fix_outer(f.child(0), vars, u), fix_outer(f.child(1), vars, u));
  }
  return f;
}

SatVerdict symbolic_sat(const Logic& l, const Formula& phi, SatVerdict v) {
  v.method = "symbolic";
  const auto ctx = valuation_context(v.vars);
  for (std::size_t u = 0; u < (std::size_t{1} << v.vars.size()); ++u) {
    std::string w;
    if (symbolic_onestep_sat(l, fix_outer(phi, v.vars, u), ctx, &w)) {
      v.sat = true;
      v.symbolic_witness = "root " + ctx.carrier.label(u) + "; " + w;
      return v;
    }
  }
  return v;
}

}  // namespace

std::vector<std::string> joint_variables(const std::vector<Formula>& fs) {
  std::set<std::string> all;
  for (const auto& f : fs) {
    auto vs = variables(f);
    all.insert(vs.begin(), vs.end());
  }
  return {all.begin(), all.end()};
}

SatVerdict sat(const LogicPtr& l, const Formula& phi, SpaceBudget budget) {
  check_signature(phi, l->sig);
  SatVerdict v;
  v.vars = joint_variables({phi});
  v.rank = rank(phi);
  SpacePtr space;
  try {
    space = theory_space(l, v.vars, v.rank, budget);
  } catch (const BudgetExceeded&) {
    if (!l->literal_oracle || v.rank > 1 || v.vars.size() > 6) throw;
    return symbolic_sat(*l, phi, v);
  }
  v.method = "theory-space";
  v.space_size = space->size(v.rank);
  const Bits d = space->denote(phi, v.rank);
  v.theories = d.count();
  v.sat = v.theories > 0;
  if (v.sat) {
    const std::size_t t = d.find_first();
    auto ex = space->extract_model(v.rank, t);
    if (ex.model.states.size() <= 63) {
      check_model(*l, ex.model);
      v.round_trip = eval_model(*l, ex.model, ex.root, phi);
      if (!v.round_trip) throw Error("extracted model does not satisfy the formula");
    }
    v.model = std::move(ex.model);
    v.root = ex.root;
  }
  return v;
}

SatVerdict refute(const LogicPtr& l, const Formula& phi, SpaceBudget budget) {
  return sat(l, Formula::neg(phi), budget);
}

bool valid(const LogicPtr& l, const Formula& phi, SpaceBudget budget) { return !refute(l, phi, budget).sat; }

bool equivalent(const LogicPtr& l, const Formula& phi, const Formula& psi, SpaceBudget budget) {
  check_signature(phi, l->sig);
  check_signature(psi, l->sig);
  const auto vars = joint_variables({phi, psi});
  const std::size_t n = std::max(rank(phi), rank(psi));
  try {
    auto space = theory_space(l, vars, n, budget);
    return space->denote(phi, n) == space->denote(psi, n);
  } catch (const BudgetExceeded&) {
    if (!l->literal_oracle || n > 1) throw;
    return valid(l, Formula::iff(phi, psi), budget);
  }
}

}  // namespace cml
