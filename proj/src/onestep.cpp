#include "cml/onestep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cml/errors.hpp"

namespace cml {

OneStepContext subset_context(const FinSet& x) {
  OneStepContext c;
  c.carrier = x;
  c.leaf = [x](const std::string& name) -> Mask {
    if (!is_set_literal(name)) throw PreconditionError("one-step leaf '" + name + "' is not a subset literal");
    return x.parse_subset(name);
  };
  c.formula = [x](Mask m) { return Formula::var(x.render(m)); };
  return c;
}

OneStepContext valuation_context(const std::vector<std::string>& vars) {
  const std::size_t k = vars.size();
  if (k > 6) throw BudgetExceeded("valuation carrier 2^|V|", std::uint64_t{1} << k, 64);
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < n; ++u) {
    std::string s;
    for (std::size_t i = 0; i < k; ++i) s += (has(u, i) ? "+" : "-") + vars[i];
    labels.push_back(k == 0 ? "*" : s);
  }
  std::vector<Mask> var_mask(k, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t i = 0; i < k; ++i)
      if (has(u, i)) var_mask[i] |= Mask{1} << u;
  OneStepContext c;
  c.carrier = FinSet(labels);
  c.leaf = [vars, var_mask](const std::string& name) -> Mask {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw PreconditionError("variable '" + name + "' outside the valuation carrier");
    return var_mask[static_cast<std::size_t>(it - vars.begin())];
  };
  c.formula = [vars, var_mask, n](Mask m) -> Formula {
    const Mask all = full_mask(n);
    if (m == 0) return Formula::falsum();
    if (m == all) return Formula::truth();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (m == var_mask[i]) return Formula::var(vars[i]);
      if (m == (all & ~var_mask[i])) return Formula::neg(Formula::var(vars[i]));
    }
    std::vector<Formula> terms;
    for (std::size_t u = 0; u < n; ++u) {
      if (!has(m, u)) continue;
      std::vector<Formula> lits;
      for (std::size_t i = 0; i < vars.size(); ++i)
        lits.push_back(has(u, i) ? Formula::var(vars[i]) : Formula::neg(Formula::var(vars[i])));
      terms.push_back(Formula::conj_all(lits));
    }
    return Formula::disj_all(terms);
  };
  return c;
}

namespace {

bool has_modal(const Formula& f) {
  if (f.kind() == Kind::Modal) return true;
  for (const auto& c : f.children())
    if (has_modal(c)) return true;
  return false;
}

void collect_atoms(const Formula& f, const Logic& l, const OneStepContext& ctx, std::map<const void*, ModalAtom>& out) {
  if (f.kind() == Kind::Modal) {
    if (out.count(f.id())) return;
    ModalAtom a{l.op_index(f.name()), {}};
    for (const auto& c : f.children()) a.args.push_back(eval_prop(c, ctx.leaf, ctx.size()));
    out.emplace(f.id(), std::move(a));
    return;
  }
  for (const auto& c : f.children()) collect_atoms(c, l, ctx, out);
}

bool eval_outer(const Formula& f, const std::function<bool(const Formula&)>& atom) {
  switch (f.kind()) {
    case Kind::Falsum:
      return false;
    case Kind::Neg:
      return !eval_outer(f.child(0), atom);
    case Kind::And:
      return eval_outer(f.child(0), atom) && eval_outer(f.child(1), atom);
    case Kind::Modal:
      return atom(f);
    case Kind::Var:
      break;
  }
  throw PreconditionError("propositional leaf outside a modality in a one-step formula");
}

Formula literal(const Logic& l, const ModalAtom& a, bool positive, const OneStepContext& ctx) {
  std::vector<Formula> args;
  for (auto m : a.args) args.push_back(ctx.formula(m));
  Formula f = Formula::modal(l.sig.at(a.op).name, std::move(args));
  return positive ? f : Formula::neg(f);
}

std::vector<ModalAtom> generators_over(const Logic& l, const std::vector<Mask>& members) {
  std::vector<ModalAtom> gens;
  for (std::size_t op = 0; op < l.sig.size(); ++op) {
    const std::size_t ar = l.sig.at(op).arity;
    std::vector<std::size_t> idx(ar, 0);
    while (true) {
      ModalAtom a{op, {}};
      for (auto i : idx) a.args.push_back(members[i]);
      gens.push_back(std::move(a));
      std::size_t i = ar;
      bool done = true;
      while (i > 0) {
        --i;
        if (++idx[i] < members.size()) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (done) break;
    }
  }
  return gens;
}

Bits row_of(const Logic& l, std::size_t n, Code e, const std::vector<ModalAtom>& gens) {
  Bits row(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (l.liftings[gens[i].op].holds(n, e, gens[i].args)) row.set(i);
  return row;
}

std::unordered_set<Bits, BitsHash> realized_rows(const Logic& l, std::size_t n, const std::vector<ModalAtom>& gens,
                                                 std::uint64_t budget) {
  std::unordered_set<Bits, BitsHash> rows;
  for (auto e : l.functor->tabulate(n, budget)->elements) rows.insert(row_of(l, n, e, gens));
  return rows;
}

std::vector<ModalAtom> all_generators(const Logic& l, std::size_t n) {
  std::vector<Mask> all;
  for (Mask m = 0; m < (Mask{1} << n); ++m) all.push_back(m);
  return generators_over(l, all);
}

}  // namespace

void check_onestep_shape(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
      throw PreconditionError("one-step formulas have no propositional leaves outside modalities");
    case Kind::Falsum:
      return;
    case Kind::Neg:
    case Kind::And:
      for (const auto& c : f.children()) check_onestep_shape(c);
      return;
    case Kind::Modal:
      for (const auto& c : f.children())
        if (has_modal(c)) throw PreconditionError("one-step formulas do not nest modalities");
      return;
  }
}

Mask eval_prop(const Formula& f, const std::function<Mask(const std::string&)>& leaf, std::size_t n) {
  switch (f.kind()) {
    case Kind::Var:
      return leaf(f.name());
    case Kind::Falsum:
      return 0;
    case Kind::Neg:
      return full_mask(n) & ~eval_prop(f.child(0), leaf, n);
    case Kind::And:
      return eval_prop(f.child(0), leaf, n) & eval_prop(f.child(1), leaf, n);
    case Kind::Modal:
      break;
  }
  throw PreconditionError("modality inside a propositional argument");
}

Bits eval_onestep(const Logic& l, const Formula& psi, const OneStepContext& ctx, std::uint64_t budget) {
  check_onestep_shape(psi);
  auto tab = l.functor->tabulate(ctx.size(), budget);
  std::function<Bits(const Formula&)> go = [&](const Formula& f) -> Bits {
    switch (f.kind()) {
      case Kind::Falsum:
        return Bits(tab->size());
      case Kind::Neg:
        return ~go(f.child(0));
      case Kind::And:
        return go(f.child(0)) & go(f.child(1));
      case Kind::Modal: {
        std::vector<Mask> args;
        for (const auto& c : f.children()) args.push_back(eval_prop(c, ctx.leaf, ctx.size()));
        return extension(l.lifting(f.name()), *tab, args);
      }
      case Kind::Var:
        break;
    }
    throw PreconditionError("propositional leaf outside a modality");
  };
  return go(psi);
}

bool symbolic_onestep_sat(const Logic& l, const Formula& psi, const OneStepContext& ctx, std::string* witness) {
  if (!l.literal_oracle) throw PreconditionError("logic " + l.name + " has no symbolic one-step oracle");
  check_onestep_shape(psi);
  std::map<const void*, ModalAtom> by_node;
  collect_atoms(psi, l, ctx, by_node);
  std::vector<Mask> distinct;
  std::map<const void*, std::size_t> index;
  for (auto& [id, a] : by_node) {
    auto it = std::find(distinct.begin(), distinct.end(), a.args[0]);
    if (it == distinct.end()) {
      index[id] = distinct.size();
      distinct.push_back(a.args[0]);
    } else {
      index[id] = static_cast<std::size_t>(it - distinct.begin());
    }
  }
  const std::size_t k = distinct.size();
  if (k > 24) throw BudgetExceeded("symbolic one-step atoms", k, 24);
  for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << k); ++assign) {
    if (!eval_outer(psi, [&](const Formula& m) { return has(assign, index.at(m.id())); })) continue;
    std::vector<Mask> pos, neg;
    for (std::size_t i = 0; i < k; ++i) (has(assign, i) ? pos : neg).push_back(distinct[i]);
    if (!l.literal_oracle(ctx.size(), pos, neg)) continue;
    if (witness) {
      std::string w = "alpha contains";
      for (auto p : pos) w += " " + ctx.carrier.render(p);
      w += "; omits";
      for (auto q : neg) w += " " + ctx.carrier.render(q);
      *witness = w;
    }
    return true;
  }
  return false;
}

OneStepSatVerdict onestep_sat(const Logic& l, const Formula& psi, std::uint64_t budget) {
  const auto vs = variables(psi);
  const std::vector<std::string> vars(vs.begin(), vs.end());
  const auto ctx = valuation_context(vars);
  OneStepSatVerdict v;
  auto symbolic = [&] {
    v.method = "symbolic";
    v.sat = symbolic_onestep_sat(l, psi, ctx, &v.witness_text);
    return v;
  };
  if (l.literal_oracle && ctx.size() > l.functor->max_carrier()) return symbolic();
  Bits ext;
  try {
    ext = eval_onestep(l, psi, ctx, budget);
  } catch (const BudgetExceeded&) {
    if (l.literal_oracle) return symbolic();
    throw;
  }
  v.method = "tabulated";
  auto first = ext.find_first();
  v.sat = first != Bits::npos;
  if (v.sat) {
    auto tab = l.functor->tabulate(ctx.size(), budget);
    v.witness = tab->elements[first];
    v.witness_text = l.functor->render(*v.witness, ctx.carrier);
  }
  return v;
}

Bits ElementAlgebra::closure(const Bits& s) const {
  std::vector<bool> hit(atom_count, false);
  for_each_bit(s, [&](std::size_t i) { hit[atom_of[i]] = true; });
  Bits out(tab->size());
  for (std::size_t i = 0; i < tab->size(); ++i)
    if (hit[atom_of[i]]) out.set(i);
  return out;
}

Bits ElementAlgebra::atom(std::size_t a) const {
  Bits out(tab->size());
  for (std::size_t i = 0; i < tab->size(); ++i)
    if (atom_of[i] == a) out.set(i);
  return out;
}

Formula ElementAlgebra::atom_formula(std::size_t a, const Logic& l, const OneStepContext& ctx) const {
  const Code e = tab->elements[representative[a]];
  std::vector<Formula> lits;
  for (const auto& g : generators) lits.push_back(literal(l, g, l.liftings[g.op].holds(tab->carrier, e, g.args), ctx));
  return Formula::conj_all(lits);
}

ElementAlgebra generated_algebra(const Logic& l, std::size_t n, const Subalgebra& a, std::uint64_t budget) {
  if (a.carrier() != n) throw PreconditionError("subalgebra carrier differs from the requested carrier");
  ElementAlgebra g;
  g.tab = l.functor->tabulate(n, budget);
  g.generators = generators_over(l, a.members());
  std::unordered_map<Bits, std::size_t, BitsHash> ids;
  g.atom_of.resize(g.tab->size());
  for (std::size_t i = 0; i < g.tab->size(); ++i) {
    auto [it, inserted] = ids.emplace(row_of(l, n, g.tab->elements[i], g.generators), ids.size());
    if (inserted) g.representative.push_back(i);
    g.atom_of[i] = it->second;
  }
  g.atom_count = ids.size();
  return g;
}

namespace {

void check_leaves_in(const Logic& l, const Formula& phi, const OneStepContext& ctx, const Subalgebra& a) {
  std::map<const void*, ModalAtom> atoms;
  collect_atoms(phi, l, ctx, atoms);
  for (auto& [id, at] : atoms)
    for (auto m : at.args)
      if (!a.contains(m)) throw PreconditionError("formula argument " + ctx.carrier.render(m) + " is outside the subalgebra");
}

}  // namespace

OneStepInterpolant onestep_uniform_interpolant(const Logic& l, const Formula& phi, const OneStepContext& ctx,
                                               const Subalgebra& a1, const Subalgebra& a0, std::uint64_t budget) {
  if (!a1.refines(a0)) throw PreconditionError("A0 is not a subalgebra of A1");
  check_onestep_shape(phi);
  check_leaves_in(l, phi, ctx, a1);
  OneStepInterpolant r;
  r.phi_extension = eval_onestep(l, phi, ctx, budget);
  const auto g0 = generated_algebra(l, ctx.size(), a0, budget);
  r.extension = g0.closure(r.phi_extension);
  r.g0_atoms = g0.atom_count;
  std::vector<bool> hit(g0.atom_count, false);
  for_each_bit(r.phi_extension, [&](std::size_t i) { hit[g0.atom_of[i]] = true; });
  const auto count = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
  if (count == g0.atom_count) {
    r.formula = Formula::truth();
  } else {
    std::vector<Formula> terms;
    for (std::size_t a = 0; a < g0.atom_count; ++a)
      if (hit[a]) terms.push_back(g0.atom_formula(a, l, ctx));
    r.formula = Formula::disj_all(terms);
  }
  return r;
}

Bits definitional_interpolant(const ElementAlgebra& g, const Bits& phi_ext) {
  if (g.atom_count > 20) throw BudgetExceeded("members of the generated algebra", std::uint64_t{1} << g.atom_count, 1u << 20);
  std::vector<Bits> atoms;
  for (std::size_t a = 0; a < g.atom_count; ++a) atoms.push_back(g.atom(a));
  Bits result(g.tab->size());
  result.set();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.atom_count); ++s) {
    Bits member(g.tab->size());
    for (std::size_t a = 0; a < g.atom_count; ++a)
      if (has(s, a)) member |= atoms[a];
    if (phi_ext.is_subset_of(member)) result &= member;
  }
  return result;
}

std::optional<InterpolationViolation> atom_criterion(const Logic& l, std::size_t n, const Subalgebra& a1,
                                                     const Subalgebra& a2, std::uint64_t budget) {
  const auto g1 = generated_algebra(l, n, a1, budget);
  const auto g2 = generated_algebra(l, n, a2, budget);
  const auto g0 = generated_algebra(l, n, meet(a1, a2), budget);
  const std::size_t size = g1.tab->size();
  std::vector<std::vector<bool>> meets2(g1.atom_count, std::vector<bool>(g2.atom_count, false));
  std::vector<std::vector<bool>> meets0(g1.atom_count, std::vector<bool>(g0.atom_count, false));
  std::vector<std::vector<std::size_t>> in0(g0.atom_count);
  for (std::size_t i = 0; i < size; ++i) {
    meets2[g1.atom_of[i]][g2.atom_of[i]] = true;
    meets0[g1.atom_of[i]][g0.atom_of[i]] = true;
    in0[g0.atom_of[i]].push_back(i);
  }
  for (std::size_t a = 0; a < g1.atom_count; ++a)
    for (std::size_t b = 0; b < g0.atom_count; ++b) {
      if (!meets0[a][b]) continue;
      for (auto i : in0[b])
        if (!meets2[a][g2.atom_of[i]]) {
          InterpolationViolation v;
          v.carrier = n;
          v.a1 = a1;
          v.a2 = a2;
          v.element = g1.tab->elements[g1.representative[a]];
          const FinSet x(n);
          v.text = "G1-atom of " + l.functor->render(v.element, x) + ": its G0-closure contains " +
                   l.functor->render(g1.tab->elements[i], x) + " outside its G2-closure";
          return v;
        }
    }
  return std::nullopt;
}

LiteralCheck literal_interpolation(const Logic& l, std::size_t n, const Subalgebra& a1, const Subalgebra& a2,
                                   std::uint64_t budget) {
  const auto g1 = generated_algebra(l, n, a1, budget);
  const auto g2 = generated_algebra(l, n, a2, budget);
  const auto g0 = generated_algebra(l, n, meet(a1, a2), budget);
  const std::size_t size = g1.tab->size();
  if (size > 64) throw BudgetExceeded("literal interpolation check over F X", size, 64);
  if (g1.atom_count > 20 || g0.atom_count > 20)
    throw BudgetExceeded("literal interpolation members", std::uint64_t{1} << std::max(g1.atom_count, g0.atom_count),
                         1u << 20);
  auto atom_masks = [&](const ElementAlgebra& g) {
    std::vector<std::uint64_t> m(g.atom_count, 0);
    for (std::size_t i = 0; i < size; ++i) m[g.atom_of[i]] |= std::uint64_t{1} << i;
    return m;
  };
  const auto m1 = atom_masks(g1), m2 = atom_masks(g2), m0 = atom_masks(g0);
  auto is_member = [](const std::vector<std::uint64_t>& atoms, std::uint64_t s) {
    for (auto a : atoms)
      if ((s & a) != 0 && (s & a) != a) return false;
    return true;
  };
  std::vector<std::uint64_t> members0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g0.atom_count); ++s) {
    std::uint64_t u = 0;
    for (std::size_t a = 0; a < g0.atom_count; ++a)
      if (has(s, a)) u |= m0[a];
    members0.push_back(u);
  }
  LiteralCheck r;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g1.atom_count); ++s) {
    std::uint64_t phi = 0;
    for (std::size_t a = 0; a < g1.atom_count; ++a)
      if (has(s, a)) phi |= m1[a];
    std::uint64_t required = 0;
    std::vector<std::uint64_t> free;
    for (auto b : m2) {
      if (b & phi)
        required |= b;
      else
        free.push_back(b);
    }
    if (free.size() > 30) throw BudgetExceeded("literal interpolation consequences", free.size(), 30);
    if (is_member(m0, phi)) {  // ρ = φ interpolates every consequence
      r.pairs += std::uint64_t{1} << free.size();
      continue;
    }
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << free.size()); ++t) {
      std::uint64_t psi = required;
      for (std::size_t j = 0; j < free.size(); ++j)
        if (has(t, j)) psi |= free[j];
      ++r.pairs;
      if (is_member(m0, psi)) continue;
      bool found = false;
      for (auto rho : members0)
        if ((phi & ~rho) == 0 && (rho & ~psi) == 0) {
          found = true;
          break;
        }
      if (!found) {
        r.holds = false;
        return r;
      }
    }
  }
  return r;
}

InterpolationReport check_onestep_interpolation(const Logic& l, std::size_t max_carrier, std::uint64_t budget) {
  InterpolationReport r;
  r.max_carrier = max_carrier;
  for (std::size_t n = 1; n <= max_carrier && r.holds; ++n) {
    for (const auto& [a1, a2] : canonical_partition_pairs(n)) {
      if (interpolable_violation(a1, a2)) {
        ++r.pairs_not_interpolable;
        continue;
      }
      try {
        auto v = atom_criterion(l, n, a1, a2, budget);
        ++r.pairs_checked;
        if (v) {
          r.holds = false;
          r.violation = std::move(v);
          break;
        }
      } catch (const BudgetExceeded& e) {
        r.skipped.push_back("carrier " + std::to_string(n) + ": " + e.what());
        break;
      }
    }
  }
  return r;
}

InstanceVerdict onestep_interpolation_instance(const Logic& l, const Formula& phi, const Formula& psi,
                                               const OneStepContext& ctx, const Subalgebra& a0, std::uint64_t budget) {
  check_onestep_shape(phi);
  check_onestep_shape(psi);
  InstanceVerdict v;
  const std::size_t n = ctx.size();
  bool tabulated = true;
  try {
    l.functor->tabulate(n, budget);
  } catch (const BudgetExceeded&) {
    if (!l.literal_oracle) throw;
    tabulated = false;
  }
  if (tabulated) {
    const Bits e_phi = eval_onestep(l, phi, ctx, budget);
    const Bits e_psi = eval_onestep(l, psi, ctx, budget);
    v.implication_valid = e_phi.is_subset_of(e_psi);
    const auto g0 = generated_algebra(l, n, a0, budget);
    std::vector<bool> hit(g0.atom_count, false);
    for_each_bit(e_phi, [&](std::size_t i) { hit[g0.atom_of[i]] = true; });
    std::vector<Formula> terms;
    v.interpolant_exists = true;
    for (std::size_t a = 0; a < g0.atom_count; ++a) {
      if (!hit[a]) continue;
      terms.push_back(g0.atom_formula(a, l, ctx));
      if (v.interpolant_exists && !g0.atom(a).is_subset_of(e_psi)) {
        v.interpolant_exists = false;
        v.blocking_atom = print(terms.back());
      }
    }
    if (v.interpolant_exists) v.interpolant = Formula::disj_all(terms);
    return v;
  }
  v.implication_valid = !symbolic_onestep_sat(l, Formula::conj(phi, Formula::neg(psi)), ctx);
  const auto gens = generators_over(l, a0.members());
  if (gens.size() > 16) throw BudgetExceeded("symbolic G0 sign patterns", std::uint64_t{1} << gens.size(), 1u << 16);
  std::vector<Formula> terms;
  v.interpolant_exists = true;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << gens.size()); ++s) {
    std::vector<Formula> lits;
    for (std::size_t i = 0; i < gens.size(); ++i) lits.push_back(literal(l, gens[i], has(s, i), ctx));
    const Formula sigma = Formula::conj_all(lits);
    if (!symbolic_onestep_sat(l, Formula::conj(sigma, phi), ctx)) continue;
    terms.push_back(sigma);
    if (v.interpolant_exists && symbolic_onestep_sat(l, Formula::conj(sigma, Formula::neg(psi)), ctx)) {
      v.interpolant_exists = false;
      v.blocking_atom = print(sigma);
    }
  }
  if (v.interpolant_exists) v.interpolant = Formula::disj_all(terms);
  return v;
}

LemmaReport check_can_mod(const Logic& l, std::size_t max_carrier, std::uint64_t budget) {
  LemmaReport r;
  for (std::size_t n = 0; n <= max_carrier; ++n)
    for (const auto& blocks : set_partitions(n)) {
      const Subalgebra a(n, blocks);
      try {
        const auto members = a.members();
        std::vector<Mask> images;
        for (auto m : members) images.push_back(a.can_iso(m));
        const auto on_x = realized_rows(l, n, generators_over(l, members), budget);
        const auto on_s = realized_rows(l, a.atom_count(), generators_over(l, images), budget);
        ++r.checked;
        if (on_x != on_s) {
          if (!r.failures) r.first_failure = "carrier " + std::to_string(n) + " algebra " + a.render(FinSet(n));
          ++r.failures;
        }
      } catch (const BudgetExceeded&) {
        ++r.skipped;
      }
    }
  return r;
}

LemmaReport check_restriction(const Logic& l, std::size_t max_carrier, std::uint64_t budget) {
  LemmaReport r;
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    const auto parts = set_partitions(n);
    for (const auto& b1 : parts)
      for (const auto& b0 : parts) {
        const Subalgebra a1(n, b1), a0(n, b0);
        if (!a1.refines(a0)) continue;
        try {
          const FinFun p = canonical_projection(a1, a0);
          const auto tab = l.functor->tabulate(a1.atom_count(), budget);
          const auto gens = generators_over(l, a0.members());
          for (auto t : tab->elements) {
            const Code pt = l.functor->act(p, t);
            for (const auto& g : gens) {
              std::vector<Mask> c1, c0;
              for (auto m : g.args) {
                c1.push_back(a1.can_iso(m));
                c0.push_back(a0.can_iso(m));
              }
              ++r.checked;
              const auto& lift = l.liftings[g.op];
              if (lift.holds(a1.atom_count(), t, c1) != lift.holds(a0.atom_count(), pt, c0)) {
                if (!r.failures)
                  r.first_failure = "carrier " + std::to_string(n) + " " + a1.render(FinSet(n)) + " over " +
                                    a0.render(FinSet(n));
                ++r.failures;
              }
            }
          }
        } catch (const BudgetExceeded&) {
          ++r.skipped;
        }
      }
  }
  return r;
}

LemmaReport check_invariance(const Logic& l, std::size_t max_carrier, std::uint64_t budget) {
  LemmaReport r;
  for (std::size_t n = 1; n <= max_carrier; ++n)
    for (std::size_t m = 1; m <= n; ++m)
      for_each_function(n, m, [&](const std::vector<std::size_t>& t) {
        const FinFun f(n, m, t);
        if (!f.surjective()) return;
        try {
          std::vector<Mask> cs, pre;
          for (Mask c = 0; c < (Mask{1} << m); ++c) {
            cs.push_back(c);
            pre.push_back(f.preimage(c));
          }
          const auto on_x = realized_rows(l, n, generators_over(l, pre), budget);
          const auto on_y = realized_rows(l, m, generators_over(l, cs), budget);
          ++r.checked;
          if (on_x != on_y) {
            if (!r.failures) {
              std::string s;
              for (auto y : t) s += std::to_string(y);
              r.first_failure = "surjection " + std::to_string(n) + "->" + std::to_string(m) + " [" + s + "]";
            }
            ++r.failures;
          }
        } catch (const BudgetExceeded&) {
          ++r.skipped;
        }
      });
  return r;
}

std::vector<Bits> mss_space(const Logic& l, std::size_t n, std::uint64_t budget) {
  const auto gens = all_generators(l, n);
  std::vector<Bits> rows;
  std::unordered_set<Bits, BitsHash> seen;
  for (auto e : l.functor->tabulate(n, budget)->elements) {
    auto row = row_of(l, n, e, gens);
    if (seen.insert(row).second) rows.push_back(std::move(row));
  }
  return rows;
}

MssReport check_mss_iso(const Logic& l, std::size_t n, std::uint64_t budget) {
  MssReport r;
  r.carrier = n;
  r.elements = l.functor->tabulate(n, budget)->size();
  r.theories = mss_space(l, n, budget).size();
  r.injective = true;
  for (std::size_t k = 0; k <= n; ++k)
    if (mss_space(l, k, budget).size() != l.functor->tabulate(k, budget)->size()) r.injective = false;
  // every maximal theory is the theory of its realizing element by construction
  r.surjective = r.theories <= r.elements;
  r.separating = check_separating(l.liftings, *l.functor, n, budget).separating;
  return r;
}

}  // namespace cml
