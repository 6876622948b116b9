#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cml/errors.hpp"
#include "cml/formula.hpp"
#include "cml/functor.hpp"
#include "cml/interpolation.hpp"
#include "cml/io.hpp"
#include "cml/lifting.hpp"
#include "cml/logic.hpp"
#include "cml/monoid.hpp"
#include "cml/onestep.hpp"
#include "cml/preservation.hpp"
#include "cml/repro.hpp"
#include "cml/satisfiability.hpp"

using namespace cml;

namespace {

struct Options {
  std::string logic = "K";
  std::string monoid_file;
  std::uint64_t budget_elements = kDefaultElementBudget;
  std::uint64_t budget_stratum = 4096;

  SpaceBudget space() const { return {budget_elements, budget_stratum}; }
};

Options opt;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }
void note(const std::string& s) { std::cerr << s << "\n"; }

Monoid builtin_monoid(const std::string& name) {
  if (name == "2v") return Monoid::join_semilattice();
  if (name == "trivial") return Monoid::trivial();
  if (name.rfind("Z/", 0) == 0) return Monoid::cyclic(std::stoul(name.substr(2)));
  throw PreconditionError("unknown monoid '" + name + "' (use Z/n, 2v, trivial or --monoid FILE)");
}

Monoid resolve_monoid(const std::string& builtin) {
  if (!opt.monoid_file.empty()) return monoid_from_json(read_json_file(opt.monoid_file));
  return builtin_monoid(builtin);
}

LogicPtr resolve_logic() {
  if (!opt.monoid_file.empty() && (opt.logic == "W" || opt.logic.rfind("W:", 0) == 0))
    return weighted_logic(resolve_monoid(""));
  if (opt.logic.rfind("W:", 0) == 0 && opt.logic != "W:Z/2" && opt.logic != "W:Z/3")
    return weighted_logic(builtin_monoid(opt.logic.substr(2)));
  return logic_by_name(opt.logic);
}

FunctorPtr resolve_functor(const std::string& name) {
  if (name == "P") return logic_by_name("K")->functor;
  if (name == "P+" || name == "PNE") return logic_by_name("KD")->functor;
  if (name.rfind("W_", 0) == 0) {
    opt.logic = "W:" + name.substr(2);
    return resolve_logic()->functor;
  }
  opt.logic = name;
  return resolve_logic()->functor;
}

Formula parse_for(const LogicPtr& l, const std::string& text, bool sets = false) {
  ParseOptions po;
  po.set_literals = sets;
  return parse(text, l->sig, po);
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

Json sat_json(const LogicPtr& l, const SatVerdict& v) {
  Json j = {{"logic", l->name}, {"method", v.method}, {"vars", strings(v.vars)}, {"rank", v.rank}};
  if (v.method == "theory-space") {
    j["space_size"] = v.space_size;
    j["satisfying_theories"] = v.theories;
  }
  if (v.model) {
    j["model"] = model_to_json(*l, *v.model);
    j["root"] = v.model->states.label(v.root);
    j["round_trip"] = v.round_trip;
    if (!v.model->dag) j["boundary"] = "leaf states loop back; F(empty) is empty";
  }
  if (!v.symbolic_witness.empty()) j["witness"] = v.symbolic_witness;
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void collect_leaves(const Formula& f, bool inside, std::set<std::string>& out) {
  if (f.kind() == Kind::Var) {
    if (inside) out.insert(f.name());
    return;
  }
  for (const auto& c : f.children()) collect_leaves(c, inside || f.kind() == Kind::Modal, out);
}

// commands

int cmd_parse(const std::string& text, bool sets) {
  auto l = resolve_logic();
  const Formula f = parse_for(l, text, sets);
  const auto vs = variables(f);
  emit({{"formula", print(f)},
        {"rank", rank(f)},
        {"variables", std::vector<std::string>(vs.begin(), vs.end())},
        {"dag_size", dag_size(f)}});
  return 0;
}

int cmd_sat(const std::string& text) {
  auto l = resolve_logic();
  const auto v = sat(l, parse_for(l, text), opt.space());
  Json j = {{"verdict", v.sat ? "SAT" : "UNSAT"}};
  j.update(sat_json(l, v));
  emit(j);
  note(std::string(v.sat ? "SAT" : "UNSAT") + " (" + v.method + ")");
  return 0;
}

int cmd_valid(const std::string& text) {
  auto l = resolve_logic();
  const auto v = refute(l, parse_for(l, text), opt.space());
  Json j = {{"verdict", v.sat ? "NOT VALID" : "VALID"}};
  Json detail = sat_json(l, v);
  if (v.model) {
    detail["countermodel"] = detail["model"];
    detail.erase("model");
  }
  j.update(detail);
  emit(j);
  note(v.sat ? "NOT VALID" : "VALID");
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b) {
  auto l = resolve_logic();
  const bool eq = equivalent(l, parse_for(l, a), parse_for(l, b), opt.space());
  emit({{"verdict", eq ? "EQUIVALENT" : "NOT EQUIVALENT"}, {"logic", l->name}});
  note(eq ? "EQUIVALENT" : "NOT EQUIVALENT");
  return 0;
}

int cmd_interpolate(const std::string& text, std::vector<std::string> keep, std::vector<std::string> v2,
                     int psi_rank, bool oracle) {
  auto l = resolve_logic();
  const Formula phi = parse_for(l, text);
  const auto r = uniform_interpolant(l, phi, keep, opt.space());
  Json j = {{"interpolant", print(r.interpolant)},
            {"logic", l->name},
            {"keep", strings(r.keep)},
            {"rank", r.rank},
            {"method", r.method},
            {"theories", r.denotation.count()}};
  if (oracle) {
    const auto o = uniform_interpolant_oracle(l, phi, keep, opt.space());
    j["oracle_agrees"] = o.denotation == r.denotation;
  }
  if (v2.empty()) {
    v2 = r.keep;
    const auto vs = variables(phi);
    for (std::string cand : {"r", "s", "t", "u", "w"})
      if (!vs.count(cand) && !std::count(v2.begin(), v2.end(), cand)) {
        v2.push_back(cand);
        break;
      }
  }
  const std::size_t pr = psi_rank < 0 ? std::max<std::size_t>(r.rank, 1) : static_cast<std::size_t>(psi_rank);
  try {
    const auto v = verify_uniform(l, phi, r.keep, r.interpolant, pr, v2, opt.space());
    j["verified"] = {{"psi_rank", v.psi_rank},
                     {"V2", strings(v.v2)},
                     {"checked", v.psi_checked_log2 < 63 ? Json(std::uint64_t{1} << v.psi_checked_log2)
                                                         : Json("2^" + std::to_string(v.psi_checked_log2))},
                     {"consequences", v.consequences_log2 < 63 ? Json(std::uint64_t{1} << v.consequences_log2)
                                                               : Json("2^" + std::to_string(v.consequences_log2))},
                     {"implied_by_phi", v.implication},
                     {"failures", strings(v.failures)}};
  } catch (const BudgetExceeded& e) {
    j["verified"] = {{"psi_rank", pr}, {"V2", strings(v2)}, {"skipped", e.what()}};
  }
  emit(j);
  note("interpolant over {" + [&] {
    std::string s;
    for (const auto& k : r.keep) s += (s.empty() ? "" : ",") + k;
    return s;
  }() + "}: " + print(r.interpolant));
  return 0;
}

int cmd_craig(const std::string& a, const std::string& b, int max_rank) {
  auto l = resolve_logic();
  const auto r = craig_search(l, parse_for(l, a), parse_for(l, b), static_cast<std::size_t>(max_rank), opt.space());
  emit({{"verdict", r.interpolant ? "FOUND" : "NONE"},
        {"logic", l->name},
        {"implication_valid", r.implication_valid},
        {"shared", strings(r.shared)},
        {"rank", r.rank},
        {"least_candidate_size", r.candidates},
        {"method", r.method},
        {"interpolant", r.interpolant ? Json(print(*r.interpolant)) : Json()}});
  note(r.interpolant ? "interpolant: " + print(*r.interpolant) : "no interpolant up to rank " + std::to_string(max_rank));
  return 0;
}

int cmd_onestep_sat(const std::string& text) {
  auto l = resolve_logic();
  const auto v = onestep_sat(*l, parse_for(l, text), opt.budget_elements);
  Json j = {{"verdict", v.sat ? "SAT" : "UNSAT"}, {"logic", l->name}, {"method", v.method}};
  if (v.witness) j["witness_code"] = *v.witness;
  if (!v.witness_text.empty()) j["witness"] = v.witness_text;
  emit(j);
  note(v.sat ? "SAT" : "UNSAT");
  return 0;
}

int cmd_onestep_interpolate(const std::string& text, const std::string& psi_text, const std::string& carrier,
                            std::vector<std::string> keep_sets, const std::vector<std::string>& keep_vars) {
  auto l = resolve_logic();
  const bool sets = !carrier.empty();
  const Formula phi = parse_for(l, text, sets);
  std::optional<Formula> psi;
  if (!psi_text.empty()) psi = parse_for(l, psi_text, sets);
  std::set<std::string> leaves;
  collect_leaves(phi, false, leaves);
  if (psi) collect_leaves(*psi, false, leaves);
  OneStepContext ctx;
  if (sets) {
    ctx = subset_context(FinSet(split(carrier, ',')));
  } else {
    std::set<std::string> vs;
    for (const auto& f : {std::optional<Formula>(phi), psi})
      if (f) {
        auto v = variables(*f);
        vs.insert(v.begin(), v.end());
      }
    vs.insert(keep_vars.begin(), keep_vars.end());
    ctx = valuation_context({vs.begin(), vs.end()});
    keep_sets = keep_vars;
  }
  const std::size_t n = ctx.size();
  std::vector<Mask> gens0, gens1;
  for (const auto& k : keep_sets) gens0.push_back(ctx.leaf(k));
  for (const auto& s : leaves) gens1.push_back(ctx.leaf(s));
  gens1.insert(gens1.end(), gens0.begin(), gens0.end());
  const auto a0 = Subalgebra::generated(n, gens0);
  const auto a1 = Subalgebra::generated(n, gens1);
  Json j = {{"logic", l->name}, {"carrier", ctx.carrier.labels()}, {"A0", partition_to_json(a0, ctx.carrier)}};
  if (psi) {
    const auto v = onestep_interpolation_instance(*l, phi, *psi, ctx, a0, opt.budget_elements);
    j["implication_valid"] = v.implication_valid;
    j["verdict"] = !v.implication_valid ? "NOT VALID" : v.interpolant_exists ? "INTERPOLANT" : "NONE";
    if (v.interpolant) j["interpolant"] = print(*v.interpolant);
    if (!v.blocking_atom.empty()) j["blocking_atom"] = v.blocking_atom;
    note(j["verdict"].get<std::string>());
  } else {
    const auto r = onestep_uniform_interpolant(*l, phi, ctx, a1, a0, opt.budget_elements);
    j["A1"] = partition_to_json(a1, ctx.carrier);
    j["interpolant"] = print(r.formula);
    j["extension_size"] = r.extension.count();
    j["phi_extension_size"] = r.phi_extension.count();
    j["g0_atoms"] = r.g0_atoms;
    note("uniform one-step interpolant: " + print(r.formula));
  }
  emit(j);
  return 0;
}

Json violation_json(const InterpolationViolation& v) {
  const FinSet x(v.carrier);
  return {{"carrier", v.carrier},
          {"A1", partition_to_json(v.a1, x)},
          {"A2", partition_to_json(v.a2, x)},
          {"element_code", v.element},
          {"detail", v.text}};
}

int cmd_onestep_check(std::size_t max) {
  auto l = resolve_logic();
  const auto r = check_onestep_interpolation(*l, max, opt.budget_elements);
  Json j = {{"verdict", r.holds ? "HOLDS" : "FAILS"},
            {"logic", l->name},
            {"max_carrier", r.max_carrier},
            {"pairs_checked", r.pairs_checked},
            {"pairs_not_interpolable", r.pairs_not_interpolable},
            {"skipped", strings(r.skipped)}};
  if (r.violation) j["violation"] = violation_json(*r.violation);
  emit(j);
  note(std::string("one-step interpolation ") + (r.holds ? "HOLDS" : "FAILS") + " up to carrier " + std::to_string(max));
  return 0;
}

Json lift_json(const Functor& F, const FinFun& f, const FinFun& g, const LiftVerdict& v) {
  Json j = {{"verdict", v.lifts ? "LIFTS" : "FAILS"},
            {"compatible_pairs", v.compatible_pairs},
            {"failing_pairs", v.failing_pairs}};
  if (v.witness) j["witness"] = {{"u", F.render(v.witness->first, f.dom())}, {"v", F.render(v.witness->second, g.dom())}};
  if (!v.failures.empty()) {
    Json fs = Json::array();
    for (const auto& [s, t] : v.failures) fs.push_back({F.render(s, f.dom()), F.render(t, g.dom())});
    j["failures"] = fs;
  }
  if (v.specialized_used) j["specialized_disagreements"] = v.specialized_disagreements;
  return j;
}

int cmd_functor_laws(const std::string& name, std::size_t max) {
  auto F = resolve_functor(name);
  const auto laws = check_functor_laws(*F, max, opt.budget_elements);
  const auto closure = check_closure(*F, max, opt.budget_elements);
  Json counts = Json::object();
  for (std::size_t n = 0; n <= max; ++n) counts[std::to_string(n)] = F->count(n);
  emit({{"functor", F->name()},
        {"max_carrier", max},
        {"laws", laws ? Json(*laws) : Json("HOLD")},
        {"closure", closure ? Json(*closure) : Json("HOLDS")},
        {"element_counts", counts}});
  note(F->name() + ": functor laws " + (laws ? "violated" : "hold"));
  return 0;
}

int cmd_functor_sweep(const std::string& name, const std::string& property, std::size_t max) {
  auto F = resolve_functor(name);
  const auto p = property == "wpb" ? PreservationProperty::WPB : PreservationProperty::SWPB;
  if (property != "wpb" && property != "swpb") throw PreconditionError("property must be wpb or swpb");
  const auto s = sweep_preservation(*F, p, max, opt.budget_elements);
  Json cs = Json::array();
  for (const auto& c : s.cospans) {
    Json e = {{"f", finfun_to_json(c.f)}, {"g", finfun_to_json(c.g)}};
    if (c.status == CospanReport::Status::Skipped) {
      e["verdict"] = "SKIPPED";
      e["reason"] = c.skip_reason;
    } else {
      e.update(lift_json(*F, c.f, c.g, c.verdict));
    }
    cs.push_back(e);
  }
  emit({{"functor", F->name()},
        {"property", property},
        {"max_carrier", max},
        {"lifts", s.lifts},
        {"fails", s.fails},
        {"skipped", s.skipped},
        {"specialized_disagreements", s.specialized_disagreements},
        {"cospans", cs}});
  note(F->name() + " " + property + " up to " + std::to_string(max) + ": " + std::to_string(s.lifts) + " lift, " +
       std::to_string(s.fails) + " fail, " + std::to_string(s.skipped) + " skipped");
  return 0;
}

int cmd_functor_cospan(const std::string& name, const std::string& file, const std::string& inline_json,
                       const std::vector<std::string>& pair) {
  auto F = resolve_functor(name);
  const Json spec = file.empty() ? Json::parse(inline_json) : read_json_file(file);
  const auto c = cospan_from_json(spec);
  std::optional<std::pair<Code, Code>> query;
  if (!pair.empty()) {
    if (pair.size() != 2) throw PreconditionError("--pair takes two elements");
    query = std::make_pair(F->parse_element(pair[0], c.f.dom()), F->parse_element(pair[1], c.g.dom()));
  }
  const auto v = check_weak_lift(*F, c.f, c.g, opt.budget_elements, query);
  const auto pb = pullback(c.f, c.g);
  Json j = {{"functor", F->name()}, {"pullback_size", pb.carrier.size()}};
  j.update(lift_json(*F, c.f, c.g, v));
  emit(j);
  note(F->name() + ": " + (v.lifts ? "LIFTS" : "FAILS"));
  return 0;
}

int cmd_lifting(const std::string& what, std::size_t max) {
  auto l = resolve_logic();
  Json j = {{"logic", l->name}, {"check", what}, {"max_carrier", max}};
  if (what == "separating") {
    const auto v = check_separating(l->liftings, *l->functor, max, opt.budget_elements);
    j["verdict"] = v.separating ? "SEPARATING" : "NOT SEPARATING";
    if (v.pair && v.carrier) {
      const FinSet x(*v.carrier);
      j["pair"] = {l->functor->render(v.pair->first, x), l->functor->render(v.pair->second, x)};
    }
    if (!v.witness.empty()) j["witness"] = v.witness;
    note(j["verdict"].get<std::string>());
  } else {
    Json rows = Json::array();
    bool all = true;
    for (const auto& lift : l->liftings) {
      const auto v = what == "natural" ? check_naturality(lift, *l->functor, max, opt.budget_elements)
                                       : check_monotone(lift, *l->functor, max, opt.budget_elements);
      all = all && v.holds;
      rows.push_back({{"operator", lift.name}, {"holds", v.holds}, {"checked", v.checked}, {"witness", v.witness}});
    }
    const std::string yes = what == "natural" ? "NATURAL" : "MONOTONE";
    j["verdict"] = all ? yes : "NOT " + yes;
    j["liftings"] = rows;
    note(j["verdict"].get<std::string>());
  }
  emit(j);
  return 0;
}

int cmd_monoid(const std::string& what, const std::string& builtin, std::size_t bound, const std::string& a,
               std::size_t max_arity) {
  const Monoid m = resolve_monoid(builtin);
  Json j = {{"monoid", monoid_to_json(m)}, {"check", what}};
  if (what == "refinable") {
    const auto v = check_refinable(m, bound);
    j["verdict"] = v.refinable ? "REFINABLE" : "NOT REFINABLE";
    j["bound"] = bound;
    j["qualifier"] = "up to bound";
    if (!v.refinable) {
      std::vector<std::string> ra, rb;
      for (auto x : v.a) ra.push_back(m.label(x));
      for (auto x : v.b) rb.push_back(m.label(x));
      j["row_sums"] = ra;
      j["col_sums"] = rb;
    }
  } else if (what == "positive") {
    const auto v = check_positive(m);
    j["verdict"] = v.positive ? "POSITIVE" : "NOT POSITIVE";
    if (v.witness) j["witness"] = {m.label(v.witness->first), m.label(v.witness->second)};
  } else {
    const auto v = monotone_indistinguishable(m, m.index(a), max_arity);
    j["verdict"] = v.indistinguishable ? "INDISTINGUISHABLE" : "DISTINGUISHABLE";
    j["element"] = a;
    j["max_arity"] = max_arity;
    j["closed_sets_checked"] = v.closed_sets_checked;
    if (v.separating_arity) j["separating_arity"] = *v.separating_arity;
    Json steps = Json::array();
    for (const auto& s : v.steps) steps.push_back({{"fx", s.fx}, {"fy", s.fy}, {"forward", s.forward}, {"backward", s.backward}});
    j["steps"] = steps;
  }
  emit(j);
  note(j["verdict"].get<std::string>());
  return 0;
}

int cmd_mss(std::size_t n) {
  auto l = resolve_logic();
  const auto r = check_mss_iso(*l, n, opt.budget_elements);
  const auto sep = check_separating(l->liftings, *l->functor, n, opt.budget_elements);
  emit({{"logic", l->name},
        {"carrier", n},
        {"elements", r.elements},
        {"theories", r.theories},
        {"injective", r.injective},
        {"surjective", r.surjective},
        {"separating", r.separating},
        {"separating_check", sep.separating},
        {"verdict", r.consistent() ? (r.injective ? "ISO" : "NOT INJECTIVE (consistent with non-separation)") : "INCONSISTENT"}});
  note(std::to_string(r.theories) + " maximal one-step theories over " + std::to_string(r.elements) + " elements");
  return 0;
}

int cmd_repro(std::vector<int> ids) {
  if (ids.empty())
    for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
  Json out = Json::array();
  bool failed = false;
  for (int id : ids) {
    const auto r = run_criterion(id, opt.space());
    out.push_back(criterion_to_json(r));
    failed = failed || r.status == "FAIL";
    std::cerr << "criterion " << r.id << ": " << r.status << "  " << r.detail << "\n";
  }
  emit(out);
  return failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cml: coalgebraic modal logic workbench"};
  app.require_subcommand(1);
  app.add_option("--budget-elements", opt.budget_elements, "max |F X| per tabulation");
  app.add_option("--budget-stratum", opt.budget_stratum, "max theories per stratum");
  auto logic_opts = [](CLI::App* c) {
    c->add_option("--logic,-l", opt.logic, "K, KD, N, M, NVEE, F32, W, W:Z/n");
    c->add_option("--monoid", opt.monoid_file, "monoid JSON for the graded logic");
  };

  std::function<int()> run;
  std::string text, text2, name = "K", property = "swpb", file, inline_json, carrier, builtin = "Z/2", element = "1";
  std::vector<std::string> keep, v2, pair, keep_sets;
  std::size_t max = 2, bound = 3, arity = 2;
  int psi_rank = -1, max_rank = 1;
  bool sets = false, oracle = false;
  std::vector<int> ids;

  auto* p = app.add_subcommand("parse", "parse and print a formula");
  logic_opts(p);
  p->add_option("formula", text)->required();
  p->add_flag("--sets", sets, "allow {a,b} subset literals");
  p->callback([&] { run = [&] { return cmd_parse(text, sets); }; });

  auto* s = app.add_subcommand("sat", "satisfiability with model extraction");
  logic_opts(s);
  s->add_option("formula", text)->required();
  s->callback([&] { run = [&] { return cmd_sat(text); }; });

  auto* v = app.add_subcommand("valid", "validity with counter-model");
  logic_opts(v);
  v->add_option("formula", text)->required();
  v->callback([&] { run = [&] { return cmd_valid(text); }; });

  auto* e = app.add_subcommand("equiv", "logical equivalence");
  logic_opts(e);
  e->add_option("phi", text)->required();
  e->add_option("psi", text2)->required();
  e->callback([&] { run = [&] { return cmd_equiv(text, text2); }; });

  auto* in = app.add_subcommand("interpolate", "uniform interpolant with verification");
  logic_opts(in);
  in->add_option("formula", text)->required();
  in->add_option("--keep", keep, "variables to keep")->required()->delimiter(',')->allow_extra_args(false);
  in->add_option("--v2", v2, "verification variables (default: kept plus one fresh)")->delimiter(',')->allow_extra_args(false);
  in->add_option("--psi-rank", psi_rank, "verification rank (default: rank of the formula)");
  in->add_flag("--oracle", oracle, "also run the definitional oracle");
  in->callback([&] { run = [&] { return cmd_interpolate(text, keep, v2, psi_rank, oracle); }; });

  auto* cr = app.add_subcommand("craig", "Craig interpolant search over shared variables");
  logic_opts(cr);
  cr->add_option("phi", text)->required();
  cr->add_option("psi", text2)->required();
  cr->add_option("--max-rank", max_rank, "highest interpolant rank tried");
  cr->callback([&] { run = [&] { return cmd_craig(text, text2, max_rank); }; });

  auto* os = app.add_subcommand("onestep", "one-step logic");
  os->require_subcommand(1);
  auto* os_sat = os->add_subcommand("sat", "one-step satisfiability over variables");
  logic_opts(os_sat);
  os_sat->add_option("formula", text)->required();
  os_sat->callback([&] { run = [&] { return cmd_onestep_sat(text); }; });
  auto* os_int = os->add_subcommand("interpolate", "one-step uniform interpolant, or an instance with --psi");
  logic_opts(os_int);
  os_int->add_option("formula", text)->required();
  os_int->add_option("--psi", text2, "consequent; decides the instance");
  os_int->add_option("--carrier", carrier, "labels a,b,c; leaves are then subset literals");
  os_int->add_option("--keep-sets", keep_sets, "generators of A0 as subset literals")->allow_extra_args(false);
  os_int->add_option("--keep", keep, "generators of A0 as variables")->delimiter(',')->allow_extra_args(false);
  os_int->callback([&] { run = [&] { return cmd_onestep_interpolate(text, text2, carrier, keep_sets, keep); }; });
  auto* os_chk = os->add_subcommand("check", "atom-criterion one-step interpolation sweep");
  logic_opts(os_chk);
  os_chk->add_option("--max", max, "largest carrier");
  os_chk->callback([&] { run = [&] { return cmd_onestep_check(max); }; });

  auto* fu = app.add_subcommand("functor", "functor checks");
  fu->require_subcommand(1);
  auto functor_opts = [&](CLI::App* c) {
    c->add_option("--name", name, "P, P+, N, M, NVEE, F32, W_Z/n")->required();
    c->add_option("--monoid", opt.monoid_file, "monoid JSON for W");
  };
  auto* fl = fu->add_subcommand("laws", "identity and composition laws");
  functor_opts(fl);
  fl->add_option("--max", max, "largest carrier");
  fl->callback([&] { run = [&] { return cmd_functor_laws(name, max); }; });
  auto* fs = fu->add_subcommand("sweep", "weak pullback preservation sweep");
  functor_opts(fs);
  fs->add_option("--property", property, "wpb or swpb");
  fs->add_option("--max", max, "largest carrier");
  fs->callback([&] { run = [&] { return cmd_functor_sweep(name, property, max); }; });
  auto* fc = fu->add_subcommand("cospan", "weak lift check on one cospan");
  functor_opts(fc);
  fc->add_option("--file", file, "cospan JSON file");
  fc->add_option("--json", inline_json, "cospan JSON text");
  fc->add_option("--pair", pair, "query one pair u v")->expected(2);
  fc->callback([&] {
    if (file.empty() && inline_json.empty()) throw CLI::ValidationError("cospan", "give --file or --json");
    run = [&] { return cmd_functor_cospan(name, file, inline_json, pair); };
  });

  auto* li = app.add_subcommand("lifting", "predicate lifting checks");
  li->require_subcommand(1);
  for (std::string what : {"natural", "monotone", "separating"}) {
    auto* c = li->add_subcommand(what, what);
    logic_opts(c);
    c->add_option("--max", max, "largest carrier");
    c->callback([&, what] { run = [&, what] { return cmd_lifting(what, max); }; });
  }

  auto* mo = app.add_subcommand("monoid", "monoid analysis");
  mo->require_subcommand(1);
  for (std::string what : {"refinable", "positive", "indist"}) {
    auto* c = mo->add_subcommand(what, what);
    c->add_option("--builtin", builtin, "Z/n, 2v or trivial");
    c->add_option("--monoid", opt.monoid_file, "monoid JSON file");
    c->add_option("--bound", bound, "refinability bound");
    c->add_option("--element,-a", element, "element a for indist");
    c->add_option("--max-arity", arity, "largest lifting arity for indist");
    c->callback([&, what] { run = [&, what] { return cmd_monoid(what, builtin, bound, element, arity); }; });
  }

  auto* ms = app.add_subcommand("mss", "maximal one-step theories and the iso check");
  logic_opts(ms);
  ms->add_option("--carrier", max, "carrier size");
  ms->callback([&] { run = [&] { return cmd_mss(max); }; });

  auto* re = app.add_subcommand("repro", "acceptance reproduction matrix");
  re->add_flag("--all", "run every criterion (default)");
  re->add_option("--criterion,-c", ids, "criterion numbers");
  re->callback([&] { run = [&] { return cmd_repro(ids); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 1;
  }
  try {
    return run();
  } catch (const BudgetExceeded& err) {
    emit({{"error", "budget exceeded"}, {"detail", err.what()}});
    std::cerr << "budget exceeded: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    emit({{"error", "usage"}, {"detail", err.what()}});
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
