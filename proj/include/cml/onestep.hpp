#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cml/finset.hpp"
#include "cml/formula.hpp"
#include "cml/logic.hpp"
#include "cml/subalgebra.hpp"

namespace cml {

/// Interpretation of one-step leaves over a carrier X: `leaf` maps a leaf name
/// to a subset of X, `formula` renders a subset back into a leaf formula.
struct OneStepContext {
  FinSet carrier;
  std::function<Mask(const std::string&)> leaf;
  std::function<Formula(Mask)> formula;
  std::size_t size() const { return carrier.size(); }
};

/// Leaves are label-set literals `{a,b}` over `x`.
OneStepContext subset_context(const FinSet& x);
/// X = 2^vars (valuations, labelled like `+p-q`); variable v denotes {u | u(v) = ⊤}.
OneStepContext valuation_context(const std::vector<std::string>& vars);

/// Throws PreconditionError unless `f` is in Prop(Λ(Prop(Z))).
void check_onestep_shape(const Formula& f);

Mask eval_prop(const Formula& f, const std::function<Mask(const std::string&)>& leaf, std::size_t n);

/// ψτ ⊆ F X over the tabulation of F |X|.
Bits eval_onestep(const Logic& l, const Formula& psi, const OneStepContext& ctx,
                  std::uint64_t budget = kDefaultElementBudget);

/// Distinct modal atoms of a one-step formula, with their argument masks.
struct ModalAtom {
  std::size_t op;
  std::vector<Mask> args;
  bool operator<(const ModalAtom& o) const { return std::tie(op, args) < std::tie(o.op, o.args); }
  bool operator==(const ModalAtom& o) const { return op == o.op && args == o.args; }
};

/// Satisfiability of a one-step formula by enumerating truth values of its
/// modal atoms and asking the logic's literal oracle; works on carriers far
/// beyond tabulation range. On success `witness` describes the chosen literals.
bool symbolic_onestep_sat(const Logic& l, const Formula& psi, const OneStepContext& ctx, std::string* witness = nullptr);

struct OneStepSatVerdict {
  bool sat = false;
  std::string method;  // "tabulated" or "symbolic"
  std::optional<Code> witness;
  std::string witness_text;
};

/// One-step satisfiability of ψ over variables, decided over the canonical base 2^V.
OneStepSatVerdict onestep_sat(const Logic& l, const Formula& psi, std::uint64_t budget = kDefaultElementBudget);

/// The Boolean algebra G ⊆ P(F X) generated by {⟦♥⟧(B₁,…) | Bᵢ ∈ A}, as an
/// atom index per element of F X.
struct ElementAlgebra {
  std::shared_ptr<const Tabulation> tab;
  std::vector<ModalAtom> generators;
  std::vector<std::size_t> atom_of;
  std::size_t atom_count = 0;
  std::vector<std::size_t> representative;  // one element per atom

  /// Smallest member containing `s`.
  Bits closure(const Bits& s) const;
  Bits atom(std::size_t a) const;
  /// Extension of a generator literal conjunction describing atom a.
  Formula atom_formula(std::size_t a, const Logic& l, const OneStepContext& ctx) const;
};

ElementAlgebra generated_algebra(const Logic& l, std::size_t n, const Subalgebra& a,
                                 std::uint64_t budget = kDefaultElementBudget);

struct OneStepInterpolant {
  Formula formula = Formula::falsum();
  Bits extension;
  Bits phi_extension;
  std::size_t g0_atoms = 0;
};

/// Smallest member of G(A₀) containing ⟦φ⟧, with a DNF over generator literals.
OneStepInterpolant onestep_uniform_interpolant(const Logic& l, const Formula& phi, const OneStepContext& ctx,
                                               const Subalgebra& a1, const Subalgebra& a0,
                                               std::uint64_t budget = kDefaultElementBudget);

/// ⋂{ρ ∈ G | ⟦φ⟧ ⊆ ρ}, enumerating every member of G.
Bits definitional_interpolant(const ElementAlgebra& g, const Bits& phi_ext);

struct InterpolationViolation {
  std::size_t carrier = 0;
  Subalgebra a1, a2;
  Code element = 0;  // an element of the offending G₁-atom
  std::string text;
};

/// Atom criterion on one interpolable pair: every G₁-atom a has cl_G₀(a) ⊆ cl_G₂(a).
std::optional<InterpolationViolation> atom_criterion(const Logic& l, std::size_t n, const Subalgebra& a1,
                                                     const Subalgebra& a2, std::uint64_t budget = kDefaultElementBudget);

/// The literal definition on one pair: for all φ ∈ G₁, ψ ∈ G₂ with ⟦φ⟧ ⊆ ⟦ψ⟧
/// some ρ ∈ G₀ lies in between. Needs |F X| ≤ 64.
struct LiteralCheck {
  bool holds = true;
  std::uint64_t pairs = 0;
};
LiteralCheck literal_interpolation(const Logic& l, std::size_t n, const Subalgebra& a1, const Subalgebra& a2,
                                   std::uint64_t budget = kDefaultElementBudget);

struct InterpolationReport {
  bool holds = true;
  std::size_t max_carrier = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_not_interpolable = 0;
  std::vector<std::string> skipped;
  std::optional<InterpolationViolation> violation;
};

InterpolationReport check_onestep_interpolation(const Logic& l, std::size_t max_carrier,
                                                std::uint64_t budget = kDefaultElementBudget);

/// One concrete instance: valid φ → ψ with φ over A₁ and ψ over A₂; decides
/// whether some ρ over A₀ = A₁ ∩ A₂ interpolates, via the G₀-atoms.
struct InstanceVerdict {
  bool implication_valid = false;
  bool interpolant_exists = false;
  std::optional<Formula> interpolant;
  std::string blocking_atom;  // G₀-atom consistent with φ and with ¬ψ
};
InstanceVerdict onestep_interpolation_instance(const Logic& l, const Formula& phi, const Formula& psi,
                                               const OneStepContext& ctx, const Subalgebra& a0,
                                               std::uint64_t budget = kDefaultElementBudget);

struct LemmaReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

/// ψ over A satisfiable on X iff ψ·can_A satisfiable on S(A), for every ψ.
LemmaReport check_can_mod(const Logic& l, std::size_t max_carrier, std::uint64_t budget = kDefaultElementBudget);
/// t ⊨ φ can_{A₁} iff F p(t) ⊨ φ can_{A₀} for the canonical projection p.
LemmaReport check_restriction(const Logic& l, std::size_t max_carrier, std::uint64_t budget = kDefaultElementBudget);
/// For surjective f and φ over the f-invariant sets: F X ⊨ φ iff F Y ⊨ φσ_f.
LemmaReport check_invariance(const Logic& l, std::size_t max_carrier, std::uint64_t budget = kDefaultElementBudget);

/// Rows of the realized maximal one-step theories on an n-element carrier.
std::vector<Bits> mss_space(const Logic& l, std::size_t n, std::uint64_t budget = kDefaultElementBudget);

struct MssReport {
  std::size_t carrier = 0;
  std::size_t elements = 0;
  std::size_t theories = 0;
  bool injective = false;
  bool surjective = true;
  bool separating = false;
  bool consistent() const { return injective == separating && surjective; }
};

MssReport check_mss_iso(const Logic& l, std::size_t n, std::uint64_t budget = kDefaultElementBudget);

}  // namespace cml
