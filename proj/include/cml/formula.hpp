#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cml {

/// A modal operator declaration. The names "<>" and "[]" denote the two
/// symbolic unary modalities; every other name is written `[name]`.
struct Operator {
  std::string name;
  std::size_t arity = 1;
};

/// A finite modal signature. Operator names are pairwise distinct.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Operator> ops);

  const std::vector<Operator>& operators() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  /// Index of `name`, or nullopt when undeclared.
  std::optional<std::size_t> find(std::string_view name) const;
  const Operator& at(std::size_t i) const { return ops_.at(i); }

 private:
  std::vector<Operator> ops_;
};

enum class Kind { Var, Falsum, Neg, And, Modal };

/// Immutable modal formula over the core connectives {⊥, ¬, ∧, ♥}. Derived
/// connectives expand into the core on construction. Copies share nodes.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula falsum();
  static Formula truth();
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula modal(std::string op, std::vector<Formula> args);

  /// Conjunction / disjunction of a list; empty lists give ⊤ / ⊥.
  static Formula conj_all(const std::vector<Formula>& fs);
  static Formula disj_all(const std::vector<Formula>& fs);

  Kind kind() const;
  /// Variable name for Var, operator name for Modal; empty otherwise.
  const std::string& name() const;
  /// Operand(s): one for Neg, two for And, the argument list for Modal.
  const std::vector<Formula>& children() const;
  const Formula& child(std::size_t i) const { return children().at(i); }

  /// Structural equality.
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  /// Identity of the shared node; used for memoizing DAG traversals.
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ParseOptions {
  /// Accept label-set literals `{a1,a3}` as leaves; they become Var nodes
  /// whose name is the literal text with whitespace removed.
  bool set_literals = false;
};

/// Parses `text` in the concrete syntax: `true false ~ & | -> <->`,
/// variables `[a-z][a-zA-Z0-9_]*`, modalities `<>`, `[]`, `[name]`.
/// Binary connectives associate to the left. Operators of arity other than
/// one take a parenthesized, comma-separated argument list.
Formula parse(std::string_view text, const Signature& sig, ParseOptions opts = {});

/// Deterministic rendering with minimal parentheses. Derived connectives
/// are recognized and printed in their sugared form.
std::string print(const Formula& f);

std::size_t rank(const Formula& f);
std::set<std::string> variables(const Formula& f);
/// Number of distinct nodes in the formula DAG.
std::size_t dag_size(const Formula& f);

/// Simultaneous substitution of variables.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& map);

/// Checks every Modal node against `sig`; throws PreconditionError otherwise.
void check_signature(const Formula& f, const Signature& sig);

bool is_set_literal(const std::string& var_name);

}  // namespace cml
