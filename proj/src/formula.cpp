#include "cml/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

#include "cml/errors.hpp"

namespace cml {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
};

Signature::Signature(std::vector<Operator> ops) : ops_(std::move(ops)) {
  std::set<std::string> seen;
  for (const auto& op : ops_) {
    if (op.name.empty()) throw PreconditionError("empty operator name");
    if (!seen.insert(op.name).second) throw PreconditionError("duplicate operator '" + op.name + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == name) return i;
  return std::nullopt;
}

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

Formula Formula::falsum() {
  static const Formula bottom(std::make_shared<const Node>(Node{Kind::Falsum, {}, {}}));
  return bottom;
}

Formula Formula::truth() { return neg(falsum()); }

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Neg, {}, {std::move(f)}}));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::disj(Formula a, Formula b) { return neg(conj(neg(std::move(a)), neg(std::move(b)))); }

Formula Formula::implies(Formula a, Formula b) { return neg(conj(std::move(a), neg(std::move(b)))); }

Formula Formula::iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

Formula Formula::modal(std::string op, std::vector<Formula> args) {
  return Formula(std::make_shared<const Node>(Node{Kind::Modal, std::move(op), std::move(args)}));
}

namespace {

template <class Join>
Formula fold(const std::vector<Formula>& fs, std::size_t lo, std::size_t hi, Join join) {
  if (hi - lo <= 32) {
    Formula acc = fs[lo];
    for (std::size_t i = lo + 1; i < hi; ++i) acc = join(acc, fs[i]);
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return join(fold(fs, lo, mid, join), fold(fs, mid, hi, join));
}

}  // namespace

Formula Formula::conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return truth();
  return fold(fs, 0, fs.size(), [](const Formula& a, const Formula& b) { return conj(a, b); });
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return falsum();
  return fold(fs, 0, fs.size(), [](const Formula& a, const Formula& b) { return disj(a, b); });
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<Formula>& Formula::children() const { return node_->children; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name()) return false;
  const auto& a = children();
  const auto& b = other.children();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_set_literal(const std::string& var_name) { return !var_name.empty() && var_name.front() == '{'; }

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { End, Var, SetLit, True, False, Not, And, Or, Implies, Iff, LParen, RParen, Comma, Modal };

struct Token {
  Tok type;
  std::string text;  // variable name, set literal, or modal operator name
  std::size_t pos;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s, const ParseOptions& opts) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    const std::size_t start = i;
    const char c = s[i];
    auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
    if (starts("<->")) {
      out.push_back({Tok::Iff, {}, start});
      i += 3;
    } else if (starts("<>")) {
      out.push_back({Tok::Modal, "<>", start});
      i += 2;
    } else if (starts("->")) {
      out.push_back({Tok::Implies, {}, start});
      i += 2;
    } else if (starts("[]")) {
      out.push_back({Tok::Modal, "[]", start});
      i += 2;
    } else if (c == '[') {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      if (j == i + 1 || j >= s.size() || s[j] != ']') throw ParseError("malformed modality", start);
      out.push_back({Tok::Modal, std::string(s.substr(i + 1, j - i - 1)), start});
      i = j + 1;
    } else if (c == '{') {
      if (!opts.set_literals) throw ParseError("set literal not allowed here", start);
      std::size_t j = i + 1;
      std::string lit = "{";
      while (j < s.size() && s[j] != '}') {
        const char d = s[j];
        if (ident_char(d) || d == ',') {
          lit.push_back(d);
        } else if (!std::isspace(static_cast<unsigned char>(d))) {
          throw ParseError("bad character in set literal", j);
        }
        ++j;
      }
      if (j >= s.size()) throw ParseError("unterminated set literal", start);
      lit.push_back('}');
      out.push_back({Tok::SetLit, lit, start});
      i = j + 1;
    } else if (c == '~') {
      out.push_back({Tok::Not, {}, start});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, {}, start});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, {}, start});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, {}, start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, {}, start});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, {}, start});
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      if (word == "true") {
        out.push_back({Tok::True, {}, start});
      } else if (word == "false") {
        out.push_back({Tok::False, {}, start});
      } else if (std::islower(static_cast<unsigned char>(c))) {
        out.push_back({Tok::Var, word, start});
      } else {
        throw ParseError("variables must start with a lowercase letter", start);
      }
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, {}, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const Signature& sig) : toks_(std::move(toks)), sig_(sig) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().type != Tok::End) throw ParseError("unexpected trailing input", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  void expect(Tok t, const char* what) {
    if (peek().type != t) throw ParseError(std::string("expected ") + what, peek().pos);
    ++pos_;
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (peek().type == Tok::Iff) {
      next();
      f = Formula::iff(f, parse_implies());
    }
    return f;
  }
  Formula parse_implies() {
    Formula f = parse_or();
    while (peek().type == Tok::Implies) {
      next();
      f = Formula::implies(f, parse_or());
    }
    return f;
  }
  Formula parse_or() {
    Formula f = parse_and();
    while (peek().type == Tok::Or) {
      next();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }
  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().type == Tok::And) {
      next();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }
  Formula parse_unary() {
    const Token& t = next();
    switch (t.type) {
      case Tok::Not:
        return Formula::neg(parse_unary());
      case Tok::True:
        return Formula::truth();
      case Tok::False:
        return Formula::falsum();
      case Tok::Var:
      case Tok::SetLit:
        return Formula::var(t.text);
      case Tok::LParen: {
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Modal: {
        auto idx = sig_.find(t.text);
        if (!idx) throw ParseError("unknown operator '" + t.text + "'", t.pos);
        const std::size_t arity = sig_.at(*idx).arity;
        std::vector<Formula> args;
        if (arity == 1) {
          args.push_back(parse_unary());
        } else if (arity > 1) {
          expect(Tok::LParen, "'(' after operator of arity > 1");
          args.push_back(parse_iff());
          while (peek().type == Tok::Comma) {
            next();
            args.push_back(parse_iff());
          }
          expect(Tok::RParen, "')'");
          if (args.size() != arity)
            throw ParseError("operator '" + t.text + "' expects " + std::to_string(arity) + " arguments, got " +
                                 std::to_string(args.size()),
                             t.pos);
        }
        return Formula::modal(t.text, std::move(args));
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

// Printing precedence: higher binds tighter.
constexpr int kIff = 1, kImplies = 2, kOr = 3, kAnd = 4, kUnary = 5;

struct Sugar {
  int prec;
  const char* op;  // nullptr for unary / atoms
  const Formula* lhs;
  const Formula* rhs;
};

bool is_neg(const Formula& f) { return f.kind() == Kind::Neg; }

// a <-> b  ==  ~(a & ~b) & ~(b & ~a)
bool match_iff(const Formula& f, const Formula*& a, const Formula*& b) {
  if (f.kind() != Kind::And) return false;
  const Formula& l = f.child(0);
  const Formula& r = f.child(1);
  if (!is_neg(l) || !is_neg(r)) return false;
  const Formula& li = l.child(0);
  const Formula& ri = r.child(0);
  if (li.kind() != Kind::And || ri.kind() != Kind::And) return false;
  if (!is_neg(li.child(1)) || !is_neg(ri.child(1))) return false;
  if (li.child(0) != ri.child(1).child(0) || ri.child(0) != li.child(1).child(0)) return false;
  a = &li.child(0);
  b = &li.child(1).child(0);
  return true;
}

void print_rec(const Formula& f, std::string& out);

void print_operand(const Formula& f, int prec, bool wrap_equal, std::string& out);

int precedence(const Formula& f) {
  const Formula *a = nullptr, *b = nullptr;
  switch (f.kind()) {
    case Kind::Var:
    case Kind::Falsum:
    case Kind::Modal:
      return kUnary;
    case Kind::And:
      return match_iff(f, a, b) ? kIff : kAnd;
    case Kind::Neg: {
      const Formula& c = f.child(0);
      if (c.kind() == Kind::Falsum) return kUnary;
      if (c.kind() == Kind::And) {
        if (is_neg(c.child(0)) && is_neg(c.child(1))) return kOr;
        if (is_neg(c.child(1))) return kImplies;
      }
      return kUnary;
    }
  }
  return kUnary;
}

void print_binary(const Formula& l, const char* op, const Formula& r, int prec, std::string& out) {
  print_operand(l, prec, false, out);
  out += ' ';
  out += op;
  out += ' ';
  print_operand(r, prec, true, out);
}

void print_operand(const Formula& f, int prec, bool wrap_equal, std::string& out) {
  const int p = precedence(f);
  const bool wrap = p < prec || (wrap_equal && p == prec);
  if (wrap) out += '(';
  print_rec(f, out);
  if (wrap) out += ')';
}

void print_modal(const Formula& f, std::string& out) {
  const std::string& op = f.name();
  if (op == "<>" || op == "[]") {
    out += op;
  } else {
    out += '[';
    out += op;
    out += ']';
  }
  const auto& args = f.children();
  if (args.size() == 1) {
    print_operand(args[0], kUnary, false, out);
  } else if (!args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ", ";
      print_rec(args[i], out);
    }
    out += ')';
  }
}

void print_rec(const Formula& f, std::string& out) {
  const Formula *a = nullptr, *b = nullptr;
  switch (f.kind()) {
    case Kind::Var:
      out += f.name();
      return;
    case Kind::Falsum:
      out += "false";
      return;
    case Kind::Modal:
      print_modal(f, out);
      return;
    case Kind::And:
      if (match_iff(f, a, b)) {
        print_binary(*a, "<->", *b, kIff, out);
      } else {
        print_binary(f.child(0), "&", f.child(1), kAnd, out);
      }
      return;
    case Kind::Neg: {
      const Formula& c = f.child(0);
      if (c.kind() == Kind::Falsum) {
        out += "true";
        return;
      }
      const int p = precedence(f);
      if (p == kOr) {
        print_binary(c.child(0).child(0), "|", c.child(1).child(0), kOr, out);
        return;
      }
      if (p == kImplies) {
        print_binary(c.child(0), "->", c.child(1).child(0), kImplies, out);
        return;
      }
      out += '~';
      print_operand(c, kUnary, false, out);
      return;
    }
  }
}

}  // namespace

Formula parse(std::string_view text, const Signature& sig, ParseOptions opts) {
  Parser p(lex(text, opts), sig);
  return p.parse_all();
}

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

std::size_t rank(const Formula& f) {
  std::unordered_map<const void*, std::size_t> memo;
  std::function<std::size_t(const Formula&)> go = [&](const Formula& g) -> std::size_t {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    std::size_t r = 0;
    for (const auto& c : g.children()) r = std::max(r, go(c));
    if (g.kind() == Kind::Modal) ++r;
    memo.emplace(g.id(), r);
    return r;
  };
  return go(f);
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  std::set<const void*> seen;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    if (!seen.insert(g.id()).second) return;
    if (g.kind() == Kind::Var) out.insert(g.name());
    for (const auto& c : g.children()) go(c);
  };
  go(f);
  return out;
}

std::size_t dag_size(const Formula& f) {
  std::set<const void*> seen;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    if (!seen.insert(g.id()).second) return;
    for (const auto& c : g.children()) go(c);
  };
  go(f);
  return seen.size();
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& map) {
  std::unordered_map<const void*, Formula> memo;
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    Formula out = g;
    switch (g.kind()) {
      case Kind::Var:
        if (auto it = map.find(g.name()); it != map.end()) out = it->second;
        break;
      case Kind::Falsum:
        break;
      case Kind::Neg:
        out = Formula::neg(go(g.child(0)));
        break;
      case Kind::And:
        out = Formula::conj(go(g.child(0)), go(g.child(1)));
        break;
      case Kind::Modal: {
        std::vector<Formula> args;
        for (const auto& c : g.children()) args.push_back(go(c));
        out = Formula::modal(g.name(), std::move(args));
        break;
      }
    }
    memo.emplace(g.id(), out);
    return out;
  };
  return go(f);
}

void check_signature(const Formula& f, const Signature& sig) {
  std::set<const void*> seen;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    if (!seen.insert(g.id()).second) return;
    if (g.kind() == Kind::Modal) {
      auto idx = sig.find(g.name());
      if (!idx) throw PreconditionError("unknown operator '" + g.name() + "'");
      if (sig.at(*idx).arity != g.children().size())
        throw PreconditionError("arity mismatch for operator '" + g.name() + "'");
    }
    for (const auto& c : g.children()) go(c);
  };
  go(f);
}

}  // namespace cml
