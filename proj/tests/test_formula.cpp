#include "doctest.h"

#include "cml/errors.hpp"
#include "cml/formula.hpp"
#include "cml/logic.hpp"

using namespace cml;

namespace {
Formula P(const char* s, const char* logic = "K") { return parse(s, logic_by_name(logic)->sig); }
Formula v(const char* n) { return Formula::var(n); }
}  // namespace

TEST_SUITE("formula-core") {
  TEST_CASE("parse builds the expected trees") {
    CHECK(P("<>(p & q)") == Formula::modal("<>", {Formula::conj(v("p"), v("q"))}));
    CHECK(P("~false") == Formula::neg(Formula::falsum()));
    CHECK(P("[m1]p", "W:Z/2") == Formula::modal("m1", {v("p")}));
    CHECK(P("[]p", "N") == Formula::modal("[]", {v("p")}));
  }

  TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(P("<>(p &"), ParseError);
    CHECK_THROWS_AS(P("[]p"), Error);
    try {
      P("p & & q");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.position() > 0);
    }
  }

  TEST_CASE("print round-trips") {
    for (const char* s : {"<>(p & <>q)", "~p | q", "p -> <>~p", "<>p <-> ~<>~p", "true", "false"}) {
      const Formula f = P(s);
      CHECK(P(print(f).c_str()) == f);
    }
  }

  TEST_CASE("rank") {
    CHECK(rank(P("p & q")) == 0);
    CHECK(rank(P("<>(p & <>q)")) == 2);
    CHECK(rank(P("[]p | ~[]q", "N")) == 1);
  }

  TEST_CASE("variables") {
    CHECK(variables(P("<>(p & q)")) == std::set<std::string>{"p", "q"});
    CHECK(variables(P("false")).empty());
    CHECK(variables(P("[]p | []p", "N")) == std::set<std::string>{"p"});
  }

  TEST_CASE("substitute") {
    CHECK(substitute(P("<>p"), {{"p", P("q & r")}}) == P("<>(q & r)"));
    CHECK(substitute(v("p"), {{"p", Formula::falsum()}}) == Formula::falsum());
    CHECK(substitute(P("[]p & q", "N"), {{"q", v("p")}}) == P("[]p & p", "N"));
  }

  TEST_CASE("shared nodes keep dag size small") {
    Formula f = v("p");
    for (int i = 0; i < 40; ++i) f = Formula::conj(f, f);
    CHECK(dag_size(f) <= 82);
  }

  TEST_CASE("large conjunctions stay shallow") {
    std::vector<Formula> fs;
    for (int i = 0; i < 100000; ++i) fs.push_back(v("p"));
    const Formula c = Formula::conj_all(fs);
    CHECK(variables(c).size() == 1);
    CHECK(rank(c) == 0);
  }

  TEST_CASE("signature checks") {
    CHECK_THROWS_AS(check_signature(Formula::modal("[]", {v("p")}), logic_by_name("K")->sig), Error);
    CHECK_NOTHROW(check_signature(Formula::modal("<>", {v("p")}), logic_by_name("K")->sig));
  }

  TEST_CASE("set literals") {
    ParseOptions po;
    po.set_literals = true;
    const Formula f = parse("<>{a, b} & ~<>{}", logic_by_name("K")->sig, po);
    CHECK(variables(f) == std::set<std::string>{"{a,b}", "{}"});
    CHECK(is_set_literal("{a,b}"));
    CHECK_FALSE(is_set_literal("p"));
  }
}
