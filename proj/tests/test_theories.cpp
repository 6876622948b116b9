#include "doctest.h"

#include "cml/errors.hpp"
#include "cml/model.hpp"
#include "cml/satisfiability.hpp"
#include "cml/theory_space.hpp"

using namespace cml;

TEST_SUITE("theories") {
  TEST_CASE("stratum sizes") {
    const auto k = theory_space(logic_by_name("K"), {"p"}, 2);
    CHECK(k->size(0) == 2);
    CHECK(k->size(1) == 8);
    CHECK(k->size(2) == 512);
    CHECK(theory_space(logic_by_name("N"), {"p"}, 1)->size(1) == 32);
    CHECK(theory_space(logic_by_name("KD"), {"p"}, 1)->size(1) == 6);
    CHECK(theory_space(logic_by_name("M"), {"p", "q"}, 0)->size(0) == 4);
    CHECK_THROWS_AS(theory_space(logic_by_name("N"), {"p"}, 2), BudgetExceeded);
  }

  TEST_CASE("characteristic formulas denote singletons") {
    for (const char* name : {"K", "N", "W:Z/2"}) {
      const auto s = theory_space(logic_by_name(name), {"p"}, 1);
      for (std::size_t k = 0; k <= 1; ++k)
        for (std::size_t t = 0; t < s->size(k); ++t) {
          const Bits d = s->denote(s->characteristic(k, t), k);
          CHECK(d.count() == 1);
          CHECK(d.test(t));
        }
    }
    const auto z = theory_space(logic_by_name("K"), {"p"}, 0);
    CHECK(z->denote(z->characteristic(0, 1), 0).test(1));
    CHECK(print(z->characteristic(0, 1)) == "p");
  }

  TEST_CASE("projections commute with denotation") {
    const auto big = theory_space(logic_by_name("K"), {"p", "q"}, 1);
    const auto small = theory_space(logic_by_name("K"), {"p"}, 1);
    const auto pv = big->project_vars(*small, 1);
    const Formula phi = parse("<>p & ~<>~p", logic_by_name("K")->sig);
    const Bits ds = small->denote(phi, 1), db = big->denote(phi, 1);
    for (std::size_t t = 0; t < big->size(1); ++t) CHECK(db.test(t) == ds.test(pv[t]));
    const auto pd = big->project_depth(1);
    const Formula p = parse("p & ~q", logic_by_name("K")->sig);
    const Bits d0 = big->denote(p, 0), d1 = big->denote(p, 1);
    for (std::size_t t = 0; t < big->size(1); ++t) CHECK(d1.test(t) == d0.test(pd[t]));
  }

  TEST_CASE("extracted models realize their theories") {
    auto k = logic_by_name("K");
    const auto s = theory_space(k, {"p"}, 2);
    const Formula phi = parse("<>p & <>~<>p", k->sig);
    const Bits d = s->denote(phi, 2);
    REQUIRE(d.any());
    const auto t = d.find_first();
    const auto e = s->extract_model(2, t);
    CHECK(eval_model(*k, e.model, e.root, phi));
    CHECK(eval_model(*k, e.model, e.root, s->characteristic(2, t)));
    const auto leaf = s->extract_model(0, 1);
    CHECK(leaf.model.states.size() == 1);
    CHECK(eval_model(*k, leaf.model, leaf.root, Formula::var("p")));
  }

  TEST_CASE("graded model weights") {
    auto w = logic_by_name("W:Z/2");
    const Formula phi = parse("[m1]p & [m0]~p", w->sig);
    const auto v = sat(w, phi);
    REQUIRE(v.sat);
    REQUIRE(v.model);
    CHECK(eval_model(*w, *v.model, v.root, phi));
    CHECK(v.round_trip);
  }

  TEST_CASE("sat, valid, equivalent") {
    auto k = logic_by_name("K");
    const auto v = sat(k, parse("<>p & <>~p", k->sig));
    CHECK(v.sat);
    REQUIRE(v.model);
    CHECK(v.model->states.size() == 3);
    CHECK(v.model->dag);
    CHECK(v.round_trip);
    auto n = logic_by_name("N");
    CHECK(valid(n, parse("[]p -> []p", n->sig)));
    CHECK_FALSE(valid(n, parse("[]p -> [](p | q)", n->sig)));
    CHECK(valid(logic_by_name("M"), parse("[]p -> [](p | q)", n->sig)));
    CHECK(equivalent(k, parse("<>(p | q)", k->sig), parse("<>p | <>q", k->sig)));
    CHECK_FALSE(equivalent(k, parse("<>(p & q)", k->sig), parse("<>p & <>q", k->sig)));
    const auto r = refute(k, parse("<>p -> <>q", k->sig));
    CHECK(r.sat);
    REQUIRE(r.model.has_value());
    CHECK_FALSE(eval_model(*k, *r.model, r.root, parse("<>p -> <>q", k->sig)));
    CHECK(refute(n, parse("[]p -> [](p | q)", n->sig)).method == "symbolic");
  }

  TEST_CASE("symbolic fallback beyond the space budget") {
    auto n = logic_by_name("N");
    const auto v = sat(n, parse("[]p & ~[](p | q | r) & [](q & r)", n->sig));
    CHECK(v.sat);
    CHECK(v.method == "symbolic");
  }

  TEST_CASE("brute-force model search") {
    auto k = logic_by_name("K");
    const auto r = brute_model_search(*k, parse("<>p & <>~p", k->sig), 3);
    REQUIRE(r.model.has_value());
    CHECK(eval_model(*k, *r.model, r.state, parse("<>p & <>~p", k->sig)));
    auto n = logic_by_name("N");
    CHECK_FALSE(brute_model_search(*n, parse("[]p & ~[]p", n->sig), 2).model.has_value());
  }

  TEST_CASE("invalid models are rejected") {
    FiniteModel m;
    m.states = FinSet(1);
    m.coalg = {5};
    CHECK_THROWS_AS(check_model(*logic_by_name("K"), m), PreconditionError);
  }
}
