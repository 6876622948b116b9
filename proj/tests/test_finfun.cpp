#include "doctest.h"

#include <memory>

#include "cml/errors.hpp"
#include "cml/lifting.hpp"
#include "cml/logic.hpp"
#include "cml/monoid.hpp"
#include "cml/preservation.hpp"

using namespace cml;

namespace {
FunctorPtr F(const char* logic) { return logic_by_name(logic)->functor; }
}  // namespace

TEST_SUITE("finfun-lab") {
  TEST_CASE("pullback of the neighbourhood cospan") {
    const FinSet x({"a1", "a2", "a3"}), y({"b1", "b2", "b3"}), z({"c1", "c2"});
    const FinFun f(x, z, {0, 0, 1}), g(y, z, {0, 1, 1});
    const auto pb = pullback(f, g);
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(pb.pairs == std::vector<P>{{0, 0}, {1, 0}, {2, 1}, {2, 2}});
    CHECK(pb.carrier.label(0) == "(a1,b1)");
    for (std::size_t i = 0; i < pb.carrier.size(); ++i) CHECK(f(pb.pi1(i)) == g(pb.pi2(i)));
  }

  TEST_CASE("pullback along identities and into 1") {
    CHECK(pullback(FinFun::identity(FinSet(3)), FinFun::identity(FinSet(3))).carrier.size() == 3);
    CHECK(pullback(FinFun(3, 1, {0, 0, 0}), FinFun(2, 1, {0, 0})).carrier.size() == 6);
  }

  TEST_CASE("functor element counts") {
    CHECK(F("K")->count(3) == 8);
    CHECK(F("KD")->count(3) == 7);
    CHECK(F("N")->count(2) == 16);
    CHECK(F("M")->count(2) == 6);
    CHECK(F("F32")->count(2) == 8);
    CHECK(F("W:Z/2")->count(3) == 8);
    CHECK(F("N")->tabulate(2)->size() == 16);
    CHECK_THROWS_AS(F("N")->tabulate(5), BudgetExceeded);
  }

  TEST_CASE("functor laws hold") {
    for (const char* l : {"K", "KD", "N", "M", "NVEE", "F32", "W:Z/2"}) {
      CAPTURE(l);
      CHECK_FALSE(check_functor_laws(*F(l), 3).has_value());
      CHECK_FALSE(check_closure(*F(l), 3).has_value());
    }
  }

  TEST_CASE("F32 constant surjection fails with the paper pair") {
    auto f32 = F("F32");
    const FinSet x({"a", "b"});
    const FinFun f(x, FinSet({"b"}), {0, 0});
    const Code u = f32->parse_element("(b,b,a)", x), v = f32->parse_element("(a,b,b)", x);
    const auto q = check_weak_lift(*f32, f, f, kDefaultElementBudget, std::make_pair(u, v));
    CHECK_FALSE(q.lifts);
    REQUIRE(q.witness.has_value());
    CHECK(f32->render(q.witness->first, x) == "(b,b,a)");
    CHECK(f32->render(q.witness->second, x) == "(a,b,b)");
    const auto all = check_weak_lift(*f32, f, f);
    CHECK_FALSE(all.lifts);
    CHECK(all.failing_pairs > 0);
  }

  TEST_CASE("preservation sweeps") {
    const auto m = sweep_preservation(*F("M"), PreservationProperty::SWPB, 2);
    CHECK(m.fails == 0);
    CHECK(m.lifts > 0);
    CHECK(m.specialized_disagreements == 0);
    const auto f32 = sweep_preservation(*F("F32"), PreservationProperty::SWPB, 2);
    CHECK(f32.fails >= 1);
    const auto w = sweep_preservation(*F("W:Z/2"), PreservationProperty::SWPB, 3);
    CHECK(w.fails == 0);
    CHECK(w.specialized_disagreements == 0);
    const auto k = sweep_preservation(*F("K"), PreservationProperty::WPB, 2);
    CHECK(k.fails == 0);
  }

  TEST_CASE("naturality") {
    auto l = logic_by_name("K");
    CHECK(check_naturality(l->liftings[0], *l->functor, 3).holds);
    auto n = logic_by_name("N");
    CHECK(check_naturality(n->liftings[0], *n->functor, 2).holds);
    const Lifting d = diamond_lifting();
    Lifting broken{"bad", 1, [d](std::size_t n, Code e, std::span<const Mask> a) {
                     return d.holds(n, e, a) != (n == 2 && e == 1 && a[0] == 1);
                   }};
    const auto v = check_naturality(broken, *l->functor, 2);
    CHECK_FALSE(v.holds);
    CHECK_FALSE(v.witness.empty());
    CHECK(check_yoneda(l->liftings[0], *l->functor, 3).holds);
  }

  TEST_CASE("monotonicity") {
    auto k = logic_by_name("K");
    CHECK(check_monotone(k->liftings[0], *k->functor, 3).holds);
    auto n = logic_by_name("N");
    const auto v = check_monotone(n->liftings[0], *n->functor, 2);
    CHECK_FALSE(v.holds);
    CHECK_FALSE(v.witness.empty());
    auto m = logic_by_name("M");
    CHECK(check_monotone(m->liftings[0], *m->functor, 3).holds);
  }

  TEST_CASE("separation") {
    for (auto [name, max] : {std::pair{"K", 4}, {"N", 3}, {"W:Z/2", 3}}) {
      auto l = logic_by_name(name);
      CHECK(check_separating(l->liftings, *l->functor, max).separating);
    }
    std::vector<Lifting> dull{constant_lifting("t1", true), constant_lifting("t2", true)};
    const auto v = check_separating(dull, *F("K"), 2);
    CHECK_FALSE(v.separating);
    CHECK(v.pair.has_value());
  }

  TEST_CASE("refinability") {
    CHECK(check_refinable(Monoid::cyclic(2), 3).refinable);
    CHECK(check_refinable(Monoid::cyclic(3), 3).refinable);
    bool found = false;
    for (const auto& m : commutative_monoids(4)) {
      const auto v = check_refinable(m, 3);
      if (!v.refinable) {
        found = true;
        CHECK_FALSE(v.a.empty());
        CHECK(m.sum(v.a) == m.sum(v.b));
      }
    }
    CHECK(found);
  }

  TEST_CASE("positivity") {
    const auto z2 = check_positive(Monoid::cyclic(2));
    CHECK_FALSE(z2.positive);
    REQUIRE(z2.witness.has_value());
    CHECK(*z2.witness == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(check_positive(Monoid::join_semilattice()).positive);
    CHECK(check_positive(Monoid::trivial()).positive);
  }

  TEST_CASE("monotone indistinguishability") {
    CHECK(monotone_indistinguishable(Monoid::cyclic(2), 1, 2).indistinguishable);
    CHECK(monotone_indistinguishable(Monoid::cyclic(4), 2, 1).indistinguishable);
    CHECK_THROWS_AS(monotone_indistinguishable(Monoid::cyclic(2), 0, 1), PreconditionError);
  }

  TEST_CASE("M compatibility and the Up-construction") {
    auto m = std::dynamic_pointer_cast<const NeighbourhoodFunctor>(F("M"));
    REQUIRE(m);
    const FinFun f(2, 1, {0, 0});
    const Code a1 = NeighbourhoodFunctor::up_closure(2, 0b0110), a2 = NeighbourhoodFunctor::up_closure(2, 0b1000);
    auto v = compatibility_check(*m, a1, a2, f, f);
    CHECK(v.compatible);
    CHECK(v.images_equal);
    v = compatibility_check(*m, 0b1111, 0, f, f);
    CHECK_FALSE(v.compatible);
    CHECK_FALSE(v.images_equal);
    const FinFun id = FinFun::identity(FinSet(2));
    v = compatibility_check(*m, a1, a1, id, id);
    CHECK(v.compatible);
    CHECK(v.images_equal);
    const auto pb = pullback(f, f);
    const Code beta = up_construction(f, f, a1, a2);
    CHECK(m->contains(pb.carrier.size(), beta));
    CHECK(m->act(pb.pi1, beta) == a1);
    CHECK(m->act(pb.pi2, beta) == a2);
  }

  TEST_CASE("N 3-3-2 cospan: exhaustive verdict and constraint analysis agree") {
    const FinFun f(3, 2, {0, 0, 1}), g(3, 2, {0, 1, 1});
    const auto v = check_weak_lift(*F("N"), f, g);
    const auto c = neighbourhood_constraint_analysis(f, g);
    CHECK(v.lifts == c.lifts);
    CHECK(v.compatible_pairs == c.compatible_pairs);
  }
}
