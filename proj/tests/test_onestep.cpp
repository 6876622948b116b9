#include "doctest.h"

#include "cml/errors.hpp"
#include "cml/logic.hpp"
#include "cml/onestep.hpp"
#include "cml/subalgebra.hpp"

using namespace cml;

namespace {
Formula sets(const char* s, const LogicPtr& l) {
  ParseOptions po;
  po.set_literals = true;
  return parse(s, l->sig, po);
}
}  // namespace

TEST_SUITE("onestep") {
  TEST_CASE("interpolable subalgebras") {
    const Subalgebra a1(3, {0b001, 0b110}), a2(3, {0b011, 0b100});
    CHECK(meet(a1, a2).atom_count() == 1);
    const auto w = interpolable_violation(a1, a2);
    REQUIRE(w.has_value());
    CHECK(*w == std::pair<Mask, Mask>{0b001, 0b011});
    CHECK_FALSE(interpolable_violation(a1, a1).has_value());
    const Subalgebra b1(4, {0b0011, 0b1100}), b2(4, {0b0101, 0b1010});
    CHECK(meet(b1, b2).atom_count() == 1);
    CHECK_FALSE(interpolable_violation(b1, b2).has_value());
  }

  TEST_CASE("generated subalgebras and canonical projections") {
    const std::vector<Mask> gens{0b0011, 0b0110};
    const auto a = Subalgebra::generated(4, gens);
    CHECK(a.atom_count() == 4);
    CHECK(a.contains(0b0011));
    CHECK(a.members().size() == 16);
    const auto t = Subalgebra::trivial(4);
    CHECK(a.refines(t));
    const auto p = canonical_projection(a, t);
    CHECK(p.dom().size() == 4);
    CHECK(p.cod().size() == 1);
  }

  TEST_CASE("invariant subalgebras") {
    CHECK(invariant_subalgebra(FinFun(3, 1, {0, 0, 0})).atom_count() == 1);
    CHECK(invariant_subalgebra(FinFun::identity(FinSet(3))).atom_count() == 3);
    const FinSet x({"a1", "a2", "a3"}), y({"b1", "b2", "b3"}), z({"c1", "c2"});
    const auto pb = pullback(FinFun(x, z, {0, 0, 1}), FinFun(y, z, {0, 1, 1}));
    const auto inv = invariant_subalgebra(pb.pi1);
    CHECK(inv.atoms() == std::vector<Mask>{0b0001, 0b0010, 0b1100});
  }

  TEST_CASE("one-step evaluation") {
    auto k = logic_by_name("K");
    const auto ctx = subset_context(FinSet(2));
    const auto ext = eval_onestep(*k, sets("<>{0}", k), ctx);
    const auto tab = k->functor->tabulate(2);
    std::set<Code> got;
    for_each_bit(ext, [&](std::size_t i) { got.insert(tab->elements[i]); });
    CHECK(got == std::set<Code>{0b01, 0b11});
    auto n = logic_by_name("N");
    CHECK(eval_onestep(*n, sets("[]{0}", n), ctx).count() == 8);
    CHECK(eval_onestep(*k, sets("<>{0} & ~<>{0}", k), ctx).none());
  }

  TEST_CASE("one-step satisfiability") {
    CHECK(onestep_sat(*logic_by_name("K"), parse("<>p & <>~p", logic_by_name("K")->sig)).sat);
    CHECK_FALSE(onestep_sat(*logic_by_name("N"), parse("[]p & ~[]p", logic_by_name("N")->sig)).sat);
    auto nv = logic_by_name("NVEE");
    CHECK_FALSE(onestep_sat(*nv, parse("~[](p | q) & ~[](~p | r)", nv->sig)).sat);
    CHECK(onestep_sat(*nv, parse("~[](p | q) & [](~p | r)", nv->sig)).sat);
    CHECK_THROWS_AS(onestep_sat(*logic_by_name("K"), parse("<><>p", logic_by_name("K")->sig)), PreconditionError);
  }

  TEST_CASE("literal oracles agree with tabulation") {
    for (const char* name : {"K", "KD", "N", "M", "NVEE"}) {
      auto l = logic_by_name(name);
      CAPTURE(name);
      for (const char* s : {"<>p & ~<>q", "<>p & ~<>(p | q) ", "~<>p & ~<>~p", "<>(p & q) & ~<>p", "<>false",
                            "~<>true", "<>p & <>~p & ~<>q"}) {
        std::string text = s;
        if (l->sig.at(0).name == "[]")
          for (auto& c : text)
            if (c == '<') c = '[';
            else if (c == '>') c = ']';
        const Formula f = parse(text, l->sig);
        const auto ctx = valuation_context({"p", "q"});
        CAPTURE(text);
        CHECK(symbolic_onestep_sat(*l, f, ctx) == eval_onestep(*l, f, ctx).any());
      }
    }
  }

  TEST_CASE("one-step uniform interpolant") {
    auto k = logic_by_name("K");
    const auto ctx = subset_context(FinSet({"1", "2"}));
    const auto full = Subalgebra::full(2), triv = Subalgebra::trivial(2);
    const auto r = onestep_uniform_interpolant(*k, sets("<>{1}", k), ctx, full, triv);
    CHECK(r.extension == eval_onestep(*k, sets("<>{1,2}", k), ctx));
    CHECK(eval_onestep(*k, r.formula, ctx) == r.extension);
    const auto bot = onestep_uniform_interpolant(*k, sets("<>{1} & ~<>{1}", k), ctx, full, triv);
    CHECK(bot.extension.none());
    const auto same = onestep_uniform_interpolant(*k, sets("<>{1} & ~<>{2}", k), ctx, full, full);
    CHECK(same.extension == same.phi_extension);
  }

  TEST_CASE("uniform interpolant matches the definitional conjunction") {
    for (const char* name : {"K", "N", "M"}) {
      auto l = logic_by_name(name);
      const auto ctx = subset_context(FinSet(2));
      const auto a0 = Subalgebra::trivial(2), a1 = Subalgebra::full(2);
      const auto g0 = generated_algebra(*l, 2, a0);
      const std::string op = l->sig.at(0).name;
      const Formula phi = sets((op + "{0} & ~" + op + "{1}").c_str(), l);
      const auto r = onestep_uniform_interpolant(*l, phi, ctx, a1, a0);
      CHECK(r.extension == definitional_interpolant(g0, r.phi_extension));
    }
  }

  TEST_CASE("one-step interpolation sweeps") {
    CHECK(check_onestep_interpolation(*logic_by_name("N"), 3).holds);
    CHECK(check_onestep_interpolation(*logic_by_name("K"), 3).holds);
  }

  TEST_CASE("NVEE instance has no one-step interpolant") {
    auto nv = logic_by_name("NVEE");
    const auto ctx = valuation_context({"p", "q", "r"});
    const std::vector<Mask> gens{ctx.leaf("p")};
    const auto inst = onestep_interpolation_instance(*nv, parse("~[](p|q)", nv->sig), parse("[](~p|r)", nv->sig), ctx,
                                                     Subalgebra::generated(8, gens));
    CHECK(inst.implication_valid);
    CHECK_FALSE(inst.interpolant_exists);
    CHECK_FALSE(inst.blocking_atom.empty());
  }

  TEST_CASE("lemmas hold exhaustively on small carriers") {
    for (const char* name : {"K", "N", "M"}) {
      auto l = logic_by_name(name);
      CAPTURE(name);
      CHECK(check_can_mod(*l, 2).ok());
      CHECK(check_restriction(*l, 2).ok());
      CHECK(check_invariance(*l, 3).ok());
    }
  }

  TEST_CASE("maximal one-step theories") {
    const auto k = check_mss_iso(*logic_by_name("K"), 2);
    CHECK(k.theories == 4);
    CHECK(k.injective);
    const auto n = check_mss_iso(*logic_by_name("N"), 2);
    CHECK(n.theories == 16);
    CHECK(n.injective);
    Logic dull{"dull", Signature({{"t1", 1}, {"t2", 1}}), logic_by_name("K")->functor,
               {constant_lifting("t1", true), constant_lifting("t2", true)}, {}};
    const auto d = check_mss_iso(dull, 2);
    CHECK_FALSE(d.injective);
    CHECK_FALSE(d.separating);
    CHECK(d.consistent());
  }
}
