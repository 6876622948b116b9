#include "doctest.h"

#include "cml/errors.hpp"
#include "cml/interpolation.hpp"
#include "cml/satisfiability.hpp"

using namespace cml;

namespace {
LogicPtr L(const char* n) { return logic_by_name(n); }
Formula P(const LogicPtr& l, const char* s) { return parse(s, l->sig); }
}  // namespace

TEST_SUITE("interpolation") {
  TEST_CASE("uniform interpolant of a conjunction of diamonds") {
    auto k = L("K");
    const auto r = uniform_interpolant(k, P(k, "<>p & <>q"), {"p"});
    CHECK(equivalent(k, r.interpolant, P(k, "<>p")));
    CHECK(r.keep == std::vector<std::string>{"p"});
  }

  TEST_CASE("trivial cases") {
    auto k = L("K");
    const Formula phi = P(k, "<>(p & ~q) & ~<>q");
    CHECK(equivalent(k, uniform_interpolant(k, phi, {"p", "q"}).interpolant, phi));
    CHECK(equivalent(k, uniform_interpolant(k, P(k, "<>p & ~<>p"), {"p"}).interpolant, Formula::falsum()));
    CHECK(equivalent(k, uniform_interpolant(k, Formula::truth(), {}).interpolant, Formula::truth()));
  }

  TEST_CASE("definitional oracle agrees") {
    auto k = L("K");
    const auto o = uniform_interpolant_oracle(k, P(k, "<>(p & q)"), {"p"});
    CHECK(equivalent(k, o.interpolant, P(k, "<>p")));
    for (const char* s : {"<>(p & q) & ~<>~p", "<>q -> <>p", "p & <>~q"}) {
      const auto a = uniform_interpolant(k, P(k, s), {"p"});
      const auto b = uniform_interpolant_oracle(k, P(k, s), {"p"});
      CHECK(a.denotation == b.denotation);
    }
  }

  TEST_CASE("verification against consequences over V2") {
    auto k = L("K");
    const Formula phi = P(k, "<>p & <>q");
    const auto ok = verify_uniform(k, phi, {"p"}, P(k, "<>p"), 1, {"p", "r"});
    CHECK(ok.passed);
    CHECK(ok.implication);
    CHECK(ok.failures.empty());
    CHECK(ok.psi_space == 64);
    const auto bad = verify_uniform(k, phi, {"p"}, Formula::truth(), 1, {"p", "r"});
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.failures.empty());
    const auto self = verify_uniform(k, P(k, "<>p"), {"p"}, P(k, "<>p"), 1, {"p", "r"});
    CHECK(self.passed);
    CHECK_THROWS_AS(verify_uniform(k, phi, {"p"}, P(k, "<>q"), 1, {"p", "r"}), PreconditionError);
  }

  TEST_CASE("Craig interpolation") {
    auto nv = L("NVEE");
    CHECK(valid(nv, P(nv, "~[](p | q) -> [](~p | r)")));
    const auto none = craig_search(nv, P(nv, "~[](p | q)"), P(nv, "[](~p | r)"), 1);
    CHECK(none.implication_valid);
    CHECK_FALSE(none.interpolant.has_value());
    CHECK(none.shared == std::vector<std::string>{"p"});
    auto n = L("N");
    const auto some = craig_search(n, P(n, "[]p & []q"), P(n, "[]p | []r"), 1);
    REQUIRE(some.interpolant.has_value());
    CHECK(equivalent(n, *some.interpolant, P(n, "[]p")));
    auto k = L("K");
    const auto same = craig_search(k, P(k, "<>p"), P(k, "<>p"), 1);
    REQUIRE(same.interpolant.has_value());
    CHECK(equivalent(k, *same.interpolant, P(k, "<>p")));
    CHECK_THROWS_AS(craig_search(k, P(k, "<>p"), P(k, "<>q"), 1), PreconditionError);
  }
}
