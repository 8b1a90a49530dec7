#include "doctest.h"
#include "oracles.hpp"
#include "propact/realform.hpp"
#include "propact/weyl.hpp"

using namespace propact;

TEST_CASE("catalog lookups") {
  CHECK(lookup_real_form("so(4,4)").restricted->name() == "D4");
  CHECK(lookup_real_form("sl(3,R)").restricted->name() == "A2");
  const auto& u = lookup_real_form("u_appendix");
  CHECK_FALSE(u.restricted);
  CHECK(u.abelian_summand_dim == 2);
  REQUIRE(u.simple_factors.size() == 1);
  CHECK(u.simple_factors[0].name == "sl(2,R)");
  CHECK_THROWS_AS(lookup_real_form("so(99,99)"), UnknownRealForm);
}

TEST_CASE("catalog covers the required families") {
  const auto type_of = [](const char* n) { return lookup_real_form(n).restricted->name(); };
  CHECK(type_of("sl(5,R)") == "A4");
  CHECK(type_of("su*(8)") == "A3");
  CHECK(type_of("so(5,5)") == "D5");
  CHECK(type_of("so(3,4)") == "B3");
  CHECK(type_of("so(2,7)") == "B2");
  CHECK(type_of("sp(3,R)") == "C3");
  CHECK(type_of("su(2,5)") == "BC2");
  CHECK(type_of("su(3,3)") == "C3");
  CHECK(type_of("sp(1,4)") == "BC1");
  CHECK(type_of("sp(2,2)") == "C2");
  CHECK(type_of("sl(4,C)") == "A3");
  CHECK(type_of("e6_I") == "E6");
  CHECK(type_of("e6_III") == "BC2");
  CHECK(type_of("e6_IV") == "A2");
  CHECK(type_of("e7_VII") == "C3");
  CHECK(type_of("e8_VIII") == "E8");
  CHECK(type_of("e8_IX") == "F4");
  CHECK(type_of("f4_I") == "F4");
  CHECK(lookup_real_form("sl(4,C)").complex);
}

TEST_CASE("rank profiles") {
  CHECK(rank_profile(lookup_real_form("so(4,4)")) == RankProfile{4, 4, true});
  CHECK(rank_profile(lookup_real_form("u_appendix")) == RankProfile{3, 1, false});
  CHECK(rank_profile(lookup_real_form("sl(4,R)")) == RankProfile{3, 2, false});
  CHECK(rank_profile(lookup_real_form("sl(2,R)")) == RankProfile{1, 1, true});
  CHECK(rank_profile(lookup_real_form("so(2,2)")) == RankProfile{2, 2, true});
  CHECK(rank_profile({}, 0) == RankProfile{0, 0, true});
  CHECK(rank_profile({parse_root_system_type("A2"), parse_root_system_type("A1")}, 1) == RankProfile{4, 2, false});
}

TEST_CASE("rank table examples") {
  CHECK(rank_profile(lookup_real_form("sl(5,R)")) == RankProfile{4, 2, false});
  CHECK(rank_profile(lookup_real_form("su*(8)")) == RankProfile{3, 2, false});
  CHECK(rank_profile(lookup_real_form("so(5,5)")) == RankProfile{5, 4, false});
  CHECK(rank_profile(lookup_real_form("e6_I")) == RankProfile{6, 4, false});
  CHECK(rank_profile(lookup_real_form("e6_IV")) == RankProfile{2, 1, false});
  CHECK(table1_prediction(lookup_real_form("sl(6,R)")) == std::pair{3, 5});
  CHECK(table1_prediction(lookup_real_form("so(3,3)")) == std::pair{2, 3});  // via sl(4,R)
  CHECK_FALSE(table1_prediction(lookup_real_form("sp(3,R)")));
}

TEST_CASE("every catalog entry: ahyp agrees with the closed formula and inner means -w0 = id") {
  for (const auto& d : Catalog::builtin().entries()) {
    if (!d.restricted) continue;
    CAPTURE(d.name);
    const auto p = rank_profile(d);
    CHECK(p.real_rank == d.restricted->rank);
    CHECK(p.ahyp_rank == oracle::ahyp(*d.restricted));
    if (d.restricted->rank <= 8) {
      const WeylGroup w(RootSystem(*d.restricted));
      const bool minus_id = longest_element(w).matrix() == RatMat(-RatMat::Identity(w.ambient_dim(), w.ambient_dim()));
      // For A_n the realization has a normal direction the group fixes, so compare on the span.
      const bool on_span = minus_w0_fixed_space(w) == w.root_span();
      CHECK(p.inner == on_span);
      if (w.ambient_dim() == d.restricted->rank) CHECK(p.inner == minus_id);
    }
  }
}

TEST_CASE("reductive accounting") {
  const auto& u = lookup_real_form("u_appendix");
  const auto f = rank_profile(u.simple_factors[0]);
  const auto p = rank_profile(u);
  CHECK(p.real_rank == f.real_rank + u.abelian_summand_dim);
  CHECK(p.ahyp_rank == f.ahyp_rank);
}

TEST_CASE("catalog parsing") {
  const auto c = Catalog::from_json(R"J({"entries": [
    {"name": "x", "family": "A", "rank": 2},
    {"name": "y", "factors": ["x", "x"], "abelian_summand_dim": 1}]})J");
  CHECK(c.entries().size() == 2);
  CHECK(rank_profile(c.lookup("y")) == RankProfile{5, 2, false});
  CHECK_THROWS_AS(Catalog::from_json("{"), ParseError);
  CHECK_THROWS_AS(Catalog::from_json(R"J({"entries": [{"name": "x", "family": "A", "rank": 2},
                                                     {"name": "x", "family": "A", "rank": 3}]})J"),
                  ParseError);
  CHECK_THROWS_AS(Catalog::from_json(R"J({"entries": [{"name": "y", "factors": ["nope"]}]})J"), ParseError);
  CHECK_THROWS_AS(Catalog::from_json(R"J({"entries": [{"name": "z", "family": "E", "rank": 5}]})J"), ParseError);
  CHECK_THROWS_AS(Catalog::from_json(R"J({"entries": [{"name": "w"}]})J"), ParseError);
  CHECK_THROWS_AS(c.lookup("q"), UnknownRealForm);
}

TEST_CASE("validation against the rank table") {
  const auto r = validate_against_table1();
  CHECK(r.table_ok());
  // 5 families at k = 1..3 where defined (sl(2k,R), su*(4k), so(2k+1,2k+1) need k >= 2) plus the two E6 rows.
  CHECK(r.rows.size() == 2 + 3 + 2 + 3 + 2 + 2);
  for (const auto& row : r.rows) {
    CAPTURE(row.form);
    CHECK(row.ok);
    CHECK(row.computed.ahyp_rank == row.expected_ahyp);
    CHECK(row.computed.real_rank == row.expected_real);
  }
  // The real forms all satisfy the completeness claim; complex sl(n,C) for n >= 3 does not.
  for (const auto& c : r.completeness) {
    CAPTURE(c.form);
    const auto& d = lookup_real_form(c.form);
    if (d.complex && d.restricted->rank >= 2)
      CHECK_FALSE(c.ok);
    else
      CHECK(c.ok);
  }
}
