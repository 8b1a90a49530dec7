#include <string>

#include "doctest.h"
#include "propact/report.hpp"

using namespace propact;

namespace {

Json report_of(const std::string& text, const RunOptions& opts = {}) {
  return run_report(parse_space_spec_text(text), opts);
}

bool chain_holds(const Json& d) {
  const bool c1 = d["c1"]["holds"].get<bool>();
  const bool c2 = d["c2"]["holds"].get<bool>();
  const bool c3 = d["c3"]["status"] == "true";
  return (!c3 || c2) && (!c2 || c1);
}

const char* kSl3 = R"J({"g": {"name": "sl(3,R)"}, "h": {"subsystem_generators": [[1,-1,0]], "named_form": "sl(2,R)"}})J";
const char* kSl4 = R"J({"g": {"name": "sl(4,R)"}, "h": {"subsystem_generators": [[1,-1,0,0]]}})J";

}  // namespace

TEST_CASE("SL(3,R)/SL(2,R) report") {
  const Json d = report_of(kSl3);
  CHECK(d["c1"]["holds"] == true);
  CHECK(d["c2"]["holds"] == false);
  REQUIRE(d["c2"].contains("witness"));
  CHECK(d["c2"]["witness"]["word"] == Json::array({2}));
  CHECK(d["c3"]["status"] == "false");
  CHECK(d["ranks"]["real_g"] == 2);
  CHECK(d["ranks"]["ahyp_h"] == 1);
  CHECK(chain_holds(d));
}

TEST_CASE("SL(4,R)/SL(2,R) report") {
  const Json d = report_of(kSl4);
  CHECK(d["c1"]["holds"] == true);
  CHECK(d["c2"]["holds"] == true);
  CHECK(d["c2"]["method"] == "rank_fast_path");
  CHECK(d["c3"]["status"] == "true");
  CHECK(d["c3"]["witness"] == Json::array({"3", "1", "-1", "-3"}));
}

TEST_CASE("SO(4,4)/U report refutes C3 from the sl2 list") {
  const Json d = report_of(R"J({"g": {"name": "so(4,4)"},
    "h": {"subsystem_generators": [[-1,1,0,0]], "extra_abelian_vectors": [[2,0,0,1],[0,0,1,0]],
          "named_form": "u_appendix"}})J");
  CHECK(d["c1"]["holds"] == true);
  CHECK(d["c2"]["holds"] == true);
  CHECK(d["c3"]["status"] == "false");
  CHECK(d["c3"]["method"] == "sl2_classification");
  CHECK(d["hypotheses"]["h_inner"] == false);
  CHECK(chain_holds(d));
}

TEST_CASE("non-inner h outside so(4,4) is not decidable") {
  const Json d = report_of(R"J({"g": {"name": "sl(4,R)"},
    "h": {"subsystem_generators": [[1,-1,0,0],[0,1,-1,0]]}})J");
  CHECK(d["hypotheses"]["h_inner"] == false);
  CHECK(d["c3"]["status"] == "not_decidable");
}

TEST_CASE("brute force can be forced from the file or the options") {
  const char* forced = R"J({"g": {"family": "A", "rank": 3}, "h": {"subsystem_generators": [[1,-1,0,0]]},
                          "options": {"force_bruteforce": true}})J";
  CHECK(report_of(forced)["c2"]["method"] == "benoist_bruteforce");
  RunOptions opts;
  opts.force_bruteforce = true;
  CHECK(report_of(kSl4, opts)["c2"]["method"] == "benoist_bruteforce");
  opts.force_bruteforce = false;
  CHECK(report_of(forced, opts)["c2"]["method"] == "rank_fast_path");
}

TEST_CASE("cap and consistency errors") {
  RunOptions opts;
  opts.enumeration_cap = 2;
  opts.force_bruteforce = true;
  CHECK_THROWS_AS(report_of(kSl3, opts), EnumerationCapExceeded);
  CHECK_THROWS_AS(report_of(R"J({"g": {"name": "sl(3,R)"},
      "h": {"subsystem_generators": [[1,-1,0]], "named_form": "sl(3,R)"}})J"),
                  ConsistencyViolation);
}

TEST_CASE("spec parsing errors") {
  CHECK_THROWS_AS(parse_space_spec_text("{"), ParseError);
  CHECK_THROWS_AS(parse_space_spec_text(R"J({"g": {"name": "sl(3,R)"}, "h": {}, "extra": 1})J"), ParseError);
  CHECK_THROWS_AS(parse_space_spec_text(R"J({"g": {"name": "nope"}, "h": {}})J"), ParseError);
  CHECK_THROWS_AS(parse_space_spec_text(R"J({"g": {"family": "E", "rank": 5}, "h": {}})J"), ParseError);
  CHECK_THROWS_AS(parse_space_spec_text(R"J({"g": {"name": "sl(3,R)"}, "h": {"subsystem_generators": [[1,-1]]}})J"),
                  ParseError);
  CHECK_THROWS_AS(parse_space_spec_text(R"J({"g": {"name": "sl(3,R)"}, "h": {"subsystem_generators": [[1.5,0,0]]}})J"),
                  ParseError);
  CHECK_THROWS_AS(load_space_spec("/nonexistent/spec.json"), ParseError);
}

TEST_CASE("rational coordinates in spec files") {
  const auto s = parse_space_spec_text(R"J({"g": {"name": "so(4,4)"},
    "h": {"subsystem_generators": [[-1,1,0,0]], "extra_abelian_vectors": [["1","0","0","1/2"],[0,0,1,0]]}})J");
  REQUIRE(s.embedding.extra_abelian_vectors.size() == 2);
  CHECK(s.embedding.extra_abelian_vectors[0](3) == Rational(1, 2));
}

TEST_CASE("reports are deterministic and text renders the same content") {
  const std::string a = report_of(kSl3).dump(2);
  const std::string b = report_of(kSl3).dump(2);
  CHECK(a == b);
  const std::string text = render_text(report_of(kSl3));
  CHECK(text.find("C1: true") != std::string::npos);
  CHECK(text.find("C2: false") != std::string::npos);
  CHECK(text.find("C3: false") != std::string::npos);
  CHECK(text.find("witness w = s2") != std::string::npos);
}

TEST_CASE("timing is opt-in") {
  CHECK_FALSE(report_of(kSl3).contains("timing_ms"));
  RunOptions opts;
  opts.timing = true;
  CHECK(report_of(kSl3, opts).contains("timing_ms"));
}

TEST_CASE("other documents") {
  const Json r = ranks_document("sl(4,R)");
  CHECK(r["profile"]["real_rank"] == 3);
  CHECK(r["profile"]["ahyp_rank"] == 2);
  CHECK(r["profile"]["inner"] == false);
  CHECK_THROWS_AS(ranks_document("nope"), UnknownRealForm);

  const Json t = table1_document();
  CHECK(t["table_ok"] == true);

  const Json a = appendix_so44_document();
  CHECK(a["ok"] == true);
  CHECK(a["c2"]["holds"] == true);
  CHECK(a["c3"]["holds"] == false);

  const Json c = catalog_verify_document();
  CHECK(c["ok"] == true);

  for (const auto* d : {&r, &t, &a, &c}) CHECK_FALSE(render_text(*d).empty());
}

TEST_CASE("serialization") {
  CHECK(to_json(Rational(-3, 6)) == "-1/2");
  CHECK(to_json(vec({1, 0, -2})) == Json::array({"1", "0", "-2"}));
  CHECK(vector_from_json(Json::array({1, "2/4", -3})) == RatVec(vec({1, 0, -3}) + RatVec(vec({0, 1, 0})) / 2));
  const Json w = to_json(WeylElement(RatMat::Identity(2, 2), std::vector<int>{0, 1}));
  CHECK(w["word"] == Json::array({1, 2}));
  CHECK_THROWS_AS(vector_from_json(Json::array({true})), ParseError);
}
