#include "chainsemi/claims.hpp"

#include <doctest.h>

#include <set>
#include <tuple>

#include "chainsemi/formats.hpp"

using namespace chainsemi;

namespace {

ClaimRequest single(const std::string& id, Family f, int n) {
  ClaimRequest request;
  request.claim_ids = {id};
  request.families = {f};
  request.n_min = request.n_max = n;
  return request;
}

}  // namespace

TEST_SUITE("claims") {

TEST_CASE("the registry is complete and consistently described") {
  CHECK(claim_registry().size() == 22);
  for (const std::string& id : claim_registry()) {
    CHECK(is_known_claim(id));
    CHECK_FALSE(claim_statement(id).empty());
  }
  CHECK_FALSE(is_known_claim("nope"));
  CHECK_THROWS_AS(claim_statement("nope"), Error);
}

TEST_CASE("every requested claim appears exactly once per family and n") {
  Workspace ws{Config{}};
  ClaimRequest request;
  request.families = {Family::CP, Family::OCP};
  request.n_min = 1;
  request.n_max = 2;
  const VerificationReport report = run_claims(ws, request);
  CHECK(report.claims.size() == claim_registry().size() * 2 * 2);
  std::set<std::tuple<std::string, Family, int>> seen;
  for (const ClaimResult& c : report.claims) {
    CHECK(seen.emplace(c.claim_id, c.family, c.n).second);
  }
}

TEST_CASE("unknown claims are rejected") {
  Workspace ws{Config{}};
  ClaimRequest request;
  request.claim_ids = {"THM9.9"};
  CHECK_THROWS_AS(run_claims(ws, request), Error);
}

TEST_CASE("the boundary kernel claim on the 4-chain") {
  Workspace ws{Config{}};
  const VerificationReport report = run_claims(ws, single("L2.6", Family::CP, 4));
  REQUIRE(report.claims.size() == 1);
  const ClaimResult& c = report.claims.front();
  CHECK(c.status == ClaimStatus::pass);
  CHECK(c.witness == std::vector<map_id>{188, 344, 436, 592});

  const VerificationReport ocp = run_claims(ws, single("L2.6", Family::OCP, 4));
  CHECK(ocp.claims.front().status == ClaimStatus::pass);
  CHECK(ocp.claims.front().witness == std::vector<map_id>{436, 592});
}

TEST_CASE("starred agreement claims run both engines") {
  Workspace ws{Config{}};
  const VerificationReport report = run_claims(ws, single("THM2.1.i", Family::ORCP, 3));
  const ClaimResult& c = report.claims.front();
  CHECK(c.status == ClaimStatus::pass);
  CHECK(c.method == "both");
}

TEST_CASE("the product counterexample claim verifies the boundary pair") {
  Workspace ws{Config{}};
  for (Family f : {Family::CP, Family::OCP, Family::ORCP}) {
    const VerificationReport report = run_claims(ws, single("R3.1", f, 3));
    const ClaimResult& c = report.claims.front();
    CHECK(c.status == ClaimStatus::pass);
    REQUIRE(c.witness.size() == 4);
  }
}

TEST_CASE("budget and hypothesis statuses") {
  Workspace ws{Config{}};  // default max_jstar_n = 3
  CHECK(run_claims(ws, single("C2.4", Family::CP, 4)).claims.front().status ==
        ClaimStatus::skipped_budget);
  CHECK(run_claims(ws, single("L2.6", Family::CP, 2)).claims.front().status ==
        ClaimStatus::hypothesis_not_met);
  CHECK(run_claims(ws, single("R2.7", Family::CP, 4)).claims.front().status ==
        ClaimStatus::hypothesis_not_met);
  CHECK(run_claims(ws, single("L3.3", Family::CP, 3)).claims.front().status ==
        ClaimStatus::hypothesis_not_met);
  CHECK(run_claims(ws, single("containment", Family::P, 2)).claims.front().status ==
        ClaimStatus::hypothesis_not_met);
}

TEST_CASE("config validation") {
  Config config;
  config.max_jstar_n = 5;
  CHECK_THROWS_WITH_AS(Workspace{config}, doctest::Contains("ConfigInvalid"), Error);
  Config config2;
  config2.max_oracle_n = 7;
  CHECK_THROWS_WITH_AS(Workspace{config2}, doctest::Contains("ConfigInvalid"), Error);
}

TEST_CASE("cross-checking methods on abundance claims") {
  Workspace ws{Config{}};
  ClaimRequest request = single("L2.5", Family::ORCP, 3);
  request.compare_methods = true;
  const VerificationReport report = run_claims(ws, request);
  CHECK(report.claims.front().status == ClaimStatus::pass);
  CHECK(report.claims.front().method == "both");
}

TEST_CASE("report serialization") {
  Workspace ws{Config{}};
  ClaimRequest request;
  request.claim_ids = {"closure", "containment", "THM2.1.iv"};
  request.families = {Family::ORCP};
  request.n_min = 1;
  request.n_max = 3;
  const VerificationReport report = run_claims(ws, request);

  SUBCASE("json is stable and runtime-free") {
    const auto j = report_json(report);
    CHECK(j["schema"] == "chainsemi/1");
    CHECK(j["claims"].size() == 9);
    for (const auto& entry : j["claims"]) {
      CHECK_FALSE(entry.contains("runtime_ms"));
      CHECK(entry.contains("claim_id"));
      CHECK(entry.contains("status"));
      CHECK(entry.contains("witness"));
    }
    CHECK(j["summary"]["fail"] == 0);
  }

  SUBCASE("repeated runs serialize byte-identically") {
    Workspace ws2{Config{}};
    const VerificationReport again = run_claims(ws2, request);
    CHECK(dump_json(report_json(report)) == dump_json(report_json(again)));
  }

  SUBCASE("the table carries runtimes") {
    const std::string table = report_table(report);
    CHECK(table.find("CLAIM") != std::string::npos);
    CHECK(table.find("MS") != std::string::npos);
    CHECK(table.find("pass 9") != std::string::npos);
  }
}

TEST_CASE("enumeration and classes output formats") {
  const ElementSet p2 = enumerate_family(Family::P, 2);

  SUBCASE("enumeration json") {
    const auto j = enumeration_json(p2);
    CHECK(j["schema"] == "chainsemi/1");
    CHECK(j["family"] == "p");
    CHECK(j["n"] == 2);
    CHECK(j["count"] == 9);
    CHECK(j["ids"].size() == 9);
    CHECK(j["ids"][0] == 0);
  }

  SUBCASE("enumeration csv") {
    const ElementSet cp1 = enumerate_family(Family::CP, 1);
    CHECK(enumeration_csv(cp1) == "canonical_id\n0\n1\n");
  }

  SUBCASE("classes json carries heights and idempotent flags") {
    const ElementSet ocp3 = enumerate_family(Family::OCP, 3);
    const auto lstar = star_classes_char(ocp3, Relation::Lstar);
    const auto j = classes_json(ocp3, lstar);
    CHECK(j["relation"] == "lstar");
    CHECK(j["class_count"] == lstar.classes.size());
    for (const auto& entry : j["classes"]) {
      CHECK(entry["has_idempotent"] == true);  // left abundance in ocp_3
      CHECK(entry["size"].get<std::size_t>() >= 1);
    }
    const ElementSet cp4 = enumerate_family(Family::CP, 4);
    const auto rstar = star_classes_char(cp4, Relation::Rstar);
    const auto j4 = classes_json(cp4, rstar);
    bool some_free = false;
    for (const auto& entry : j4["classes"]) {
      if (entry["has_idempotent"] == false) some_free = true;
    }
    CHECK(some_free);
  }

  SUBCASE("classes csv is one row per membership") {
    const ElementSet cp1 = enumerate_family(Family::CP, 1);
    const auto dstar = star_classes_char(cp1, Relation::Dstar);
    CHECK(classes_csv(cp1, dstar) == "class_index,canonical_id\n0,0\n1,1\n");
  }
}

TEST_CASE("workspace memoization returns stable references") {
  Workspace ws{Config{}};
  const ElementSet& a = ws.elements(Family::CP, 3);
  const ElementSet& b = ws.elements(Family::CP, 3);
  CHECK(&a == &b);
  const RelationClasses& r1 = ws.star(Family::CP, 3, Relation::Lstar, Method::oracle);
  const RelationClasses& r2 = ws.star(Family::CP, 3, Relation::Lstar, Method::oracle);
  CHECK(&r1 == &r2);
}

}  // TEST_SUITE
