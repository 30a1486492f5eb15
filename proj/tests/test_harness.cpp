#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"

#include "fixtures.hpp"
#include "varsemi/claims.hpp"
#include "varsemi/errors.hpp"
#include "varsemi/report.hpp"
#include "varsemi/runner.hpp"
#include "varsemi/table_io.hpp"

using namespace varsemi;
using namespace fixtures;
using json = nlohmann::json;

namespace {
  std::vector<ClaimResult> eval(std::string const& id,
                                FiniteSemigroup const& s,
                                json const& params = json::object()) {
    return evaluate_claim(id, s, params);
  }

  ClaimResult only(std::vector<ClaimResult> const& rs) {
    REQUIRE(rs.size() == 1);
    return rs.front();
  }
}  // namespace

TEST_CASE("registry") {
  auto const& reg = claim_registry();
  CHECK(std::is_sorted(reg.begin(), reg.end(), [](auto const& a, auto const& b) {
    return a.id < b.id;
  }));
  std::set<std::string> ids;
  for (auto const& info : reg) {
    ids.insert(info.id);
  }
  for (auto const* id : {"C-INCL",        "C-1.1",         "C-1.2",         "C-1.3",
                         "C-1.4",         "C-FUND",        "C-FHT",         "C-2.1",
                         "C-2.2",         "C-2.3-literal", "C-2.3-restricted",
                         "C-2.4",         "C-2.5",         "C-2.6-meet",    "C-2.6-single",
                         "C-3.1",         "C-3.2",         "C-3.2-lambda-two-sided",
                         "C-3.4",         "C-3.5",         "C-NAT",         "C-4.1-forward",
                         "C-4.1-reverse", "C-4.2",         "C-4.3",         "C-4.4a",
                         "C-4.4b"}) {
    CHECK(ids.count(id) == 1);
  }
  for (auto const* id : {"C-2.3-literal", "C-2.6-meet", "C-2.6-single", "C-3.5", "C-4.1-reverse"}) {
    CHECK(claim_info(id).kind == ClaimKind::observed);
  }
  for (auto const* id : {"C-INCL", "C-1.3", "C-2.3-restricted", "C-2.4", "C-3.2",
                         "C-3.2-lambda-two-sided", "C-3.4", "C-FHT", "C-4.1-forward",
                         "C-4.2", "C-4.3", "C-4.4a", "C-4.4b"}) {
    CHECK(claim_info(id).kind == ClaimKind::hard);
  }
  CHECK_THROWS_AS(claim_info("C-9.9"), UnknownClaim);
  CHECK_THROWS_AS(eval("C-9.9", z2()), UnknownClaim);
}

TEST_CASE("resolve_claims") {
  CHECK(resolve_claims("all").size() == claim_registry().size());
  CHECK(resolve_claims("C-3.4,C-1.3,C-3.4") == std::vector<std::string>{"C-1.3", "C-3.4"});
  CHECK_THROWS_AS(resolve_claims("C-1.3,"), UnknownClaim);
  CHECK_THROWS_AS(resolve_claims("bogus"), UnknownClaim);
}

TEST_CASE("status strings") {
  CHECK(std::string(to_string(ClaimStatus::holds)) == "HOLDS");
  CHECK(std::string(to_string(ClaimStatus::fails)) == "FAILS");
  CHECK(std::string(to_string(ClaimStatus::not_applicable)) == "NOT_APPLICABLE");
  CHECK(claim_status_from_string("FAILS") == ClaimStatus::fails);
  CHECK_THROWS_AS(claim_status_from_string("fails"), Error);
}

TEST_CASE("u_choices") {
  auto const lz = u_choices(left_zero());
  REQUIRE(lz.size() == 3);
  CHECK(lz[0].members() == std::vector<element_type>{0});
  CHECK(lz[1].members() == std::vector<element_type>{1});
  CHECK(lz[2].members() == std::vector<element_type>{0, 1});
  CHECK(u_choices(z3()).size() == 1);
  // left zero of order 5: |E| = 5, so singletons then E
  std::vector<std::vector<element_type>> rows(5);
  for (element_type x = 0; x < 5; ++x) {
    rows[x] = std::vector<element_type>(5, x);
  }
  auto const big = u_choices(build_semigroup(rows));
  REQUIRE(big.size() == 6);
  CHECK(big[4].members() == std::vector<element_type>{4});
  CHECK(big[5] == ElementSubset::full(5));
}

TEST_CASE("claim examples") {
  SUBCASE("C-3.4 on the null semigroup, u = a") {
    auto const r = only(eval("C-3.4", null2(), {{"u", 1}}));
    CHECK(r.status == ClaimStatus::holds);
    CHECK(r.params == json{{"u", 1}});
    CHECK(r.table == "2;0 0;0 0");
    CHECK(r.hash == table_hash(null2()));
  }
  SUBCASE("C-4.1-reverse on left zero, e = 0") {
    auto const r = only(eval("C-4.1-reverse", left_zero(), {{"e", 0}}));
    CHECK(r.status == ClaimStatus::fails);
    CHECK(r.witness == json{{"f", 1}});
    CHECK(recheck_failure(r));
  }
  SUBCASE("C-2.4 on Z2, a = 1") {
    auto const r = only(eval("C-2.4", z2(), {{"a", 1}}));
    CHECK(r.status == ClaimStatus::holds);
  }
  SUBCASE("C-2.4 needs a monoid") {
    for (auto const& r : eval("C-2.4", left_zero())) {
      CHECK(r.status == ClaimStatus::not_applicable);
    }
  }
  SUBCASE("C-1.1 needs regularity") {
    CHECK(only(eval("C-1.1", null2())).status == ClaimStatus::not_applicable);
    CHECK(only(eval("C-1.1", z2())).status == ClaimStatus::holds);
  }
  SUBCASE("one result per instantiation") {
    CHECK(eval("C-3.4", min3()).size() == 3);
    CHECK(eval("C-4.2", min3()).size() == 3);      // one per idempotent
    CHECK(eval("C-INCL", min3()).size() == 7);     // one per non-empty U ⊆ E
    CHECK(eval("C-3.5", min3()).size() == 3);      // pairs a < b
    CHECK(eval("C-2.6-meet", left_zero()).size() == 4);  // (U, e) with e ∈ U
    CHECK(eval("C-FUND", min3()).size() == 1);
  }
  SUBCASE("params filter") {
    CHECK(eval("C-3.4", min3(), {{"u", 2}}).size() == 1);
    CHECK(eval("C-3.4", min3(), {{"u", 7}}).empty());
    CHECK(eval("C-2.6-meet", left_zero(), {{"e", 1}}).size() == 2);
  }
  SUBCASE("congruence bound") {
    ClaimOptions o;
    o.congruence_bound = 2;
    CHECK(only(evaluate_claim("C-FUND", min3(), json::object(), o)).status
          == ClaimStatus::not_applicable);
    CHECK(only(evaluate_claim("C-3.1", min3(), json::object(), o)).status
          == ClaimStatus::not_applicable);
  }
}

TEST_CASE("C-TILDE-CONG finds a non-congruence in the order-3 corpus") {
  std::size_t fails = 0;
  for (auto const& s : corpus({2, 3})) {
    for (auto const& r : eval("C-TILDE-CONG", s)) {
      if (r.status == ClaimStatus::fails) {
        ++fails;
        CHECK(recheck_failure(r));
      }
    }
  }
  CHECK(fails > 0);
}

TEST_CASE("strict U reading changes C-2.6 outcomes somewhere") {
  ClaimOptions strict;
  strict.strict_u = true;
  std::size_t differ = 0;
  for (auto const& s : corpus({3})) {
    auto const a = evaluate_claim("C-2.6-single", s);
    auto const b = evaluate_claim("C-2.6-single", s, json::object(), strict);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      differ += a[i].status != b[i].status;
      if (b[i].status == ClaimStatus::fails) {
        CHECK(b[i].witness.at("strict_u") == true);
        CHECK(recheck_failure(b[i]));
      }
    }
  }
  CHECK(differ > 0);
}

TEST_CASE("recheck_failure rejects tampered results") {
  auto r = only(eval("C-4.1-reverse", left_zero(), {{"e", 0}}));
  REQUIRE(recheck_failure(r));

  auto holds   = r;
  holds.status = ClaimStatus::holds;
  CHECK_FALSE(recheck_failure(holds));

  auto wrong_f       = r;
  wrong_f.witness    = json{{"f", 0}};
  CHECK_FALSE(recheck_failure(wrong_f));

  auto no_witness    = r;
  no_witness.witness = nullptr;
  CHECK_FALSE(recheck_failure(no_witness));

  auto bad_table  = r;
  bad_table.table = "2;0 0;1 x";
  CHECK_FALSE(recheck_failure(bad_table));

  auto other_table  = r;
  other_table.table = "2;0 1;1 0";  // hash no longer matches
  CHECK_FALSE(recheck_failure(other_table));

  auto unknown     = r;
  unknown.claim_id = "C-0";
  CHECK_FALSE(recheck_failure(unknown));

  auto garbage    = r;
  garbage.witness = json{{"f", "one"}};
  CHECK_FALSE(recheck_failure(garbage));
}

TEST_CASE("report records round-trip") {
  auto const r = only(eval("C-4.1-reverse", left_zero(), {{"e", 0}}));
  CHECK(claim_result_from_json(to_json(r)) == r);
  CHECK(to_json(r).at("record") == "result");
  CHECK_THROWS_AS(claim_result_from_json(json{{"record", "result"}}), Error);
  CHECK_THROWS_AS(claim_result_from_json(json{{"record", "summary"}}), Error);

  CorpusSpec spec;
  spec.orders = {1, 2};
  auto const report = run_corpus(spec, resolve_claims("all"));
  std::ostringstream out;
  write_report(out, report);
  CHECK(read_report(out.str()) == report);
  CHECK(summary_from_json(to_json(report.summary)) == report.summary);
  CHECK_THROWS_AS(read_report(std::string_view("{\"record\":\"result\"}\n")), Error);
  CHECK_THROWS_AS(read_report(std::string_view("not json\n")), SyntaxError);
  CHECK_THROWS_AS(read_report(std::string_view("")), Error);
}

TEST_CASE("run_corpus") {
  SUBCASE("order 1: nothing fails") {
    CorpusSpec spec;
    spec.orders       = {1};
    auto const report = run_corpus(spec, resolve_claims("all"));
    CHECK(report.summary.corpus.tables == 1);
    for (auto const& r : report.results) {
      CHECK(r.status != ClaimStatus::fails);
    }
    CHECK(report.summary.counterexamples.empty());
  }
  SUBCASE("order 2: C-4.1-reverse fails exactly on left and right zero") {
    CorpusSpec spec;
    spec.orders       = {2};
    auto const report = run_corpus(spec, {"C-4.1-reverse"});
    std::set<std::string> failing;
    for (auto const& r : report.results) {
      if (r.status == ClaimStatus::fails) {
        failing.insert(r.table);
        CHECK(recheck_failure(r));
      }
    }
    CHECK(failing == std::set<std::string>{"2;0 0;1 1", "2;0 1;0 1"});
    CHECK(report.summary.hard_failures == 0);
    REQUIRE(report.summary.counterexamples.size() == 1);
    CHECK(report.summary.counterexamples[0].claim_id == "C-4.1-reverse");
  }
  SUBCASE("orders 2 and 3: C-3.4 never fails") {
    CorpusSpec spec;
    spec.orders       = {2, 3};
    auto const report = run_corpus(spec, {"C-3.4"});
    auto const& tally = report.summary.claims.at("C-3.4");
    CHECK(tally.fails == 0);
    CHECK(tally.total() == report.results.size());
    CHECK(tally.total() == 8 * 2 + 113 * 3);
  }
  SUBCASE("tallies sum to the results and the run is deterministic") {
    CorpusSpec spec;
    spec.orders  = {2, 3};
    auto const a = run_corpus(spec, resolve_claims("all"));
    auto const b = run_corpus(spec, resolve_claims("all"));
    std::size_t total = 0;
    for (auto const& [id, t] : a.summary.claims) {
      total += t.total();
    }
    CHECK(total == a.results.size());
    std::ostringstream sa, sb;
    write_report(sa, a);
    write_report(sb, b);
    CHECK(without_timestamp(sa.str()) == without_timestamp(sb.str()));
    CHECK(without_timestamp(sa.str()).find("timestamp") == std::string::npos);
  }
  SUBCASE("invalid specs") {
    CorpusSpec spec;
    spec.orders = {5};
    CHECK_THROWS_AS(run_corpus(spec, {"C-3.4"}), OrderTooLarge);
    spec.orders = {2};
    CHECK_THROWS_AS(run_corpus(spec, {"C-nope"}), UnknownClaim);
  }
}
