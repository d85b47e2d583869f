#include <doctest.h>

#include <json.hpp>

#include <set>
#include <string>

#include "wilsonlab/error.hpp"
#include "wilsonlab/report.hpp"
#include "wilsonlab/suite.hpp"

using namespace wilsonlab;

namespace {

const BernoulliTable& table() {
  static const BernoulliTable t = BernoulliTable::build(kSuiteTableIndex);
  return t;
}

nlohmann::json without_time(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  doc["params"].erase("wall_time");
  return doc;
}

}  // namespace

TEST_CASE("registry holds every check id") {
  std::set<std::string> ids;
  for (const auto& c : registry()) ids.insert(c.id);
  for (const char* id :
       {"lerch", "glaisher_beeger", "lehmer", "lehmer_diff", "carlitz", "thm_main_p1", "thm_main_p2", "thm_main_p3",
        "thm_main2_p4", "thm_main3_q1", "thm_main3_q2", "thm_main3_q3", "thm_main3_q4", "thm_kel_psi_r1",
        "thm_kel_psi_r2", "thm_kel_psi_r3", "thm_kel_psi_r4", "reduction_chain", "kummer", "gen_kummer_r1",
        "gen_kummer_r2", "gen_kummer_r3", "gen_kummer_r4", "cor35_tiers", "prop36", "prop37", "prop34_remainder",
        "lemma33_binom", "prop22", "folklore", "denominators_dn", "vsc", "lemma26_qdiff", "bundle_kummer_chain"}) {
    CHECK_MESSAGE(ids.count(id) == 1, id);
  }
  CHECK(ids.size() == registry().size());
}

TEST_CASE("make_suite validation") {
  CHECK(make_suite("all", 2, 10).check_ids.size() == registry().size());
  CHECK(make_suite("lerch,kummer", 2, 10).check_ids == std::vector<std::string>{"lerch", "kummer"});
  CHECK_THROWS_WITH_AS(make_suite("nonsense", 2, 10), doctest::Contains("UnknownCheck"), Error);
  CHECK_THROWS_WITH_AS(make_suite("lerch", 11, 10), doctest::Contains("UnknownRange"), Error);
}

TEST_CASE("lerch on p = 3 is a single pass") {
  const auto report = run_suite(make_suite("lerch", 3, 3), 1, &table());
  REQUIRE(report.results.size() == 1);
  CHECK(report.results[0].passed());
  CHECK(report.results[0].p == 3);
  CHECK(report.summary.pass == 1);
}

TEST_CASE("Wilson quotient mod p^3 passes for 5 <= p <= 100 on both engines") {
  const auto report = run_suite(make_suite("thm_main_p3", 5, 100), 4, &table());
  CHECK(report.summary.fail == 0);
  CHECK(report.summary.skipped == 0);
  CHECK(report.summary.pass == 23);
}

TEST_CASE("whole registry on small primes: the only failure is Q_p(1) mod p^4 at p = 5") {
  const auto report = run_suite(make_suite("all", 2, 60), 4, &table());
  long fails = 0;
  for (const auto& r : report.results) {
    if (r.status != CheckStatus::Fail) continue;
    ++fails;
    CHECK(r.check_id == "thm_main3_q1");
    CHECK(r.p == 5);
    CHECK(r.modulus_exp == 4);
  }
  CHECK(fails == 1);
  CHECK(report.summary.fail == 1);
}

TEST_CASE("report is independent of the worker count") {
  const auto spec = make_suite("lerch,thm_main_p2,thm_main3_q2,prop36,kummer,vsc", 2, 80, 0, Engine::Both);
  const auto one = render_report(run_suite(spec, 1, &table()), ReportFormat::Json);
  const auto many = render_report(run_suite(spec, 8, &table()), ReportFormat::Json);
  CHECK(without_time(one) == without_time(many));
  CHECK(render_report(run_suite(spec, 1, &table()), ReportFormat::Csv) ==
        render_report(run_suite(spec, 6, &table()), ReportFormat::Csv));
}

TEST_CASE("report formats") {
  const auto report = run_suite(make_suite("lerch,glaisher_beeger", 5, 13), 2, &table());
  const auto doc = nlohmann::json::parse(render_report(report, ReportFormat::Json));
  CHECK(doc["suite"] == "lerch,glaisher_beeger");
  CHECK(doc["params"]["p_min"] == 5);
  CHECK(doc["results"].size() == 8);
  CHECK(doc["results"][0]["check"] == "glaisher_beeger");
  CHECK(doc["results"][0]["status"] == "pass");
  CHECK(doc["summary"]["pass"] == 8);

  const auto csv = render_report(report, ReportFormat::Csv);
  CHECK(csv.rfind("check,p,mod_exp,lhs,rhs,status,reason\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);

  const auto text = render_report(report, ReportFormat::Text);
  CHECK(text.find("8 pass, 0 fail, 0 skipped") != std::string::npos);
  CHECK(text.find(" \n") == std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("engines agree wherever both apply") {
  const auto ids = "thm_main_p1,thm_main_p2,thm_main_p3,thm_main2_p4,thm_main3_q2,thm_main3_q3,thm_main3_q4";
  const auto exact = run_suite(make_suite(ids, 7, 97, 0, Engine::Exact), 4, &table());
  const auto modular = run_suite(make_suite(ids, 7, 97, 0, Engine::Modular), 4, &table());
  CHECK(exact.summary.fail == 0);
  CHECK(modular.summary.fail == 0);
  REQUIRE(exact.results.size() == modular.results.size());
  for (std::size_t i = 0; i < exact.results.size(); ++i) {
    CHECK(value_string(exact.results[i].rhs) == value_string(modular.results[i].rhs));
  }
}

TEST_CASE("prime scans") {
  CHECK(scan_primes(ScanClass::Wilson, 1000) == std::vector<std::uint64_t>{5, 13, 563});
  CHECK(scan_primes(ScanClass::Irregular, 100) == std::vector<std::uint64_t>{37, 59, 67});
  CHECK(scan_primes(ScanClass::Irregular, 200) ==
        std::vector<std::uint64_t>{37, 59, 67, 101, 103, 131, 149, 157});
}
