#include <doctest.h>

#include <functional>

#include "wkalg/cli/report.h"
#include "wkalg/conformal/levels.h"
#include "wkalg/errors.h"

using namespace wkalg;
using wkalg::cli::Json;

namespace {

bool no_raw_numbers(const Json& j) {
  if (j.is_number()) return false;
  if (j.is_structured()) {
    for (const Json& child : j) {
      if (!no_raw_numbers(child)) return false;
    }
  }
  return true;
}

void check_canonical(const Json& report) {
  const std::string once = cli::dump(report);
  CHECK(cli::dump(Json::parse(once)) == once);
  CHECK(no_raw_numbers(report));
  CHECK_FALSE(cli::render_text(report).empty());
}

}  // namespace

TEST_CASE("reports round-trip byte for byte") {
  const FamilyParams h = FamilyParams::hook(3, 2);
  const FamilyParams r = FamilyParams::rectangular(2, 3);
  check_canonical(cli::info_report(Partition::parse("3,1,1")));
  check_canonical(cli::info_report(Partition::parse("2,2")));
  check_canonical(cli::info_report(Partition::parse("4,2,1")));
  check_canonical(cli::levels_report(h));
  check_canonical(cli::levels_report(r));
  check_canonical(cli::collapse_report(h, Rat(-15, 4)));
  check_canonical(cli::collapse_report(r, Rat(-4)));
  check_canonical(cli::admissible_report(h, Rat(-15, 4)));
  check_canonical(cli::decompose_report(FamilyParams::hook(4, 3), 1, 2));
  check_canonical(cli::decompose_report(h, 1, 2));
  check_canonical(cli::verify_report(cli::run_checks(std::string("heights"))));
}

TEST_CASE("info report follows the tables") {
  const Json r = cli::info_report(Partition::parse("3,1,1"));
  CHECK(r["dims"]["cite"] == "Table 1");
  CHECK(r["dims"]["dim_gf"] == "10");
  CHECK(r["generators"]["natural_algebra"] == "gl(2)");
  CHECK(r["closed_form"]["agrees"] == true);
  CHECK(cli::info_report(Partition::parse("2,2"))["dims"]["cite"] == "Table 3");
  CHECK(cli::info_report(Partition::parse("4,1,1"))["dims"]["cite"] == "Table 2");
}

TEST_CASE("levels and collapse reports") {
  const Json l = cli::levels_report(FamilyParams::hook(3, 2));
  REQUIRE(l["levels"].size() == 3);
  CHECK(l["levels"][2]["k"] == "-3");
  CHECK(l["levels"][2]["tags"] == Json::array({"H2", "H3"}));
  CHECK(l["levels"][0]["cite"] == "Theorem MT");

  const Json c = cli::collapse_report(FamilyParams::rectangular(2, 3), Rat(-4));
  CHECK(c["status"]["value"] == "StronglyCollapsing");
  CHECK(c["target"] == "V_{-2}(sl(3))");
  CHECK_THROWS_AS(cli::collapse_report(FamilyParams::hook(3, 3), Rat(-13, 2)), NotConformalError);
}

TEST_CASE("admissible and decompose reports") {
  const Json a = cli::admissible_report(FamilyParams::hook(3, 2), Rat(-15, 4));
  CHECK(a["form"]["p_prime"] == "5");
  CHECK(a["form"]["p"] == "4");
  CHECK(a["form"]["d_kW"] == "2");
  CHECK(a["predictions"][0]["cite"] == "Lemma 94");
  CHECK(a["predictions"][0]["agrees"] == true);

  const Json refused = cli::decompose_report(FamilyParams::hook(3, 2), 1, 2);
  CHECK(refused["refused"] == true);
  CHECK(refused["cite"] == "Theorem rp");
}

TEST_CASE("verify sections filter") {
  const auto checks = cli::run_checks(std::string("tables"));
  REQUIRE_FALSE(checks.empty());
  for (const auto& c : checks) {
    CHECK(c.section == "tables");
    CHECK(c.criterion == 3);
    CHECK(c.passed);
  }
  CHECK_THROWS_AS(cli::run_checks(std::string("nonsense")), ParseError);
  CHECK(cli::check_sections().size() == 9);
}

TEST_CASE("level parsing") {
  CHECK(cli::parse_level("-15/4") == Rat(-15, 4));
  CHECK_THROWS_AS(cli::parse_level("-3.75"), ParseError);
}
