#include <doctest.h>

#include "coxlab/error.hpp"
#include "coxlab/verify.hpp"

using namespace coxlab;

TEST_CASE("grid report passes and round-trips through JSON") {
  const auto r = verify_grid(2, 3);
  CHECK(r.passed());
  CHECK(r.lattice_size == 10);
  REQUIRE(r.order.has_value());
  CHECK(r.order->k == 6);
  CHECK(r.order->sign == 1);
  CHECK(r.order->exact_order == 6);
  const auto j = to_json(r);
  CHECK(j["schema"] == kSchema);
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
}

TEST_CASE("reports are deterministic apart from timing") {
  auto a = verify_grid(3, 3);
  auto b = verify_grid(3, 3);
  a.ms = b.ms = 0;
  CHECK(a == b);
  CHECK(a.order->sign == 1);
  CHECK(a.order->k == 7);
}

TEST_CASE("open cases never fail the run") {
  const auto r = verify_cominuscule('C', 3, 3);
  CHECK(r.passed());
  CHECK(!r.banner.empty());
  bool any_open = false;
  for (const auto& c : r.checks) any_open = any_open || c.open;
  CHECK(any_open);
}

TEST_CASE("a failed check fails the report") {
  auto r = verify_grid(1, 2);
  CHECK(r.passed());
  r.checks.push_back({"synthetic", false, "", false});
  CHECK_FALSE(r.passed());
  r.checks.back().open = true;
  CHECK(r.passed());
}

TEST_CASE("schema mismatch is rejected") {
  auto j = nlohmann::json::parse(to_json(verify_grid(1, 1)).dump());
  j["schema"] = "other/9";
  CHECK_THROWS_AS(report_from_json(j), ParseError);
}

TEST_CASE("text summary lists each check") {
  const auto r = verify_grid(2, 2);
  const auto text = to_text(r);
  for (const auto& c : r.checks) CHECK(text.find(c.name) != std::string::npos);
}

TEST_CASE("size banner above max_size") {
  VerifyOptions o;
  o.max_size = 5;
  const auto r = verify_grid(2, 3, o);
  CHECK(r.passed());
  CHECK(!r.banner.empty());
  CHECK(r.order.has_value());
}
