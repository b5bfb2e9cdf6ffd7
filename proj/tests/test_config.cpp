#include <doctest.h>

#include <set>

#include "coxlab/config.hpp"
#include "coxlab/error.hpp"

using namespace coxlab;

TEST_CASE("configuration parsing") {
  const auto d = parse_configuration("{-4,-1,1,2,3}", 3);
  CHECK(d.m() == 5);
  CHECK(d.to_string() == "{-4,-1,1,2,3}");
  CHECK(parse_configuration("{-4<-1<1<2<3}", 3) == d);
  CHECK(parse_configuration("{\xE2\x88\x92" "4,\xE2\x88\x92" "1,1,2,3}", 3) == d);  // unicode minus
  CHECK_THROWS_AS(parse_configuration("{1,1}", 3), ParseError);
  CHECK_THROWS_AS(parse_configuration("{-9,1}", 3), ParseError);
  CHECK_THROWS_AS(parse_configuration("1,2", 3), ParseError);
}

TEST_CASE("shift is cyclic of length m+n+1") {
  for (const auto& d : enumerate_configs(3, 4)) {
    CHECK(shift(d, 8) == d);
    CHECK(shift(shift(d, 3), 5) == d);
    CHECK(shift(d, -1) == shift(d, 7));
  }
  CHECK(shift(parse_configuration("{-4,-1,1,2,3}", 3), 1).to_string() == "{-5,-2,0,1,2}");
}

TEST_CASE("orbit list keeps its length") {
  const auto d = parse_configuration("{-1,0}", 1);  // m = 2, n = 1
  const auto o = orbit(d);
  CHECK(o.size() == 4);
  CHECK(o.front() == d);
}

TEST_CASE("enumeration order and count") {
  const auto all = enumerate_configs(3, 3);
  CHECK(all.size() == 35);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<Configuration>(all.begin(), all.end()).size() == all.size());
  CHECK_THROWS_AS(enumerate_configs(8, 8, 100), ResourceLimit);
}

TEST_CASE("psi and phi are mutually inverse") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      for (const auto& e : enumerate_EL(m, n)) CHECK(phi(psi(e)) == e);
      for (const auto& d : enumerate_configs(m, n)) CHECK(psi(phi(d)) == d);
    }
}

TEST_CASE("psi transports f_tilde to the shift") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& e : enumerate_EL(m, n)) CHECK(psi(f_tilde(e)) == shift(psi(e), 1));
}

TEST_CASE("sign after a full turn") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& d : enumerate_configs(m, n)) {
        SignedConfiguration sc{d, 1};
        for (int k = 0; k < m + n + 1; ++k) sc = sign_step(sc);
        CHECK(sc.config == d);
        CHECK(sc.sign == ((m + 1) * (n + 1) % 2 ? -1 : 1));
      }
}
