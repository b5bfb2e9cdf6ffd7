#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxlab/k0lin.hpp"

namespace coxlab {

inline constexpr const char* kSchema = "coxlab/1";

struct Subject {
  std::string kind;  // "grid" or "cominuscule"
  int m = 0, n = 0;  // grid
  char type = 0;     // cominuscule
  int rank = 0;
  int root = 0;
  friend bool operator==(const Subject&, const Subject&) = default;
};

/// What the theorem predicts. Unset fields make no prediction.
struct Expectation {
  std::optional<std::size_t> k;
  std::optional<int> sign;
  std::optional<std::size_t> exact;
  std::optional<std::size_t> divides;  // exact order must divide this
  std::string rule;
  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  bool open = false;  // reported, never fails the run
  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  Subject subject;
  std::size_t lattice_size = 0;
  std::optional<SignedOrder> order;
  Expectation expected;
  std::vector<Check> checks;
  std::string banner;  // e.g. the open-case notice
  double ms = 0;

  /// True iff every non-open check passes.
  bool passed() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::ordered_json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

/// Human-readable summary, one check per line.
std::string to_text(const VerificationReport& r);

std::string subject_label(const Subject& s);

}  // namespace coxlab
