#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxlab/partition.hpp"

namespace coxlab {

/// A strictly increasing m-subset of Z = {-m, ..., n}, read as Z/(m+n+1).
class Configuration {
 public:
  Configuration(int m, int n, std::vector<int> members);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::vector<int>& members() const noexcept { return members_; }

  /// "{-4,-1,1,2,3}"
  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) { return a.members_ <=> b.members_; }

 private:
  int m_;
  int n_;
  std::vector<int> members_;
};

struct SignedConfiguration {
  Configuration config;
  int sign = 1;
  friend bool operator==(const SignedConfiguration&, const SignedConfiguration&) = default;
};

/// Accepts "{-4,-1,1,2,3}" and "{-4<-1<1<2<3}"; m is the member count.
Configuration parse_configuration(const std::string& text, int n);

/// psi: value a_j at the last position of the fixed 0s and of every
/// block, -j at every other position j (1-based), sorted.
Configuration psi(const EnhancedPartition& e);

/// Inverse of psi via eta_D; n* sorts after n and is fixed, as are all 0s.
EnhancedPartition phi(const Configuration& d);

/// Every member minus i, reduced into {-m, ..., n}, sorted.
Configuration shift(const Configuration& d, long i);

/// One shift; the sign picks up (-1) times -1 per positive member.
SignedConfiguration sign_step(const SignedConfiguration& sd);

/// D{0}, ..., D{m+n}.
std::vector<Configuration> orbit(const Configuration& d);

inline constexpr std::size_t kDefaultConfigCap = 1'000'000;

/// All configurations in lexicographic order. Throws ResourceLimit above cap.
std::vector<Configuration> enumerate_configs(int m, int n, std::size_t cap = kDefaultConfigCap);

}  // namespace coxlab
