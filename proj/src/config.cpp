#include "coxlab/config.hpp"

#include <algorithm>
#include <cctype>

#include "coxlab/error.hpp"

namespace coxlab {

Configuration::Configuration(int m, int n, std::vector<int> members) : m_(m), n_(n), members_(std::move(members)) {
  if (m < 1 || n < 1) throw InvalidArgument("configuration box needs m, n >= 1");
  if (static_cast<int>(members_.size()) != m) throw InvalidArgument("configuration must have exactly m members");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < -m || members_[i] > n) throw InvalidArgument("configuration member outside [-m, n]");
    if (i && members_[i] <= members_[i - 1]) throw InvalidArgument("configuration must be strictly increasing");
  }
}

std::string Configuration::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) s += (i ? "," : "") + std::to_string(members_[i]);
  return s + "}";
}

Configuration parse_configuration(const std::string& text, int n) {
  std::string s;
  // accept a unicode minus too
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      s += '-';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
    }
  }
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw ParseError("configuration must be enclosed in braces: \"" + text + "\"");
  s = s.substr(1, s.size() - 2);
  std::vector<int> members;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t used = 0;
    try {
      members.push_back(std::stoi(s.substr(i), &used));
    } catch (const std::exception&) {
      throw ParseError("cannot parse configuration \"" + text + "\"");
    }
    i += used;
    if (i < s.size()) {
      if (s[i] != ',' && s[i] != '<') throw ParseError("cannot parse configuration \"" + text + "\"");
      ++i;
      if (i == s.size()) throw ParseError("trailing separator in \"" + text + "\"");
    }
  }
  try {
    return Configuration(static_cast<int>(members.size()), n, members);
  } catch (const InvalidArgument& e) {
    throw ParseError("\"" + text + "\": " + e.what());
  }
}

Configuration psi(const EnhancedPartition& e) {
  if (!is_EL(e)) throw InvalidArgument("psi is defined on E_L only: " + e.to_string());
  const auto a = chi(e).parts();
  const int m = e.m();
  std::vector<bool> block_end(static_cast<std::size_t>(m) + 1, false);
  int pos = e.alpha0();
  if (pos > 0) block_end[static_cast<std::size_t>(pos)] = true;
  for (const auto& b : e.blocks()) {
    pos += b.mult;
    block_end[static_cast<std::size_t>(pos)] = true;
  }
  std::vector<int> out;
  for (int j = 1; j <= m; ++j) out.push_back(block_end[static_cast<std::size_t>(j)] ? a[static_cast<std::size_t>(j - 1)] : -j);
  std::sort(out.begin(), out.end());
  return Configuration(m, e.n(), std::move(out));
}

EnhancedPartition phi(const Configuration& d) {
  const int m = d.m(), n = d.n();
  const auto& i = d.members();
  const int star = n + 1;  // n* sorts after n
  std::vector<int> eta;
  for (int j = 1; j <= m; ++j) {
    const int ij = i[static_cast<std::size_t>(j - 1)];
    if (ij < 0) {
      const int t = -ij + j;
      if (t < m + 1)
        eta.push_back(i[static_cast<std::size_t>(t - 1)]);
      else if (t == m + 1)
        eta.push_back(star);
      else
        throw InvalidArgument("eta undefined for configuration " + d.to_string());
    } else {
      eta.push_back(ij);
    }
  }
  std::sort(eta.begin(), eta.end());
  int zeros = 0, stars = 0;
  std::vector<Block> blocks;
  for (int v : eta) {
    if (v < 0) throw InvalidArgument("eta produced a negative entry for " + d.to_string());
    if (v == 0) {
      ++zeros;
    } else if (v == star) {
      ++stars;
    } else if (!blocks.empty() && blocks.back().value == v) {
      ++blocks.back().mult;
    } else {
      blocks.push_back({v, 1});
    }
  }
  return EnhancedPartition(m, n, zeros, std::move(blocks), stars);
}

Configuration shift(const Configuration& d, long i) {
  const long mod = d.m() + d.n() + 1;
  std::vector<int> out;
  out.reserve(d.members().size());
  for (int x : d.members()) {
    long y = ((x - i + d.m()) % mod + mod) % mod - d.m();
    out.push_back(static_cast<int>(y));
  }
  std::sort(out.begin(), out.end());
  return Configuration(d.m(), d.n(), std::move(out));
}

SignedConfiguration sign_step(const SignedConfiguration& sd) {
  const auto& mem = sd.config.members();
  const long positive = std::count_if(mem.begin(), mem.end(), [](int x) { return x > 0; });
  const int s = (1 + positive) % 2 ? -sd.sign : sd.sign;
  return {shift(sd.config, 1), s};
}

std::vector<Configuration> orbit(const Configuration& d) {
  std::vector<Configuration> out;
  const int len = d.m() + d.n() + 1;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) out.push_back(shift(d, i));
  return out;
}

std::vector<Configuration> enumerate_configs(int m, int n, std::size_t cap) {
  if (m < 1 || n < 1) throw InvalidArgument("configuration box needs m, n >= 1");
  // binomial(m+n+1, m) without overflow past the cap
  double count = 1;
  for (int k = 1; k <= m; ++k) count = count * (n + 1 + k) / k;
  if (count > static_cast<double>(cap) + 0.5) throw ResourceLimit("configuration enumeration exceeded the size cap", cap);
  std::vector<Configuration> out;
  std::vector<int> cur;
  for (int x = -m; x < -m + m; ++x) cur.push_back(x);
  for (;;) {
    out.emplace_back(m, n, cur);
    // next combination in lexicographic order
    int k = m - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n - (m - 1 - k)) --k;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < m; ++t) cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

}  // namespace coxlab
