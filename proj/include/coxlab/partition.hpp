#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxlab/ideal_lattice.hpp"
#include "coxlab/k0lin.hpp"

namespace coxlab {

/// Non-decreasing (a_1, ..., a_m) with 0 <= a_i <= n.
class PlainPartition {
 public:
  PlainPartition(int m, int n, std::vector<int> parts);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::vector<int>& parts() const noexcept { return parts_; }

  std::string to_string() const { return partition_label(parts_); }
  friend bool operator==(const PlainPartition&, const PlainPartition&) = default;

 private:
  int m_;
  int n_;
  std::vector<int> parts_;
};

/// "(a1,...,am)" in an m x n box.
PlainPartition parse_plain(const std::string& text, int n);

/// Value lambda_i repeated alpha_i times.
struct Block {
  int value;
  int mult;
  friend bool operator==(const Block&, const Block&) = default;
};

/// (0^{alpha0} | lambda_1^{alpha_1}, ..., lambda_r^{alpha_r} | n^{alpha_last}).
///
/// Blocks are kept in this form throughout; lambda values strictly
/// increase and may include 0 and n as unfixed values.
class EnhancedPartition {
 public:
  EnhancedPartition(int m, int n, int alpha0, std::vector<Block> blocks, int alpha_last);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int alpha0() const noexcept { return alpha0_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  int alpha_last() const noexcept { return alpha_last_; }
  std::size_t r() const noexcept { return blocks_.size(); }

  std::string to_string() const;
  friend bool operator==(const EnhancedPartition&, const EnhancedPartition&) = default;
  friend bool operator<(const EnhancedPartition& a, const EnhancedPartition& b);

 private:
  int m_;
  int n_;
  int alpha0_;
  std::vector<Block> blocks_;
  int alpha_last_;
};

/// Accepts "(0^2|2^3,5,6^4,9^2|13^2)", repeated values written out
/// ("(0|2,2,3,7|)"), and the one-bar form "(1^3,4^3|13)" with no fixed 0s.
EnhancedPartition parse_enhanced(const std::string& text, int n);

PlainPartition chi(const EnhancedPartition& e);
bool is_EL(const EnhancedPartition& e);
bool is_ER(const EnhancedPartition& e);

/// 1-based block indices with nonzero value.
std::vector<std::size_t> r_alpha(const EnhancedPartition& e);

/// chi(e) lowered by one on every block listed in J (1-based, subset of R).
PlainPartition delta(const EnhancedPartition& e, const std::vector<std::size_t>& J);

EnhancedPartition f(const EnhancedPartition& e);
EnhancedPartition g(const EnhancedPartition& e);
EnhancedPartition enhance_minus_delta(const EnhancedPartition& e);
EnhancedPartition f_tilde(const EnhancedPartition& e);

/// All 0s fixed, no fixed ns.
EnhancedPartition default_enhance(const PlainPartition& p);

/// Every enhanced partition in the m x n box, in canonical order.
std::vector<EnhancedPartition> enumerate_enhanced(int m, int n);
std::vector<EnhancedPartition> enumerate_EL(int m, int n);
std::vector<EnhancedPartition> enumerate_ER(int m, int n);

enum class ResolutionKind { Projective, Injective };

struct ResolutionTerm {
  int degree;
  PlainPartition vertex;
  std::vector<std::size_t> subset;
};

/// One term per J subset of R, degree -|J|, vertex alpha - delta_J. Sorted by
/// degree, then by subset.
std::vector<ResolutionTerm> resolution_terms(const EnhancedPartition& e, ResolutionKind kind);

/// Sum of (-1)^{|J|} times the projective (or injective) class of each vertex.
K0Vector euler_class(const std::vector<ResolutionTerm>& terms, ResolutionKind kind, const IdealLattice& lattice);

/// Indicator of [lo, hi]. Throws InvalidArgument if lo is not below hi.
K0Vector interval_class(const IdealLattice& lattice, Element lo, Element hi);
K0Vector interval_class(const IdealLattice& lattice, const PlainPartition& lo, const PlainPartition& hi);

/// [[f(e), e]], the class of the projective resolution of e.
K0Vector l_class(const IdealLattice& lattice, const EnhancedPartition& e);

struct VertexHomology {
  Element vertex;
  std::size_t j_size;             // largest (projective) or smallest (injective) present J
  std::vector<std::size_t> dims;  // dims[k] = homology in degree -k
};

struct HomologyReport {
  ResolutionKind kind;
  int expected_degree = 0;
  std::vector<VertexHomology> vertices;  // vertices where the complex is nonzero
  std::vector<std::string> findings;     // empty when everything matches
  bool ok() const noexcept { return findings.empty(); }
};

/// Evaluates the resolution at every lattice vertex as a signed face
/// complex and computes its homology by exact ranks. Any homology outside
/// the predicted degree and interval is recorded as a finding.
HomologyReport check_resolution_exact(const EnhancedPartition& e, const IdealLattice& lattice, ResolutionKind kind);

}  // namespace coxlab
