#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxlab/config.hpp"
#include "coxlab/ideal_lattice.hpp"
#include "coxlab/lattice_operator.hpp"
#include "coxlab/partition.hpp"
#include "coxlab/report.hpp"

namespace coxlab {

struct VerifyOptions {
  std::size_t max_size = 1000;    // lattice size up to which the full invariant suite runs
  std::size_t order_cap = 20000;  // lattice size up to which the order is computed
  bool skip_exactness = false;
  std::optional<std::size_t> k_max;  // default 4 * lattice size
};

/// Predicted order on J(P_{m,n}): Phi^{m+n+1} = (-1)^{(m+1)(n+1)} I.
Expectation grid_expectation(int m, int n);

VerificationReport verify_grid(int m, int n, const VerifyOptions& options = {});

/// Throws InvalidArgument for a non-cominuscule root.
VerificationReport verify_cominuscule(char type, int rank, int root, const VerifyOptions& options = {});

// Individual suites over a grid lattice J(P_{m,n}); each returns one check
// per invariant with the first counterexample in its detail.
std::vector<Check> check_bijections(int m, int n);
Check check_projective_interval(const IdealLattice& lattice);
Check check_injective_interval(const IdealLattice& lattice);
Check check_tau_step(const IdealLattice& lattice, const CoxeterOperator& op);
std::vector<Check> check_sign_transport(const IdealLattice& lattice, const CoxeterOperator& op);
Check check_projective_to_injective(const IdealLattice& lattice, const CoxeterOperator& op);
Check check_spanning(const IdealLattice& lattice);
Check check_exactness(const IdealLattice& lattice, ResolutionKind kind);
Check check_dense_agreement(const IdealLattice& lattice, const CoxeterOperator& op);

struct OrbitRow {
  int step;
  EnhancedPartition partition;
  PlainPartition lo;
  PlainPartition hi;
  Configuration config;
  int sign;
};

struct OrbitTrace {
  int m = 0, n = 0;
  std::vector<OrbitRow> rows;  // steps 0..m+n+1
  bool closes = false;         // last row repeats row 0 with the predicted sign
};

/// The tau-orbit of alpha: f_tilde iterates, their intervals [[f(e), e]],
/// configurations and signs.
OrbitTrace orbit_trace(int m, int n, const EnhancedPartition& alpha);
nlohmann::ordered_json to_json(const OrbitTrace& t);
std::string to_text(const OrbitTrace& t);

}  // namespace coxlab
