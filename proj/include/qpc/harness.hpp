// Verification campaigns: randomized trials, Monte Carlo estimates, an
// independent brute-force oracle, hard-coded structural checks of the
// small worked cases, and the entanglement/mixed-state experiments.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpc/protocol.hpp"

namespace qpc {

enum class InputKind { product, env_entangled, purified_mixed, cross_correlated };

// A prepared input state plus the per-qudit pieces needed to judge the
// recovered subset afterwards.
struct ProtocolInput {
  InputKind kind = InputKind::product;
  StateVector state;
  std::vector<Vector> locals;       // product: one d-vector per qudit
  std::vector<Vector> pair_states;  // entangled/mixed: one (E,q) pair vector per qudit
  std::vector<Matrix> qudit_density;  // mixed: original per-qudit density matrix
};

ProtocolInput random_product_input(const CodingScheme& scheme, Rng& rng);
ProtocolInput random_entangled_input(const CodingScheme& scheme, Rng& rng,
                                     int env_dim = 0);
ProtocolInput random_mixed_input(const CodingScheme& scheme, Rng& rng);
// Haar-random state of the whole data register: generically entangled
// across every decode boundary.
ProtocolInput cross_correlated_input(const CodingScheme& scheme, Rng& rng);
ProtocolInput make_input(InputKind kind, const CodingScheme& scheme, Rng& rng);

// Fidelity of a recovered state against what the input says the subset
// should hold: pure overlap for product/entangled/mixed inputs (the pair
// states are preserved exactly), density overlap for cross-correlated
// ones.
double subset_fidelity(const ProtocolInput& input, const std::vector<int>& subset,
                       const StateVector& recovered);

struct TrialRecord {
  std::uint64_t seed = 0;
  CodingScheme scheme{1, 2, 1};
  std::vector<int> subset;
  OutcomeString outcome;
  double outcome_probability = 0.0;
  bool success = false;
  double conditional_success_probability = 0.0;
  std::optional<double> fidelity;  // present iff success
};

// One full pipeline pass: prepare → encode → message → decode → recover.
TrialRecord run_trial(const CodingScheme& scheme, const std::vector<int>& subset,
                      const ProtocolInput& input, Rng& rng,
                      std::uint64_t seed = 0);
TrialRecord run_trial(const CodingScheme& scheme, const std::vector<int>& subset,
                      InputKind kind, std::uint64_t master_seed,
                      std::uint64_t trial_index);

struct MonteCarloEstimate {
  long long trials = 0;
  long long successes = 0;
  double p_hat = 0.0;
  double standard_error = 0.0;  // binomial, √(p̂(1-p̂)/N)
  std::uint64_t master_seed = 0;
};

// Success frequency over independently seeded trials; trial i draws its
// generator from (master_seed, i), so the result does not depend on
// execution order.
MonteCarloEstimate monte_carlo(const CodingScheme& scheme,
                               const std::vector<int>& subset, long long trials,
                               std::uint64_t master_seed,
                               InputKind kind = InputKind::product);

struct OracleRow {
  OutcomeString outcome;
  double outcome_probability = 0.0;
  double joint_success_probability = 0.0;
};

// Exact joint (outcome, success) distribution computed from first
// principles: digit strings, Hamming distances and projector sums written
// directly against the amplitude vector, independent of the protocol
// engine and of the operator constructions above.
std::vector<OracleRow> brute_force_oracle(const CodingScheme& scheme,
                                          const std::vector<int>& subset,
                                          const StateVector& state);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Structural checks of the worked two-qubit and three-qubit cases:
// operator supports and coefficients, post-measurement states, decode
// projectors, and the closed-form two-qudit operator shape.
Report golden_suite();

// For each coefficient set (one matrix per qudit): builds the
// environment-entangled input, enumerates every outcome and success
// branch, and compares pre/post entanglement entropy per decoded qudit
// and recovered fidelity.
Report entanglement_experiment(const CodingScheme& scheme,
                               const std::vector<int>& subset,
                               const std::vector<std::vector<Matrix>>& coeff_sets);

// For each density input (one matrix per qudit): purifies, runs the
// pipeline over every outcome, and compares the recovered reduced state
// against the original density matrix in trace distance.
Report mixed_state_experiment(const CodingScheme& scheme,
                              const std::vector<int>& subset,
                              const std::vector<std::vector<Matrix>>& density_inputs);

struct CrossCorrelationResult {
  double min_success_fidelity = 1.0;  // over success branches, vs the
                                      // subset's original reduced state
  double exact_success = 0.0;
  int branches = 0;
};

// Negative control for inputs entangled across the decode boundary:
// enumerates every outcome's success branch and reports the worst
// recovered fidelity together with the (still state-independent) exact
// success probability.
CrossCorrelationResult cross_correlation_experiment(const CodingScheme& scheme,
                                                    const std::vector<int>& subset,
                                                    const StateVector& state);

struct SweepRow {
  int n = 0, d = 0, k = 0;
  std::vector<int> subset;
  long long subspace_dim = 0;
  double p_theory = 0.0;
  double p_exact = 0.0;
  double p_mc = 0.0;
  double standard_error = 0.0;
  long long trials = 0;
  std::uint64_t seed = 0;
};

struct SweepGrid {
  int n_max = 4;
  std::vector<int> d_values = {2, 3};
  long long trials = 10000;
  long long cap = default_enumeration_cap;
};

// Every (n, d, k, subset) cell of the grid: theory value d^k/D_k, exact
// enumeration on a seeded random product state, and a Monte Carlo
// estimate. Cells over the cap are skipped.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, std::uint64_t master_seed);

// All size-k subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> all_subsets(int n, int k);

std::string subset_string(const std::vector<int>& subset);

// CSV emission, header: n,d,k,subset,D_k,p_theory,p_exact,p_mc,stderr,trials,seed
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);

}  // namespace qpc
