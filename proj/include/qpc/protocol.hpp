// The Alice/Bob pipeline. Encoding applies a sampled (or forced)
// measurement operator and always succeeds; the outcome string travels to
// Bob as classical side information; decoding is a two-outcome projective
// measurement that either recovers the chosen k qudits exactly or fails.
//
// The decode subset is an explicit call-time parameter and may not be
// chosen as a function of the outcome string; every size-k subset is
// valid for every outcome.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qpc/coding.hpp"
#include "qpc/state.hpp"

namespace qpc {

struct EncodeRecord {
  CodingScheme scheme;
  OutcomeString outcome;
  StateVector post_state;  // normalized, supported on the outcome's ball
  double outcome_probability = 0.0;
};

struct ClassicalMessage {
  OutcomeString outcome;  // all n digits; decoding consumes the non-subset ones
};

struct DecodeResult {
  bool success = false;
  StateVector post_state;  // renormalized success or failure projection
  double conditional_success_probability = 0.0;
  std::optional<StateVector> recovered;  // present iff success
  double recovered_purity = 0.0;
};

// Samples an outcome from the Born distribution (or takes the forced one,
// still recording its true probability), applies the embedded measurement
// operator and renormalizes. Forcing an outcome of (near-)zero
// probability is an error.
EncodeRecord encode(const StateVector& state, const CodingScheme& scheme,
                    Rng& rng,
                    const std::optional<OutcomeString>& forced = std::nullopt);

ClassicalMessage classical_message(const EncodeRecord& record);

// Success/failure projectors on the data register for outcome m and a
// 1-based subset of exactly k qudits. P_S sums |x⟩⟨x| over all strings
// agreeing with m outside the subset; P_F covers the rest of the ball, so
// P_S + P_F is the projector onto the encoding subspace and P_S·P_F = 0.
std::pair<Matrix, Matrix> decode_projectors(const CodingScheme& scheme,
                                            const OutcomeString& m,
                                            const std::vector<int>& subset);

// Samples the success branch with probability ‖P_S·post‖² and returns the
// renormalized projection; on success the recovered subset state is
// extracted as well.
DecodeResult decode(const EncodeRecord& record, const std::vector<int>& subset,
                    Rng& rng);

// Deterministic variant: evaluates the requested branch instead of
// sampling it. Asking for a branch of zero probability is an error.
DecodeResult decode_branch(const EncodeRecord& record,
                           const std::vector<int>& subset, bool take_success);

// Extracts the state of the subset qudits (with their environments, when
// present) from a successful decode: the discarded subsystems are frozen
// in a product state, so the kept reduced state is pure; its purity is
// verified and the dominant eigenvector returned on the kept sub-layout.
StateVector recover_subset(const DecodeResult& result,
                           const std::vector<int>& subset,
                           const SystemLayout& layout);

struct JointOutcome {
  OutcomeString outcome;
  double outcome_probability = 0.0;
  double joint_success_probability = 0.0;  // P(m and success)
  // Undefined (not 0/0) when P(m) vanishes.
  std::optional<double> conditional_success_probability;
};

// Full enumeration of (outcome, success) probabilities, engine path.
std::vector<JointOutcome> joint_distribution(const StateVector& state,
                                             const CodingScheme& scheme,
                                             const std::vector<int>& subset,
                                             long long cap = default_enumeration_cap);

// Σ_m ‖P_{S,m}·M_m·state‖² by full enumeration; equals d^k/D_k for every
// normalized input state, entangled or not.
double exact_success_probability(const StateVector& state,
                                 const CodingScheme& scheme,
                                 const std::vector<int>& subset,
                                 long long cap = default_enumeration_cap);

// Validates a 1-based, duplicate-free subset of exactly scheme.k qudits
// and returns it sorted.
std::vector<int> checked_subset(const CodingScheme& scheme,
                                const std::vector<int>& subset);

}  // namespace qpc
