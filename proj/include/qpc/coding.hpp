// Encoding POVM for probabilistic coding of n qudits of dimension d with
// k-subset decoding. Each measurement operator is 1/√D_k times the
// projector onto the Hamming ball of radius k around its outcome string;
// D_k = Σ_{i=0}^{k} C(n,i)(d-1)^i is the ball size and the dimension of
// the encoding subspace.
#pragma once

#include <string>
#include <vector>

#include "qpc/linalg.hpp"
#include "qpc/rng.hpp"
#include "qpc/state.hpp"

namespace qpc {

struct CodingScheme {
  int n = 0;  // number of data qudits
  int d = 0;  // local dimension
  int k = 0;  // decodable subset size

  CodingScheme(int n_, int d_, int k_);

  // Σ_{i=0}^{k} C(n,i)(d-1)^i. Equals d^n when k = n, and is strictly
  // smaller whenever k < n.
  long long subspace_dimension() const;
  long long data_dim() const;       // d^n
  long long outcome_count() const;  // d^n

  bool operator==(const CodingScheme&) const = default;
};

struct OutcomeString {
  std::vector<int> digits;  // length n, each in [0, d)

  int length() const { return static_cast<int>(digits.size()); }
  // Most-significant-first rendering matching ket notation; digits are
  // concatenated for d ≤ 10 and dot-separated otherwise.
  std::string str(int d = 2) const;
  bool operator==(const OutcomeString&) const = default;
};

OutcomeString outcome_from_index(long long index, int n, int d);
long long outcome_index(const OutcomeString& m, int d);
int hamming_distance(const OutcomeString& a, const OutcomeString& b);

// All length-n strings within Hamming distance `radius` of `center`, in
// lexicographic order. Cardinality is center-independent.
std::vector<OutcomeString> hamming_ball(const OutcomeString& center, int radius,
                                        int d);

// Dense measurement operator for outcome m: (1/√D_k) Σ_{x∈ball(m,k)} |x⟩⟨x|.
Matrix encoding_operator(const CodingScheme& scheme, const OutcomeString& m);

// Diagonal of encoding_operator: the internal fast path. Entry x is
// 1/√D_k when x lies in the ball, else 0.
std::vector<double> encoding_diagonal(const CodingScheme& scheme,
                                      const OutcomeString& m);

struct CompletenessReport {
  bool complete = false;
  double max_deviation = 0.0;
};

// Checks Σ_m M_m†M_m = I by counting how many balls contain each basis
// string (the operators are diagonal, so off-diagonal deviation is zero
// by construction). Throws when d^n exceeds the cap.
CompletenessReport verify_completeness(const CodingScheme& scheme,
                                       long long cap = default_enumeration_cap);

struct OutcomeDistribution {
  CodingScheme scheme;
  std::vector<double> probabilities;  // indexed by outcome index, lexicographic

  double probability(const OutcomeString& m) const;
  double sum() const;
};

// Born probabilities P(m) = ‖embed(M_m)·state‖² of Alice's measurement,
// with M_m acting on the data qudits and identity on environments.
OutcomeDistribution outcome_distribution(const StateVector& state,
                                         const CodingScheme& scheme);

// Inverse-CDF sampling over outcomes in lexicographic order; outcomes
// with probability below 1e-14 are never returned. The distribution must
// sum to 1 within 1e-10.
OutcomeString sample_outcome(const OutcomeDistribution& distribution, Rng& rng);

// Internal fast path shared by the protocol engine: per-basis-string
// weight of the state on the data register, i.e. the squared amplitude
// mass of each data digit string after summing out environments.
std::vector<double> data_string_weights(const StateVector& state,
                                        const CodingScheme& scheme);

}  // namespace qpc
