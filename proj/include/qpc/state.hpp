// Multi-qudit register states: state vectors and density matrices over a
// SystemLayout, plus construction (product states, Haar sampling,
// environment-entangled pairs, purification) and entanglement measures.
#pragma once

#include <vector>

#include "qpc/layout.hpp"
#include "qpc/linalg.hpp"
#include "qpc/rng.hpp"

namespace qpc {

struct StateVector {
  SystemLayout layout;
  Vector amplitudes;

  long long dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
  bool is_normalized(double tol = norm_tolerance) const;
  StateVector normalized() const;
};

struct DensityMatrix {
  SystemLayout layout;
  Matrix entries;

  long long dim() const { return entries.rows(); }
};

StateVector make_state(SystemLayout layout, Vector amplitudes);
// Validates Hermiticity, unit trace and positivity.
DensityMatrix make_density(SystemLayout layout, Matrix entries);
DensityMatrix to_density(const StateVector& psi);

// Tensor product of n normalized local vectors of dimension d, in layout
// order (qudit 1 most significant).
StateVector product_state(const std::vector<Vector>& locals, int d);

// Normalized Haar-random pure state of dimension d: independent standard
// complex Gaussian amplitudes, normalized.
Vector haar_random_local(int d, Rng& rng);

// State on (E1, q1, E2, q2, ...) built from one coefficient matrix per
// qudit. coeffs[t](x, e) is the amplitude of |e⟩_E|x⟩_t, so row x is the
// unnormalized environment branch vector selected by data digit x.
// Each matrix must have unit Frobenius norm.
StateVector environment_entangled_state(const std::vector<Matrix>& coeffs);

// Single (E, q) pair vector for one coefficient matrix.
Vector pair_vector(const Matrix& coeff);

// Spectral purification on (Environment, Data): eigenvalues below 1e-12
// are dropped, eigenpairs enter in descending eigenvalue order, and the
// environment carries the full dimension of rho (not just its rank).
// Requires a layout with no environment subsystems.
StateVector purify(const DensityMatrix& rho);

// Basis-independent kernel: purification vector on (env, data) for a
// square density matrix given as a plain matrix.
Vector purification_vector(const Matrix& rho);

// Typed wrappers over the dense kernel. Layouts must match.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);
DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep);
double fidelity_pure(const StateVector& u, const StateVector& v);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Von Neumann entropy (base-2) of the reduced state on `cut`; psi must be
// normalized and the cut must be a proper nonempty subset of positions.
double entanglement_entropy(const StateVector& psi, const std::vector<int>& cut);

// Entropy of a density matrix, base-2.
double von_neumann_entropy(const Matrix& rho);

}  // namespace qpc
