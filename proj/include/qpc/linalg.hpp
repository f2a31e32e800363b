// Dense complex linear algebra kernel for multi-subsystem registers:
// tensor products, operator application and embedding, partial trace,
// fidelity and trace distance. Subsystems are addressed by an ordered
// dimension list; basis index = mixed-radix digit string with the
// leftmost subsystem most significant.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qpc {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Numerical contract: normalization/Hermiticity checks at 1e-10, exact
// entrywise assertions at 1e-12, eigenvalue-based quantities at 1e-9.
inline constexpr double norm_tolerance = 1e-10;
inline constexpr double entry_tolerance = 1e-12;
inline constexpr double spectral_tolerance = 1e-9;
inline constexpr double probability_floor = 1e-14;
inline constexpr double purity_tolerance = 1e-8;
inline constexpr double eigenvalue_floor = 1e-12;
inline constexpr long long default_enumeration_cap = 4096;

bool all_finite(const Vector& v);
bool all_finite(const Matrix& m);

// Mixed-radix index arithmetic, leftmost digit most significant.
long long total_dimension(const std::vector<int>& dims);
std::vector<int> index_digits(long long index, const std::vector<int>& dims);
long long digits_index(const std::vector<int>& digits, const std::vector<int>& dims);

// Kronecker products; the left operand is most significant:
// (a ⊗ b)[i*dim(b)+j] = a[i]*b[j].
Vector tensor_product(const Vector& a, const Vector& b);
Matrix tensor_product(const Matrix& a, const Matrix& b);

// op·v, unnormalized. When op is a measurement operator and v is
// normalized, the squared norm of the result is the Born probability.
Vector apply_operator(const Matrix& op, const Vector& v);

// op ⊗ identity on the non-target subsystems, wired so that op's axis i
// acts on subsystem targets[i]. Targets must be distinct and op's
// dimension must equal the product of the target dimensions.
Matrix embed_on_subsystems(const Matrix& op, const std::vector<int>& dims,
                           const std::vector<int>& targets);

// Reduced matrix over the kept subsystems (order preserved).
Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<int>& keep);

// Partial trace of |psi⟩⟨psi| without materializing the full density
// matrix. Entrywise identical to partial_trace on the outer product.
Matrix reduced_density(const Vector& psi, const std::vector<int>& dims,
                       const std::vector<int>& keep);

// |⟨u|v⟩|² for normalized vectors; invariant under global phase.
double fidelity_pure(const Vector& u, const Vector& v);

// ⟨v|rho|v⟩, the overlap of a pure state with a mixed reference.
double fidelity_with_density(const Vector& v, const Matrix& rho);

// (1/2)·Σ|eig(a-b)|; zero iff a = b.
double trace_distance(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& m, double tol = norm_tolerance);

// tr(rho²); equals 1 for pure states.
double purity(const Matrix& rho);

// Throws std::invalid_argument unless rho is Hermitian, trace-1 and has
// eigenvalues ≥ -1e-10.
void check_density(const Matrix& rho, double tol = norm_tolerance);

// Fixes the global phase so the largest-modulus entry is real positive.
Vector canonical_phase(const Vector& v);

}  // namespace qpc
