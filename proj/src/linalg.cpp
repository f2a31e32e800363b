#include "qpc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qpc {

bool all_finite(const Vector& v) { return v.allFinite(); }
bool all_finite(const Matrix& m) { return m.allFinite(); }

long long total_dimension(const std::vector<int>& dims) {
  long long total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    total *= d;
  }
  return total;
}

std::vector<int> index_digits(long long index, const std::vector<int>& dims) {
  std::vector<int> digits(dims.size());
  for (int pos = static_cast<int>(dims.size()) - 1; pos >= 0; --pos) {
    digits[pos] = static_cast<int>(index % dims[pos]);
    index /= dims[pos];
  }
  return digits;
}

long long digits_index(const std::vector<int>& digits, const std::vector<int>& dims) {
  if (digits.size() != dims.size()) {
    throw std::invalid_argument("digit string length does not match layout");
  }
  long long index = 0;
  for (std::size_t pos = 0; pos < dims.size(); ++pos) {
    if (digits[pos] < 0 || digits[pos] >= dims[pos]) {
      throw std::invalid_argument("digit out of range");
    }
    index = index * dims[pos] + digits[pos];
  }
  return index;
}

Vector tensor_product(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (long long i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long long i = 0; i < a.rows(); ++i) {
    for (long long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector apply_operator(const Matrix& op, const Vector& v) {
  if (op.cols() != v.size()) {
    throw std::invalid_argument("operator/state dimension mismatch");
  }
  return op * v;
}

namespace {

// Flat offsets contributed by each composite index of `positions`: entry j
// is the full-register index with the positions holding the j-th digit
// assignment and zeros elsewhere.
std::vector<long long> position_offsets(const std::vector<int>& dims,
                                        const std::vector<int>& positions) {
  std::vector<long long> strides(dims.size(), 1);
  for (int pos = static_cast<int>(dims.size()) - 2; pos >= 0; --pos) {
    strides[pos] = strides[pos + 1] * dims[pos + 1];
  }
  long long count = 1;
  for (int pos : positions) count *= dims[pos];

  std::vector<long long> offsets(count, 0);
  long long repeat = count;
  for (int pos : positions) {
    repeat /= dims[pos];
    for (long long j = 0; j < count; ++j) {
      long long digit = (j / repeat) % dims[pos];
      offsets[j] += digit * strides[pos];
    }
  }
  return offsets;
}

void check_positions(const std::vector<int>& dims, const std::vector<int>& positions,
                     const char* what) {
  std::set<int> seen;
  for (int pos : positions) {
    if (pos < 0 || pos >= static_cast<int>(dims.size())) {
      throw std::invalid_argument(std::string(what) + " position out of range");
    }
    if (!seen.insert(pos).second) {
      throw std::invalid_argument(std::string(what) + " positions must be distinct");
    }
  }
}

}  // namespace

Matrix embed_on_subsystems(const Matrix& op, const std::vector<int>& dims,
                           const std::vector<int>& targets) {
  check_positions(dims, targets, "target");
  long long target_dim = 1;
  for (int pos : targets) target_dim *= dims[pos];
  if (op.rows() != op.cols() || op.rows() != target_dim) {
    throw std::invalid_argument("operator dimension does not match target subsystems");
  }
  std::vector<int> rest;
  for (int pos = 0; pos < static_cast<int>(dims.size()); ++pos) {
    if (std::find(targets.begin(), targets.end(), pos) == targets.end()) {
      rest.push_back(pos);
    }
  }
  const auto target_offsets = position_offsets(dims, targets);
  const auto rest_offsets = position_offsets(dims, rest);

  const long long total = total_dimension(dims);
  Matrix out = Matrix::Zero(total, total);
  for (long long r = 0; r < static_cast<long long>(rest_offsets.size()); ++r) {
    for (long long i = 0; i < target_dim; ++i) {
      for (long long j = 0; j < target_dim; ++j) {
        if (op(i, j) != Complex{0.0, 0.0}) {
          out(target_offsets[i] + rest_offsets[r], target_offsets[j] + rest_offsets[r]) =
              op(i, j);
        }
      }
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  check_positions(dims, keep, "keep");
  if (rho.rows() != rho.cols() || rho.rows() != total_dimension(dims)) {
    throw std::invalid_argument("matrix dimension does not match layout");
  }
  std::vector<int> traced;
  for (int pos = 0; pos < static_cast<int>(dims.size()); ++pos) {
    if (std::find(keep.begin(), keep.end(), pos) == keep.end()) traced.push_back(pos);
  }
  const auto keep_offsets = position_offsets(dims, keep);
  const auto traced_offsets = position_offsets(dims, traced);

  const long long kept_dim = static_cast<long long>(keep_offsets.size());
  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (long long a = 0; a < kept_dim; ++a) {
    for (long long b = 0; b < kept_dim; ++b) {
      Complex sum{0.0, 0.0};
      for (long long e : traced_offsets) {
        sum += rho(keep_offsets[a] + e, keep_offsets[b] + e);
      }
      out(a, b) = sum;
    }
  }
  return out;
}

Matrix reduced_density(const Vector& psi, const std::vector<int>& dims,
                       const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  check_positions(dims, keep, "keep");
  if (psi.size() != total_dimension(dims)) {
    throw std::invalid_argument("state dimension does not match layout");
  }
  std::vector<int> traced;
  for (int pos = 0; pos < static_cast<int>(dims.size()); ++pos) {
    if (std::find(keep.begin(), keep.end(), pos) == keep.end()) traced.push_back(pos);
  }
  const auto keep_offsets = position_offsets(dims, keep);
  const auto traced_offsets = position_offsets(dims, traced);

  const long long kept_dim = static_cast<long long>(keep_offsets.size());
  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (long long a = 0; a < kept_dim; ++a) {
    for (long long b = a; b < kept_dim; ++b) {
      Complex sum{0.0, 0.0};
      for (long long e : traced_offsets) {
        sum += psi(keep_offsets[a] + e) * std::conj(psi(keep_offsets[b] + e));
      }
      out(a, b) = sum;
      out(b, a) = std::conj(sum);
    }
  }
  return out;
}

double fidelity_pure(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("fidelity requires equal dimensions");
  }
  if (std::abs(u.norm() - 1.0) > norm_tolerance ||
      std::abs(v.norm() - 1.0) > norm_tolerance) {
    throw std::invalid_argument("fidelity requires normalized states");
  }
  return std::norm(u.dot(v));
}

double fidelity_with_density(const Vector& v, const Matrix& rho) {
  if (rho.rows() != v.size() || rho.cols() != v.size()) {
    throw std::invalid_argument("fidelity requires equal dimensions");
  }
  return std::real(v.dot(rho * v));
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace distance requires equal dimensions");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double purity(const Matrix& rho) {
  return std::real((rho * rho).trace());
}

void check_density(const Matrix& rho, double tol) {
  if (!all_finite(rho)) throw std::invalid_argument("density matrix has non-finite entries");
  if (!is_hermitian(rho, tol)) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(std::real(rho.trace()) - 1.0) > tol || std::abs(std::imag(rho.trace())) > tol) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

Vector canonical_phase(const Vector& v) {
  long long arg_max = 0;
  double best = -1.0;
  for (long long i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > best) {
      best = std::abs(v(i));
      arg_max = i;
    }
  }
  if (best <= 0.0) return v;
  Complex phase = v(arg_max) / std::abs(v(arg_max));
  return v / phase;
}

}  // namespace qpc
