#include "qpc/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qpc {

bool StateVector::is_normalized(double tol) const {
  return std::abs(amplitudes.norm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  double n = amplitudes.norm();
  if (n <= 0.0) throw std::invalid_argument("cannot normalize a zero state");
  return {layout, amplitudes / n};
}

StateVector make_state(SystemLayout layout, Vector amplitudes) {
  if (amplitudes.size() != layout.total_dim()) {
    throw std::invalid_argument("amplitude count does not match layout dimension");
  }
  if (!all_finite(amplitudes)) {
    throw std::invalid_argument("state has non-finite amplitudes");
  }
  return {std::move(layout), std::move(amplitudes)};
}

DensityMatrix make_density(SystemLayout layout, Matrix entries) {
  if (entries.rows() != layout.total_dim()) {
    throw std::invalid_argument("matrix dimension does not match layout");
  }
  check_density(entries);
  return {std::move(layout), std::move(entries)};
}

DensityMatrix to_density(const StateVector& psi) {
  return {psi.layout, psi.amplitudes * psi.amplitudes.adjoint()};
}

StateVector product_state(const std::vector<Vector>& locals, int d) {
  if (locals.empty()) throw std::invalid_argument("product state needs at least one qudit");
  Vector amps = Vector::Ones(1);
  for (const auto& local : locals) {
    if (local.size() != d) {
      throw std::invalid_argument("local vector has wrong dimension");
    }
    if (std::abs(local.norm() - 1.0) > norm_tolerance) {
      throw std::invalid_argument("local vector is not normalized");
    }
    amps = tensor_product(amps, local);
  }
  return make_state(SystemLayout::data_register(static_cast<int>(locals.size()), d),
                    std::move(amps));
}

Vector haar_random_local(int d, Rng& rng) {
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(d);
  for (int i = 0; i < d; ++i) {
    double re = gauss(rng);
    double im = gauss(rng);
    v(i) = Complex{re, im};
  }
  return v / v.norm();
}

Vector pair_vector(const Matrix& coeff) {
  const int d = static_cast<int>(coeff.rows());
  const int env_dim = static_cast<int>(coeff.cols());
  // (E, q) order: amplitude of |e⟩|x⟩ is coeff(x, e).
  Vector pair(static_cast<long long>(env_dim) * d);
  for (int e = 0; e < env_dim; ++e) {
    for (int x = 0; x < d; ++x) {
      pair(static_cast<long long>(e) * d + x) = coeff(x, e);
    }
  }
  return pair;
}

StateVector environment_entangled_state(const std::vector<Matrix>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("need at least one qudit");
  const int d = static_cast<int>(coeffs.front().rows());
  const int env_dim = static_cast<int>(coeffs.front().cols());
  Vector amps = Vector::Ones(1);
  for (const auto& c : coeffs) {
    if (c.rows() != d || c.cols() != env_dim) {
      throw std::invalid_argument("coefficient matrices must share one shape");
    }
    if (std::abs(c.norm() - 1.0) > norm_tolerance) {
      throw std::invalid_argument("coefficient matrix is not normalized");
    }
    amps = tensor_product(amps, pair_vector(c));
  }
  return make_state(
      SystemLayout::with_environments(static_cast<int>(coeffs.size()), d, env_dim),
      std::move(amps));
}

Vector purification_vector(const Matrix& rho) {
  check_density(rho);
  const long long d = rho.rows();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  Vector out = Vector::Zero(d * d);
  // Descending eigenvalues; environment basis index = rank position.
  int env_index = 0;
  for (long long i = d - 1; i >= 0; --i) {
    double lambda = solver.eigenvalues()(i);
    if (lambda < eigenvalue_floor) continue;
    Vector v = canonical_phase(solver.eigenvectors().col(i));
    for (long long x = 0; x < d; ++x) {
      out(static_cast<long long>(env_index) * d + x) = std::sqrt(lambda) * v(x);
    }
    ++env_index;
  }
  return out / out.norm();
}

StateVector purify(const DensityMatrix& rho) {
  for (const auto& s : rho.layout.subsystems()) {
    if (s.kind == Subsystem::Kind::environment) {
      throw std::invalid_argument("cannot purify a state that already has environments");
    }
  }
  const int d = static_cast<int>(rho.dim());
  const int attach = rho.layout.subsystems().front().qudit;
  Vector amps = purification_vector(rho.entries);
  std::vector<Subsystem> subs;
  subs.push_back(Subsystem::environment(attach, d));
  for (const auto& s : rho.layout.subsystems()) subs.push_back(s);
  return make_state(SystemLayout(std::move(subs)), std::move(amps));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  Matrix reduced = partial_trace(rho.entries, rho.layout.dims(), keep);
  return {rho.layout.sub_layout(keep), std::move(reduced)};
}

DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep) {
  Matrix reduced = reduced_density(psi.amplitudes, psi.layout.dims(), keep);
  return {psi.layout.sub_layout(keep), std::move(reduced)};
}

double fidelity_pure(const StateVector& u, const StateVector& v) {
  if (u.layout.dims() != v.layout.dims()) {
    throw std::invalid_argument("fidelity requires matching layouts");
  }
  return fidelity_pure(u.amplitudes, v.amplitudes);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  check_density(a.entries);
  check_density(b.entries);
  return trace_distance(a.entries, b.entries);
}

double von_neumann_entropy(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (long long i = 0; i < solver.eigenvalues().size(); ++i) {
    double lambda = solver.eigenvalues()(i);
    if (lambda > eigenvalue_floor) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

double entanglement_entropy(const StateVector& psi, const std::vector<int>& cut) {
  if (cut.empty() || static_cast<int>(cut.size()) >= psi.layout.size()) {
    throw std::invalid_argument("cut must be a proper nonempty subset of subsystems");
  }
  if (!psi.is_normalized()) {
    throw std::invalid_argument("entanglement entropy requires a normalized state");
  }
  return von_neumann_entropy(reduced_density(psi.amplitudes, psi.layout.dims(), cut));
}

}  // namespace qpc
