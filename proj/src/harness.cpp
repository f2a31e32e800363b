#include "qpc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qpc {

namespace {

Matrix random_coefficient_matrix(int d, int env_dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix c(d, env_dim);
  for (int x = 0; x < d; ++x) {
    for (int e = 0; e < env_dim; ++e) {
      c(x, e) = Complex{gauss(rng), gauss(rng)};
    }
  }
  return c / c.norm();
}

Matrix random_density(int d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = Complex{gauss(rng), gauss(rng)};
    }
  }
  Matrix rho = g * g.adjoint();
  return rho / std::real(rho.trace());
}

}  // namespace

ProtocolInput random_product_input(const CodingScheme& scheme, Rng& rng) {
  ProtocolInput input;
  input.kind = InputKind::product;
  for (int t = 0; t < scheme.n; ++t) {
    input.locals.push_back(haar_random_local(scheme.d, rng));
  }
  input.state = product_state(input.locals, scheme.d);
  return input;
}

ProtocolInput random_entangled_input(const CodingScheme& scheme, Rng& rng,
                                     int env_dim) {
  if (env_dim == 0) env_dim = scheme.d;
  ProtocolInput input;
  input.kind = InputKind::env_entangled;
  std::vector<Matrix> coeffs;
  for (int t = 0; t < scheme.n; ++t) {
    coeffs.push_back(random_coefficient_matrix(scheme.d, env_dim, rng));
    input.pair_states.push_back(pair_vector(coeffs.back()));
  }
  input.state = environment_entangled_state(coeffs);
  return input;
}

ProtocolInput random_mixed_input(const CodingScheme& scheme, Rng& rng) {
  ProtocolInput input;
  input.kind = InputKind::purified_mixed;
  Vector amps = Vector::Ones(1);
  for (int t = 0; t < scheme.n; ++t) {
    input.qudit_density.push_back(random_density(scheme.d, rng));
    input.pair_states.push_back(purification_vector(input.qudit_density.back()));
    amps = tensor_product(amps, input.pair_states.back());
  }
  input.state = make_state(
      SystemLayout::with_environments(scheme.n, scheme.d, scheme.d), std::move(amps));
  return input;
}

ProtocolInput cross_correlated_input(const CodingScheme& scheme, Rng& rng) {
  ProtocolInput input;
  input.kind = InputKind::cross_correlated;
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector amps(scheme.data_dim());
  for (long long i = 0; i < amps.size(); ++i) {
    amps(i) = Complex{gauss(rng), gauss(rng)};
  }
  amps /= amps.norm();
  input.state = make_state(SystemLayout::data_register(scheme.n, scheme.d),
                           std::move(amps));
  return input;
}

ProtocolInput make_input(InputKind kind, const CodingScheme& scheme, Rng& rng) {
  switch (kind) {
    case InputKind::product: return random_product_input(scheme, rng);
    case InputKind::env_entangled: return random_entangled_input(scheme, rng);
    case InputKind::purified_mixed: return random_mixed_input(scheme, rng);
    case InputKind::cross_correlated: return cross_correlated_input(scheme, rng);
  }
  throw std::logic_error("unknown input kind");
}

double subset_fidelity(const ProtocolInput& input, const std::vector<int>& subset,
                       const StateVector& recovered) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  switch (input.kind) {
    case InputKind::product: {
      Vector reference = Vector::Ones(1);
      for (int t : sorted) reference = tensor_product(reference, input.locals[t - 1]);
      return fidelity_pure(reference, recovered.amplitudes);
    }
    case InputKind::env_entangled:
    case InputKind::purified_mixed: {
      Vector reference = Vector::Ones(1);
      for (int t : sorted) {
        reference = tensor_product(reference, input.pair_states[t - 1]);
      }
      return fidelity_pure(reference, recovered.amplitudes);
    }
    case InputKind::cross_correlated: {
      std::vector<int> keep;
      for (int t : sorted) keep.push_back(input.state.layout.data_positions()[t - 1]);
      const auto reference = reduced_density(input.state, keep);
      return fidelity_with_density(recovered.amplitudes, reference.entries);
    }
  }
  throw std::logic_error("unknown input kind");
}

TrialRecord run_trial(const CodingScheme& scheme, const std::vector<int>& subset,
                      const ProtocolInput& input, Rng& rng, std::uint64_t seed) {
  const auto record = encode(input.state, scheme, rng);
  const auto message = classical_message(record);
  const auto result = decode(record, subset, rng);

  TrialRecord trial;
  trial.seed = seed;
  trial.scheme = scheme;
  trial.subset = subset;
  trial.outcome = message.outcome;
  trial.outcome_probability = record.outcome_probability;
  trial.success = result.success;
  trial.conditional_success_probability = result.conditional_success_probability;
  if (result.success) {
    trial.fidelity = subset_fidelity(input, subset, *result.recovered);
  }
  return trial;
}

TrialRecord run_trial(const CodingScheme& scheme, const std::vector<int>& subset,
                      InputKind kind, std::uint64_t master_seed,
                      std::uint64_t trial_index) {
  const std::uint64_t seed = derive_stream_seed(master_seed, trial_index);
  Rng rng = make_rng(seed);
  const auto input = make_input(kind, scheme, rng);
  return run_trial(scheme, subset, input, rng, seed);
}

MonteCarloEstimate monte_carlo(const CodingScheme& scheme,
                               const std::vector<int>& subset, long long trials,
                               std::uint64_t master_seed, InputKind kind) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  MonteCarloEstimate estimate;
  estimate.trials = trials;
  estimate.master_seed = master_seed;
  for (long long i = 0; i < trials; ++i) {
    if (run_trial(scheme, subset, kind, master_seed, i).success) {
      ++estimate.successes;
    }
  }
  estimate.p_hat = static_cast<double>(estimate.successes) / trials;
  estimate.standard_error =
      std::sqrt(estimate.p_hat * (1.0 - estimate.p_hat) / trials);
  return estimate;
}

std::vector<OracleRow> brute_force_oracle(const CodingScheme& scheme,
                                          const std::vector<int>& subset,
                                          const StateVector& state) {
  if (scheme.data_dim() > 1024) throw std::runtime_error("enumeration cap exceeded");
  if (static_cast<int>(subset.size()) != scheme.k) {
    throw std::invalid_argument("subset must contain exactly k qudits");
  }
  const int n = scheme.n;
  const int d = scheme.d;
  const auto& dims = state.layout.dims();
  const auto& data_positions = state.layout.data_positions();
  const long long full_dim = state.dim();

  std::vector<char> in_subset(n + 1, 0);
  for (int t : subset) in_subset.at(t) = 1;

  // Ball size counted by direct enumeration around the all-zero string.
  long long ball_size = 0;
  for (long long x = 0; x < scheme.data_dim(); ++x) {
    long long rest = x;
    int nonzero = 0;
    for (int pos = n - 1; pos >= 0; --pos) {
      nonzero += rest % d != 0;
      rest /= d;
    }
    if (nonzero <= scheme.k) ++ball_size;
  }

  // Data digits of every full-register basis state, qudit-major.
  std::vector<std::vector<int>> data_digits(full_dim, std::vector<int>(n));
  std::vector<int> digits(dims.size());
  for (long long i = 0; i < full_dim; ++i) {
    long long rest = i;
    for (int pos = static_cast<int>(dims.size()) - 1; pos >= 0; --pos) {
      digits[pos] = static_cast<int>(rest % dims[pos]);
      rest /= dims[pos];
    }
    for (int t = 0; t < n; ++t) data_digits[i][t] = digits[data_positions[t]];
  }

  std::vector<OracleRow> rows;
  rows.reserve(scheme.outcome_count());
  for (long long mi = 0; mi < scheme.outcome_count(); ++mi) {
    std::vector<int> m(n);
    long long rest = mi;
    for (int t = n - 1; t >= 0; --t) {
      m[t] = static_cast<int>(rest % d);
      rest /= d;
    }
    OracleRow row;
    row.outcome.digits = m;
    for (long long i = 0; i < full_dim; ++i) {
      const double w = std::norm(state.amplitudes(i));
      if (w == 0.0) continue;
      int distance = 0;
      bool agrees_outside = true;
      for (int t = 0; t < n; ++t) {
        if (data_digits[i][t] != m[t]) {
          ++distance;
          if (!in_subset[t + 1]) agrees_outside = false;
        }
      }
      if (distance <= scheme.k) row.outcome_probability += w / ball_size;
      if (agrees_outside) row.joint_success_probability += w / ball_size;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

Matrix diagonal_projector(long long dim, const std::vector<long long>& support,
                          double coeff) {
  Matrix out = Matrix::Zero(dim, dim);
  for (long long x : support) out(x, x) = coeff;
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Vector& a, const Vector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

void add_check(Report& report, const std::string& name, bool pass,
               const std::string& detail = "") {
  report.checks.push_back({name, pass, detail});
}

std::string describe_deviation(double dev) {
  std::ostringstream out;
  out << "max deviation " << dev;
  return out.str();
}

}  // namespace

Report golden_suite() {
  Report report;
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const double inv_sqrt7 = 1.0 / std::sqrt(7.0);

  // Two-qubit scheme: the four measurement operators.
  {
    const CodingScheme scheme(2, 2, 1);
    const std::vector<std::pair<std::vector<int>, std::vector<long long>>> cases = {
        {{0, 0}, {0, 1, 2}},
        {{0, 1}, {0, 1, 3}},
        {{1, 0}, {0, 2, 3}},
        {{1, 1}, {1, 2, 3}},
    };
    double worst = 0.0;
    for (const auto& [digits, support] : cases) {
      const Matrix expected = diagonal_projector(4, support, inv_sqrt3);
      worst = std::max(worst,
                       max_abs_diff(encoding_operator(scheme, {digits}), expected));
    }
    add_check(report, "two-qubit measurement operators", worst <= entry_tolerance,
              describe_deviation(worst));
  }

  // Post-measurement state of the two-qubit scheme, outcome (0,0).
  {
    const CodingScheme scheme(2, 2, 1);
    const Complex a1{0.6, 0.0}, b1{0.8, 0.0};
    const Complex a2{1.0 / std::sqrt(5.0), 0.0}, b2{0.0, 2.0 / std::sqrt(5.0)};
    Vector local1(2), local2(2);
    local1 << a1, b1;
    local2 << a2, b2;
    const auto state = product_state({local1, local2}, 2);
    Rng rng = make_rng(0);
    const auto record = encode(state, scheme, rng, OutcomeString{{0, 0}});

    Vector expected(4);
    expected << a1 * a2, a1 * b2, b1 * a2, Complex{0.0, 0.0};
    expected /= expected.norm();
    const double dev = max_abs_diff(record.post_state.amplitudes, expected);
    add_check(report, "two-qubit post-measurement state", dev <= entry_tolerance,
              describe_deviation(dev));
  }

  // Decode projectors for both single-qubit subsets, outcome (0,0).
  {
    const CodingScheme scheme(2, 2, 1);
    const auto [s1, f1] = decode_projectors(scheme, {{0, 0}}, {1});
    const auto [s2, f2] = decode_projectors(scheme, {{0, 0}}, {2});
    double worst = max_abs_diff(s1, diagonal_projector(4, {0, 2}, 1.0));
    worst = std::max(worst, max_abs_diff(f1, diagonal_projector(4, {1}, 1.0)));
    worst = std::max(worst, max_abs_diff(s2, diagonal_projector(4, {0, 1}, 1.0)));
    worst = std::max(worst, max_abs_diff(f2, diagonal_projector(4, {2}, 1.0)));
    add_check(report, "two-qubit decode projectors", worst <= entry_tolerance,
              describe_deviation(worst));
  }

  // Three qubits, single-qubit decoding: operator, post-state, projectors.
  {
    const CodingScheme scheme(3, 2, 1);
    const Matrix expected_op = diagonal_projector(8, {0, 1, 2, 4}, 0.5);
    const double op_dev =
        max_abs_diff(encoding_operator(scheme, {{0, 0, 0}}), expected_op);
    add_check(report, "three-qubit operator, single-qubit decoding",
              op_dev <= entry_tolerance, describe_deviation(op_dev));

    Vector l1(2), l2(2), l3(2);
    l1 << Complex{0.6, 0.0}, Complex{0.8, 0.0};
    l2 << Complex{1.0 / std::sqrt(2.0), 0.0}, Complex{0.0, 1.0 / std::sqrt(2.0)};
    l3 << Complex{0.8, 0.0}, Complex{0.0, 0.6};
    const auto state = product_state({l1, l2, l3}, 2);
    Rng rng = make_rng(0);
    const auto record = encode(state, scheme, rng, OutcomeString{{0, 0, 0}});
    Vector expected(8);
    expected.setZero();
    expected(0) = l1(0) * l2(0) * l3(0);
    expected(1) = l1(0) * l2(0) * l3(1);
    expected(2) = l1(0) * l2(1) * l3(0);
    expected(4) = l1(1) * l2(0) * l3(0);
    expected /= expected.norm();
    const double state_dev = max_abs_diff(record.post_state.amplitudes, expected);
    add_check(report, "three-qubit post-state, single-qubit decoding",
              state_dev <= entry_tolerance, describe_deviation(state_dev));

    const auto [ps, pf] = decode_projectors(scheme, {{0, 0, 0}}, {1});
    double proj_dev = max_abs_diff(ps, diagonal_projector(8, {0, 4}, 1.0));
    proj_dev = std::max(proj_dev, max_abs_diff(pf, diagonal_projector(8, {1, 2}, 1.0)));
    add_check(report, "three-qubit decode projectors, first qubit",
              proj_dev <= entry_tolerance, describe_deviation(proj_dev));
  }

  // Three qubits, two-qubit decoding: operator, post-state, projectors.
  {
    const CodingScheme scheme(3, 2, 2);
    const Matrix expected_op =
        diagonal_projector(8, {0, 1, 2, 3, 4, 5, 6}, inv_sqrt7);
    const double op_dev =
        max_abs_diff(encoding_operator(scheme, {{0, 0, 0}}), expected_op);
    add_check(report, "three-qubit operator, two-qubit decoding",
              op_dev <= entry_tolerance, describe_deviation(op_dev));

    Vector l1(2), l2(2), l3(2);
    l1 << Complex{0.6, 0.0}, Complex{0.8, 0.0};
    l2 << Complex{0.0, 0.6}, Complex{0.8, 0.0};
    l3 << Complex{1.0 / std::sqrt(3.0), 0.0},
        Complex{0.0, std::sqrt(2.0 / 3.0)};
    const auto state = product_state({l1, l2, l3}, 2);
    Rng rng = make_rng(0);
    const auto record = encode(state, scheme, rng, OutcomeString{{0, 0, 0}});
    Vector expected(8);
    for (long long x = 0; x < 7; ++x) {
      expected(x) = l1((x >> 2) & 1) * l2((x >> 1) & 1) * l3(x & 1);
    }
    expected(7) = Complex{0.0, 0.0};
    expected /= expected.norm();
    const double state_dev = max_abs_diff(record.post_state.amplitudes, expected);
    add_check(report, "three-qubit post-state, two-qubit decoding",
              state_dev <= entry_tolerance, describe_deviation(state_dev));

    const auto [ps, pf] = decode_projectors(scheme, {{0, 0, 0}}, {1, 2});
    double proj_dev = max_abs_diff(ps, diagonal_projector(8, {0, 2, 4, 6}, 1.0));
    proj_dev =
        std::max(proj_dev, max_abs_diff(pf, diagonal_projector(8, {1, 3, 5}, 1.0)));
    add_check(report, "three-qubit decode projectors, first two qubits",
              proj_dev <= entry_tolerance, describe_deviation(proj_dev));
  }

  // Two-qudit closed form: center term plus the two single-digit sums.
  {
    const int d = 3;
    const CodingScheme scheme(2, d, 1);
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        std::vector<long long> support = {static_cast<long long>(i) * d + j};
        for (int p = 0; p < d; ++p) {
          if (p != i) support.push_back(static_cast<long long>(p) * d + j);
        }
        for (int q = 0; q < d; ++q) {
          if (q != j) support.push_back(static_cast<long long>(i) * d + q);
        }
        const Matrix expected =
            diagonal_projector(d * d, support, 1.0 / std::sqrt(2.0 * d - 1.0));
        worst = std::max(
            worst, max_abs_diff(encoding_operator(scheme, {{i, j}}), expected));
      }
    }
    add_check(report, "two-qutrit operator closed form", worst <= entry_tolerance,
              describe_deviation(worst));
  }

  return report;
}

Report entanglement_experiment(const CodingScheme& scheme,
                               const std::vector<int>& subset,
                               const std::vector<std::vector<Matrix>>& coeff_sets) {
  Report report;
  const auto sorted = checked_subset(scheme, subset);
  Rng unused = make_rng(0);

  int input_index = 0;
  for (const auto& coeffs : coeff_sets) {
    const auto state = environment_entangled_state(coeffs);
    const auto distribution = outcome_distribution(state, scheme);

    // Entropy between each decoded qudit and its environment, before.
    std::vector<double> pre;
    for (int t : sorted) {
      pre.push_back(entanglement_entropy(
          state, {state.layout.environment_position(t).value()}));
    }

    double max_entropy_dev = 0.0;
    double min_fidelity = 1.0;
    Vector reference = Vector::Ones(1);
    for (int t : sorted) reference = tensor_product(reference, pair_vector(coeffs[t - 1]));

    for (long long mi = 0; mi < scheme.outcome_count(); ++mi) {
      const auto m = outcome_from_index(mi, scheme.n, scheme.d);
      if (distribution.probability(m) <= probability_floor) continue;
      const auto record = encode(state, scheme, unused, m);
      const auto result = decode_branch(record, sorted, true);
      const auto& recovered = *result.recovered;
      for (std::size_t j = 0; j < sorted.size(); ++j) {
        const int renumbered = static_cast<int>(j) + 1;
        const double post = entanglement_entropy(
            recovered, {recovered.layout.environment_position(renumbered).value()});
        max_entropy_dev = std::max(max_entropy_dev, std::abs(post - pre[j]));
      }
      min_fidelity =
          std::min(min_fidelity, fidelity_pure(reference, recovered.amplitudes));
    }

    std::ostringstream detail;
    detail << "entropy deviation " << max_entropy_dev << ", min fidelity "
           << min_fidelity;
    add_check(report, "entangled input " + std::to_string(input_index++),
              max_entropy_dev <= spectral_tolerance &&
                  min_fidelity >= 1.0 - norm_tolerance,
              detail.str());
  }
  return report;
}

Report mixed_state_experiment(const CodingScheme& scheme,
                              const std::vector<int>& subset,
                              const std::vector<std::vector<Matrix>>& density_inputs) {
  Report report;
  const auto sorted = checked_subset(scheme, subset);
  Rng unused = make_rng(0);

  int input_index = 0;
  for (const auto& rhos : density_inputs) {
    if (static_cast<int>(rhos.size()) != scheme.n) {
      throw std::invalid_argument("need one density matrix per qudit");
    }
    Vector amps = Vector::Ones(1);
    for (const auto& rho : rhos) amps = tensor_product(amps, purification_vector(rho));
    const auto state = make_state(
        SystemLayout::with_environments(scheme.n, scheme.d, scheme.d),
        std::move(amps));
    const auto distribution = outcome_distribution(state, scheme);

    double max_distance = 0.0;
    for (long long mi = 0; mi < scheme.outcome_count(); ++mi) {
      const auto m = outcome_from_index(mi, scheme.n, scheme.d);
      if (distribution.probability(m) <= probability_floor) continue;
      const auto record = encode(state, scheme, unused, m);
      const auto result = decode_branch(record, sorted, true);
      const auto& recovered = *result.recovered;
      for (std::size_t j = 0; j < sorted.size(); ++j) {
        const int renumbered = static_cast<int>(j) + 1;
        const int data_pos = recovered.layout.data_positions()[renumbered - 1];
        const auto reduced = reduced_density(recovered, {data_pos});
        max_distance = std::max(
            max_distance, trace_distance(reduced.entries, rhos[sorted[j] - 1]));
      }
    }

    add_check(report, "mixed input " + std::to_string(input_index++),
              max_distance <= spectral_tolerance,
              "max trace distance " + std::to_string(max_distance));
  }
  return report;
}

CrossCorrelationResult cross_correlation_experiment(const CodingScheme& scheme,
                                                    const std::vector<int>& subset,
                                                    const StateVector& state) {
  const auto sorted = checked_subset(scheme, subset);
  Rng unused = make_rng(0);
  const auto distribution = outcome_distribution(state, scheme);

  std::vector<int> keep;
  for (int t : sorted) keep.push_back(state.layout.data_positions()[t - 1]);
  const auto reference = reduced_density(state, keep);

  CrossCorrelationResult result;
  result.exact_success = exact_success_probability(state, scheme, sorted);
  for (long long mi = 0; mi < scheme.outcome_count(); ++mi) {
    const auto m = outcome_from_index(mi, scheme.n, scheme.d);
    if (distribution.probability(m) <= probability_floor) continue;
    const auto record = encode(state, scheme, unused, m);
    const auto branch = decode_branch(record, sorted, true);
    if (branch.conditional_success_probability <= probability_floor) continue;
    const double fidelity =
        fidelity_with_density(branch.recovered->amplitudes, reference.entries);
    result.min_success_fidelity = std::min(result.min_success_fidelity, fidelity);
    ++result.branches;
  }
  return result;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Lexicographic enumeration of k-combinations of {1..n}.
  std::function<void(int)> recurse = [&](int next) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int t = next; t <= n; ++t) {
      current.push_back(t);
      recurse(t + 1);
      current.pop_back();
    }
  };
  recurse(1);
  return out;
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid, std::uint64_t master_seed) {
  std::vector<SweepRow> rows;
  std::uint64_t stream = 0;
  for (int n = 1; n <= grid.n_max; ++n) {
    for (int d : grid.d_values) {
      for (int k = 1; k <= n; ++k) {
        const CodingScheme scheme(n, d, k);
        if (scheme.data_dim() > grid.cap) continue;
        for (const auto& subset : all_subsets(n, k)) {
          const std::uint64_t exact_seed = derive_stream_seed(master_seed, stream++);
          const std::uint64_t mc_seed = derive_stream_seed(master_seed, stream++);

          Rng rng = make_rng(exact_seed);
          const auto input = random_product_input(scheme, rng);

          SweepRow row;
          row.n = n;
          row.d = d;
          row.k = k;
          row.subset = subset;
          row.subspace_dim = scheme.subspace_dimension();
          row.p_theory = std::pow(static_cast<double>(d), k) /
                         static_cast<double>(row.subspace_dim);
          row.p_exact = exact_success_probability(input.state, scheme, subset);
          const auto estimate = monte_carlo(scheme, subset, grid.trials, mc_seed);
          row.p_mc = estimate.p_hat;
          row.standard_error = estimate.standard_error;
          row.trials = grid.trials;
          row.seed = mc_seed;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::string subset_string(const std::vector<int>& subset) {
  std::string out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(subset[i]);
  }
  return out;
}

std::string sweep_csv_header() {
  return "n,d,k,subset,D_k,p_theory,p_exact,p_mc,stderr,trials,seed";
}

std::string sweep_csv_row(const SweepRow& row) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), "%d,%d,%d,\"%s\",%lld,%.12g,%.12g,%.12g,%.12g,%lld,%llu",
                row.n, row.d, row.k, subset_string(row.subset).c_str(),
                row.subspace_dim, row.p_theory, row.p_exact, row.p_mc,
                row.standard_error, row.trials,
                static_cast<unsigned long long>(row.seed));
  return buffer;
}

}  // namespace qpc
