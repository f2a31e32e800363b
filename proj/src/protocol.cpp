#include "qpc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qpc {

namespace {

// Table mapping each full-register basis index to the index of its data
// digit string (environments summed out by the caller).
std::vector<long long> data_index_table(const SystemLayout& layout, int d) {
  const auto& dims = layout.dims();
  const auto& data_positions = layout.data_positions();
  std::vector<long long> table(layout.total_dim());
  std::vector<int> digits(dims.size(), 0);
  for (long long i = 0; i < layout.total_dim(); ++i) {
    long long rest = i;
    for (int pos = static_cast<int>(dims.size()) - 1; pos >= 0; --pos) {
      digits[pos] = static_cast<int>(rest % dims[pos]);
      rest /= dims[pos];
    }
    long long x = 0;
    for (int pos : data_positions) x = x * d + digits[pos];
    table[i] = x;
  }
  return table;
}

// Data-string indices agreeing with m on every position outside the
// subset (d^k strings; they all lie inside the ball of radius k).
std::vector<char> agree_mask(const CodingScheme& scheme, const OutcomeString& m,
                             const std::vector<int>& subset) {
  std::vector<char> mask(scheme.data_dim(), 0);
  const long long assignments = [&] {
    long long a = 1;
    for (int i = 0; i < scheme.k; ++i) a *= scheme.d;
    return a;
  }();
  OutcomeString x = m;
  for (long long a = 0; a < assignments; ++a) {
    long long rest = a;
    for (int j = scheme.k - 1; j >= 0; --j) {
      x.digits[subset[j] - 1] = static_cast<int>(rest % scheme.d);
      rest /= scheme.d;
    }
    mask[outcome_index(x, scheme.d)] = 1;
  }
  return mask;
}

std::vector<char> ball_mask(const CodingScheme& scheme, const OutcomeString& m) {
  std::vector<char> mask(scheme.data_dim(), 0);
  for (const auto& x : hamming_ball(m, scheme.k, scheme.d)) {
    mask[outcome_index(x, scheme.d)] = 1;
  }
  return mask;
}

void check_state_for_scheme(const StateVector& state, const CodingScheme& scheme) {
  if (state.layout.num_data() != scheme.n ||
      !state.layout.uniform_data_dim(scheme.d)) {
    throw std::invalid_argument("state layout does not match the coding scheme");
  }
}

}  // namespace

std::vector<int> checked_subset(const CodingScheme& scheme,
                                const std::vector<int>& subset) {
  if (static_cast<int>(subset.size()) != scheme.k) {
    throw std::invalid_argument("decode subset must contain exactly k qudits");
  }
  std::set<int> unique(subset.begin(), subset.end());
  if (unique.size() != subset.size()) {
    throw std::invalid_argument("decode subset contains duplicates");
  }
  for (int t : subset) {
    if (t < 1 || t > scheme.n) {
      throw std::invalid_argument("decode subset index out of range");
    }
  }
  return {unique.begin(), unique.end()};
}

EncodeRecord encode(const StateVector& state, const CodingScheme& scheme, Rng& rng,
                    const std::optional<OutcomeString>& forced) {
  check_state_for_scheme(state, scheme);
  const auto distribution = outcome_distribution(state, scheme);
  const OutcomeString m =
      forced ? *forced : sample_outcome(distribution, rng);
  const double p = distribution.probability(m);
  if (p < probability_floor) {
    throw std::invalid_argument("forced outcome has vanishing probability");
  }

  const auto table = data_index_table(state.layout, scheme.d);
  const auto mask = ball_mask(scheme, m);
  Vector post = state.amplitudes;
  for (long long i = 0; i < post.size(); ++i) {
    if (!mask[table[i]]) post(i) = Complex{0.0, 0.0};
  }
  post /= post.norm();
  return {scheme, m, make_state(state.layout, std::move(post)), p};
}

ClassicalMessage classical_message(const EncodeRecord& record) {
  return {record.outcome};
}

std::pair<Matrix, Matrix> decode_projectors(const CodingScheme& scheme,
                                            const OutcomeString& m,
                                            const std::vector<int>& subset) {
  const auto checked = checked_subset(scheme, subset);
  const auto agree = agree_mask(scheme, m, checked);
  const auto ball = ball_mask(scheme, m);
  Matrix p_success = Matrix::Zero(scheme.data_dim(), scheme.data_dim());
  Matrix p_failure = Matrix::Zero(scheme.data_dim(), scheme.data_dim());
  for (long long x = 0; x < scheme.data_dim(); ++x) {
    if (agree[x]) {
      p_success(x, x) = 1.0;
    } else if (ball[x]) {
      p_failure(x, x) = 1.0;
    }
  }
  return {std::move(p_success), std::move(p_failure)};
}

namespace {

std::vector<int> kept_positions(const SystemLayout& layout,
                                const std::vector<int>& subset) {
  std::vector<int> kept;
  for (int pos = 0; pos < layout.size(); ++pos) {
    const auto& s = layout.at(pos);
    if (std::find(subset.begin(), subset.end(), s.qudit) != subset.end()) {
      kept.push_back(pos);
    }
  }
  return kept;
}

struct Recovered {
  StateVector state;
  double purity = 1.0;
};

// The discarded subsystems are frozen in a product state after a
// successful decode, so the kept reduced state is pure; its dominant
// eigenvector is the recovered state.
Recovered recover_impl(const StateVector& post, const std::vector<int>& subset) {
  const auto kept = kept_positions(post.layout, subset);
  if (kept.empty()) throw std::invalid_argument("subset keeps no subsystems");
  if (static_cast<int>(kept.size()) == post.layout.size()) {
    return {post, 1.0};  // nothing to discard
  }
  const auto rho = reduced_density(post, kept);
  const double pure = purity(rho.entries);
  if (pure < 1.0 - purity_tolerance) {
    throw std::runtime_error("recovered subsystems are not in a pure state");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const long long top = rho.entries.rows() - 1;  // eigenvalues ascending
  Vector recovered = canonical_phase(solver.eigenvectors().col(top));
  return {make_state(rho.layout, std::move(recovered)), pure};
}

// Shared decode path; the branch is sampled from rng unless forced.
DecodeResult decode_impl(const EncodeRecord& record, const std::vector<int>& subset,
                         Rng* rng, std::optional<bool> forced_branch) {
  const auto& scheme = record.scheme;
  const auto& post = record.post_state;
  const auto table = data_index_table(post.layout, scheme.d);
  const auto agree = agree_mask(scheme, record.outcome, subset);
  const auto ball = ball_mask(scheme, record.outcome);

  double p = 0.0;
  for (long long i = 0; i < post.dim(); ++i) {
    if (agree[table[i]]) p += std::norm(post.amplitudes(i));
  }
  const bool success =
      forced_branch ? *forced_branch
                    : std::uniform_real_distribution<double>(0.0, 1.0)(*rng) < p;

  Vector branch = post.amplitudes;
  for (long long i = 0; i < branch.size(); ++i) {
    const long long x = table[i];
    const bool keep = success ? static_cast<bool>(agree[x]) : (ball[x] && !agree[x]);
    if (!keep) branch(i) = Complex{0.0, 0.0};
  }
  const double branch_norm = branch.norm();
  if (branch_norm < std::sqrt(probability_floor)) {
    throw std::runtime_error("requested decode branch has vanishing probability");
  }
  branch /= branch_norm;

  DecodeResult result;
  result.success = success;
  result.post_state = make_state(post.layout, std::move(branch));
  result.conditional_success_probability = p;
  if (success) {
    auto recovered = recover_impl(result.post_state, subset);
    result.recovered = std::move(recovered.state);
    result.recovered_purity = recovered.purity;
  }
  return result;
}

}  // namespace

DecodeResult decode(const EncodeRecord& record, const std::vector<int>& subset,
                    Rng& rng) {
  return decode_impl(record, checked_subset(record.scheme, subset), &rng,
                     std::nullopt);
}

DecodeResult decode_branch(const EncodeRecord& record, const std::vector<int>& subset,
                           bool take_success) {
  return decode_impl(record, checked_subset(record.scheme, subset), nullptr,
                     take_success);
}

StateVector recover_subset(const DecodeResult& result, const std::vector<int>& subset,
                           const SystemLayout& layout) {
  if (!result.success) {
    throw std::invalid_argument("recover_subset requires a successful decode");
  }
  if (result.post_state.layout != layout) {
    throw std::invalid_argument("layout does not match the decoded state");
  }
  return recover_impl(result.post_state, subset).state;
}

std::vector<JointOutcome> joint_distribution(const StateVector& state,
                                             const CodingScheme& scheme,
                                             const std::vector<int>& subset,
                                             long long cap) {
  check_state_for_scheme(state, scheme);
  if (!state.is_normalized()) {
    throw std::invalid_argument("joint distribution requires a normalized state");
  }
  if (scheme.data_dim() > cap) {
    throw std::runtime_error("enumeration cap exceeded");
  }
  const auto checked = checked_subset(scheme, subset);
  const auto weights = data_string_weights(state, scheme);
  const double dk = static_cast<double>(scheme.subspace_dimension());

  std::vector<JointOutcome> rows;
  rows.reserve(scheme.outcome_count());
  for (long long mi = 0; mi < scheme.outcome_count(); ++mi) {
    const auto m = outcome_from_index(mi, scheme.n, scheme.d);
    JointOutcome row;
    row.outcome = m;
    double p_outcome = 0.0;
    for (const auto& x : hamming_ball(m, scheme.k, scheme.d)) {
      p_outcome += weights[outcome_index(x, scheme.d)];
    }
    row.outcome_probability = p_outcome / dk;

    const auto agree = agree_mask(scheme, m, checked);
    double joint = 0.0;
    for (long long x = 0; x < scheme.data_dim(); ++x) {
      if (agree[x]) joint += weights[x];
    }
    row.joint_success_probability = joint / dk;
    if (row.outcome_probability > probability_floor) {
      row.conditional_success_probability =
          row.joint_success_probability / row.outcome_probability;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double exact_success_probability(const StateVector& state, const CodingScheme& scheme,
                                 const std::vector<int>& subset, long long cap) {
  double total = 0.0;
  for (const auto& row : joint_distribution(state, scheme, subset, cap)) {
    total += row.joint_success_probability;
  }
  return total;
}

}  // namespace qpc
