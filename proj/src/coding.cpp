#include "qpc/coding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpc {

namespace {

long long pow_ll(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

long long binomial(int n, int i) {
  if (i < 0 || i > n) return 0;
  long long out = 1;
  for (int j = 1; j <= i; ++j) {
    out = out * (n - j + 1) / j;
  }
  return out;
}

void check_outcome(const CodingScheme& scheme, const OutcomeString& m) {
  if (m.length() != scheme.n) {
    throw std::invalid_argument("outcome string length does not match scheme");
  }
  for (int digit : m.digits) {
    if (digit < 0 || digit >= scheme.d) {
      throw std::invalid_argument("outcome digit out of range");
    }
  }
}

// Appends all strings obtained from `center` by replacing digits at
// `changes` more positions starting from `from`.
void extend_ball(const OutcomeString& center, int d, int from, int changes,
                 OutcomeString& current, std::vector<OutcomeString>& out) {
  if (changes == 0) {
    out.push_back(current);
    return;
  }
  for (int pos = from; pos <= center.length() - changes; ++pos) {
    for (int value = 0; value < d; ++value) {
      if (value == center.digits[pos]) continue;
      current.digits[pos] = value;
      extend_ball(center, d, pos + 1, changes - 1, current, out);
    }
    current.digits[pos] = center.digits[pos];
  }
}

}  // namespace

CodingScheme::CodingScheme(int n_, int d_, int k_) : n(n_), d(d_), k(k_) {
  if (n < 1) throw std::invalid_argument("scheme requires n >= 1");
  if (d < 2) throw std::invalid_argument("scheme requires d >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("scheme requires 1 <= k <= n");
}

long long CodingScheme::subspace_dimension() const {
  long long sum = 0;
  for (int i = 0; i <= k; ++i) {
    sum += binomial(n, i) * pow_ll(d - 1, i);
  }
  return sum;
}

long long CodingScheme::data_dim() const { return pow_ll(d, n); }
long long CodingScheme::outcome_count() const { return data_dim(); }

std::string OutcomeString::str(int d) const {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (d > 10 && i > 0) out += '.';
    out += std::to_string(digits[i]);
  }
  return out;
}

OutcomeString outcome_from_index(long long index, int n, int d) {
  OutcomeString m;
  m.digits.assign(n, 0);
  for (int pos = n - 1; pos >= 0; --pos) {
    m.digits[pos] = static_cast<int>(index % d);
    index /= d;
  }
  return m;
}

long long outcome_index(const OutcomeString& m, int d) {
  long long index = 0;
  for (int digit : m.digits) index = index * d + digit;
  return index;
}

int hamming_distance(const OutcomeString& a, const OutcomeString& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("strings must have equal length");
  }
  int dist = 0;
  for (int i = 0; i < a.length(); ++i) dist += a.digits[i] != b.digits[i];
  return dist;
}

std::vector<OutcomeString> hamming_ball(const OutcomeString& center, int radius,
                                        int d) {
  if (radius < 0 || radius > center.length()) {
    throw std::invalid_argument("ball radius must lie in [0, n]");
  }
  std::vector<OutcomeString> out;
  OutcomeString current = center;
  for (int changes = 0; changes <= radius; ++changes) {
    extend_ball(center, d, 0, changes, current, out);
  }
  std::sort(out.begin(), out.end(), [&](const OutcomeString& a, const OutcomeString& b) {
    return a.digits < b.digits;
  });
  return out;
}

std::vector<double> encoding_diagonal(const CodingScheme& scheme,
                                      const OutcomeString& m) {
  check_outcome(scheme, m);
  const double coeff = 1.0 / std::sqrt(static_cast<double>(scheme.subspace_dimension()));
  std::vector<double> diag(scheme.data_dim(), 0.0);
  for (const auto& x : hamming_ball(m, scheme.k, scheme.d)) {
    diag[outcome_index(x, scheme.d)] = coeff;
  }
  return diag;
}

Matrix encoding_operator(const CodingScheme& scheme, const OutcomeString& m) {
  const auto diag = encoding_diagonal(scheme, m);
  Matrix out = Matrix::Zero(scheme.data_dim(), scheme.data_dim());
  for (long long x = 0; x < scheme.data_dim(); ++x) {
    out(x, x) = diag[x];
  }
  return out;
}

CompletenessReport verify_completeness(const CodingScheme& scheme, long long cap) {
  if (scheme.data_dim() > cap) {
    throw std::runtime_error("enumeration cap exceeded");
  }
  // Each |x⟩⟨x| carries weight 1/D_k per ball that contains x, so the sum
  // over all outcomes is diagonal with entry (#balls containing x)/D_k.
  std::vector<long long> counts(scheme.data_dim(), 0);
  for (long long mi = 0; mi < scheme.outcome_count(); ++mi) {
    const auto m = outcome_from_index(mi, scheme.n, scheme.d);
    for (const auto& x : hamming_ball(m, scheme.k, scheme.d)) {
      ++counts[outcome_index(x, scheme.d)];
    }
  }
  const double dk = static_cast<double>(scheme.subspace_dimension());
  double max_dev = 0.0;
  for (long long c : counts) {
    max_dev = std::max(max_dev, std::abs(static_cast<double>(c) / dk - 1.0));
  }
  return {max_dev <= norm_tolerance, max_dev};
}

double OutcomeDistribution::probability(const OutcomeString& m) const {
  return probabilities.at(outcome_index(m, scheme.d));
}

double OutcomeDistribution::sum() const {
  double total = 0.0;
  for (double p : probabilities) total += p;
  return total;
}

std::vector<double> data_string_weights(const StateVector& state,
                                        const CodingScheme& scheme) {
  const auto& layout = state.layout;
  if (layout.num_data() != scheme.n || !layout.uniform_data_dim(scheme.d)) {
    throw std::invalid_argument("state layout does not match the coding scheme");
  }
  const auto& dims = layout.dims();
  const auto& data_positions = layout.data_positions();

  std::vector<double> weights(scheme.data_dim(), 0.0);
  std::vector<int> digits(dims.size(), 0);
  for (long long i = 0; i < state.dim(); ++i) {
    const double w = std::norm(state.amplitudes(i));
    if (w == 0.0) continue;
    long long rest = i;
    for (int pos = static_cast<int>(dims.size()) - 1; pos >= 0; --pos) {
      digits[pos] = static_cast<int>(rest % dims[pos]);
      rest /= dims[pos];
    }
    long long x = 0;
    for (int pos : data_positions) x = x * scheme.d + digits[pos];
    weights[x] += w;
  }
  return weights;
}

OutcomeDistribution outcome_distribution(const StateVector& state,
                                         const CodingScheme& scheme) {
  if (!state.is_normalized()) {
    throw std::invalid_argument("outcome distribution requires a normalized state");
  }
  const auto weights = data_string_weights(state, scheme);
  const double dk = static_cast<double>(scheme.subspace_dimension());

  OutcomeDistribution dist{scheme, std::vector<double>(scheme.outcome_count(), 0.0)};
  for (long long mi = 0; mi < scheme.outcome_count(); ++mi) {
    const auto m = outcome_from_index(mi, scheme.n, scheme.d);
    double p = 0.0;
    for (const auto& x : hamming_ball(m, scheme.k, scheme.d)) {
      p += weights[outcome_index(x, scheme.d)];
    }
    dist.probabilities[mi] = p / dk;
  }
  return dist;
}

OutcomeString sample_outcome(const OutcomeDistribution& distribution, Rng& rng) {
  if (std::abs(distribution.sum() - 1.0) > norm_tolerance) {
    throw std::invalid_argument("outcome distribution does not sum to 1");
  }
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double cumulative = 0.0;
  long long last_eligible = -1;
  for (long long mi = 0; mi < static_cast<long long>(distribution.probabilities.size());
       ++mi) {
    const double p = distribution.probabilities[mi];
    if (p < probability_floor) continue;
    last_eligible = mi;
    cumulative += p;
    if (u < cumulative) {
      return outcome_from_index(mi, distribution.scheme.n, distribution.scheme.d);
    }
  }
  if (last_eligible < 0) {
    throw std::runtime_error("no outcome has nonvanishing probability");
  }
  return outcome_from_index(last_eligible, distribution.scheme.n, distribution.scheme.d);
}

}  // namespace qpc
