#include "qpc/layout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qpc/linalg.hpp"

namespace qpc {

SystemLayout::SystemLayout(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
  if (subsystems_.empty()) {
    throw std::invalid_argument("layout must contain at least one subsystem");
  }
  std::set<int> data_indices;
  std::set<int> env_indices;
  for (const auto& s : subsystems_) {
    if (s.dim < 2) {
      throw std::invalid_argument("subsystem dimension must be at least 2");
    }
    if (s.kind == Subsystem::Kind::data) {
      if (!data_indices.insert(s.qudit).second) {
        throw std::invalid_argument("duplicate data qudit index in layout");
      }
    } else {
      if (!env_indices.insert(s.qudit).second) {
        throw std::invalid_argument("more than one environment for a qudit");
      }
    }
    dims_.push_back(s.dim);
  }
  num_data_ = static_cast<int>(data_indices.size());
  // Data indices must be exactly 1..n.
  int expected = 1;
  for (int t : data_indices) {
    if (t != expected++) {
      throw std::invalid_argument("data qudit indices must be exactly 1..n");
    }
  }
  for (int t : env_indices) {
    if (!data_indices.count(t)) {
      throw std::invalid_argument("environment attached to a missing qudit");
    }
  }
  data_positions_.resize(num_data_);
  for (int pos = 0; pos < size(); ++pos) {
    if (subsystems_[pos].kind == Subsystem::Kind::data) {
      data_positions_[subsystems_[pos].qudit - 1] = pos;
    }
  }
}

SystemLayout SystemLayout::data_register(int n, int d) {
  std::vector<Subsystem> subs;
  subs.reserve(n);
  for (int t = 1; t <= n; ++t) subs.push_back(Subsystem::data(t, d));
  return SystemLayout(std::move(subs));
}

SystemLayout SystemLayout::with_environments(int n, int d, int env_dim) {
  if (env_dim == 0) env_dim = d;
  std::vector<Subsystem> subs;
  subs.reserve(2 * n);
  for (int t = 1; t <= n; ++t) {
    subs.push_back(Subsystem::environment(t, env_dim));
    subs.push_back(Subsystem::data(t, d));
  }
  return SystemLayout(std::move(subs));
}

long long SystemLayout::total_dim() const { return total_dimension(dims_); }

std::optional<int> SystemLayout::environment_position(int qudit) const {
  for (int pos = 0; pos < size(); ++pos) {
    if (subsystems_[pos].kind == Subsystem::Kind::environment &&
        subsystems_[pos].qudit == qudit) {
      return pos;
    }
  }
  return std::nullopt;
}

bool SystemLayout::uniform_data_dim(int d) const {
  return std::all_of(data_positions_.begin(), data_positions_.end(),
                     [&](int pos) { return dims_[pos] == d; });
}

std::vector<int> SystemLayout::digits_of(long long index) const {
  return index_digits(index, dims_);
}

long long SystemLayout::index_of(const std::vector<int>& digits) const {
  return digits_index(digits, dims_);
}

SystemLayout SystemLayout::sub_layout(const std::vector<int>& positions) const {
  std::vector<Subsystem> subs;
  subs.reserve(positions.size());
  std::vector<int> data_seen;
  for (int pos : positions) {
    if (pos < 0 || pos >= size()) {
      throw std::invalid_argument("sub_layout position out of range");
    }
    subs.push_back(subsystems_[pos]);
    if (subs.back().kind == Subsystem::Kind::data) {
      data_seen.push_back(subs.back().qudit);
    }
  }
  // Renumber surviving data qudits 1..m, preserving order; environments
  // follow their qudits.
  std::vector<int> sorted = data_seen;
  std::sort(sorted.begin(), sorted.end());
  for (auto& s : subs) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), s.qudit);
    if (it != sorted.end() && *it == s.qudit) {
      s.qudit = static_cast<int>(it - sorted.begin()) + 1;
    }
  }
  return SystemLayout(std::move(subs));
}

}  // namespace qpc
