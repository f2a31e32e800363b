// Register layouts: an ordered list of subsystems, each either a data
// qudit (1-based index t) or the environment attached to one. The layout
// fixes the basis-index ↔ digit-string mapping, with the leftmost
// subsystem most significant, matching ket notation |x1 x2 ...⟩.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qpc {

struct Subsystem {
  enum class Kind { data, environment };

  Kind kind = Kind::data;
  int qudit = 0;  // data qudit index, or the qudit this environment belongs to
  int dim = 0;

  static Subsystem data(int qudit, int dim) { return {Kind::data, qudit, dim}; }
  static Subsystem environment(int qudit, int dim) {
    return {Kind::environment, qudit, dim};
  }

  bool operator==(const Subsystem&) const = default;
};

class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Subsystem> subsystems);

  // n data qudits of local dimension d, no environments.
  static SystemLayout data_register(int n, int d);
  // (E1, q1, E2, q2, ...): one environment ahead of each data qudit.
  // env_dim = 0 means "same as d".
  static SystemLayout with_environments(int n, int d, int env_dim = 0);

  int size() const { return static_cast<int>(subsystems_.size()); }
  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  const Subsystem& at(int position) const { return subsystems_.at(position); }
  const std::vector<int>& dims() const { return dims_; }
  long long total_dim() const;

  int num_data() const { return num_data_; }
  // Positions of the data qudits, ordered by qudit index 1..n.
  const std::vector<int>& data_positions() const { return data_positions_; }
  std::optional<int> environment_position(int qudit) const;
  // True when every data qudit has local dimension d.
  bool uniform_data_dim(int d) const;

  std::vector<int> digits_of(long long index) const;
  long long index_of(const std::vector<int>& digits) const;

  // Sub-layout of the given positions, in the order given.
  SystemLayout sub_layout(const std::vector<int>& positions) const;

  bool operator==(const SystemLayout&) const = default;

 private:
  std::vector<Subsystem> subsystems_;
  std::vector<int> dims_;
  std::vector<int> data_positions_;
  int num_data_ = 0;
};

}  // namespace qpc
