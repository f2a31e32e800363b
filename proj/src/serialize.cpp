#include "qpc/serialize.hpp"

#include <stdexcept>

namespace qpc {

namespace {

std::string role_string(const Subsystem& s) {
  return (s.kind == Subsystem::Kind::data ? "q" : "E") + std::to_string(s.qudit);
}

Subsystem subsystem_from(const std::string& role, int dim) {
  if (role.size() < 2 || (role[0] != 'q' && role[0] != 'E')) {
    throw std::invalid_argument("unknown subsystem role: " + role);
  }
  const int qudit = std::stoi(role.substr(1));
  return role[0] == 'q' ? Subsystem::data(qudit, dim)
                        : Subsystem::environment(qudit, dim);
}

}  // namespace

nlohmann::json state_to_json(const StateVector& psi) {
  nlohmann::json layout = nlohmann::json::array();
  for (const auto& s : psi.layout.subsystems()) {
    layout.push_back({{"role", role_string(s)}, {"dim", s.dim}});
  }
  std::vector<double> re(psi.dim()), im(psi.dim());
  for (long long i = 0; i < psi.dim(); ++i) {
    re[i] = psi.amplitudes(i).real();
    im[i] = psi.amplitudes(i).imag();
  }
  return {{"layout", layout}, {"amplitudes_re", re}, {"amplitudes_im", im}};
}

StateVector state_from_json(const nlohmann::json& j) {
  std::vector<Subsystem> subs;
  for (const auto& entry : j.at("layout")) {
    subs.push_back(subsystem_from(entry.at("role").get<std::string>(),
                                  entry.at("dim").get<int>()));
  }
  const auto re = j.at("amplitudes_re").get<std::vector<double>>();
  const auto im = j.at("amplitudes_im").get<std::vector<double>>();
  if (re.size() != im.size()) {
    throw std::invalid_argument("amplitude arrays have different lengths");
  }
  Vector amps(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) amps(i) = Complex{re[i], im[i]};
  return make_state(SystemLayout(std::move(subs)), std::move(amps));
}

nlohmann::json scheme_to_json(const CodingScheme& scheme) {
  return {{"n", scheme.n}, {"d", scheme.d}, {"k", scheme.k}};
}

CodingScheme scheme_from_json(const nlohmann::json& j) {
  return CodingScheme(j.at("n").get<int>(), j.at("d").get<int>(),
                      j.at("k").get<int>());
}

nlohmann::json message_to_json(const ClassicalMessage& message) {
  return {{"digits", message.outcome.digits}};
}

ClassicalMessage message_from_json(const nlohmann::json& j) {
  return {OutcomeString{j.at("digits").get<std::vector<int>>()}};
}

nlohmann::json transcript_json(const TrialRecord& record) {
  nlohmann::json out = {
      {"scheme", scheme_to_json(record.scheme)},
      {"subset", record.subset},
      {"outcome", record.outcome.str(record.scheme.d)},
      {"outcome_probability", record.outcome_probability},
      {"success", record.success},
      {"conditional_success_probability", record.conditional_success_probability},
      {"fidelity", nullptr},
  };
  if (record.fidelity) out["fidelity"] = *record.fidelity;
  return out;
}

nlohmann::json sweep_row_json(const SweepRow& row) {
  return {
      {"n", row.n},
      {"d", row.d},
      {"k", row.k},
      {"subset", row.subset},
      {"D_k", row.subspace_dim},
      {"p_theory", row.p_theory},
      {"p_exact", row.p_exact},
      {"p_mc", row.p_mc},
      {"stderr", row.standard_error},
      {"trials", row.trials},
      {"seed", row.seed},
  };
}

}  // namespace qpc
