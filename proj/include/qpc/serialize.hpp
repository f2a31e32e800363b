// JSON import/export: states (layout plus split re/im amplitude arrays),
// schemes, classical messages, trial transcripts and sweep tables.
#pragma once

#include <string>

#include <json.hpp>

#include "qpc/harness.hpp"

namespace qpc {

// {layout: [{role: "q1"|"E1", dim}...], amplitudes_re: [...], amplitudes_im: [...]}
nlohmann::json state_to_json(const StateVector& psi);
StateVector state_from_json(const nlohmann::json& j);

// {n, d, k}
nlohmann::json scheme_to_json(const CodingScheme& scheme);
CodingScheme scheme_from_json(const nlohmann::json& j);

// {digits: [...]}; round-trips bit-exactly.
nlohmann::json message_to_json(const ClassicalMessage& message);
ClassicalMessage message_from_json(const nlohmann::json& j);

// {scheme, subset, outcome, outcome_probability, success,
//  conditional_success_probability, fidelity}; outcome rendered
// most-significant-first, fidelity null on failure.
nlohmann::json transcript_json(const TrialRecord& record);

nlohmann::json sweep_row_json(const SweepRow& row);

}  // namespace qpc
