#pragma once

#include <string>

#include "kemeny/samplers.hpp"
#include "kemeny/solve.hpp"

namespace kemeny {

/// JSON text for a Solution (ranking, bits, distances, energy, num_occ,
/// iterations, ledger, converged flag, seed provenance and the
/// per-iteration trace). indent < 0 emits compact single-line JSON.
std::string to_json_string(const Solution& s, int indent = -1);

std::string to_json_string(const SampleSet& ss, int indent = -1);

}  // namespace kemeny
