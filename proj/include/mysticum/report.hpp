// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "mysticum/ranges.hpp"

namespace mysticum {

struct RunConfig {
  /// Explicit parameters; when absent and no seed is given the default
  /// fixture is used.
  std::optional<std::array<Extended, 6>> params;
  std::optional<std::uint64_t> seed;
  int max_height = 8;
  /// Range depth for verification; negative means "same as max_height".
  int depth = -1;
  std::string format = "json";
};

std::array<Extended, 6> resolve_params(const RunConfig& cfg);

/// "0,1,2,3,4,inf" -> six parameters. Throws std::invalid_argument.
std::array<Extended, 6> parse_params(const std::string& text);

nlohmann::json config_json(const RunConfig& cfg,
                           const std::array<Extended, 6>& params);

/// Element counts per family and height.
nlohmann::json counts_json(const Multimysticum& m);

/// fixedPart, layers and interlayers, every coordinate as an exact integer
/// string, keyed by label text.
nlohmann::json serialize(const Multimysticum& m);

/// Inverse of serialize. Reads `fixedPart`, `layers`, `interlayers` from a
/// document; the result is not re-verified. Throws std::invalid_argument on
/// malformed input.
Multimysticum deserialize(const nlohmann::json& doc);

nlohmann::json ranges_json(const VerificationSummary& summary);
nlohmann::json witnesses_json(const std::vector<Witness>& witnesses);

/// Top-level verdict block of a verification report.
nlohmann::json verdict_json(const VerificationSummary& summary,
                            const std::vector<Witness>& witnesses);

}  // namespace mysticum
