//
// Copyright 2026 The dppca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "synth.h"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "dppca/error.h"

namespace dppca::cli {
namespace {

constexpr std::string_view kSpikedPrefix = "spiked:";

[[noreturn]] void Malformed(std::string_view spec, const std::string& why) {
  throw Error(ErrorCode::kDomainError,
              "bad --synth '" + std::string(spec) + "': " + why);
}

}  // namespace

SpectralSummary ParseSynth(std::string_view spec) {
  if (!spec.starts_with(kSpikedPrefix))
    Malformed(spec, "expected 'spiked:' prefix");
  std::string_view rest = spec.substr(kSpikedPrefix.size());
  std::vector<double> fields;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      Malformed(spec, "non-numeric field '" + std::string(token) + "'");
    }
    fields.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (fields.size() < 5) Malformed(spec, "need p,k,spikes...,bulk,theta");
  const double p_field = fields[0];
  const double k_field = fields[1];
  if (p_field != std::floor(p_field) || k_field != std::floor(k_field) ||
      p_field < 2 || k_field < 1 || k_field >= p_field) {
    Malformed(spec, "p and k must be integers with 1 <= k < p");
  }
  const auto p = static_cast<Eigen::Index>(p_field);
  const int k = static_cast<int>(k_field);
  if (fields.size() != static_cast<std::size_t>(k) + 4) {
    Malformed(spec, "expected " + std::to_string(k) + " spike values");
  }
  const double bulk = fields[fields.size() - 2];
  const double theta = fields.back();
  if (!(theta > 0.0)) Malformed(spec, "theta must be positive");
  Eigen::VectorXd values = Eigen::VectorXd::Constant(p, bulk);
  for (int i = 0; i < k; ++i)
    values(i) = fields[static_cast<std::size_t>(i) + 2];
  return SpectralSummary::Diagonal(
      std::move(values), k, theta * std::pow(static_cast<double>(p), 1.5));
}

}  // namespace dppca::cli
