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

#ifndef DPPCA_TOOLS_SYNTH_H_
#define DPPCA_TOOLS_SYNTH_H_

#include <string_view>

#include "dppca/spectral.h"

namespace dppca::cli {

// Parses "spiked:p,k,spike_1,...,spike_k,bulk,theta" into a summary with
// eigenvalues (spike_1, ..., spike_k, bulk, ..., bulk), identity
// eigenvectors and n = theta p^{3/2}. Throws kDomainError on malformed specs.
SpectralSummary ParseSynth(std::string_view spec);

}  // namespace dppca::cli

#endif  // DPPCA_TOOLS_SYNTH_H_
