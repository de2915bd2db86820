// Copyright 2026 The cghz Authors
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

#pragma once

#include <string>

#include "cghz/protocol.hpp"

namespace cghz {

/// Flat JSON object with keys n, m, input_label, identified_label,
/// signature_raw, signature_d, reduction_outcomes, step2_readout, sign_flip,
/// seed, correct. An aborted run has a null identified_label.
std::string report_json(const AnalysisReport &report, int indent = 2);

/// Header line and one data row with the same fields; reduction outcomes are
/// joined with ';'.
std::string report_csv(const AnalysisReport &report);

} // namespace cghz
