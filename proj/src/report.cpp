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

#include "cghz/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cghz {

namespace {

nlohmann::ordered_json to_json(const AnalysisReport &r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["input_label"] = r.input.text();
    j["identified_label"] =
        r.identified ? nlohmann::ordered_json(r.identified->text()) : nullptr;
    j["signature_raw"] = r.signature.raw_bits();
    j["signature_d"] = r.signature.d_bits();
    j["reduction_outcomes"] = r.reduction_outcomes;
    j["step2_readout"] = r.step2_readout ? "-" : "+";
    j["sign_flip"] = r.frame.sign_flip;
    j["seed"] = r.seed;
    j["correct"] = r.correct();
    return j;
}

} // namespace

std::string report_json(const AnalysisReport &report, int indent) {
    return to_json(report).dump(indent);
}

std::string report_csv(const AnalysisReport &r) {
    std::ostringstream os;
    os << "n,m,input_label,identified_label,signature_raw,signature_d,"
          "reduction_outcomes,step2_readout,sign_flip,seed,correct\n";
    std::string outcomes;
    for (std::size_t i = 0; i < r.reduction_outcomes.size(); ++i) {
        outcomes += (i ? ";" : "") + r.reduction_outcomes[i];
    }
    os << r.n << ',' << r.m << ',' << r.input.text() << ','
       << (r.identified ? r.identified->text() : "") << ','
       << r.signature.raw_bits() << ',' << r.signature.d_bits() << ','
       << outcomes << ',' << (r.step2_readout ? '-' : '+') << ','
       << r.frame.sign_flip << ',' << r.seed << ','
       << (r.correct() ? "true" : "false") << '\n';
    return os.str();
}

} // namespace cghz
