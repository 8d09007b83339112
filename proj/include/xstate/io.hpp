// Copyright 2026 The xstate-geometry Authors
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

// JSON in and out: state descriptors, spectral/analysis reports, the catalog
// and constant-M curves.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xstate/nonlocality.hpp"
#include "xstate/pauli_state.hpp"
#include "xstate/regions.hpp"
#include "xstate/spectral.hpp"

namespace xstate {

/// Malformed descriptor text or schema violation.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// {"hyperplane": {"kind": "perp"|"grid"|"ovoid", "id": "ZZ"|0..9|1..6},
///  "coefficients": {"ZZ": 0.45, ...}}
/// Schema errors raise ParseError; coefficients off the hyperplane raise
/// InvalidStateError.
HyperplaneState parse_state_descriptor(std::string_view text);

std::string state_descriptor_json(const HyperplaneState& s);

struct AnalysisReport {
    std::string hyperplane;
    SpectralReport spectral;
    std::optional<RegionClass> region;  // tau = 0 Group 2 states only
    std::optional<double> m_value;      // Group 2 states only
    double m_oracle = 0.0;
};

AnalysisReport analyze_state(const HyperplaneState& s);

std::string spectral_report_json(const SpectralReport& r);
std::string analysis_report_json(const AnalysisReport& r);

/// {"fano_planes": [{point, label, group, members[]}...], "hyperplanes": [...31], "census": "..."}
std::string catalog_json();

/// {k, frame_rotation, circle:{r}, ellipse:{a,b,foci}, intersections, regime}
std::string curve_json(const ConstantMCurve& c);

}  // namespace xstate
