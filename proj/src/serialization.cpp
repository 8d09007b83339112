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

#include "xstate/io.hpp"

#include <cmath>

#include <json.hpp>

#include "xstate/hyperplanes.hpp"

namespace xstate {

using nlohmann::json;

namespace {

const Hyperplane& resolve_hyperplane(const json& h) {
    if (!h.is_object() || !h.contains("kind") || !h.contains("id")) {
        throw ParseError("\"hyperplane\" must be an object with \"kind\" and \"id\"");
    }
    if (!h["kind"].is_string()) {
        throw ParseError("\"hyperplane.kind\" must be a string");
    }
    const std::string kind = h["kind"].get<std::string>();
    const json& id = h["id"];
    const HyperplaneCatalog& cat = hyperplane_catalog();
    if (kind == "perp") {
        if (!id.is_string()) throw ParseError("perp-set id must be a Pauli label such as \"ZZ\"");
        try {
            return cat.perp(point_of_label(id.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad perp-set id: ") + e.what());
        }
    }
    if (kind == "grid" || kind == "ovoid") {
        if (!id.is_number_integer()) throw ParseError(kind + " id must be an integer");
        const int i = id.get<int>();
        try {
            return kind == "grid" ? cat.grid(i) : cat.ovoid(i);
        } catch (const std::out_of_range& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown hyperplane kind \"" + kind + "\" (expected perp, grid or ovoid)");
}

json vec(Vec2 v) { return json::array({v.x, v.y}); }

json nan_to_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

HyperplaneState parse_state_descriptor(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("descriptor must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "hyperplane" && key != "coefficients") throw ParseError("unknown descriptor key \"" + key + "\"");
    }
    if (!doc.contains("hyperplane")) throw ParseError("missing \"hyperplane\"");
    const Hyperplane& h = resolve_hyperplane(doc["hyperplane"]);
    std::map<std::string, double> coeffs;
    if (doc.contains("coefficients")) {
        if (!doc["coefficients"].is_object()) throw ParseError("\"coefficients\" must be an object");
        for (const auto& [label, value] : doc["coefficients"].items()) {
            if (!value.is_number()) throw ParseError("coefficient \"" + label + "\" must be a number");
            coeffs[label] = value.get<double>();
        }
    }
    return HyperplaneState::from_labels(h, coeffs);
}

std::string state_descriptor_json(const HyperplaneState& s) {
    json h{{"kind", kind_name(s.hyperplane.kind)}};
    if (s.hyperplane.kind == HyperplaneKind::PerpSet) {
        h["id"] = label_of(s.hyperplane.center);
    } else {
        h["id"] = s.hyperplane.index;
    }
    json coeffs = json::object();
    for (Point p : s.hyperplane.points.points()) {
        if (s.coeffs.get(p) != 0.0) coeffs[label_of(p)] = s.coeffs.get(p);
    }
    return json{{"hyperplane", h}, {"coefficients", coeffs}}.dump(2);
}

AnalysisReport analyze_state(const HyperplaneState& s) {
    AnalysisReport r;
    r.hyperplane = s.hyperplane.name();
    r.spectral = classify(s);
    r.m_oracle = bell_m_oracle(s.coeffs.beta);
    if (group2_center(s.hyperplane)) {
        try {
            const Group2Params p = extract_group2_params(s);
            r.m_value = bell_m_closed(p).m_value;
            if (p.tau_is_zero()) r.region = classify_by_region(p);
        } catch (const std::invalid_argument&) {
            // grid state with single-qubit terms: no generalized parameters
        }
    }
    return r;
}

namespace {

json spectral_json(const SpectralReport& r) {
    return {{"eigenvalues", r.eigs_rho},
            {"eigenvalues_gamma", r.eigs_gamma},
            {"valid", r.valid},
            {"separable", r.separable},
            {"entangled", r.entangled}};
}

}  // namespace

std::string spectral_report_json(const SpectralReport& r) { return spectral_json(r).dump(2); }

std::string analysis_report_json(const AnalysisReport& r) {
    json j = spectral_json(r.spectral);
    j["hyperplane"] = r.hyperplane;
    j["m_value"] = r.m_value ? *r.m_value : r.m_oracle;
    j["region_classification"] = r.region ? json(region_class_name(*r.region)) : json(nullptr);
    return j.dump(2);
}

std::string catalog_json() {
    json planes = json::array();
    for (int group : {1, 2}) {
        for (Point p : all_points()) {
            if (group_of(p) != group) continue;
            json members = json::array();
            for (Point q : fano_row(p)) members.push_back(label_of(q));
            planes.push_back({{"point", p.to_string()}, {"label", label_of(p)}, {"group", group}, {"members", members}});
        }
    }
    json hyperplanes = json::array();
    for (const Hyperplane& h : hyperplane_catalog().all()) {
        json rec{{"name", h.name()}, {"kind", kind_name(h.kind)}, {"size", h.points.size()}, {"points", h.points.labels()}};
        if (h.kind == HyperplaneKind::PerpSet) rec["center"] = label_of(h.center);
        hyperplanes.push_back(rec);
    }
    return json{{"fano_planes", planes}, {"hyperplanes", hyperplanes}, {"census", census_line()}}.dump(2);
}

std::string curve_json(const ConstantMCurve& c) {
    json foci = json::array();
    for (Vec2 f : c.foci) foci.push_back(vec(f));
    json hits = json::array();
    for (Vec2 v : c.intersections) hits.push_back(vec(v));
    json j{{"k", c.k},
           {"beta0", c.beta0},
           {"c", json::array({c.beta4, c.beta3})},
           {"frame_rotation", c.theta},
           {"circle", {{"r", nan_to_null(c.circle_radius)}}},
           {"ellipse", {{"a", nan_to_null(c.ellipse_a)}, {"b", nan_to_null(c.ellipse_b)}, {"foci", foci}}},
           {"intersections", hits},
           {"regime", regime_name(c.regime)}};
    if (c.regime == CurveRegime::Arcs) j["intersection_rotated"] = vec(c.hat);
    return j.dump(2);
}

}  // namespace xstate
