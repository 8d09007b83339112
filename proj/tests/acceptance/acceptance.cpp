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

// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "xstate/cli.hpp"
#include "xstate/hyperplanes.hpp"
#include "xstate/nonlocality.hpp"
#include "xstate/pauli_state.hpp"
#include "xstate/regions.hpp"
#include "xstate/verify.hpp"

using namespace xstate;
using verify::CheckResult;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& why) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + why;
        }
    }
    void absorb(const CheckResult& c) {
        std::ostringstream o;
        o << c.name << " " << c.passed << '/' << c.total;
        for (const auto& f : c.failures) o << " [" << f << ']';
        require(c.ok(), o.str());
    }
};

std::set<std::string> split_labels(const std::string& csv) {
    std::set<std::string> out;
    std::stringstream in(csv);
    for (std::string item; std::getline(in, item, ',');) out.insert(item);
    return out;
}

Outcome ac1() {
    Outcome o;
    std::ostringstream out, err;
    const int code = cli::run({"catalog", "--format", "table"}, out, err);
    o.require(code == 0, "catalog exited " + std::to_string(code));

    // label -> (group, members) from the command output
    std::map<std::string, std::pair<int, std::set<std::string>>> printed;
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        std::istringstream row(line);
        int group = 0;
        std::string point, label, members;
        if (!(row >> group >> point >> label >> members) || (group != 1 && group != 2)) continue;
        printed[label] = {group, split_labels(members)};
    }

    std::ifstream golden(std::string(XSTATE_GOLDEN_DIR) + "/fano_rows.txt");
    o.require(golden.good(), "golden table missing");
    int rows = 0, group1 = 0, group2 = 0;
    while (std::getline(golden, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int group = 0;
        std::string point, label, members;
        row >> group >> point >> label >> members;
        ++rows;
        (group == 1 ? group1 : group2)++;
        const auto want = split_labels(members);
        o.require(want.size() == 7, label + " golden row has " + std::to_string(want.size()) + " members");
        const auto it = printed.find(label);
        if (it == printed.end()) {
            o.require(false, "row " + label + " missing");
            continue;
        }
        o.require(it->second.first == group, label + " group differs");
        o.require(it->second.second == want, label + " members differ");
        o.require(point_of_label(label).to_string() == point, label + " coordinates differ");
    }
    o.require(rows == 15 && printed.size() == 15, "row count");
    o.require(group1 == 6 && group2 == 9, "group split");
    o.detail = o.ok ? "15 rows, 6/9 split, 7 members each" : o.detail;
    return o;
}

Outcome ac2() {
    Outcome o;
    const CheckResult census = verify::check_census();
    o.absorb(census);
    o.absorb(verify::check_doily());
    if (o.ok) o.detail = census.notes.front() + ", doily 15_3 triangle-free";
    return o;
}

Outcome ac3() {
    Outcome o;
    const CheckResult c = verify::check_q0_intersections();
    o.absorb(c);
    if (o.ok) o.detail = c.notes.front() + ", tangential centers = Group 2";
    return o;
}

Outcome ac4() {
    Outcome o;
    const CheckResult g1 = verify::check_group1_spectra(1000, kSeed);
    const CheckResult g2 = verify::check_group2_spectra(1000, kSeed);
    o.absorb(g1);
    o.absorb(g2);
    if (o.ok) o.detail = std::to_string(g1.total) + " Group 1 and " + std::to_string(g2.total) + " Group 2 checks";
    return o;
}

Outcome ac5() {
    Outcome o;
    const CheckResult primal = verify::check_region_ppt(10000, kSeed);
    const CheckResult dual = verify::check_region_dual(10000, kSeed);
    o.absorb(primal);
    o.absorb(dual);
    if (o.ok) o.detail = "10000 draws, primal and dual agree with PPT";
    return o;
}

Outcome ac6() {
    Outcome o;
    const SignRelationReport rep = sign_relation_fuzz(10000, kSeed);
    o.require(rep.considered > 0, "no draws survived the filter");
    o.require(rep.type1_counterexamples == 0,
              std::to_string(rep.type1_counterexamples) + " Type I counterexamples");
    o.require(rep.type2_mirrored_counterexamples == 0,
              std::to_string(rep.type2_mirrored_counterexamples) + " Type II counterexamples (mirrored form)");
    std::ostringstream d;
    d << rep.considered << " filtered draws; Type I literal: " << rep.type1_checked << " checked, "
      << rep.type1_counterexamples << " counterexamples; Type II mirrored: " << rep.type2_checked << " checked, "
      << rep.type2_mirrored_counterexamples << " counterexamples (literal form held on " << rep.type2_literal_holds
      << ")";
    if (o.ok) o.detail = d.str();
    else o.detail += "; " + d.str();
    return o;
}

Outcome ac7() {
    Outcome o;
    const verify::WernerThresholds w = verify::werner_thresholds();
    o.require(std::abs(w.ppt - 1.0 / 3.0) <= 1e-6, "PPT threshold " + std::to_string(w.ppt));
    o.require(std::abs(w.bell - 1.0 / std::sqrt(2.0)) <= 1e-6, "Bell threshold " + std::to_string(w.bell));
    std::ostringstream d;
    d.precision(10);
    d << "p_ppt=" << w.ppt << " p_bell=" << w.bell;
    o.detail = o.ok ? d.str() : o.detail;
    return o;
}

Outcome ac8() {
    Outcome o;
    const ConstantMCurve c = constant_m_curve(1.0, 0.45, 0.0, 0.6);
    o.require(c.circle_radius == 0.8 || std::abs(c.circle_radius - 0.8) <= 1e-15,
              "r_B=" + std::to_string(c.circle_radius));
    o.require(std::abs(c.ellipse_a - 0.893) <= 5e-4, "a=" + std::to_string(c.ellipse_a));
    o.require(std::abs(c.ellipse_b - 0.661) <= 5e-4, "b=" + std::to_string(c.ellipse_b));
    double worst = 0.0;
    const auto pts = c.sample(100);
    o.require(pts.size() == 100, "sample size " + std::to_string(pts.size()));
    for (const Vec2& v : pts) {
        const Vec2 d = c.to_original(v);
        const double m = bell_m_closed(Group2Params::from_betas(0.45, d.x, d.y, 0.0, 0.6)).m_value;
        worst = std::max(worst, std::abs(m - 1.0));
    }
    o.require(worst <= 1e-8, "max |M-1| = " + std::to_string(worst));
    std::ostringstream d;
    d << "r_B=" << c.circle_radius << " a=" << c.ellipse_a << " b=" << c.ellipse_b << " max|M-1|=" << worst;
    o.detail = o.ok ? d.str() : o.detail;
    return o;
}

Outcome ac9() {
    Outcome o;
    const CheckResult c = verify::check_tau0_bound_and_purity(10000, kSeed);
    o.absorb(c);
    const Group2Params epr = extract_group2_params(make_named_state("epr_phi_plus"));
    const NonlocalityReport r = bell_m_closed(epr);
    o.require(r.m_value == 2.0, "EPR M=" + std::to_string(r.m_value));
    o.require(epr.beta0 * epr.beta0 + r.b == 3.0, "EPR b0^2 + B = " + std::to_string(epr.beta0 * epr.beta0 + r.b));
    if (o.ok) o.detail = std::to_string(c.total) + " checks over 10000 valid draws, EPR M=2, b0^2+B=3";
    return o;
}

Outcome ac10() {
    Outcome o;
    const CheckResult c = verify::check_heatmap_nonlocality(200);
    o.absorb(c);
    if (o.ok && !c.notes.empty()) o.detail = c.notes.front();
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* what;
        std::function<Outcome()> run;
        double limit_s;  // 0: no runtime bound
    };
    const std::vector<Criterion> criteria = {
        {"AC1", "Fano catalog matches golden table", ac1, 1.0},
        {"AC2", "hyperplane census and doily", ac2, 5.0},
        {"AC3", "perp-sets meet Q0 tangentially or transversally", ac3, 0.0},
        {"AC4", "closed-form spectra match numeric eigenvalues", ac4, 0.0},
        {"AC5", "region classification equals PPT, primal and dual", ac5, 0.0},
        {"AC6", "sign of b0 versus L+ and L-", ac6, 0.0},
        {"AC7", "Werner thresholds", ac7, 0.0},
        {"AC8", "constant-M curve numerics", ac8, 0.0},
        {"AC9", "nonlocality bound and purity", ac9, 0.0},
        {"AC10", "heatmap: M > 1 only where entangled", ac10, 30.0},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << "  " << c.what << "  (" << std::fixed
                  << std::setprecision(3) << secs << " s)  " << std::defaultfloat << o.detail << '\n';
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
              << '\n';
    return failed == 0 ? 0 : 1;
}
