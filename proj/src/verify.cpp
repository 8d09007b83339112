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

#include "xstate/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "xstate/eigen_solver.hpp"
#include "xstate/hyperplanes.hpp"
#include "xstate/nonlocality.hpp"
#include "xstate/regions.hpp"
#include "xstate/spectral.hpp"

namespace xstate::verify {

namespace {

constexpr std::size_t kMaxFailures = 5;
constexpr double kClosedFormTol = 1e-10;

class Draw {
  public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    double operator()() { return u_(rng_); }

  private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> u_{-1.0, 1.0};
};

// Distinct stream per check so suites can be run in any combination.
std::uint64_t stream(std::uint64_t seed, std::uint64_t salt) { return seed * 0x9E3779B97F4A7C15ull + salt; }

std::vector<Point> group_points(int group) {
    std::vector<Point> out;
    for (Point p : all_points()) {
        if (group_of(p) == group) out.push_back(p);
    }
    return out;
}

std::string fmt(const Group2Params& p, Point center) {
    std::ostringstream o;
    o.precision(17);
    o << label_of(center) << " t=" << p.type << " b0=" << p.beta0 << " M=(" << p.beta1() << ',' << p.beta2() << ','
      << p.beta3() << ',' << p.beta4() << ") tau=(" << p.tau1 << ',' << p.tau2 << ')';
    return o.str();
}

Group2Params draw_group2(Draw& d, Point center, bool with_tau) {
    Group2Params p = Group2Params::from_betas(d(), d(), d(), d(), d(), group2_type(center));
    if (with_tau) {
        p.tau1 = d();
        p.tau2 = d();
    }
    return p;
}

struct ValidDraw {
    Point center;
    Group2Params params;
    SpectralReport spectral;
};

// Rejection sampling of numerically valid states, cycling over the families.
std::vector<ValidDraw> valid_draws(int n, std::uint64_t seed, bool with_tau) {
    const std::vector<Point> centers = group_points(2);
    Draw d(seed);
    std::vector<ValidDraw> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long attempt = 0; static_cast<int>(out.size()) < n; ++attempt) {
        if (attempt > 1000L * n) throw std::runtime_error("valid_draws: acceptance rate too low");
        const Point c = centers[out.size() % centers.size()];
        const Group2Params p = draw_group2(d, c, with_tau);
        const SpectralReport s = classify(embed_group2(c, p));
        if (s.valid) out.push_back({c, p, s});
    }
    return out;
}

}  // namespace

void CheckResult::record(bool good, const std::string& what_failed) {
    ++total;
    if (good) {
        ++passed;
    } else if (failures.size() < kMaxFailures) {
        failures.push_back(what_failed);
    }
}

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

bool is_suite(std::string_view name) {
    return std::find(std::begin(kSuites), std::end(kSuites), name) != std::end(kSuites);
}

CheckResult check_census() {
    CheckResult r{"hyperplane census"};
    const std::vector<PointSet> scanned = scan_hyperplanes();
    int perps = 0, grids = 0, ovoids = 0;
    for (PointSet s : scanned) {
        perps += s.size() == 7;
        grids += s.size() == 9;
        ovoids += s.size() == 5;
        r.record(is_geometric_hyperplane(s) && hyperplane_catalog().find(s).has_value(),
                 "scanned set not in catalog: " + std::to_string(s.mask()));
    }
    r.record(scanned.size() == 31 && perps == 15 && grids == 10 && ovoids == 6, "wrong census counts");
    for (Point p : all_points()) {
        r.record(hyperplane_catalog().perp(p).points == fano_plane(p), "perp-set differs from F_p at " + label_of(p));
    }
    std::set<PointSet> distinct(scanned.begin(), scanned.end());
    r.record(distinct.size() == scanned.size(), "duplicate hyperplanes");
    r.notes.push_back(census_line());
    return r;
}

CheckResult check_doily() {
    CheckResult r{"doily 15_3 triangle-free"};
    const auto& lines = isotropic_lines();
    r.record(lines.size() == 15, "isotropic line count " + std::to_string(lines.size()));
    r.record(enumerate_lines().size() == 35, "projective line count");
    for (Point p : all_points()) {
        const auto through = std::count_if(lines.begin(), lines.end(), [p](const Line& l) { return l.contains(p); });
        r.record(through == 3, label_of(p) + " lies on " + std::to_string(through) + " isotropic lines");
    }
    for (const Line& l : lines) {
        r.record(l.as_set().size() == 3 && l.is_isotropic(), "degenerate line");
    }
    r.record(is_triangle_free(lines), "triangle among isotropic lines");
    return r;
}

CheckResult check_q0_intersections() {
    CheckResult r{"perp-sets against Q0"};
    int tangential = 0, transverse = 0;
    PointSet tangential_centers;
    for (const Hyperplane& h : hyperplane_catalog().perp_sets) {
        const IntersectionReport rep = intersect_with_q0(h);
        if (rep.type == IntersectionType::Tangential) {
            ++tangential;
            tangential_centers.insert(h.center);
        } else if (rep.type == IntersectionType::Transverse) {
            ++transverse;
        }
        r.record(rep.type != IntersectionType::Other, h.name() + " meets Q0 in neither way");
    }
    r.record(tangential == 9 && transverse == 6,
             std::to_string(tangential) + " tangential, " + std::to_string(transverse) + " transverse");
    r.record(tangential_centers == hyperplane_catalog().grid(0).points, "tangential centers differ from Q0");
    PointSet group2;
    for (Point p : group_points(2)) group2.insert(p);
    r.record(group2 == hyperplane_catalog().grid(0).points, "Q0 differs from the Group 2 points");
    r.notes.push_back(std::to_string(tangential) + " tangential / " + std::to_string(transverse) + " transverse");
    return r;
}

CheckResult check_catalog_rows() {
    CheckResult r{"Fano catalog rows"};
    int g1 = 0, g2 = 0;
    for (Point p : all_points()) {
        (group_of(p) == 1 ? g1 : g2)++;
        const std::vector<Point> row = fano_row(p);
        PointSet s;
        for (Point q : row) s.insert(q);
        r.record(row.size() == 7 && s == fano_plane(p), "row for " + label_of(p) + " is not F_p");
    }
    r.record(g1 == 6 && g2 == 9, "group split");
    return r;
}

CheckResult check_group1_spectra(int draws, std::uint64_t seed) {
    CheckResult r{"Group 1 closed form vs numeric"};
    Draw d(stream(seed, 1));
    double worst = 0.0;
    for (Point c : group_points(1)) {
        for (int i = 0; i < draws; ++i) {
            Group1Params p;
            p.tau0 = d();
            for (auto& t : p.tau) t = d();
            for (auto& b : p.beta) b = d();
            const SpectrumPair closed = group1_eigenvalues(p);
            const SpectrumPair numeric = numeric_eigenvalues(build_density_matrix(embed_group1(c, p)));
            const double err =
                std::max(max_abs_diff(closed.rho, numeric.rho), max_abs_diff(closed.gamma, numeric.gamma));
            const double spectral_identity = max_abs_diff(numeric.rho, numeric.gamma);
            worst = std::max(worst, err);
            r.record(err <= kClosedFormTol && spectral_identity <= kClosedFormTol,
                     label_of(c) + " draw " + std::to_string(i) + " err " + std::to_string(err));
        }
    }
    std::ostringstream o;
    o << "max |closed - numeric| = " << worst;
    r.notes.push_back(o.str());
    return r;
}

CheckResult check_group2_spectra(int draws, std::uint64_t seed) {
    CheckResult r{"Group 2 closed form vs numeric"};
    Draw d(stream(seed, 2));
    double worst = 0.0;
    for (Point c : group_points(2)) {
        for (int i = 0; i < draws; ++i) {
            const Group2Params p = draw_group2(d, c, true);
            const SpectrumPair closed = group2_eigenvalues(p);
            const SpectrumPair numeric = numeric_eigenvalues(build_density_matrix(embed_group2(c, p)));
            const double err =
                std::max(max_abs_diff(closed.rho, numeric.rho), max_abs_diff(closed.gamma, numeric.gamma));
            worst = std::max(worst, err);
            const SpectralReport a = report_from(closed);
            const SpectralReport b = report_from(numeric);
            const bool same_class = a.valid == b.valid && a.entangled == b.entangled;
            r.record(err <= kClosedFormTol && same_class, fmt(p, c) + " err " + std::to_string(err));
        }
    }
    std::ostringstream o;
    o << "max |closed - numeric| = " << worst;
    r.notes.push_back(o.str());
    return r;
}

CheckResult check_type_table(std::uint64_t seed) {
    CheckResult r{"Type I/II detection"};
    std::string type1, type2;
    for (Point c : group_points(2)) {
        int t = 0;
        try {
            t = detect_type(c, stream(seed, 3), 100);
        } catch (const std::logic_error& e) {
            r.record(false, e.what());
            continue;
        }
        r.record(t == group2_type(c), label_of(c) + " type differs between seeds");
        (t == 1 ? type1 : type2) += (t == 1 ? type1 : type2).empty() ? label_of(c) : "," + label_of(c);
    }
    r.notes.push_back("Type I centers: " + type1);
    r.notes.push_back("Type II centers: " + type2);
    return r;
}

WernerThresholds werner_thresholds(double tol) {
    auto bisect = [tol](auto&& above) {
        double lo = 0.0, hi = 1.0;
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            (above(mid) ? hi : lo) = mid;
        }
        return 0.5 * (lo + hi);
    };
    WernerThresholds w;
    w.ppt = bisect([](double p) { return classify(make_named_state("werner", {p, {}})).entangled; });
    w.bell = bisect([](double p) { return bell_m_oracle(make_named_state("werner", {p, {}}).coeffs.beta) > 1.0; });
    return w;
}

CheckResult check_werner() {
    CheckResult r{"Werner thresholds"};
    const WernerThresholds w = werner_thresholds();
    std::ostringstream o;
    o.precision(12);
    o << "PPT threshold " << w.ppt << ", Bell threshold " << w.bell;
    r.record(std::fabs(w.ppt - 1.0 / 3.0) <= 1e-6, "PPT threshold " + o.str());
    r.record(std::fabs(w.bell - 1.0 / std::sqrt(2.0)) <= 1e-6, "Bell threshold " + o.str());
    r.notes.push_back(o.str());
    return r;
}

CheckResult check_region_ppt(int draws, std::uint64_t seed) {
    CheckResult r{"region classification vs PPT"};
    const std::vector<Point> centers = group_points(2);
    Draw d(stream(seed, 4));
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < draws; ++i) {
        const Point c = centers[static_cast<std::size_t>(i) % centers.size()];
        const Group2Params p = draw_group2(d, c, false);
        const SpectralReport s = classify(embed_group2(c, p));
        const RegionClass spectral = !s.valid ? RegionClass::Invalid
                                     : s.entangled ? RegionClass::Entangled
                                                   : RegionClass::Separable;
        const RegionClass region = classify_by_region(p);
        ++counts[static_cast<int>(spectral)];
        r.record(region == spectral, fmt(p, c) + " region " + std::string(region_class_name(region)) + " PPT " +
                                         std::string(region_class_name(spectral)));
    }
    r.notes.push_back("invalid/separable/entangled = " + std::to_string(counts[0]) + "/" + std::to_string(counts[1]) +
                      "/" + std::to_string(counts[2]));
    return r;
}

CheckResult check_region_dual(int draws, std::uint64_t seed) {
    CheckResult r{"primal vs dual regions"};
    const std::vector<Point> centers = group_points(2);
    Draw d(stream(seed, 5));
    for (int i = 0; i < draws; ++i) {
        const Point c = centers[static_cast<std::size_t>(i) % centers.size()];
        const Group2Params p = draw_group2(d, c, false);
        r.record(classify_by_region(p) == dual_classify_by_region(p), fmt(p, c));
    }
    return r;
}

CheckResult check_sign_relation(int draws, std::uint64_t seed) {
    CheckResult r{"b0 < 0 <=> L+ > L-"};
    const SignRelationReport rep = sign_relation_fuzz(draws, stream(seed, 6));
    r.total = rep.considered;
    r.passed = rep.considered - rep.type1_counterexamples - rep.type2_mirrored_counterexamples;
    r.failures = rep.counterexamples;
    if (r.failures.size() > kMaxFailures) r.failures.resize(kMaxFailures);
    r.notes.push_back(std::to_string(rep.considered) + " valid entangled draws with b0 != 0 out of " +
                      std::to_string(rep.draws));
    r.notes.push_back("Type I: " + std::to_string(rep.type1_checked) + " checked, " +
                      std::to_string(rep.type1_counterexamples) + " counterexamples");
    r.notes.push_back("Type II: " + std::to_string(rep.type2_checked) + " checked in mirrored form (b0 < 0 <=> L- > L+), " +
                      std::to_string(rep.type2_mirrored_counterexamples) + " counterexamples; literal form held on " +
                      std::to_string(rep.type2_literal_holds));
    return r;
}

CheckResult check_emptiness_sampling(int cases, std::uint64_t seed) {
    CheckResult r{"region emptiness vs sampling"};
    Draw d(stream(seed, 7));
    for (int i = 0; i < cases; ++i) {
        const double b0 = d(), b3 = d(), b4 = d();
        const RegionEmptiness e = region_emptiness(b0, b3, b4);
        const auto cells = sample_region(b0, b3, b4, 1 + (i % 2), 64);
        const bool any_sep = std::any_of(cells.begin(), cells.end(),
                                         [](const RegionCell& c) { return c.cls == RegionClass::Separable; });
        const bool any_valid = std::any_of(cells.begin(), cells.end(),
                                           [](const RegionCell& c) { return c.cls != RegionClass::Invalid; });
        std::ostringstream o;
        o << "b0=" << b0 << " C=(" << b4 << ',' << b3 << ')';
        r.record((e.s_nonempty || !any_sep) && (e.v_nonempty || !any_valid), o.str());
    }
    return r;
}

CheckResult check_bell_oracle(int draws, std::uint64_t seed) {
    CheckResult r{"closed-form M vs eigenvalues of beta^T beta"};
    Draw d(stream(seed, 8));
    double worst = 0.0;
    auto compare = [&](const HyperplaneState& s, const std::string& what) {
        const double closed = bell_m_closed(extract_group2_params(s)).m_value;
        const double oracle = bell_m_oracle(s.coeffs.beta);
        worst = std::max(worst, std::fabs(closed - oracle));
        r.record(std::fabs(closed - oracle) <= kClosedFormTol, what);
    };
    for (Point c : group_points(2)) {
        for (int i = 0; i < draws; ++i) {
            const Group2Params p = draw_group2(d, c, true);
            compare(embed_group2(c, p), fmt(p, c));
        }
    }
    const HyperplaneCatalog& cat = hyperplane_catalog();
    const PointSet q0 = cat.grid(0).points;
    for (int g = 1; g <= 9; ++g) {
        const Hyperplane& grid = cat.grid(g);
        for (int i = 0; i < draws; ++i) {
            GeneralStateCoeffs coeffs;
            for (Point q : (grid.points & q0).points()) coeffs.set(q, d());
            compare(HyperplaneState::make(grid, coeffs), grid.name() + " draw " + std::to_string(i));
        }
    }
    std::ostringstream o;
    o << "max |closed - oracle| = " << worst;
    r.notes.push_back(o.str());
    return r;
}

CheckResult check_tau0_bound_and_purity(int n, std::uint64_t seed) {
    CheckResult r{"tau = 0: M <= 1 + b0^2 and purity <=> M = 2"};
    int pure = 0, violations = 0;
    for (const ValidDraw& v : valid_draws(n, stream(seed, 9), false)) {
        const double m = bell_m_closed(v.params).m_value;
        const double b0sq = v.params.beta0 * v.params.beta0;
        r.record(m <= 1.0 + b0sq + 1e-10 && m <= 2.0 + 1e-10, fmt(v.params, v.center) + " M " + std::to_string(m));
        const PurityOutcome o = purity_equivalence_check(v.params);
        pure += o == PurityOutcome::PureAndMaximal;
        violations += o == PurityOutcome::ViolationOfProp;
        r.record(o != PurityOutcome::ViolationOfProp, fmt(v.params, v.center) + " violates purity equivalence");
    }
    const Group2Params epr = extract_group2_params(make_named_state("epr_phi_plus"));
    const NonlocalityReport er = bell_m_closed(epr);
    r.record(er.m_value == 2.0 && epr.beta0 * epr.beta0 + er.b == 3.0, "EPR does not attain M = 2 with purity 3");
    r.record(purity_equivalence_check(epr) == PurityOutcome::PureAndMaximal, "EPR not pure_and_maximal");
    r.notes.push_back(std::to_string(n) + " valid draws, " + std::to_string(pure) + " pure_and_maximal, " +
                      std::to_string(violations) + " violation_of_prop");
    return r;
}

CheckResult check_upper_bound(int n, std::uint64_t seed) {
    CheckResult r{"tau-dependent upper bound on M"};
    for (const ValidDraw& v : valid_draws(n, stream(seed, 10), true)) {
        double bound = 0.0;
        try {
            bound = m_upper_bound(v.params);
        } catch (const std::domain_error& e) {
            r.record(false, fmt(v.params, v.center) + " " + e.what());
            continue;
        }
        const double m = bell_m_closed(v.params).m_value;
        r.record(m <= bound + 1e-10, fmt(v.params, v.center) + " M " + std::to_string(m) + " bound " +
                                         std::to_string(bound));
    }
    return r;
}

CheckResult check_bell_implies_entangled(int n, std::uint64_t seed) {
    CheckResult r{"M > 1 implies PPT-entangled"};
    int nonlocal = 0;
    for (const ValidDraw& v : valid_draws(n, stream(seed, 11), false)) {
        const double m = bell_m_closed(v.params).m_value;
        if (m > 1.0) {
            ++nonlocal;
            r.record(v.spectral.entangled, fmt(v.params, v.center) + " M " + std::to_string(m));
        }
    }
    r.record(nonlocal > 0, "no valid draw has M > 1");
    r.notes.push_back(std::to_string(nonlocal) + " of " + std::to_string(n) + " valid draws have M > 1");
    return r;
}

CheckResult check_group1_local(int draws, std::uint64_t seed) {
    CheckResult r{"valid Group 1 states have M <= 1"};
    Draw d(stream(seed, 12));
    const std::vector<Point> centers = group_points(1);
    int valid = 0;
    for (int i = 0; i < draws * 20 && valid < draws; ++i) {
        const Point c = centers[static_cast<std::size_t>(i) % centers.size()];
        Group1Params p;
        p.tau0 = d();
        for (auto& t : p.tau) t = d();
        for (auto& b : p.beta) b = d();
        const HyperplaneState s = embed_group1(c, p);
        if (!classify(s).valid) continue;
        ++valid;
        const double m = bell_m_oracle(s.coeffs.beta);
        r.record(m <= 1.0 + 1e-10, label_of(c) + " M " + std::to_string(m));
    }
    return r;
}

CheckResult check_constant_m_curve() {
    CheckResult r{"constant-M curve k=1, C=(0.6,0), b0=0.45"};
    const ConstantMCurve c = constant_m_curve(1.0, 0.45, 0.0, 0.6);
    std::ostringstream o;
    o.precision(6);
    o << "r_B=" << c.circle_radius << " a=" << c.ellipse_a << " b=" << c.ellipse_b << " hat=(" << c.hat.x << ','
      << c.hat.y << ")";
    r.notes.push_back(o.str());
    r.record(c.regime == CurveRegime::Arcs, "regime " + std::string(regime_name(c.regime)));
    r.record(std::fabs(c.circle_radius - 0.8) <= 1e-15, "r_B " + o.str());
    r.record(std::fabs(c.ellipse_a - 0.893) <= 5e-4, "a " + o.str());
    r.record(std::fabs(c.ellipse_b - 0.661) <= 5e-4, "b " + o.str());
    r.record(c.intersections.size() == 4, "intersection count");
    double worst = 0.0;
    for (Vec2 v : c.sample(100)) {
        const Group2Params p = Group2Params::from_betas(0.45, v.x, v.y, 0.0, 0.6);
        const double m = bell_m_closed(p).m_value;
        worst = std::max(worst, std::fabs(m - 1.0));
        r.record(std::fabs(m - 1.0) <= 1e-8, "sample point M " + std::to_string(m));
    }
    std::ostringstream w;
    w << "100 sampled points, max |M - 1| = " << worst;
    r.notes.push_back(w.str());
    return r;
}

CheckResult check_heatmap_nonlocality(int resolution) {
    CheckResult r{"heatmap C=(0.4,-0.3), b0=0.45: M > 1 only where entangled"};
    const double b0 = 0.45, b3 = -0.3, b4 = 0.4;
    const Point zz = point_of_label("ZZ");
    const int type = group2_type(zz);
    int nonlocal = 0, valid = 0;
    for (const HeatCell& cell : heatmap_m(b0, b3, b4, resolution, type)) {
        if (!cell.valid) continue;
        ++valid;
        if (cell.m <= 1.0) continue;
        ++nonlocal;
        const Group2Params p = Group2Params::from_betas(b0, cell.beta1, cell.beta2, b3, b4, type);
        const bool entangled = classify(embed_group2(zz, p)).entangled;
        r.record(entangled && cell.cls == RegionClass::Entangled, fmt(p, zz));
    }
    r.record(nonlocal > 0, "no cell with M > 1");
    r.notes.push_back(std::to_string(nonlocal) + " of " + std::to_string(valid) + " valid cells have M > 1");
    return r;
}

SuiteReport run_suite(std::string_view suite, std::uint64_t seed, int draws) {
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    if (draws < 1) throw std::invalid_argument("draws must be at least 1");
    SuiteReport rep{std::string(suite), seed, draws, {}};
    const bool all = suite == "all";
    if (all || suite == "geometry") {
        rep.checks.push_back(check_census());
        rep.checks.push_back(check_doily());
        rep.checks.push_back(check_q0_intersections());
        rep.checks.push_back(check_catalog_rows());
    }
    if (all || suite == "spectral") {
        rep.checks.push_back(check_group1_spectra(draws, seed));
        rep.checks.push_back(check_group2_spectra(draws, seed));
        rep.checks.push_back(check_type_table(seed));
        rep.checks.push_back(check_werner());
    }
    if (all || suite == "region") {
        rep.checks.push_back(check_region_ppt(draws, seed));
        rep.checks.push_back(check_region_dual(draws, seed));
        rep.checks.push_back(check_sign_relation(draws, seed));
        rep.checks.push_back(check_emptiness_sampling(std::max(1, std::min(draws, 200)), seed));
    }
    if (all || suite == "nonlocality") {
        rep.checks.push_back(check_bell_oracle(draws, seed));
        rep.checks.push_back(check_tau0_bound_and_purity(draws, seed));
        rep.checks.push_back(check_upper_bound(draws, seed));
        rep.checks.push_back(check_bell_implies_entangled(draws, seed));
        rep.checks.push_back(check_group1_local(draws, seed));
        rep.checks.push_back(check_constant_m_curve());
        rep.checks.push_back(check_heatmap_nonlocality(200));
    }
    return rep;
}

std::string format_report(const SuiteReport& rep) {
    std::ostringstream o;
    o << "suite: " << rep.suite << "\nseed: " << rep.seed << "\ndraws: " << rep.draws << '\n';
    for (const CheckResult& c : rep.checks) {
        o << (c.ok() ? "PASS  " : "FAIL  ") << c.name << "  (" << c.passed << '/' << c.total << ")\n";
        for (const std::string& n : c.notes) o << "      " << n << '\n';
        for (const std::string& f : c.failures) o << "      counterexample: " << f << '\n';
    }
    o << (rep.ok() ? "all checks passed" : "verification FAILED") << '\n';
    return o.str();
}

}  // namespace xstate::verify
