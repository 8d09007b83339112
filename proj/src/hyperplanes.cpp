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

#include "xstate/hyperplanes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "xstate/kernels/kernels.hpp"

namespace xstate {

std::string_view kind_name(HyperplaneKind kind) {
    switch (kind) {
        case HyperplaneKind::PerpSet: return "perp";
        case HyperplaneKind::Grid: return "grid";
        case HyperplaneKind::Ovoid: return "ovoid";
    }
    return "?";
}

std::string Hyperplane::name() const {
    switch (kind) {
        case HyperplaneKind::PerpSet: return "H_" + label_of(center);
        case HyperplaneKind::Grid: return "Q" + std::to_string(index);
        case HyperplaneKind::Ovoid: return "O" + std::to_string(index);
    }
    return "?";
}

bool is_geometric_hyperplane(PointSet s) {
    for (const Line& line : isotropic_lines()) {
        const int hit = (s & line.as_set()).size();
        if (hit != 1 && hit != 3) {
            return false;
        }
    }
    return true;
}

std::vector<PointSet> scan_hyperplanes() {
    std::vector<std::array<std::uint8_t, 3>> lines;
    for (const Line& line : isotropic_lines()) {
        lines.push_back({static_cast<std::uint8_t>(line.points[0].index()),
                         static_cast<std::uint8_t>(line.points[1].index()),
                         static_cast<std::uint8_t>(line.points[2].index())});
    }
    std::vector<std::uint16_t> masks;
    // Skip the empty set (mask 0) and the full set (the last mask).
    kernels::hyperplane_scan(lines, 1, PointSet::kFullMask, masks);
    std::vector<PointSet> out;
    out.reserve(masks.size());
    for (std::uint16_t m : masks) {
        out.emplace_back(m);
    }
    return out;
}

Hyperplane perp_set(Point p) {
    Hyperplane h;
    h.points = fano_plane(p);
    h.kind = HyperplaneKind::PerpSet;
    h.center = p;
    return h;
}

int quadric_q0_form(Point p) {
    const int x1 = p.coord(1), x2 = p.coord(2), x3 = p.coord(3), x4 = p.coord(4);
    return (x1 * x2 + x3 * x4 + x1 + x2 + x3 + x4) & 1;
}

Hyperplane quadric_q0() {
    Hyperplane q;
    for (Point p : all_points()) {
        if (quadric_q0_form(p) == 0) {
            q.points.insert(p);
        }
    }
    q.kind = HyperplaneKind::Grid;
    q.index = 0;
    return q;
}

const Hyperplane& HyperplaneCatalog::grid(int i) const {
    if (i < 0 || i >= static_cast<int>(grids.size())) {
        throw std::out_of_range("grid index must be in 0..9");
    }
    return grids[static_cast<std::size_t>(i)];
}

const Hyperplane& HyperplaneCatalog::ovoid(int i) const {
    if (i < 1 || i > static_cast<int>(ovoids.size())) {
        throw std::out_of_range("ovoid index must be in 1..6");
    }
    return ovoids[static_cast<std::size_t>(i - 1)];
}

std::vector<Hyperplane> HyperplaneCatalog::all() const {
    std::vector<Hyperplane> out = perp_sets;
    out.insert(out.end(), grids.begin(), grids.end());
    out.insert(out.end(), ovoids.begin(), ovoids.end());
    return out;
}

std::optional<Hyperplane> HyperplaneCatalog::find(PointSet s) const {
    for (const auto* family : {&perp_sets, &grids, &ovoids}) {
        for (const Hyperplane& h : *family) {
            if (h.points == s) {
                return h;
            }
        }
    }
    return std::nullopt;
}

namespace {

std::vector<PointSet> orbit(const Collineation& g, PointSet start, int length) {
    std::vector<PointSet> out{start};
    while (static_cast<int>(out.size()) < length) {
        out.push_back(g.apply(out.back()));
    }
    return out;
}

HyperplaneCatalog build_catalog() {
    HyperplaneCatalog cat;
    const std::vector<PointSet> scanned = scan_hyperplanes();
    std::vector<PointSet> scanned_grids, scanned_ovoids;
    for (PointSet s : scanned) {
        if (s.size() == 9) {
            scanned_grids.push_back(s);
        } else if (s.size() == 5) {
            scanned_ovoids.push_back(s);
        }
    }

    for (Point p : all_points()) {
        cat.perp_sets.push_back(perp_set(p));
    }

    const PointSet q0 = quadric_q0().points;
    const PointSet q5 = PointSet::of_labels({"XI", "ZI", "IX", "IZ", "XX", "YY", "ZZ", "ZX", "XZ"});
    const PointSet o1 = PointSet::of_labels({"IX", "IZ", "XY", "ZY", "YY"});

    const Collineation* rotation = nullptr;
    for (const Collineation& g : symplectic_group()) {
        if (g.order() != 5 || g.apply(o1) != o1) {
            continue;
        }
        const auto q0_orbit = orbit(g, q0, 5);
        if (std::find(q0_orbit.begin(), q0_orbit.end(), q5) == q0_orbit.end()) {
            rotation = &g;
            break;
        }
    }
    if (rotation == nullptr) {
        throw std::logic_error("no order-5 collineation fixes O1 and separates Q0 from Q5");
    }
    cat.rotation = *rotation;

    std::vector<PointSet> grid_sets = orbit(cat.rotation, q0, 5);
    const auto second = orbit(cat.rotation, q5, 5);
    grid_sets.insert(grid_sets.end(), second.begin(), second.end());

    PointSet o2;
    for (PointSet s : scanned_ovoids) {
        if (s != o1) {
            o2 = s;
            break;
        }
    }
    std::vector<PointSet> ovoid_sets{o1};
    const auto rest = orbit(cat.rotation, o2, 5);
    ovoid_sets.insert(ovoid_sets.end(), rest.begin(), rest.end());

    auto same_members = [](std::vector<PointSet> a, std::vector<PointSet> b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    };
    if (!same_members(grid_sets, scanned_grids) || !same_members(ovoid_sets, scanned_ovoids)) {
        throw std::logic_error("hyperplane labeling does not cover the scanned grids and ovoids");
    }

    for (std::size_t i = 0; i < grid_sets.size(); ++i) {
        cat.grids.push_back({grid_sets[i], HyperplaneKind::Grid, Point{}, static_cast<int>(i)});
    }
    for (std::size_t i = 0; i < ovoid_sets.size(); ++i) {
        cat.ovoids.push_back({ovoid_sets[i], HyperplaneKind::Ovoid, Point{}, static_cast<int>(i + 1)});
    }
    return cat;
}

}  // namespace

const HyperplaneCatalog& hyperplane_catalog() {
    static const HyperplaneCatalog catalog = build_catalog();
    return catalog;
}

std::string_view intersection_type_name(IntersectionType type) {
    switch (type) {
        case IntersectionType::Tangential: return "tangential";
        case IntersectionType::Transverse: return "transverse";
        case IntersectionType::Other: return "other";
    }
    return "?";
}

bool collinear(Point p, Point q) { return p != q && symplectic_form(p, q) == 0; }

IntersectionReport intersect_with_grid(const Hyperplane& h, const Hyperplane& grid) {
    if (!grid.is_grid()) {
        throw std::invalid_argument("intersect_with_grid: right operand must be a grid");
    }
    IntersectionReport report{h, grid, h.points & grid.points, IntersectionType::Other};
    const std::vector<Point> common = report.common.points();
    bool pairwise_noncollinear = true;
    for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
            if (collinear(common[i], common[j])) {
                pairwise_noncollinear = false;
            }
        }
    }
    if (common.size() == 5) {
        report.type = IntersectionType::Tangential;
    } else if (common.size() == 3 && pairwise_noncollinear) {
        report.type = IntersectionType::Transverse;
    }
    return report;
}

IntersectionReport intersect_with_q0(const Hyperplane& perp) {
    if (perp.kind != HyperplaneKind::PerpSet) {
        throw std::invalid_argument("intersect_with_q0 expects a perp-set");
    }
    return intersect_with_grid(perp, hyperplane_catalog().grid(0));
}

int group_of(Point p) {
    const PauliLabel l = point_to_pauli(p);
    return (l.first != Pauli::I && l.second != Pauli::I) ? 2 : 1;
}

namespace {

std::array<Pauli, 2> others(Pauli a) {
    switch (a) {
        case Pauli::X: return {Pauli::Y, Pauli::Z};
        case Pauli::Y: return {Pauli::X, Pauli::Z};
        case Pauli::Z: return {Pauli::X, Pauli::Y};
        case Pauli::I: break;
    }
    throw std::invalid_argument("others() needs a nontrivial Pauli");
}

constexpr std::array<Pauli, 3> kXyz{Pauli::X, Pauli::Y, Pauli::Z};

}  // namespace

std::vector<Point> fano_row(Point p) {
    const PauliLabel l = point_to_pauli(p);
    std::vector<Point> row;
    auto add = [&row](Pauli a, Pauli b) { row.push_back(pauli_to_point({a, b})); };
    if (l.first == Pauli::I) {
        for (Pauli s : kXyz) add(s, l.second);
        for (Pauli s : kXyz) add(s, Pauli::I);
        add(Pauli::I, l.second);
    } else if (l.second == Pauli::I) {
        for (Pauli s : kXyz) add(l.first, s);
        for (Pauli s : kXyz) add(Pauli::I, s);
        add(l.first, Pauli::I);
    } else {
        add(l.first, l.second);
        for (Pauli a : others(l.first)) {
            for (Pauli b : others(l.second)) add(a, b);
        }
        add(Pauli::I, l.second);
        add(l.first, Pauli::I);
    }
    return row;
}

std::string catalog_table() {
    std::ostringstream out;
    out << "Group  Point      Label  Fano plane\n";
    for (int group : {1, 2}) {
        for (Point p : all_points()) {
            if (group_of(p) != group) {
                continue;
            }
            out << group << "      " << p.to_string() << "  " << label_of(p) << "     ";
            const auto row = fano_row(p);
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << label_of(row[i]);
            }
            out << '\n';
        }
    }
    return out.str();
}

std::string census_line() {
    int perps = 0, grids = 0, ovoids = 0;
    const auto scanned = scan_hyperplanes();
    for (PointSet s : scanned) {
        perps += s.size() == 7;
        grids += s.size() == 9;
        ovoids += s.size() == 5;
    }
    std::ostringstream out;
    out << scanned.size() << " hyperplanes: " << perps << '/' << grids << '/' << ovoids
        << " (perp-sets/grids/ovoids)";
    return out.str();
}

}  // namespace xstate
