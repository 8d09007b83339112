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

// Geometric hyperplanes of W(3,2): a point set that contains each isotropic
// line or meets it in exactly one point. There are 31 proper ones: 15
// perp-sets, 10 grids and 6 ovoids.
//
// Labeling. Q0 is the quadric x1x2 + x3x4 + x1 + x2 + x3 + x4 = 0, Q5 the
// grid {XI,ZI,IX,IZ,XX,YY,ZZ,ZX,XZ} and O1 the ovoid {IX,IZ,XY,ZY,YY}. The
// remaining labels come from the order-5 symplectic collineation g (the
// smallest by Collineation::key() that fixes O1 and keeps Q5 out of the orbit
// of Q0): Q_i = g^i(Q0), Q_{5+i} = g^i(Q5) and O_{2+i} = g^i(O2) with O2 the
// lowest-mask ovoid other than O1. All six ovoids have stabilizers of order
// 120 in Sp(4,2), so O1 cannot be singled out by its stabilizer alone.

#include <optional>
#include <string>
#include <vector>

#include "xstate/gf2_geometry.hpp"
#include "xstate/symplectic_group.hpp"

namespace xstate {

enum class HyperplaneKind { PerpSet, Grid, Ovoid };

std::string_view kind_name(HyperplaneKind kind);

struct Hyperplane {
    PointSet points;
    HyperplaneKind kind = HyperplaneKind::PerpSet;
    Point center;    // PerpSet only
    int index = -1;  // Grid: 0..9, Ovoid: 1..6

    /// "H_ZZ", "Q3", "O1".
    std::string name() const;
    bool is_grid() const { return kind == HyperplaneKind::Grid; }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Definition check against the 15 isotropic lines.
bool is_geometric_hyperplane(PointSet s);

/// Exhaustive scan of all 2^15 subsets; proper hyperplanes only (the empty
/// and the full point set are dropped), increasing mask order.
std::vector<PointSet> scan_hyperplanes();

Hyperplane perp_set(Point p);

struct HyperplaneCatalog {
    std::vector<Hyperplane> perp_sets;  // canonical center order
    std::vector<Hyperplane> grids;      // Q0..Q9
    std::vector<Hyperplane> ovoids;     // O1..O6
    Collineation rotation = Collineation::identity();

    const Hyperplane& perp(Point center) const { return perp_sets[static_cast<std::size_t>(center.index())]; }
    const Hyperplane& grid(int i) const;
    const Hyperplane& ovoid(int i) const;
    std::vector<Hyperplane> all() const;
    std::optional<Hyperplane> find(PointSet s) const;
};

/// Built once, on first use.
const HyperplaneCatalog& hyperplane_catalog();

Hyperplane quadric_q0();

/// Evaluates x1x2 + x3x4 + x1 + x2 + x3 + x4 (mod 2).
int quadric_q0_form(Point p);

enum class IntersectionType { Tangential, Transverse, Other };

std::string_view intersection_type_name(IntersectionType type);

struct IntersectionReport {
    Hyperplane left;
    Hyperplane right;
    PointSet common;
    IntersectionType type = IntersectionType::Other;
};

/// Intersection of any hyperplane with a grid. Tangential: the common set
/// is a 5-point perp-set of the grid; transverse: a 3-point ovoid of it.
IntersectionReport intersect_with_grid(const Hyperplane& h, const Hyperplane& grid);
IntersectionReport intersect_with_q0(const Hyperplane& perp);

/// Collinearity inside W(3,2): distinct points on a common isotropic line.
bool collinear(Point p, Point q);

/// 2 when both Pauli factors are nontrivial, else 1.
int group_of(Point p);

/// Members of F_p in the row order used by the catalog: Group 1 rows list
/// the three correlation operators, the three single-qubit operators, then
/// p; Group 2 rows list p, the 2x2 correlation block row by row, then the
/// single-qubit operators I(x)B and A(x)I.
std::vector<Point> fano_row(Point p);

/// The 15-row Fano plane table, Group 1 block first.
std::string catalog_table();

/// One-line census summary, e.g. "31 hyperplanes: 15/10/6 (perp-sets/grids/ovoids)".
std::string census_line();

}  // namespace xstate
