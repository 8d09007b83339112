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

#include <array>
#include <vector>

#include "xstate/gf2_geometry.hpp"

namespace xstate {

/// Linear map of GF(2)^4 acting on points; stored as the images of the four
/// unit vectors [1:0:0:0], [0:1:0:0], [0:0:1:0], [0:0:0:1].
class Collineation {
  public:
    static Collineation identity();
    explicit Collineation(std::array<Point, 4> unit_images) : images_(unit_images) {}

    Point apply(Point p) const;
    PointSet apply(PointSet s) const;
    Collineation then(const Collineation& next) const;  // next after this
    int order() const;
    bool preserves_symplectic_form() const;
    /// 16-bit packing of the unit images, used as a canonical sort key.
    unsigned key() const;

    const std::array<Point, 4>& unit_images() const { return images_; }
    friend bool operator==(const Collineation&, const Collineation&) = default;

  private:
    std::array<Point, 4> images_;
};

/// Sp(4,2): all 720 invertible maps preserving the symplectic form, sorted by key().
const std::vector<Collineation>& symplectic_group();

/// Elements of the symplectic group mapping `s` onto itself.
std::vector<Collineation> stabilizer(PointSet s);

}  // namespace xstate
