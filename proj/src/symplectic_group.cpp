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

#include "xstate/symplectic_group.hpp"

#include <algorithm>

namespace xstate {

Collineation Collineation::identity() {
    return Collineation({Point::from_bits(8), Point::from_bits(4), Point::from_bits(2), Point::from_bits(1)});
}

Point Collineation::apply(Point p) const {
    unsigned out = 0;
    for (int i = 0; i < 4; ++i) {
        if (p.coord(i + 1)) {
            out ^= images_[static_cast<std::size_t>(i)].bits();
        }
    }
    return Point::from_bits(out);
}

PointSet Collineation::apply(PointSet s) const {
    PointSet out;
    for (Point p : s.points()) {
        out.insert(apply(p));
    }
    return out;
}

Collineation Collineation::then(const Collineation& next) const {
    std::array<Point, 4> images{};
    for (std::size_t i = 0; i < 4; ++i) {
        images[i] = next.apply(images_[i]);
    }
    return Collineation(images);
}

int Collineation::order() const {
    const Collineation id = identity();
    Collineation power = *this;
    int k = 1;
    while (!(power == id)) {
        power = power.then(*this);
        ++k;
    }
    return k;
}

bool Collineation::preserves_symplectic_form() const {
    const Collineation id = identity();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (symplectic_form(images_[i], images_[j]) !=
                symplectic_form(id.images_[i], id.images_[j])) {
                return false;
            }
        }
    }
    return true;
}

unsigned Collineation::key() const {
    return (images_[0].bits() << 12) | (images_[1].bits() << 8) | (images_[2].bits() << 4) | images_[3].bits();
}

namespace {

bool spans_everything(const std::array<Point, 4>& v) {
    // Gaussian elimination over GF(2) on 4-bit rows.
    std::array<unsigned, 4> rows{v[0].bits(), v[1].bits(), v[2].bits(), v[3].bits()};
    int rank = 0;
    for (int bit = 3; bit >= 0; --bit) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [bit](unsigned r) { return (r >> bit) & 1u; });
        if (pivot == rows.end()) {
            continue;
        }
        std::swap(*pivot, rows[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < 4; ++r) {
            if (r != static_cast<std::size_t>(rank) && ((rows[r] >> bit) & 1u)) {
                rows[r] ^= rows[static_cast<std::size_t>(rank)];
            }
        }
        ++rank;
    }
    return rank == 4;
}

}  // namespace

const std::vector<Collineation>& symplectic_group() {
    static const std::vector<Collineation> group = [] {
        std::vector<Collineation> out;
        // Images enumerated in increasing packed order, so `out` comes out sorted by key().
        for (unsigned a = 1; a < 16; ++a) {
            for (unsigned b = 1; b < 16; ++b) {
                for (unsigned c = 1; c < 16; ++c) {
                    for (unsigned d = 1; d < 16; ++d) {
                        const std::array<Point, 4> images{Point::from_bits(a), Point::from_bits(b),
                                                          Point::from_bits(c), Point::from_bits(d)};
                        Collineation g(images);
                        if (g.preserves_symplectic_form() && spans_everything(images)) {
                            out.push_back(g);
                        }
                    }
                }
            }
        }
        return out;
    }();
    return group;
}

std::vector<Collineation> stabilizer(PointSet s) {
    std::vector<Collineation> out;
    for (const Collineation& g : symplectic_group()) {
        if (g.apply(s) == s) {
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace xstate
