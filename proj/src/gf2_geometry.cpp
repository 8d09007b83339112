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

#include "xstate/gf2_geometry.hpp"

#include <algorithm>
#include <charconv>

namespace xstate {

Point Point::parse(std::string_view text) {
    // "[a:b:c:d]"
    if (text.size() != 9 || text.front() != '[' || text.back() != ']' || text[2] != ':' || text[4] != ':' ||
        text[6] != ':') {
        throw std::invalid_argument("malformed point '" + std::string(text) + "', expected [a:b:c:d]");
    }
    unsigned bits = 0;
    for (std::size_t pos : {1u, 3u, 5u, 7u}) {
        const char c = text[pos];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("point coordinates must be 0 or 1: '" + std::string(text) + "'");
        }
        bits = (bits << 1) | static_cast<unsigned>(c - '0');
    }
    if (bits == 0) {
        throw std::invalid_argument("[0:0:0:0] is not a point of PG(3,2)");
    }
    return from_bits(bits);
}

std::string Point::to_string() const {
    std::string out = "[0:0:0:0]";
    for (int i = 1; i <= 4; ++i) {
        out[static_cast<std::size_t>(2 * i - 1)] = static_cast<char>('0' + coord(i));
    }
    return out;
}

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default: throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

PauliLabel PauliLabel::parse(std::string_view text) {
    if (text.size() != 2) {
        throw std::invalid_argument("Pauli label must have two letters: '" + std::string(text) + "'");
    }
    return {pauli_from_char(text[0]), pauli_from_char(text[1])};
}

std::string PauliLabel::to_string() const {
    return {pauli_char(first), pauli_char(second)};
}

namespace {

// A = Z^mu X^nu: I=(0,0), Z=(1,0), X=(0,1), Y=(1,1).
constexpr unsigned pauli_bits(Pauli p) {
    switch (p) {
        case Pauli::I: return 0b00;
        case Pauli::Z: return 0b10;
        case Pauli::X: return 0b01;
        case Pauli::Y: return 0b11;
    }
    return 0;
}

constexpr Pauli pauli_from_bits(unsigned mu_nu) {
    constexpr std::array<Pauli, 4> table{Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
    return table[mu_nu & 0b11];
}

}  // namespace

Point pauli_to_point(PauliLabel label) {
    if (label.is_identity()) {
        throw std::invalid_argument("II is the trivial observable, not a point");
    }
    return Point::from_bits((pauli_bits(label.first) << 2) | pauli_bits(label.second));
}

PauliLabel point_to_pauli(Point p) {
    return {pauli_from_bits(p.bits() >> 2), pauli_from_bits(p.bits())};
}

std::string label_of(Point p) { return point_to_pauli(p).to_string(); }

Point point_of_label(std::string_view label) { return pauli_to_point(PauliLabel::parse(label)); }

Point point_sum(Point p, Point q) {
    if (p == q) {
        throw std::invalid_argument("point_sum of a point with itself is the zero vector");
    }
    return Point::from_bits(p.bits() ^ q.bits());
}

PointSet PointSet::of(std::initializer_list<Point> points) {
    PointSet s;
    for (Point p : points) {
        s.insert(p);
    }
    return s;
}

PointSet PointSet::of_labels(std::initializer_list<std::string_view> labels) {
    PointSet s;
    for (auto l : labels) {
        s.insert(point_of_label(l));
    }
    return s;
}

std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < kNumPoints; ++i) {
        if ((mask_ >> i) & 1u) {
            out.push_back(Point::from_index(i));
        }
    }
    return out;
}

std::vector<std::string> PointSet::labels() const {
    std::vector<std::string> out;
    for (Point p : points()) {
        out.push_back(label_of(p));
    }
    return out;
}

Line Line::through(Point p, Point q) {
    Line l{{p, q, point_sum(p, q)}};
    std::sort(l.points.begin(), l.points.end());
    return l;
}

bool Line::is_isotropic() const {
    return symplectic_form(points[0], points[1]) == 0 && symplectic_form(points[0], points[2]) == 0 &&
           symplectic_form(points[1], points[2]) == 0;
}

const std::array<Point, kNumPoints>& all_points() {
    static const std::array<Point, kNumPoints> points = [] {
        std::array<Point, kNumPoints> out{};
        for (int i = 0; i < kNumPoints; ++i) {
            out[static_cast<std::size_t>(i)] = Point::from_index(i);
        }
        return out;
    }();
    return points;
}

std::vector<Line> enumerate_lines() {
    std::vector<Line> lines;
    for (Point p : all_points()) {
        for (Point q : all_points()) {
            // Each line is generated once, from its two smallest points.
            if (p < q && point_sum(p, q) > q) {
                lines.push_back(Line::through(p, q));
            }
        }
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

const std::vector<Line>& isotropic_lines() {
    static const std::vector<Line> lines = [] {
        std::vector<Line> out;
        for (const Line& l : enumerate_lines()) {
            if (l.is_isotropic()) {
                out.push_back(l);
            }
        }
        return out;
    }();
    return lines;
}

PointSet fano_plane(Point p) {
    PointSet s;
    for (Point q : all_points()) {
        if (symplectic_form(p, q) == 0) {
            s.insert(q);
        }
    }
    return s;
}

bool is_triangle_free(const std::vector<Line>& lines) {
    // A triangle is three points, pairwise collinear, not all on one line.
    const std::size_t n = lines.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const PointSet ab = lines[a].as_set() & lines[b].as_set();
            if (ab.size() != 1) {
                continue;
            }
            for (std::size_t c = b + 1; c < n; ++c) {
                const PointSet ac = lines[a].as_set() & lines[c].as_set();
                const PointSet bc = lines[b].as_set() & lines[c].as_set();
                if (ac.size() == 1 && bc.size() == 1 && ac != ab && bc != ab && ac != bc) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace xstate
