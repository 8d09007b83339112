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

// Points of PG(3,2), their two-qubit Pauli labels, the symplectic form and
// the incidence structures built from it (projective lines, isotropic lines,
// Fano planes).

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xstate {

inline constexpr int kNumPoints = 15;

/// A nonzero vector (x1,x2,x3,x4) of GF(2)^4, stored with x1 as the most
/// significant of four bits. Numeric order of the packed value is the
/// lexicographic order on the tuple, which is the canonical point order.
class Point {
  public:
    constexpr Point() = default;

    static constexpr Point from_bits(unsigned bits) {
        if (bits == 0 || bits > 0xF) {
            throw std::invalid_argument("a PG(3,2) point needs a nonzero 4-bit vector");
        }
        Point p;
        p.bits_ = static_cast<std::uint8_t>(bits);
        return p;
    }
    /// Point at position `index` (0..14) of the canonical order.
    static constexpr Point from_index(int index) {
        if (index < 0 || index >= kNumPoints) {
            throw std::out_of_range("point index out of range");
        }
        return from_bits(static_cast<unsigned>(index + 1));
    }
    static constexpr Point from_coords(int x1, int x2, int x3, int x4) {
        return from_bits(static_cast<unsigned>(((x1 & 1) << 3) | ((x2 & 1) << 2) | ((x3 & 1) << 1) | (x4 & 1)));
    }
    /// Parses "[a:b:c:d]".
    static Point parse(std::string_view text);

    constexpr unsigned bits() const { return bits_; }
    constexpr int index() const { return static_cast<int>(bits_) - 1; }
    /// Coordinate x_i for i in 1..4.
    constexpr int coord(int i) const { return (bits_ >> (4 - i)) & 1; }

    std::string to_string() const;

    friend constexpr bool operator==(Point, Point) = default;
    friend constexpr auto operator<=>(Point, Point) = default;

  private:
    std::uint8_t bits_ = 1;
};

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Phase-free two-qubit Pauli class A1 (x) A2.
struct PauliLabel {
    Pauli first = Pauli::I;
    Pauli second = Pauli::I;

    /// Parses two letters from {I,X,Y,Z}; "II" is accepted here and rejected
    /// by pauli_to_point.
    static PauliLabel parse(std::string_view text);
    std::string to_string() const;
    constexpr bool is_identity() const { return first == Pauli::I && second == Pauli::I; }

    friend constexpr bool operator==(PauliLabel, PauliLabel) = default;
};

Point pauli_to_point(PauliLabel label);
PauliLabel point_to_pauli(Point p);
std::string label_of(Point p);
Point point_of_label(std::string_view label);

/// sigma(p,q) = p1 q2 + p2 q1 + p3 q4 + p4 q3 (mod 2).
constexpr int symplectic_form(Point p, Point q) {
    const unsigned a = p.bits();
    const unsigned b = q.bits();
    // Swapping the bits inside each (x1,x2) and (x3,x4) pair turns the form
    // into a parity of the AND.
    const unsigned b_swapped = ((b & 0b1010u) >> 1) | ((b & 0b0101u) << 1);
    return std::popcount(a & b_swapped) & 1;
}

/// Third point of the line through p and q. Throws for p == q.
Point point_sum(Point p, Point q);

/// Set of points as a 15-bit mask; bit i is the point with canonical index i.
class PointSet {
  public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint16_t mask) : mask_(static_cast<std::uint16_t>(mask & kFullMask)) {}

    static constexpr std::uint16_t kFullMask = (1u << kNumPoints) - 1;
    static constexpr PointSet full() { return PointSet(kFullMask); }
    static PointSet of(std::initializer_list<Point> points);
    static PointSet of_labels(std::initializer_list<std::string_view> labels);

    constexpr std::uint16_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(Point p) const { return (mask_ >> p.index()) & 1u; }
    constexpr void insert(Point p) { mask_ = static_cast<std::uint16_t>(mask_ | (1u << p.index())); }

    /// Members in canonical order.
    std::vector<Point> points() const;
    std::vector<std::string> labels() const;

    friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.mask_ & b.mask_); }
    friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.mask_ | b.mask_); }
    friend constexpr bool operator==(PointSet, PointSet) = default;
    friend constexpr auto operator<=>(PointSet, PointSet) = default;

  private:
    std::uint16_t mask_ = 0;
};

/// A projective line {p, q, p+q}; points kept in canonical order.
struct Line {
    std::array<Point, 3> points;

    static Line through(Point p, Point q);
    PointSet as_set() const { return PointSet::of({points[0], points[1], points[2]}); }
    bool contains(Point p) const { return as_set().contains(p); }
    bool is_isotropic() const;

    friend bool operator==(const Line&, const Line&) = default;
    friend auto operator<=>(const Line&, const Line&) = default;
};

const std::array<Point, kNumPoints>& all_points();

/// The 35 lines of PG(3,2), sorted.
std::vector<Line> enumerate_lines();

/// The 15 totally isotropic lines (the lines of W(3,2)), sorted.
const std::vector<Line>& isotropic_lines();

/// F_p = { q : sigma(p,q) = 0 }.
PointSet fano_plane(Point p);

/// True if no three lines pairwise meet in three distinct points.
bool is_triangle_free(const std::vector<Line>& lines);

}  // namespace xstate
