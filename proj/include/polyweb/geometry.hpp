#pragma once

// Star geometry of regular N-gons in exact coordinates.
//
// Frame convention (used everywhere in this library): a polygon with center c
// and apothem h has its base edge horizontal BELOW the center, on the line
// y = c.y - h. Vertex j sits at angle theta_j = -pi/2 + pi/N + 2*pi*j/N
// measured counterclockwise, so vertex 0 is the right end of the base edge.
//
// Star points of index k extend the base edge: the right star[k] is
// (c.x + h*tan(k*pi/N), c.y - h), the left one mirrors the x-offset. star
// points exist for 1 <= k <= <N/2> where <x> is the largest integer strictly
// below N/2; star[<N/2>] is called GenStar. The S[k] tile anchored at a right
// star[k] has its center displaced by +s/2 (s = parent side) further right;
// left-side tiles mirror this.

#include "polyweb/cyclotomic.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyweb {

struct ExactPoint {
    ExactNumber x;
    ExactNumber y;

    bool operator==(const ExactPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const ExactPoint& o) const { return !(*this == o); }
    ExactPoint operator+(const ExactPoint& o) const { return {x + o.x, y + o.y}; }
    ExactPoint operator-(const ExactPoint& o) const { return {x - o.x, y - o.y}; }
    ExactPoint operator*(const Rational& s) const { return {x * s, y * s}; }
    ExactPoint operator*(const ExactNumber& s) const { return {x * s, y * s}; }
    ExactPoint operator-() const { return {-x, -y}; }

    // Numeric shadow (both coordinates must be real elements).
    std::pair<double, double> to_double() const { return {x.to_double_real(), y.to_double_real()}; }
};

// Largest integer strictly below n/2 (star-point index bound).
inline unsigned half_index(unsigned n) { return (n - 1) / 2; }

enum class Side { Right, Left };

struct PolygonSpec {
    unsigned n = 0;        // vertex count, >= 3
    ExactPoint center;     // exact center
    ExactNumber apothem;   // exact apothem (height), positive

    const CycloContextPtr& context() const { return apothem.context(); }
    ExactNumber radius() const;      // h / cos(pi/n)
    ExactNumber side_length() const; // 2 h tan(pi/n)
};

// Convenience factory: regular n-gon with rational apothem and center,
// realized in ctx (defaults to the canonical conductor lcm(4, 2n)).
PolygonSpec regular_ngon(unsigned n, const Rational& apothem = Rational(1),
                         const Rational& cx = Rational(0), const Rational& cy = Rational(0),
                         CycloContextPtr ctx = nullptr);

// The n exact vertices, counterclockwise, starting with the right base vertex.
std::vector<ExactPoint> polygon_vertices(const PolygonSpec& P);

// star[k] of P on the requested side (1 <= k <= <n/2>).
ExactPoint star_point(const PolygonSpec& P, unsigned k, Side side);

// GenStar = star[<n/2>].
ExactPoint gen_star(const PolygonSpec& P, Side side = Side::Right);

// scale[k] of n = tan(pi/n)/tan(k*pi/n); coscale inverts the ratio.
// ctx defaults to the canonical conductor for n.
ExactNumber scale_of(unsigned n, unsigned k, CycloContextPtr ctx = nullptr, bool coscale = false);

// GenScale[n] = scale[<n/2>] (= tan^2(pi/n) for n even,
// tan(pi/n)*tan(pi/2n) for n odd).
ExactNumber gen_scale(unsigned n, CycloContextPtr ctx = nullptr);

// ScaleChange SC(n, m) = tan(pi/n)/tan(pi/m) for m | n, m >= 3.
ExactNumber scale_change(unsigned n, unsigned m, CycloContextPtr ctx = nullptr);

enum class StarSides { Same, Opposite };

// Two-Star solver: the unique regular n-gon (in the standard frame) whose
// star[j] is p1 and star[k] is p2.
//   Same:     p1 = right star[j], p2 = right star[k], j != k.
//   Opposite: p1 = left star[j], p2 = right star[k].
// p1 and p2 must lie on a common horizontal line with p2.x - p1.x > 0.
PolygonSpec two_star_solve(const ExactPoint& p1, unsigned j, const ExactPoint& p2, unsigned k,
                           StarSides sides, unsigned n);

enum class TileKind { S, DS, D, M, MGen, DGen, Mutated, Custom };
const char* tile_kind_name(TileKind k);

struct TileRecord {
    TileKind kind = TileKind::Custom;
    int index = 0;                // k for S[k]/DS[k], generation for MGen/DGen
    PolygonSpec polygon;          // bounding spec (center/apothem) for all kinds
    std::string label;            // diagnostic text, e.g. "S[4] of N=14"
    std::vector<ExactPoint> explicit_vertices; // nonempty for Mutated/Custom only

    std::vector<ExactPoint> vertices() const; // explicit list or regular vertices
};

enum class FamilyCase { TwiceEven, TwiceOdd, Odd };
const char* family_case_name(FamilyCase c);
FamilyCase family_case_of(unsigned n);

struct FamilyRecord {
    PolygonSpec parent;
    FamilyCase fam_case = FamilyCase::TwiceEven;
    std::vector<TileRecord> tiles;

    const TileRecord* find(TileKind kind, int index) const; // nullptr if absent
};

struct FamilyOptions {
    // Also emit the suppressed tail DS tiles: the copy of the parent that
    // closes the telescoping DS chain, and (n odd) the D-congruent DS[2n-1].
    bool include_suppressed_ds = false;
};

// Conformal D tile: for n even an n-gon congruent to P; for n odd a 2n-gon
// with side sD = sN. Its left base vertex lies exactly on GenStar.
TileRecord conformal_D(const PolygonSpec& P);

// Gender (outer/parity) dual: the n/2-gon circumscribed about P with the same
// center and apothem. Requires n even.
PolygonSpec gender_dual(const PolygonSpec& P);

// The First Family: S[1..<n/2>] (S[<n/2>] labeled D), the M tile of D for
// even n, and the DS[k] tiles (the toward-parent family of D), with the
// case-specific gender-dual revisions.
FamilyRecord first_family(const PolygonSpec& P, const FamilyOptions& opts = {});

// Ideal generations: (M[k], D[k]) for k = 1..depth. M[1], D[1] are DS[1],
// DS[2] of D; deeper generations are homothety images converging to GenStar.
std::vector<std::pair<TileRecord, TileRecord>> ideal_generations(const PolygonSpec& P,
                                                                 unsigned depth);

// Outer-dual construction of the S[k] center: rotate star[k]*(r/h) about the
// center by +pi/n (right side). Equals the First Family center exactly.
ExactPoint outer_dual_center(const PolygonSpec& P, unsigned k);

// JSON export with exact serializations plus 20-digit numeric shadows.
std::string family_to_json(const FamilyRecord& fam);

} // namespace polyweb
