#pragma once

// Piecewise isometries attached to a regular N-gon.
//
// Three maps, equivalent on the appropriate domains, are exposed with a
// common vocabulary:
//
//   tau    outer billiards about the polygon: tau(p) = 2c - p where c is the
//          unique supporting vertex such that the whole polygon lies weakly
//          on one fixed side of the directed line p -> c. The standard
//          orientation places the polygon on the LEFT of p -> c; the mirrored
//          orientation (a conjugate system) places it on the right.
//
//   Df     the sawtooth ("digital filter") map on the half-open torus
//          [-1,1)^2:  Df(x,y) = (y, f(-x + a y)) with a = 2 cos(2 pi / N) and
//          f(v) = ((v + 1) mod 2) - 1. The atom of a step is 1, 0 or -1
//          according to v >= 1, -1 <= v < 1, v < -1.
//
//   F      the dual-center map on the complex plane:
//          F(z) = exp(-2 pi i / N) (z - sign(Im z)) with sign(0) = 0.
//
// Every map supports three stepping modes:
//   exact    state in Q(zeta_M); region membership decided exactly,
//   numeric  BigFloat (or double) state with a singularity tolerance eps,
//            aborting instead of guessing a side,
//   replay   label-driven exact stepping that never re-tests membership, so a
//            recorded itinerary can be re-run in exact arithmetic verbatim.
//
// Step labels: a tau label is the index of the pivot vertex (0..N-1 in the
// counterclockwise vertex order, vertex 0 at the right end of the base edge).
// Df labels are the atoms {-1,0,1}; F labels are the signs {-1,0,1}.

#include "polyweb/geometry.hpp"

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace polyweb {

enum class MapKind { Tau, Df, Dkhoy };
const char* map_kind_name(MapKind k);
MapKind map_kind_from_name(const std::string& name);

// Numeric point at the ambient BigFloat precision.
struct NumericPoint {
    BigFloat x;
    BigFloat y;
};

NumericPoint numeric_shadow(const ExactPoint& p, unsigned digits);

enum class StepStatus { ok, singular, inside };

// ---------------------------------------------------------------------------
// tau: outer billiards
// ---------------------------------------------------------------------------

struct OuterBilliardsSystem {
    PolygonSpec polygon;
    std::vector<ExactPoint> vertices; // counterclockwise, vertex 0 = right base
    bool mirrored = false;            // flip the support side (conjugate system)

    static OuterBilliardsSystem create(const PolygonSpec& P, bool mirrored = false);

    unsigned size() const { return static_cast<unsigned>(vertices.size()); }
};

// Exact step; the returned label is the pivot vertex index. Throws
// Errc::point_inside_polygon when p is inside or on the boundary of the
// polygon and Errc::singular_point when the support is ambiguous (p lies on a
// singular edge-line extension or on a vertex).
std::pair<ExactPoint, int> tau_step(const OuterBilliardsSystem& S, const ExactPoint& p,
                                    bool inverse = false);

// Exact inverse step: the support side flips, so
// tau_inverse_step(tau_step(p)) == p wherever both are defined.
std::pair<ExactPoint, int> tau_inverse_step(const OuterBilliardsSystem& S, const ExactPoint& p);

// Replay: reflect through the indexed vertex; no membership test.
ExactPoint tau_step_with_label(const OuterBilliardsSystem& S, const ExactPoint& p, int label);

// Numeric stepping works over a precomputed vertex shadow.
struct TauShadow {
    std::vector<NumericPoint> vertices;
    BigFloat side;     // polygon side length (normalizes cross products)
    bool mirrored = false;
    unsigned digits = 0;
};
TauShadow make_tau_shadow(const OuterBilliardsSystem& S, unsigned digits);

struct TauStepResult {
    NumericPoint point;      // image (valid when status == ok)
    int label = 0;           // pivot vertex index (valid when status == ok)
    StepStatus status = StepStatus::ok;
    BigFloat line_distance;  // distance to the pivot's nearer discriminating line
};

// One numeric step; singular when the support is ambiguous or p is within
// eps of one of the pivot's own discriminating lines.
TauStepResult tau_step(const TauShadow& S, const NumericPoint& p, const BigFloat& eps,
                       bool inverse = false);

// Double-precision variant for bulk web iteration.
struct TauShadowD {
    std::vector<std::array<double, 2>> vertices;
    double side = 0.0;
    bool mirrored = false;
};
TauShadowD make_tau_shadow_d(const OuterBilliardsSystem& S);

struct TauStepResultD {
    double x = 0.0, y = 0.0;
    int label = 0;
    StepStatus status = StepStatus::ok;
};
TauStepResultD tau_step(const TauShadowD& S, double x, double y, double eps,
                        bool inverse = false);

// ---------------------------------------------------------------------------
// Df: the sawtooth map on [-1,1)^2
// ---------------------------------------------------------------------------

struct DfSystem {
    unsigned n = 0;
    ExactNumber a;      // 2 cos(2 pi / n)
    ExactNumber cos_w;  // cos(2 pi / n)
    ExactNumber sin_w;  // sin(2 pi / n)

    static DfSystem create(unsigned n, CycloContextPtr ctx = nullptr);
    const CycloContextPtr& context() const { return a.context(); }
};

// Exact step; total on the half-open domain (atom boundaries decide exactly).
// Throws Errc::invalid_argument when p is outside [-1,1)^2.
std::pair<ExactPoint, int> df_step(const DfSystem& S, const ExactPoint& p);

// Replay: (x, y) -> (y, -x + a y - 2 atom); no domain or atom test.
ExactPoint df_step_with_label(const DfSystem& S, const ExactPoint& p, int atom);

struct DfStepResult {
    NumericPoint point;
    int atom = 0;
    StepStatus status = StepStatus::ok;
};
// Numeric step; singular when |(-x + a y) -+ 1| < eps.
DfStepResult df_step(const NumericPoint& p, const BigFloat& a, const BigFloat& eps);

struct DfStepResultD {
    double x = 0.0, y = 0.0;
    int atom = 0;
    StepStatus status = StepStatus::ok;
};
DfStepResultD df_step_d(double x, double y, double a, double eps);

// Rectification: a linear change of coordinates under which the atom-0 action
// of Df becomes a rotation by 2 pi / n about the origin, and the singular
// lines of the torus become extended edges of the regular n-gon with apothem
// 1 in the standard frame of this library (horizontal base edge).
//
//   df_rectify(x, y)   = ((y - cos w * x) / sin w, -x),      w = 2 pi / n,
//   df_unrectify(u, v) = (-v, sin w * u - cos w * v).
ExactPoint df_rectify(const DfSystem& S, const ExactPoint& p);
ExactPoint df_unrectify(const DfSystem& S, const ExactPoint& p);
NumericPoint df_rectify(const NumericPoint& p, const BigFloat& cos_w, const BigFloat& sin_w);
NumericPoint df_unrectify(const NumericPoint& p, const BigFloat& cos_w, const BigFloat& sin_w);

// ---------------------------------------------------------------------------
// F: the dual-center map on the complex plane
// ---------------------------------------------------------------------------

struct DualCenterSystem {
    unsigned n = 0;
    ExactNumber rotation; // exp(-2 pi i / n), exactly zeta_M^(-M/n)

    static DualCenterSystem create(unsigned n, CycloContextPtr ctx = nullptr);
    const CycloContextPtr& context() const { return rotation.context(); }
};

// Exact step on z in Q(zeta_M) viewed as a complex number; total (the sign of
// Im z is decided exactly, sign(0) = 0 maps real points without error).
std::pair<ExactNumber, int> dkhoy_step(const DualCenterSystem& S, const ExactNumber& z);

// Replay: z -> rotation * (z - sgn); no sign test.
ExactNumber dkhoy_step_with_label(const DualCenterSystem& S, const ExactNumber& z, int sgn);

struct DkhoyStepResult {
    BigComplex z;
    int sign = 0;
    StepStatus status = StepStatus::ok;
};
// Numeric step; sign 0 only when Im z is exactly zero, singular when
// 0 < |Im z| < eps.
DkhoyStepResult dkhoy_step(const BigComplex& z, const BigComplex& rotation, const BigFloat& eps);

struct DkhoyStepResultD {
    std::complex<double> z;
    int sign = 0;
    StepStatus status = StepStatus::ok;
};
DkhoyStepResultD dkhoy_step_d(std::complex<double> z, std::complex<double> rotation, double eps);

// Complex helpers: z = x + i y as a single field element and back.
ExactNumber complex_exact(const ExactPoint& p);
ExactPoint complex_parts(const ExactNumber& z);

} // namespace polyweb
