#include "polyweb/maps.hpp"

#include "polyweb/error.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <string>

namespace polyweb {

namespace {

// Real embedding of a (real) field element at the requested precision.
BigFloat embed_real(const ExactNumber& a, unsigned digits) {
    return a.embed(digits).re;
}

// Exact sign of the cross product a.x * b.y - a.y * b.x.
int cross_sign(const ExactPoint& a, const ExactPoint& b) {
    ExactNumber e = a.x * b.y - a.y * b.x;
    return e.sign_real();
}

} // namespace

const char* map_kind_name(MapKind k) {
    switch (k) {
    case MapKind::Tau: return "tau";
    case MapKind::Df: return "df";
    case MapKind::Dkhoy: return "dkhoy";
    }
    fail(Errc::internal, "map_kind_name: unknown kind");
}

MapKind map_kind_from_name(const std::string& name) {
    if (name == "tau") return MapKind::Tau;
    if (name == "df") return MapKind::Df;
    if (name == "dkhoy") return MapKind::Dkhoy;
    fail(Errc::parse_error, "unknown map kind '" + name + "'");
}

NumericPoint numeric_shadow(const ExactPoint& p, unsigned digits) {
    return {embed_real(p.x, digits), embed_real(p.y, digits)};
}

// ---------------------------------------------------------------------------
// tau
// ---------------------------------------------------------------------------

OuterBilliardsSystem OuterBilliardsSystem::create(const PolygonSpec& P, bool mirrored) {
    OuterBilliardsSystem S;
    S.polygon = P;
    S.vertices = polygon_vertices(P);
    S.mirrored = mirrored;
    return S;
}

std::pair<ExactPoint, int> tau_step(const OuterBilliardsSystem& S, const ExactPoint& p,
                                    bool inverse) {
    const unsigned N = S.size();
    // Standard forward step: polygon weakly left of p -> c. The inverse step
    // and the mirrored system each flip the side; both together restore it.
    const bool keep_left = (inverse == S.mirrored);
    long found = -1;
    bool collinear_at_found = false;

    for (unsigned i = 0; i < N; ++i) {
        const ExactPoint a = S.vertices[i] - p;
        const ExactPoint bn = S.vertices[(i + 1) % N] - p;
        const ExactPoint bp = S.vertices[(i + N - 1) % N] - p;
        int e1 = cross_sign(a, bn);
        int e2 = cross_sign(a, bp);
        if (!keep_left) {
            e1 = -e1;
            e2 = -e2;
        }
        if (e1 >= 0 && e2 >= 0) {
            if (found >= 0)
                fail(Errc::singular_point,
                     "outer billiards pivot is ambiguous (singular edge line or vertex)");
            found = static_cast<long>(i);
            collinear_at_found = (e1 == 0 || e2 == 0);
        }
    }
    if (found < 0) fail(Errc::point_inside_polygon, "point lies inside the polygon");
    // A unique support with a collinear neighbor only happens on the closed
    // edge between them (extensions beyond either endpoint yield two supports).
    if (collinear_at_found)
        fail(Errc::point_inside_polygon, "point lies on the polygon boundary");

    const ExactPoint& c = S.vertices[static_cast<unsigned>(found)];
    ExactPoint image{c.x + c.x - p.x, c.y + c.y - p.y};
    return {image, static_cast<int>(found)};
}

std::pair<ExactPoint, int> tau_inverse_step(const OuterBilliardsSystem& S, const ExactPoint& p) {
    return tau_step(S, p, true);
}

ExactPoint tau_step_with_label(const OuterBilliardsSystem& S, const ExactPoint& p, int label) {
    if (label < 0 || static_cast<unsigned>(label) >= S.size())
        fail(Errc::invalid_argument, "tau step label must be a vertex index in 0..N-1");
    const ExactPoint& c = S.vertices[static_cast<unsigned>(label)];
    return {c.x + c.x - p.x, c.y + c.y - p.y};
}

TauShadow make_tau_shadow(const OuterBilliardsSystem& S, unsigned digits) {
    PrecisionGuard guard(digits);
    TauShadow sh;
    sh.digits = digits;
    sh.vertices.reserve(S.size());
    for (const ExactPoint& v : S.vertices) sh.vertices.push_back(numeric_shadow(v, digits));
    sh.side = embed_real(S.polygon.side_length(), digits);
    sh.mirrored = S.mirrored;
    return sh;
}

TauStepResult tau_step(const TauShadow& S, const NumericPoint& p, const BigFloat& eps,
                       bool inverse) {
    const std::size_t N = S.vertices.size();
    const bool keep_left = (inverse == S.mirrored);
    TauStepResult r;
    long found = -1;
    bool multiple = false;
    BigFloat best_dist;

    for (std::size_t i = 0; i < N; ++i) {
        const BigFloat ax = S.vertices[i].x - p.x;
        const BigFloat ay = S.vertices[i].y - p.y;
        const NumericPoint& vn = S.vertices[(i + 1) % N];
        const NumericPoint& vp = S.vertices[(i + N - 1) % N];
        BigFloat e1 = ax * (vn.y - p.y) - ay * (vn.x - p.x);
        BigFloat e2 = ax * (vp.y - p.y) - ay * (vp.x - p.x);
        if (!keep_left) {
            e1 = -e1;
            e2 = -e2;
        }
        if (e1 >= 0 && e2 >= 0) {
            if (found >= 0) {
                multiple = true;
                break;
            }
            found = static_cast<long>(i);
            BigFloat d1 = abs(e1) / S.side;
            BigFloat d2 = abs(e2) / S.side;
            best_dist = d1 < d2 ? d1 : d2;
        }
    }
    if (found < 0) {
        r.status = StepStatus::inside;
        return r;
    }
    if (multiple) {
        r.status = StepStatus::singular;
        r.line_distance = 0;
        return r;
    }
    r.line_distance = best_dist;
    if (best_dist < eps) {
        r.status = StepStatus::singular;
        return r;
    }
    const NumericPoint& c = S.vertices[static_cast<std::size_t>(found)];
    r.point = {c.x + c.x - p.x, c.y + c.y - p.y};
    r.label = static_cast<int>(found);
    return r;
}

TauShadowD make_tau_shadow_d(const OuterBilliardsSystem& S) {
    TauShadowD sh;
    sh.vertices.reserve(S.size());
    for (const ExactPoint& v : S.vertices) {
        auto [x, y] = v.to_double();
        sh.vertices.push_back({x, y});
    }
    sh.side = S.polygon.side_length().to_double_real();
    sh.mirrored = S.mirrored;
    return sh;
}

TauStepResultD tau_step(const TauShadowD& S, double x, double y, double eps, bool inverse) {
    const std::size_t N = S.vertices.size();
    const bool keep_left = (inverse == S.mirrored);
    TauStepResultD r;
    long found = -1;
    double best_dist = 0.0;

    for (std::size_t i = 0; i < N; ++i) {
        const double ax = S.vertices[i][0] - x;
        const double ay = S.vertices[i][1] - y;
        const auto& vn = S.vertices[(i + 1) % N];
        const auto& vp = S.vertices[(i + N - 1) % N];
        double e1 = ax * (vn[1] - y) - ay * (vn[0] - x);
        double e2 = ax * (vp[1] - y) - ay * (vp[0] - x);
        if (!keep_left) {
            e1 = -e1;
            e2 = -e2;
        }
        if (e1 >= 0.0 && e2 >= 0.0) {
            if (found >= 0) {
                r.status = StepStatus::singular;
                return r;
            }
            found = static_cast<long>(i);
            best_dist = std::min(std::abs(e1), std::abs(e2)) / S.side;
        }
    }
    if (found < 0) {
        r.status = StepStatus::inside;
        return r;
    }
    if (best_dist < eps) {
        r.status = StepStatus::singular;
        return r;
    }
    const auto& c = S.vertices[static_cast<std::size_t>(found)];
    r.x = c[0] + c[0] - x;
    r.y = c[1] + c[1] - y;
    r.label = static_cast<int>(found);
    return r;
}

// ---------------------------------------------------------------------------
// Df
// ---------------------------------------------------------------------------

DfSystem DfSystem::create(unsigned n, CycloContextPtr ctx) {
    if (n < 3) fail(Errc::invalid_argument, "DfSystem requires n >= 3");
    if (!ctx) ctx = CycloContext::get(CycloContext::conductor_for_ngon(n));
    DfSystem S;
    S.n = n;
    S.cos_w = trig_exact(TrigKind::Cos, 2, n, ctx);
    S.sin_w = trig_exact(TrigKind::Sin, 2, n, ctx);
    S.a = S.cos_w * Rational(2);
    return S;
}

namespace {

bool df_in_domain(const ExactNumber& t) {
    return (t + Rational(1)).sign_real() >= 0 && (t - Rational(1)).sign_real() < 0;
}

} // namespace

std::pair<ExactPoint, int> df_step(const DfSystem& S, const ExactPoint& p) {
    if (!df_in_domain(p.x) || !df_in_domain(p.y))
        fail(Errc::invalid_argument, "df_step: point outside the torus [-1,1)^2");
    ExactNumber v = S.a * p.y - p.x;
    int atom = 0;
    if ((v - Rational(1)).sign_real() >= 0)
        atom = 1;
    else if ((v + Rational(1)).sign_real() < 0)
        atom = -1;
    ExactNumber folded = v - Rational(2 * atom);
    return {ExactPoint{p.y, folded}, atom};
}

ExactPoint df_step_with_label(const DfSystem& S, const ExactPoint& p, int atom) {
    ExactNumber folded = S.a * p.y - p.x - Rational(2 * atom);
    return {p.y, folded};
}

DfStepResult df_step(const NumericPoint& p, const BigFloat& a, const BigFloat& eps) {
    DfStepResult r;
    const BigFloat v = a * p.y - p.x;
    if (abs(v - 1) < eps || abs(v + 1) < eps) {
        r.status = StepStatus::singular;
        return r;
    }
    if (v >= 1)
        r.atom = 1;
    else if (v < -1)
        r.atom = -1;
    r.point = {p.y, v - 2 * r.atom};
    return r;
}

DfStepResultD df_step_d(double x, double y, double a, double eps) {
    DfStepResultD r;
    const double v = a * y - x;
    if (std::abs(v - 1.0) < eps || std::abs(v + 1.0) < eps) {
        r.status = StepStatus::singular;
        return r;
    }
    if (v >= 1.0)
        r.atom = 1;
    else if (v < -1.0)
        r.atom = -1;
    r.x = y;
    r.y = v - 2.0 * r.atom;
    return r;
}

ExactPoint df_rectify(const DfSystem& S, const ExactPoint& p) {
    ExactNumber u = (p.y - S.cos_w * p.x) / S.sin_w;
    return {u, -p.x};
}

ExactPoint df_unrectify(const DfSystem& S, const ExactPoint& p) {
    return {-p.y, S.sin_w * p.x - S.cos_w * p.y};
}

NumericPoint df_rectify(const NumericPoint& p, const BigFloat& cos_w, const BigFloat& sin_w) {
    return {(p.y - cos_w * p.x) / sin_w, -p.x};
}

NumericPoint df_unrectify(const NumericPoint& p, const BigFloat& cos_w, const BigFloat& sin_w) {
    return {-p.y, sin_w * p.x - cos_w * p.y};
}

// ---------------------------------------------------------------------------
// F (dual-center map)
// ---------------------------------------------------------------------------

DualCenterSystem DualCenterSystem::create(unsigned n, CycloContextPtr ctx) {
    if (n < 3) fail(Errc::invalid_argument, "DualCenterSystem requires n >= 3");
    if (!ctx) ctx = CycloContext::get(CycloContext::conductor_for_ngon(n));
    const unsigned M = ctx->conductor();
    if (M % n != 0)
        fail(Errc::context_mismatch, "context conductor does not contain the n-th roots of unity");
    DualCenterSystem S;
    S.n = n;
    S.rotation = ExactNumber::zeta_pow(ctx, -static_cast<long>(M / n));
    return S;
}

std::pair<ExactNumber, int> dkhoy_step(const DualCenterSystem& S, const ExactNumber& z) {
    const int sgn = z.imag_part().sign_real();
    ExactNumber shifted = (sgn == 0) ? z : z - Rational(sgn);
    return {S.rotation * shifted, sgn};
}

ExactNumber dkhoy_step_with_label(const DualCenterSystem& S, const ExactNumber& z, int sgn) {
    ExactNumber shifted = (sgn == 0) ? z : z - Rational(sgn);
    return S.rotation * shifted;
}

DkhoyStepResult dkhoy_step(const BigComplex& z, const BigComplex& rotation, const BigFloat& eps) {
    DkhoyStepResult r;
    int sgn = 0;
    if (z.im != 0) {
        if (abs(z.im) < eps) {
            r.status = StepStatus::singular;
            return r;
        }
        sgn = z.im > 0 ? 1 : -1;
    }
    r.sign = sgn;
    BigComplex shifted{z.re - sgn, z.im};
    r.z = rotation * shifted;
    return r;
}

DkhoyStepResultD dkhoy_step_d(std::complex<double> z, std::complex<double> rotation, double eps) {
    DkhoyStepResultD r;
    int sgn = 0;
    if (z.imag() != 0.0) {
        if (std::abs(z.imag()) < eps) {
            r.status = StepStatus::singular;
            return r;
        }
        sgn = z.imag() > 0.0 ? 1 : -1;
    }
    r.sign = sgn;
    r.z = rotation * (z - std::complex<double>(static_cast<double>(sgn), 0.0));
    return r;
}

ExactNumber complex_exact(const ExactPoint& p) {
    return p.x + ExactNumber::i(p.x.context()) * p.y;
}

ExactPoint complex_parts(const ExactNumber& z) {
    return {z.real_part(), z.imag_part()};
}

} // namespace polyweb
