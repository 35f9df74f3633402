// Star geometry: polygons, star points, scales, the Two-Star solver, the
// First Family construction, ideal generations, and the outer-dual center.

#include "polyweb/geometry.hpp"

#include <json.hpp>

#include <sstream>

namespace polyweb {

namespace {

ExactNumber tan_of(unsigned k, unsigned denom, const CycloContextPtr& ctx) {
    return trig_exact(TrigKind::Tan, static_cast<long>(k), denom, ctx);
}

ExactPoint make_point(const CycloContextPtr& ctx, const Rational& x, const Rational& y) {
    return {ExactNumber::from_rational(ctx, x), ExactNumber::from_rational(ctx, y)};
}

void require_star_index(unsigned n, unsigned k) {
    if (k < 1 || k > half_index(n))
        fail(Errc::invalid_argument, "star index " + std::to_string(k) + " out of range for n=" +
                                         std::to_string(n));
}

std::string tile_label(TileKind kind, int index, unsigned parent_n) {
    std::ostringstream os;
    os << tile_kind_name(kind);
    if (kind == TileKind::S || kind == TileKind::DS) os << "[" << index << "]";
    if (kind == TileKind::MGen || kind == TileKind::DGen) os << "[" << index << "]";
    os << " of N=" << parent_n;
    return os.str();
}

} // namespace

ExactNumber PolygonSpec::radius() const {
    return apothem / trig_exact(TrigKind::Cos, 1, n, context());
}

ExactNumber PolygonSpec::side_length() const {
    return apothem * tan_of(1, n, context()) * Rational(2);
}

PolygonSpec regular_ngon(unsigned n, const Rational& apothem, const Rational& cx,
                         const Rational& cy, CycloContextPtr ctx) {
    if (n < 3) fail(Errc::invalid_argument, "polygon needs at least 3 vertices");
    if (!ctx) ctx = CycloContext::get(CycloContext::conductor_for_ngon(n));
    PolygonSpec P;
    P.n = n;
    P.center = make_point(ctx, cx, cy);
    P.apothem = ExactNumber::from_rational(ctx, apothem);
    return P;
}

std::vector<ExactPoint> polygon_vertices(const PolygonSpec& P) {
    if (P.n < 3) fail(Errc::invalid_argument, "polygon needs at least 3 vertices");
    const CycloContextPtr& ctx = P.context();
    ExactNumber r = P.radius();
    std::vector<ExactPoint> verts;
    verts.reserve(P.n);
    // vertex j = center + r*(cos theta_j, sin theta_j), theta_j = -pi/2 + (2j+1)pi/n,
    // i.e. center + r*(sin alpha, -cos alpha) with alpha = (2j+1)*pi/n.
    for (unsigned j = 0; j < P.n; ++j) {
        long a = 2 * static_cast<long>(j) + 1;
        ExactNumber sa = trig_exact(TrigKind::Sin, a, P.n, ctx);
        ExactNumber ca = trig_exact(TrigKind::Cos, a, P.n, ctx);
        verts.push_back({P.center.x + r * sa, P.center.y - r * ca});
    }
    return verts;
}

ExactPoint star_point(const PolygonSpec& P, unsigned k, Side side) {
    require_star_index(P.n, k);
    ExactNumber offset = P.apothem * tan_of(k, P.n, P.context());
    ExactNumber x = (side == Side::Right) ? P.center.x + offset : P.center.x - offset;
    return {x, P.center.y - P.apothem};
}

ExactPoint gen_star(const PolygonSpec& P, Side side) {
    return star_point(P, half_index(P.n), side);
}

ExactNumber scale_of(unsigned n, unsigned k, CycloContextPtr ctx, bool coscale) {
    require_star_index(n, k);
    if (!ctx) ctx = CycloContext::get(CycloContext::conductor_for_ngon(n));
    ExactNumber s1 = tan_of(1, n, ctx);
    ExactNumber sk = tan_of(k, n, ctx);
    return coscale ? sk / s1 : s1 / sk;
}

ExactNumber gen_scale(unsigned n, CycloContextPtr ctx) {
    return scale_of(n, half_index(n), std::move(ctx));
}

ExactNumber scale_change(unsigned n, unsigned m, CycloContextPtr ctx) {
    if (m < 3 || n % m != 0)
        fail(Errc::invalid_argument, "scale_change requires m | n with m >= 3");
    if (!ctx) ctx = CycloContext::get(CycloContext::conductor_for_ngon(n));
    return tan_of(1, n, ctx) / tan_of(1, m, ctx);
}

PolygonSpec two_star_solve(const ExactPoint& p1, unsigned j, const ExactPoint& p2, unsigned k,
                           StarSides sides, unsigned n) {
    require_star_index(n, j);
    require_star_index(n, k);
    if (!(p1.y == p2.y))
        fail(Errc::invalid_argument, "two_star_solve: points must share a horizontal line");
    const CycloContextPtr& ctx = p1.x.context();
    ExactNumber tj = tan_of(j, n, ctx);
    ExactNumber tk = tan_of(k, n, ctx);
    ExactNumber d = p2.x - p1.x;
    ExactNumber h;
    ExactNumber cx;
    if (sides == StarSides::Same) {
        if (j == k) fail(Errc::invalid_argument, "two_star_solve: same-side solve needs j != k");
        h = d / (tk - tj);
        cx = p1.x - h * tj;
    } else {
        h = d / (tk + tj);
        cx = p1.x + h * tj;
    }
    if (h.sign_real() <= 0)
        fail(Errc::invalid_argument, "two_star_solve: inputs yield a non-positive apothem");
    PolygonSpec P;
    P.n = n;
    P.center = {cx, p1.y + h};
    P.apothem = h;
    return P;
}

const char* tile_kind_name(TileKind k) {
    switch (k) {
        case TileKind::S: return "S";
        case TileKind::DS: return "DS";
        case TileKind::D: return "D";
        case TileKind::M: return "M";
        case TileKind::MGen: return "M_gen";
        case TileKind::DGen: return "D_gen";
        case TileKind::Mutated: return "mutated";
        case TileKind::Custom: return "custom";
    }
    return "?";
}

std::vector<ExactPoint> TileRecord::vertices() const {
    if (!explicit_vertices.empty()) return explicit_vertices;
    return polygon_vertices(polygon);
}

const char* family_case_name(FamilyCase c) {
    switch (c) {
        case FamilyCase::TwiceEven: return "twice-even";
        case FamilyCase::TwiceOdd: return "twice-odd";
        case FamilyCase::Odd: return "odd";
    }
    return "?";
}

FamilyCase family_case_of(unsigned n) {
    if (n % 4 == 0) return FamilyCase::TwiceEven;
    if (n % 2 == 0) return FamilyCase::TwiceOdd;
    return FamilyCase::Odd;
}

const TileRecord* FamilyRecord::find(TileKind kind, int index) const {
    for (const auto& t : tiles)
        if (t.kind == kind && t.index == index) return &t;
    return nullptr;
}

TileRecord conformal_D(const PolygonSpec& P) {
    const CycloContextPtr& ctx = P.context();
    ExactNumber half_side = P.apothem * tan_of(1, P.n, ctx); // sN/2
    ExactPoint G = gen_star(P, Side::Right);
    TileRecord D;
    D.kind = TileKind::D;
    D.index = static_cast<int>(half_index(P.n));
    if (P.n % 2 == 0) {
        // congruent copy of P whose left base vertex is GenStar
        D.polygon = PolygonSpec{P.n, {G.x + half_side, P.center.y}, P.apothem};
    } else {
        // 2n-gon with side sD = sN, base on the same line
        ExactNumber hD = P.apothem * tan_of(1, P.n, ctx) / tan_of(1, 2 * P.n, ctx);
        D.polygon = PolygonSpec{2 * P.n, {G.x + half_side, G.y + hD}, hD};
    }
    D.label = tile_label(TileKind::D, D.index, P.n);
    return D;
}

PolygonSpec gender_dual(const PolygonSpec& P) {
    if (P.n % 2 != 0) fail(Errc::invalid_argument, "gender dual requires an even n");
    if (P.n < 6) fail(Errc::invalid_argument, "gender dual requires n >= 6");
    return PolygonSpec{P.n / 2, P.center, P.apothem};
}

FamilyRecord first_family(const PolygonSpec& P, const FamilyOptions& opts) {
    if (P.n < 3) fail(Errc::invalid_argument, "polygon needs at least 3 vertices");
    const CycloContextPtr& ctx = P.context();
    FamilyRecord fam;
    fam.parent = P;
    fam.fam_case = family_case_of(P.n);

    const unsigned n = P.n;
    const ExactNumber base_y = P.center.y - P.apothem; // base-edge line
    const ExactNumber half_side = P.apothem * tan_of(1, n, ctx);
    const bool even = (n % 2 == 0);

    // --- the S[k] nucleus (S[<n/2>] is D) ---
    for (unsigned k = 1; k <= half_index(n); ++k) {
        bool is_D = (k == half_index(n));
        TileRecord t;
        t.kind = is_D ? TileKind::D : TileKind::S;
        t.index = static_cast<int>(k);
        ExactPoint star = star_point(P, k, Side::Right);
        if (even) {
            ExactNumber hS = P.apothem * scale_of(n, n / 2 - k, ctx);
            t.polygon = PolygonSpec{n, {star.x + half_side, base_y + hS}, hS};
            // twice-odd: odd-index members appear as their n/2-gon duals
            if (fam.fam_case == FamilyCase::TwiceOdd && k % 2 == 1)
                t.polygon = gender_dual(t.polygon);
        } else {
            ExactNumber hS =
                P.apothem * scale_of(2 * n, n - 2 * k, ctx) / scale_of(2 * n, 2, ctx);
            t.polygon = PolygonSpec{2 * n, {star.x + half_side, base_y + hS}, hS};
        }
        t.label = tile_label(t.kind, t.index, n);
        fam.tiles.push_back(std::move(t));
    }

    // --- the DS[k]: the toward-parent family of D ---
    const PolygonSpec PD = fam.tiles.back().polygon; // copy: push_back invalidates refs
    const unsigned nd = PD.n;                  // n (even parent) or 2n (odd parent)
    const ExactNumber hD = PD.apothem;
    const ExactNumber half_side_D = half_side; // sD = sN in all cases
    const bool ds_revised = (nd % 4 == 2);     // D twice-odd => gender-dual revision

    // Telescoping tail: DS[nd/2-1] is the parent itself; for odd parents
    // DS[nd/2-2] (the M of D) is the parent too and DS[nd/2-1] is congruent
    // to D. These are suppressed unless requested.
    unsigned last_emitted = half_index(nd);
    unsigned suppressed_from = even ? nd / 2 - 1 : nd / 2 - 2;

    for (unsigned j = 1; j <= last_emitted; ++j) {
        if (j >= suppressed_from && !opts.include_suppressed_ds) continue;
        TileRecord t;
        bool is_M = even && (j == nd / 2 - 2);
        t.kind = is_M ? TileKind::M : TileKind::DS;
        t.index = static_cast<int>(j);
        ExactNumber hDS = hD * scale_of(nd, nd / 2 - j, ctx);
        ExactNumber star_x = PD.center.x - hD * tan_of(j, nd, ctx);
        t.polygon = PolygonSpec{nd, {star_x - half_side_D, base_y + hDS}, hDS};
        if (ds_revised && j % 2 == 1) t.polygon = gender_dual(t.polygon);
        t.label = tile_label(t.kind, t.index, n);
        fam.tiles.push_back(std::move(t));
    }
    return fam;
}

std::vector<std::pair<TileRecord, TileRecord>> ideal_generations(const PolygonSpec& P,
                                                                 unsigned depth) {
    if (P.n <= 4) fail(Errc::invalid_argument, "ideal generations require n > 4");
    if (depth < 1) fail(Errc::invalid_argument, "depth must be >= 1");
    const CycloContextPtr& ctx = P.context();
    FamilyOptions all;
    all.include_suppressed_ds = true; // n=6 needs the telescoped DS[2]
    FamilyRecord fam = first_family(P, all);
    const TileRecord* m1 = fam.find(TileKind::DS, 1);
    if (!m1) m1 = fam.find(TileKind::M, 1); // n = 6: DS[1] sits in the M slot
    const TileRecord* d1 = fam.find(TileKind::DS, 2);
    if (!d1) d1 = fam.find(TileKind::M, 2);
    if (!m1 || !d1) fail(Errc::internal, "first family lacks DS[1]/DS[2]");

    // Generations contract toward GenStar by the parent's generating scale
    // (the gender dual's scale when the parent is twice-odd).
    ExactNumber ratio = (family_case_of(P.n) == FamilyCase::TwiceOdd)
                            ? gen_scale(P.n / 2, ctx)
                            : gen_scale(P.n, ctx);
    ExactPoint G = gen_star(P, Side::Right);

    std::vector<std::pair<TileRecord, TileRecord>> out;
    ExactNumber factor = ExactNumber::one(ctx);
    for (unsigned k = 1; k <= depth; ++k) {
        auto shrink = [&](const TileRecord& t, TileKind kind) {
            TileRecord g;
            g.kind = kind;
            g.index = static_cast<int>(k);
            g.polygon = PolygonSpec{t.polygon.n, G + (t.polygon.center - G) * factor,
                                    t.polygon.apothem * factor};
            g.label = tile_label(kind, g.index, P.n);
            return g;
        };
        out.emplace_back(shrink(*m1, TileKind::MGen), shrink(*d1, TileKind::DGen));
        factor = factor * ratio;
    }
    return out;
}

ExactPoint outer_dual_center(const PolygonSpec& P, unsigned k) {
    require_star_index(P.n, k);
    const CycloContextPtr& ctx = P.context();
    // rotate (star[k]-c) * r/h counterclockwise by pi/n about the center
    ExactNumber r = P.radius();
    ExactNumber tk = tan_of(k, P.n, ctx);
    ExactNumber vx = r * tk; // (h*t_k, -h) scaled by r/h
    ExactNumber vy = -r;
    ExactNumber c = trig_exact(TrigKind::Cos, 1, P.n, ctx);
    ExactNumber s = trig_exact(TrigKind::Sin, 1, P.n, ctx);
    return {P.center.x + vx * c - vy * s, P.center.y + vx * s + vy * c};
}

std::string family_to_json(const FamilyRecord& fam) {
    using nlohmann::json;
    auto num20 = [](const ExactNumber& a) {
        return bigfloat_to_string(a.embed(25).re, 20);
    };
    json tiles = json::array();
    for (const auto& t : fam.tiles) {
        json jt{{"kind", tile_kind_name(t.kind)},
                {"k", t.index},
                {"gender", t.polygon.n == fam.parent.n ? "N-gon"
                           : t.polygon.n == 2 * fam.parent.n ? "2N-gon"
                                                             : "N/2-gon"},
                {"label", t.label},
                {"center", {t.polygon.center.x.serialize(), t.polygon.center.y.serialize()}},
                {"apothem", t.polygon.apothem.serialize()},
                {"n", t.polygon.n},
                {"numeric",
                 {{"cx", num20(t.polygon.center.x)},
                  {"cy", num20(t.polygon.center.y)},
                  {"h", num20(t.polygon.apothem)}}}};
        if (!t.explicit_vertices.empty()) {
            json verts = json::array();
            for (const auto& v : t.explicit_vertices)
                verts.push_back({v.x.serialize(), v.y.serialize()});
            jt["vertices"] = std::move(verts);
        }
        tiles.push_back(std::move(jt));
    }
    json j{{"N", fam.parent.n},
           {"case", family_case_name(fam.fam_case)},
           {"parent",
            {{"center", {fam.parent.center.x.serialize(), fam.parent.center.y.serialize()}},
             {"apothem", fam.parent.apothem.serialize()},
             {"numeric",
              {{"cx", num20(fam.parent.center.x)},
               {"cy", num20(fam.parent.center.y)},
               {"h", num20(fam.parent.apothem)}}}}},
           {"tiles", std::move(tiles)}};
    return j.dump(2);
}

} // namespace polyweb
