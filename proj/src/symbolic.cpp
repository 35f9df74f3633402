#include "polyweb/symbolic.hpp"

#include "polyweb/error.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace polyweb {

namespace {

BigFloat embed_real(const ExactNumber& a, unsigned digits) {
    return a.embed(digits).re;
}

IndexSequence make_sequence(MapKind map, unsigned n, unsigned digits, const ExactPoint& seed) {
    IndexSequence seq;
    seq.map = map;
    seq.n = n;
    seq.digits = digits;
    seq.seed = seed;
    return seq;
}

// Numeric starting point displaced by offset along direction/|direction|.
NumericPoint surrogate_start(const ExactPoint& seed, const ExactPoint& direction, unsigned digits,
                             double offset) {
    NumericPoint p = numeric_shadow(seed, digits);
    const BigFloat dx = embed_real(direction.x, digits);
    const BigFloat dy = embed_real(direction.y, digits);
    const BigFloat norm = sqrt(dx * dx + dy * dy);
    if (norm == 0) fail(Errc::invalid_argument, "surrogate direction must be nonzero");
    const BigFloat scale = BigFloat(offset) / norm;
    return {p.x + scale * dx, p.y + scale * dy};
}

IndexSequence record_tau(const OuterBilliardsSystem& S, const ExactPoint& seed,
                         const NumericPoint& start, unsigned long steps, unsigned digits) {
    IndexSequence seq = make_sequence(MapKind::Tau, S.polygon.n, digits, seed);
    const TauShadow sh = make_tau_shadow(S, digits);
    const BigFloat eps = singular_tolerance(digits);
    NumericPoint p = start;
    seq.labels.reserve(steps);
    for (unsigned long i = 0; i < steps; ++i) {
        const TauStepResult r = tau_step(sh, p, eps);
        if (r.status != StepStatus::ok) {
            seq.aborted_at = i;
            break;
        }
        seq.labels.push_back(r.label);
        p = r.point;
    }
    return seq;
}

IndexSequence record_df(const DfSystem& S, const ExactPoint& seed, const NumericPoint& start,
                        unsigned long steps, unsigned digits) {
    IndexSequence seq = make_sequence(MapKind::Df, S.n, digits, seed);
    const BigFloat a = embed_real(S.a, digits);
    const BigFloat eps = singular_tolerance(digits);
    NumericPoint p = start;
    seq.labels.reserve(steps);
    for (unsigned long i = 0; i < steps; ++i) {
        const DfStepResult r = df_step(p, a, eps);
        if (r.status != StepStatus::ok) {
            seq.aborted_at = i;
            break;
        }
        seq.labels.push_back(r.atom);
        p = r.point;
    }
    return seq;
}

IndexSequence record_dkhoy(const DualCenterSystem& S, const ExactPoint& seed,
                           const NumericPoint& start, unsigned long steps, unsigned digits) {
    IndexSequence seq = make_sequence(MapKind::Dkhoy, S.n, digits, seed);
    const BigComplex rot = S.rotation.embed(digits);
    const BigFloat eps = singular_tolerance(digits);
    BigComplex z{start.x, start.y};
    seq.labels.reserve(steps);
    for (unsigned long i = 0; i < steps; ++i) {
        const DkhoyStepResult r = dkhoy_step(z, rot, eps);
        if (r.status != StepStatus::ok) {
            seq.aborted_at = i;
            break;
        }
        seq.labels.push_back(r.sign);
        z = r.z;
    }
    return seq;
}

} // namespace

BigFloat singular_tolerance(unsigned digits) {
    const long exponent = 1 - static_cast<long>(digits / 2);
    return pow(BigFloat(10), exponent);
}

IndexSequence record_itinerary(const OuterBilliardsSystem& S, const ExactPoint& seed,
                               unsigned long steps, unsigned digits) {
    PrecisionGuard guard(digits);
    return record_tau(S, seed, numeric_shadow(seed, digits), steps, digits);
}

IndexSequence record_itinerary(const DfSystem& S, const ExactPoint& seed, unsigned long steps,
                               unsigned digits) {
    PrecisionGuard guard(digits);
    return record_df(S, seed, numeric_shadow(seed, digits), steps, digits);
}

IndexSequence record_itinerary(const DualCenterSystem& S, const ExactPoint& seed,
                               unsigned long steps, unsigned digits) {
    PrecisionGuard guard(digits);
    return record_dkhoy(S, seed, numeric_shadow(seed, digits), steps, digits);
}

IndexSequence record_surrogate_itinerary(const OuterBilliardsSystem& S, const ExactPoint& seed,
                                         const ExactPoint& direction, unsigned long steps,
                                         unsigned digits, double offset) {
    PrecisionGuard guard(digits);
    return record_tau(S, seed, surrogate_start(seed, direction, digits, offset), steps, digits);
}

IndexSequence record_surrogate_itinerary(const DfSystem& S, const ExactPoint& seed,
                                         const ExactPoint& direction, unsigned long steps,
                                         unsigned digits, double offset) {
    PrecisionGuard guard(digits);
    return record_df(S, seed, surrogate_start(seed, direction, digits, offset), steps, digits);
}

IndexSequence record_surrogate_itinerary(const DualCenterSystem& S, const ExactPoint& seed,
                                         const ExactPoint& direction, unsigned long steps,
                                         unsigned digits, double offset) {
    PrecisionGuard guard(digits);
    return record_dkhoy(S, seed, surrogate_start(seed, direction, digits, offset), steps, digits);
}

std::vector<ExactPoint> replay_exact(const OuterBilliardsSystem& S, const ExactPoint& seed,
                                     const std::vector<int>& labels) {
    std::vector<ExactPoint> orbit;
    orbit.reserve(labels.size() + 1);
    orbit.push_back(seed);
    for (int label : labels) orbit.push_back(tau_step_with_label(S, orbit.back(), label));
    return orbit;
}

std::vector<ExactPoint> replay_exact(const DfSystem& S, const ExactPoint& seed,
                                     const std::vector<int>& labels) {
    std::vector<ExactPoint> orbit;
    orbit.reserve(labels.size() + 1);
    orbit.push_back(seed);
    for (int atom : labels) orbit.push_back(df_step_with_label(S, orbit.back(), atom));
    return orbit;
}

std::vector<ExactPoint> replay_exact(const DualCenterSystem& S, const ExactPoint& seed,
                                     const std::vector<int>& labels) {
    std::vector<ExactPoint> orbit;
    orbit.reserve(labels.size() + 1);
    orbit.push_back(seed);
    ExactNumber z = complex_exact(seed);
    for (int sgn : labels) {
        z = dkhoy_step_with_label(S, z, sgn);
        orbit.push_back(complex_parts(z));
    }
    return orbit;
}

std::vector<ExactPoint> project_stride(const std::vector<ExactPoint>& orbit, unsigned stride,
                                       unsigned offset) {
    if (stride == 0) fail(Errc::invalid_argument, "stride must be positive");
    std::vector<ExactPoint> out;
    for (std::size_t i = offset; i < orbit.size(); i += stride) out.push_back(orbit[i]);
    return out;
}

std::optional<PeriodResult> detect_period(const OuterBilliardsSystem& S, const ExactPoint& seed,
                                          unsigned long max_n, bool inverse) {
    // The orbit is advanced with a BigFloat shadow whose pivot decisions are
    // certified by a margin far above the worst-case accumulated drift; the
    // exact coordinates follow the certified labels (reflection per step), so
    // return detection compares exact field elements. Whenever the shadow
    // cannot certify a pivot, the step escalates to full exact arithmetic and
    // the shadow is re-seated from the exact point.
    constexpr unsigned kShadowDigits = 30;
    constexpr unsigned long kReseatEvery = 1ul << 20;
    PrecisionGuard guard(kShadowDigits);
    const TauShadow sh = make_tau_shadow(S, kShadowDigits);
    const BigFloat certify = pow(BigFloat(10), -13);
    const BigFloat close = pow(BigFloat(10), -10);

    ExactPoint cur = seed;
    NumericPoint sp = numeric_shadow(seed, kShadowDigits);
    const NumericPoint s0 = sp;

    for (unsigned long n = 1; n <= max_n; ++n) {
        const TauStepResult r = tau_step(sh, sp, certify, inverse);
        if (r.status == StepStatus::ok) {
            cur = tau_step_with_label(S, cur, r.label);
            sp = r.point;
            if (n % kReseatEvery == 0) sp = numeric_shadow(cur, kShadowDigits);
        } else {
            // Throws when the exact point is genuinely singular or inside.
            auto step = tau_step(S, cur, inverse);
            cur = std::move(step.first);
            sp = numeric_shadow(cur, kShadowDigits);
        }
        if (abs(sp.x - s0.x) < close && abs(sp.y - s0.y) < close && cur == seed)
            return PeriodResult{n, n};
    }
    return std::nullopt;
}

std::optional<PeriodResult> detect_period(const DfSystem& S, const ExactPoint& seed,
                                          unsigned long max_n) {
    ExactPoint cur = seed;
    for (unsigned long n = 1; n <= max_n; ++n) {
        cur = df_step(S, cur).first;
        if (cur == seed) return PeriodResult{n, n};
    }
    return std::nullopt;
}

std::optional<PeriodResult> detect_period(const DualCenterSystem& S, const ExactPoint& seed,
                                          unsigned long max_n) {
    const ExactNumber start = complex_exact(seed);
    ExactNumber cur = start;
    for (unsigned long n = 1; n <= max_n; ++n) {
        cur = dkhoy_step(S, cur).first;
        if (cur == start) return PeriodResult{n, n};
    }
    return std::nullopt;
}

AffineDecomposition decompose_affine(const OuterBilliardsSystem& S,
                                     const std::vector<int>& labels) {
    const CycloContextPtr& ctx = S.polygon.context();
    AffineDecomposition d;
    d.translation = {ExactNumber::zero(ctx), ExactNumber::zero(ctx)};
    for (int label : labels) {
        if (label < 0 || static_cast<unsigned>(label) >= S.size())
            fail(Errc::invalid_argument, "tau step label must be a vertex index in 0..N-1");
        const ExactPoint& c = S.vertices[static_cast<unsigned>(label)];
        d.translation = {c.x + c.x - d.translation.x, c.y + c.y - d.translation.y};
        d.parity = -d.parity;
    }
    return d;
}

std::string itinerary_to_text(const IndexSequence& seq) {
    std::ostringstream os;
    os << "polyweb-itinerary v1\n";
    os << "map " << map_kind_name(seq.map) << "\n";
    os << "n " << seq.n << "\n";
    os << "digits " << seq.digits << "\n";
    if (seq.seed)
        os << "seed " << seq.seed->x.serialize() << " " << seq.seed->y.serialize() << "\n";
    if (seq.aborted_at) os << "aborted_at " << *seq.aborted_at << "\n";
    os << "labels " << seq.labels.size() << "\n";
    for (int label : seq.labels) os << label << "\n";
    return os.str();
}

IndexSequence itinerary_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "polyweb-itinerary v1")
        fail(Errc::parse_error, "itinerary must start with 'polyweb-itinerary v1'");

    IndexSequence seq;
    bool have_labels = false;
    unsigned long count = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "map") {
            std::string name;
            if (!(ls >> name)) fail(Errc::parse_error, "itinerary: missing map name");
            seq.map = map_kind_from_name(name);
        } else if (key == "n") {
            if (!(ls >> seq.n)) fail(Errc::parse_error, "itinerary: bad n");
        } else if (key == "digits") {
            if (!(ls >> seq.digits)) fail(Errc::parse_error, "itinerary: bad digits");
        } else if (key == "seed") {
            std::string sx, sy;
            if (!(ls >> sx >> sy)) fail(Errc::parse_error, "itinerary: seed needs two values");
            seq.seed = ExactPoint{ExactNumber::parse(sx), ExactNumber::parse(sy)};
        } else if (key == "aborted_at") {
            unsigned long at = 0;
            if (!(ls >> at)) fail(Errc::parse_error, "itinerary: bad aborted_at");
            seq.aborted_at = at;
        } else if (key == "labels") {
            if (!(ls >> count)) fail(Errc::parse_error, "itinerary: bad label count");
            have_labels = true;
            break;
        } else {
            fail(Errc::parse_error, "itinerary: unknown key '" + key + "'");
        }
    }
    if (!have_labels) fail(Errc::parse_error, "itinerary: missing labels section");
    seq.labels.reserve(count);
    for (unsigned long i = 0; i < count; ++i) {
        long value = 0;
        if (!(is >> value)) fail(Errc::parse_error, "itinerary: truncated label list");
        seq.labels.push_back(static_cast<int>(value));
    }
    return seq;
}

void write_itinerary(const std::string& path, const IndexSequence& seq) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
    out << itinerary_to_text(seq);
    if (!out) fail(Errc::io_error, "failed writing '" + path + "'");
}

IndexSequence read_itinerary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return itinerary_from_text(buf.str());
}

std::string period_census_csv(const std::vector<unsigned>& ns, unsigned long max_n) {
    std::ostringstream os;
    os << "N,tile,k,period,steps_used\n";
    for (unsigned n : ns) {
        const PolygonSpec P = regular_ngon(n);
        const FamilyRecord fam = first_family(P);
        const OuterBilliardsSystem S = OuterBilliardsSystem::create(P);
        for (const TileRecord& tile : fam.tiles) {
            unsigned long period = 0;
            unsigned long steps = 0;
            try {
                if (auto r = detect_period(S, tile.polygon.center, max_n)) {
                    period = r->period;
                    steps = r->steps_used;
                } else {
                    steps = max_n;
                }
            } catch (const Error& e) {
                if (e.code() != Errc::singular_point && e.code() != Errc::point_inside_polygon)
                    throw;
            }
            os << n << ',' << tile_kind_name(tile.kind) << ',' << tile.index << ',' << period
               << ',' << steps << "\n";
        }
    }
    return os.str();
}

} // namespace polyweb
