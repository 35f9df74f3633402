#pragma once

// Symbolic dynamics over the piecewise isometries: itinerary recording at a
// chosen working precision, exact label-driven replay, stride projections,
// exact period detection, affine decomposition of composed tau steps, and a
// plain-text itinerary file format that round-trips bit-exactly.
//
// Recording is numeric: orbits are advanced in BigFloat arithmetic at
// `digits` significant digits and a step aborts (truncating the itinerary and
// setting aborted_at) whenever the orbit comes within the singularity
// tolerance eps = 10^(1 - digits/2) of a region boundary. Replay is exact:
// the recorded labels drive ExactPoint arithmetic with no membership tests,
// so any recorded itinerary can be re-run verbatim over Q(zeta_M).

#include "polyweb/maps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyweb {

struct IndexSequence {
    MapKind map = MapKind::Tau;
    unsigned n = 0;          // polygon order of the generating system
    unsigned digits = kDefaultDigits;
    std::optional<ExactPoint> seed; // exact seed when known (F seeds: (Re, Im))
    std::vector<int> labels;
    std::optional<unsigned long> aborted_at; // 0-based index of the singular step

    bool aborted() const { return aborted_at.has_value(); }
};

// Singularity tolerance used by the recorders: 10^(1 - digits/2).
BigFloat singular_tolerance(unsigned digits);

// Record `steps` forward labels numerically at `digits` significant digits.
IndexSequence record_itinerary(const OuterBilliardsSystem& S, const ExactPoint& seed,
                               unsigned long steps, unsigned digits = kDefaultDigits);
IndexSequence record_itinerary(const DfSystem& S, const ExactPoint& seed, unsigned long steps,
                               unsigned digits = kDefaultDigits);
IndexSequence record_itinerary(const DualCenterSystem& S, const ExactPoint& seed,
                               unsigned long steps, unsigned digits = kDefaultDigits);

// Surrogate recording for seeds that sit on singular lines: the numeric orbit
// starts from seed + offset * direction/|direction| while the stored exact
// seed remains the original point.
IndexSequence record_surrogate_itinerary(const OuterBilliardsSystem& S, const ExactPoint& seed,
                                         const ExactPoint& direction, unsigned long steps,
                                         unsigned digits = kDefaultDigits, double offset = 1e-8);
IndexSequence record_surrogate_itinerary(const DfSystem& S, const ExactPoint& seed,
                                         const ExactPoint& direction, unsigned long steps,
                                         unsigned digits = kDefaultDigits, double offset = 1e-8);
IndexSequence record_surrogate_itinerary(const DualCenterSystem& S, const ExactPoint& seed,
                                         const ExactPoint& direction, unsigned long steps,
                                         unsigned digits = kDefaultDigits, double offset = 1e-8);

// Exact replay of a label sequence. The returned orbit includes the seed, so
// its length is labels.size() + 1. F orbits are returned as (Re, Im) points.
std::vector<ExactPoint> replay_exact(const OuterBilliardsSystem& S, const ExactPoint& seed,
                                     const std::vector<int>& labels);
std::vector<ExactPoint> replay_exact(const DfSystem& S, const ExactPoint& seed,
                                     const std::vector<int>& labels);
std::vector<ExactPoint> replay_exact(const DualCenterSystem& S, const ExactPoint& seed,
                                     const std::vector<int>& labels);

// Every stride-th point of an orbit, starting at `offset`.
std::vector<ExactPoint> project_stride(const std::vector<ExactPoint>& orbit, unsigned stride,
                                       unsigned offset = 0);

struct PeriodResult {
    unsigned long period = 0;
    unsigned long steps_used = 0;
};

// Exact first-return time of the forward orbit of `seed`, up to max_n steps.
// Equality with the seed is exact; a fast numeric shadow with a certified
// error margin drives the search and escalates to exact arithmetic only when
// a pivot decision or a tentative return is too close to call. Returns
// nullopt when no return occurs within max_n steps; throws on singular seeds.
std::optional<PeriodResult> detect_period(const OuterBilliardsSystem& S, const ExactPoint& seed,
                                          unsigned long max_n = 10000000,
                                          bool inverse = false);
std::optional<PeriodResult> detect_period(const DfSystem& S, const ExactPoint& seed,
                                          unsigned long max_n = 10000000);
std::optional<PeriodResult> detect_period(const DualCenterSystem& S, const ExactPoint& seed,
                                          unsigned long max_n = 10000000);

// A composition of tau steps is the affine map p -> parity * p + translation
// with parity = (-1)^k; the translation is 2 * sum_i (-1)^(k-i) c_i over the
// pivot vertices c_1 .. c_k.
struct AffineDecomposition {
    int parity = 1;
    ExactPoint translation;

    ExactPoint apply(const ExactPoint& p) const {
        return parity > 0 ? p + translation : -p + translation;
    }
};
AffineDecomposition decompose_affine(const OuterBilliardsSystem& S,
                                     const std::vector<int>& labels);

// Plain-text itinerary serialization (round-trips bit-exactly).
std::string itinerary_to_text(const IndexSequence& seq);
IndexSequence itinerary_from_text(const std::string& text);
void write_itinerary(const std::string& path, const IndexSequence& seq);
IndexSequence read_itinerary(const std::string& path);

// Period census over First Family tile centers, one CSV row per tile:
//   N,tile,k,period,steps_used
// A period of 0 with steps_used = max_n marks "no return found"; singular
// centers are reported with period 0 and steps_used 0.
std::string period_census_csv(const std::vector<unsigned>& ns,
                              unsigned long max_n = 10000000);

} // namespace polyweb
