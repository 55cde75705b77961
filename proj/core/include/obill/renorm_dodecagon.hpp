#pragma once

// The folded dodecagon map on the rocket domain: five rotation zones, their
// invariant figures, scaled sub-rockets, first-return tables, the scaling
// conjugacies and the period-growth chain.

#include "obill/structure.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace obill::dodecagon {

struct ValidationError : std::runtime_error {
    ValidationError(std::string check_, const std::string& what)
        : std::runtime_error(check_ + ": " + what), check(std::move(check_)) {}
    std::string check;
};

struct Zone {
    int index = 0;
    Region region;
    std::vector<Point> outline;
    Isometry motion;
    Point center;
    int degrees = 0;
    [[nodiscard]] bool convex() const { return region.size() == 1; }
};

enum class Target { Small, SmallSmall, Middle, SmallMiddle, Airplane, SmallAirplane, Zone0, MiddleZone0 };
inline constexpr std::array<Target, 8> kAllTargets{Target::Small,    Target::SmallSmall,    Target::Middle,
                                                   Target::SmallMiddle, Target::Airplane, Target::SmallAirplane,
                                                   Target::Zone0,    Target::MiddleZone0};
std::string to_string(Target t);
Target parse_target(std::string_view name);

struct RocketSystem {
    BilliardTable table;
    Point apex;
    Region rocket;
    PiecewiseIsometry map;  // labels are zone indices
    std::array<Zone, 5> zones;
    QuadExt lambda;          // small rocket ratio
    QuadExt mu;              // middle rocket ratio
    Similarity gamma;        // homothety about the apex with ratio lambda
    Region small, small_small, middle, small_middle;
    Region airplane, small_airplane, zone0, middle_zone0;
    Region x_rocket;         // rigid image of small_middle inside middle
    unsigned x_steps = 0;    // folded steps carrying small_middle onto x_rocket
    Similarity gamma_x;      // middle -> x_rocket
    std::array<ConvexPolygon, 3> x_neighbors;  // largest periodic components adjacent to x_rocket

    [[nodiscard]] const Region& target(Target t) const;
};

// Throws ValidationError naming the failed check.
RocketSystem build_rocket_system();

struct InvariantFigure {
    int zone = 0;
    ConvexPolygon polygon;
    int order = 0;  // of the zone rotation
    bool equilateral = false;
    bool regular = false;
    std::vector<int> angles;  // interior angles in degrees, in vertex order
};
// Figures of zones 0..3; throws ValidationError if a shape check fails.
std::array<InvariantFigure, 4> zone_invariant_figures(const RocketSystem& sys);

struct TableEntry {
    std::size_t sides = 0;
    std::uint64_t return_time = 0;
    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};
// Pieces of the first-return map of the target, ordered by return time.
// Throws std::runtime_error if pieces remain unresolved.
ReturnPartition rocket_partition(const RocketSystem& sys, Target t);
std::vector<TableEntry> rocket_return_table(const RocketSystem& sys, Target t);
// Reference values for each target.
const std::vector<TableEntry>& expected_table(Target t);

struct ConjugacyReport {
    std::size_t samples = 0;
    std::size_t defects = 0;
    std::size_t excluded = 0;  // samples where the middle return map is undefined
    bool partition_match = false;
    bool times_match = false;  // return times of the image partition equal the small-middle table
    std::vector<std::string> failures;
    [[nodiscard]] bool matched() const { return samples > 0 && defects == 0 && partition_match && times_match; }
};
// gamma o T_middle = T_small_middle o gamma on random exact samples of the middle rocket.
ConjugacyReport verify_scaling_conjugacy(const RocketSystem& sys, std::size_t samples, std::uint64_t seed,
                                         int workers = 1);
// gamma_x o T_middle = T_x o gamma_x likewise.
ConjugacyReport verify_hypothesis1(const RocketSystem& sys, std::size_t samples, std::uint64_t seed, int workers = 1);

// First return of x to `base` under the folded map; throws std::domain_error
// if the orbit meets a boundary or does not return within `budget`.
std::pair<Point, std::uint64_t> first_return(const RocketSystem& sys, const Region& base, const Point& x,
                                             std::uint64_t budget = 1'000'000);

struct GrowthLink {
    ConvexPolygon region;
    std::uint64_t folded_period = 0;
    std::uint64_t middle_period = 0;  // visits to the middle rocket per folded period
    std::uint64_t period = 0;         // of the unfolded component
};
struct GrowthWitness {
    std::vector<GrowthLink> chain;       // C_0 .. C_nmax
    std::vector<ConvexPolygon> boxes;    // gamma_x^k of the middle rocket's hull
    Point limit;                         // fixed point of gamma_x
};
// Throws ValidationError if a link is not a periodic component, the boxes are
// not nested, or per(C_{n+3}) >= 2 per(C_n) fails for either period count.
GrowthWitness period_growth_witness(const RocketSystem& sys, int n_max);

}  // namespace obill::dodecagon
