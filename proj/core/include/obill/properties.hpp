#pragma once

// Randomized checks of the structural properties of outer billiards, shared
// by the verify command and the test suites.

#include "obill/structure.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace obill {

struct PropertyCheck {
    std::string name;
    std::size_t samples = 0;
    std::vector<std::string> failures;
    [[nodiscard]] bool passed() const { return samples > 0 && failures.empty(); }
};

struct SampleOptions {
    std::uint64_t seed = 1;
    std::size_t samples = 40;
    std::uint64_t budget = 20000;
};

// Random exterior point with rational coordinates in [-radius, radius]^2.
Point random_exterior_point(const BilliardTable& t, std::mt19937_64& rng, int radius = 4);

// Orbit type is T-invariant: Periodic(p) stays Periodic(p), Finite(k) becomes Finite(k-1).
PropertyCheck check_type_invariance(const BilliardTable& t, const SampleOptions& opt);
// Random interior points of a component share its period and itinerary.
PropertyCheck check_periodic_neighborhood(const BilliardTable& t, const SampleOptions& opt);
// Component periods are even; a center of different period has odd period p/2.
PropertyCheck check_even_period(const BilliardTable& t, const SampleOptions& opt);
// T^2 is one translation by twice a side or diagonal on points sharing two steps.
PropertyCheck check_two_step_translation(const BilliardTable& t, const SampleOptions& opt);
// Every component side is parallel to a table side.
PropertyCheck check_parallel_sides(const BilliardTable& t, const SampleOptions& opt);
// Components are proper polygons (lattice tables).
PropertyCheck check_nondegenerate(const BilliardTable& t, const SampleOptions& opt);
// step_back(step(x)) = x and step(step_back(x)) = x.
PropertyCheck check_step_inverse(const BilliardTable& t, const SampleOptions& opt);
// orbit(Rx) has the orbit of x's outcome and a shifted itinerary (regular tables).
PropertyCheck check_rotation_equivariance(const BilliardTable& t, const SampleOptions& opt);

// Properties 1, 3, 7, 9, 11 for every table, 13 for lattice tables, plus the
// inverse and symmetry checks.
std::vector<PropertyCheck> invariant_suite(const BilliardTable& t, const SampleOptions& opt);

// Square table: every cell of Manhattan ring d = 1..d_max has period 4d on
// `per_cell` random interior points, and lattice points of those rings are finite.
PropertyCheck check_square_rings(int d_max, std::size_t per_cell, std::uint64_t seed);

}  // namespace obill
