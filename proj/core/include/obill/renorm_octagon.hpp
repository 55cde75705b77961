#pragma once

// Renormalization of the folded octagon map: three rotation pieces u, v, w,
// the contraction gamma, substitution words, letter counts and the aperiodic
// witness chain.

#include "obill/structure.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace obill::octagon {

struct ValidationError : std::runtime_error {
    ValidationError(std::string check_, const std::string& what)
        : std::runtime_error(check_ + ": " + what), check(std::move(check_)) {}
    std::string check;
};

// 'u', 'v' or 'w'.
using Letter = char;
using Word = std::string;

struct SectorPiece {
    Letter letter = 'u';
    Region region;
    std::vector<Point> outline;
    Isometry motion;
    Point center;  // fixed point of the motion
    int degrees = 0;
};

struct SectorSystem {
    BilliardTable table;
    Region domain;                   // the folded dart, apex first
    std::array<SectorPiece, 3> pieces;  // u, v, w
    PiecewiseIsometry map;           // labels are letters
    Point apex;
    QuadExt gamma_ratio;
    Similarity gamma;                // homothety about the apex
    std::array<Word, 3> words;       // gamma o x = word(gamma x), per letter
};

// Throws ValidationError naming the failed check.
SectorSystem build_sector_system();

// Letter and image of x; throws std::domain_error on a piece boundary.
std::pair<Letter, Point> folded_apply(const SectorSystem& sys, const Point& x);
// Folded orbit of x until it returns: the letter word (empty if the budget runs out).
Word folded_word(const SectorSystem& sys, const Point& x, std::uint64_t budget = 10'000'000);

// Maximal n with gamma^-n x still in the domain; nullopt for the apex.
std::optional<unsigned> rank(const SectorSystem& sys, const Point& x);

const Word& substitution(const SectorSystem& sys, Letter l);
Word substitute(const SectorSystem& sys, const Word& w);

struct CountVector {
    mpz_class a, b, c;  // numbers of u, v, w letters
    [[nodiscard]] mpz_class total() const { return a + b + c; }
    friend bool operator==(const CountVector&, const CountVector&) = default;
};
CountVector count_letters(const Word& w);

using CountMatrix = std::array<std::array<long, 3>, 3>;
// Column j holds the letter counts of the word for letter j.
CountMatrix count_matrix(const SectorSystem& sys);
CountVector count_step(const CountMatrix& m, const CountVector& cv);
// Integer eigenvalues in decreasing order; throws if not three distinct integers.
std::array<long, 3> eigenvalues(const CountMatrix& m);

// cv_k = sum over eigenvalues e of e^k * P_e cv_0.
struct ClosedForm {
    std::array<long, 3> eigen;
    // proj[e][row][col]
    std::array<std::array<std::array<Rational, 3>, 3>, 3> proj;
    [[nodiscard]] CountVector at(const CountVector& cv0, unsigned k) const;
    // Coefficients of e^k for component `row` from basis vector `col`.
    [[nodiscard]] std::array<Rational, 3> coefficients(int row, int col) const;
    // Coefficients of e^k in the total a+b+c from basis vector `col`.
    [[nodiscard]] std::array<Rational, 3> total_coefficients(int col) const;
};
ClosedForm closed_form(const CountMatrix& m);
CountVector closed_form(const CountMatrix& m, const CountVector& cv0, unsigned k);

struct OrbitClass {
    std::string name;
    Point seed;
    Word word;  // rank-0 folded word
    CountVector counts;
};
// Points V, U, W1 and a point of each of their neighborhoods.
std::vector<OrbitClass> rank0_orbits(const SectorSystem& sys);

struct ConjugacyReport {
    std::size_t samples = 0;
    std::size_t defects = 0;
    std::vector<std::string> failures;
    [[nodiscard]] bool matched() const { return samples > 0 && defects == 0; }
};
// gamma(l(x)) equals the word of l applied to gamma(x), on samples_per_piece
// random exact points of each piece; the orbit of gamma(x) avoids gamma(domain)
// until the word completes.
ConjugacyReport verify_conjugacy(const SectorSystem& sys, std::size_t samples_per_piece, std::uint64_t seed);
// Piece-level check: the return partition of gamma(domain) is gamma of the pieces.
bool verify_partition_conjugacy(const SectorSystem& sys);

struct WitnessLink {
    ConvexPolygon region;
    std::uint64_t folded_period = 0;
    std::uint64_t period = 0;  // of the unfolded component
};
struct Witness {
    Similarity contraction;           // maps the domain into itself around the limit point
    Point limit;
    std::vector<WitnessLink> chain;   // 3 * depth components
    std::vector<ConvexPolygon> boxes; // nested triangles spanned by consecutive triples
};
Witness aperiodic_witness(const SectorSystem& sys, int depth);

struct Discrepancy {
    std::string artifact;
    std::string reference;
    std::string derived;
    bool matches = false;
};
std::vector<Discrepancy> discrepancy_report(const SectorSystem& sys);

// Rows of the rank-0 table: name, word, counts, and the period at rank n as
// coefficients of (9^n, (-3)^n, 1).
struct TableRow {
    std::string name;
    Word word;
    CountVector counts;
    std::array<Rational, 3> period_coefficients;
    std::uint64_t simulated_rank0 = 0;
    std::uint64_t simulated_rank1 = 0;
};
std::vector<TableRow> rank0_table(const SectorSystem& sys);

std::string to_string(const CountVector& cv);

}  // namespace obill::octagon
