#include "obill/renorm_octagon.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace obill::octagon {

namespace {

constexpr std::array<Letter, 3> kLetters{'u', 'v', 'w'};
constexpr std::array<int, 3> kDegrees{135, 90, 45};

int letter_index(Letter l) {
    for (int i = 0; i < 3; ++i)
        if (kLetters[static_cast<std::size_t>(i)] == l) return i;
    throw std::invalid_argument(std::string("unknown letter '") + l + "'");
}

// Return pieces of gamma(domain) whose motion is gamma o m o gamma^-1, per letter.
// Empty optional if the partition is not conjugate.
std::optional<std::array<Word, 3>> conjugate_words(const SectorSystem& sys, const Similarity& g) {
    const Region small = apply(g, sys.domain);
    if (!region_covers(sys.domain, small)) return std::nullopt;
    const ReturnPartition rp = return_partition(sys.map, small, 10000);
    if (!rp.unresolved.empty() || !rp.lost_area.is_zero()) return std::nullopt;
    const Similarity ginv = g.inverse();
    std::array<Word, 3> words;
    std::vector<bool> used(rp.pieces.size(), false);
    for (std::size_t k = 0; k < 3; ++k) {
        const SectorPiece& piece = sys.pieces[k];
        const Similarity target = g.compose(piece.motion).compose(ginv);
        Region got;
        std::optional<Word> word;
        for (std::size_t i = 0; i < rp.pieces.size(); ++i) {
            const ReturnPiece& p = rp.pieces[i];
            if (!(p.motion == target)) continue;
            Word w;
            for (int l : p.word) w.push_back(static_cast<char>(l));
            if (word && *word != w) return std::nullopt;
            word = w;
            used[i] = true;
            got.insert(got.end(), p.parts.begin(), p.parts.end());
        }
        if (!word || !same_set(got, apply(g, piece.region))) return std::nullopt;
        words[k] = *word;
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) return std::nullopt;
    return words;
}

std::string join(const std::array<long, 3>& v) {
    std::ostringstream os;
    os << "{" << v[0] << "," << v[1] << "," << v[2] << "}";
    return os.str();
}

std::string matrix_str(const CountMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < 3; ++r) {
        if (r) os << ",";
        os << "[" << m[r][0] << "," << m[r][1] << "," << m[r][2] << "]";
    }
    os << "]";
    return os.str();
}

std::string coeff_str(const std::array<Rational, 3>& c) {
    return "(" + c[0].str() + "," + c[1].str() + "," + c[2].str() + ")";
}

mpq_class power(long base, unsigned k) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(base).get_mpz_t(), k);
    return mpq_class(r);
}

// Region's folded period via an interior sample, and a check that the
// composed motion over one period maps the region onto itself.
std::uint64_t stable_period(const SectorSystem& sys, const ConvexPolygon& region) {
    const Point x = region.centroid();
    const Point y = QuadExt(Rational(7, 8)) * x + QuadExt(Rational(1, 8)) * region.vertices()[0];
    const Word w = folded_word(sys, y);
    if (w.empty()) throw ValidationError("witness", "component around " + y.str() + " is not periodic");
    ConvexPolygon img = region;
    for (Letter l : w) img = sys.pieces[static_cast<std::size_t>(letter_index(l))].motion.apply(img);
    if (!(img.canonical() == region.canonical()))
        throw ValidationError("witness", "region around " + y.str() + " is not invariant under its period");
    return w.size();
}

}  // namespace

SectorSystem build_sector_system() {
    SectorSystem sys;
    sys.table = make_table(TableKind::Octagon);
    sys.apex = sys.table.vertex(0);
    const InvariantDomain dom = first_invariant_domain(sys.table);
    sys.domain = dom.region;

    std::map<int, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < dom.map.size(); ++i) by_label[dom.map.labels[i]].push_back(i);
    if (by_label.size() != 3)
        throw ValidationError("piece count", "expected 3 pieces, found " + std::to_string(by_label.size()));

    std::vector<std::pair<int, int>> order;  // (angle, label)
    for (const auto& [label, idx] : by_label) {
        const auto deg = dom.map.maps[idx.front()].angle_degrees();
        if (!deg) throw ValidationError("rotation angles", "piece motion is not a rotation by a multiple of 15");
        order.emplace_back(*deg, label);
    }
    std::sort(order.rbegin(), order.rend());
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& [deg, label] = order[k];
        if (deg != kDegrees[k])
            throw ValidationError("rotation angles", "piece " + std::string(1, kLetters[k]) + " rotates by " +
                                                         std::to_string(deg) + " degrees");
        SectorPiece& p = sys.pieces[k];
        p.letter = kLetters[k];
        p.degrees = deg;
        p.motion = dom.map.maps[by_label[label].front()];
        Region parts;
        for (std::size_t i : by_label[label]) {
            if (!(dom.map.maps[i] == p.motion)) throw ValidationError("piece motion", "one letter, two motions");
            parts.push_back(dom.map.parts[i]);
        }
        p.region = merge_convex(std::move(parts));
        p.outline = union_outline(p.region).at(0);
        const auto c = p.motion.fixed_point();
        if (!c || !(p.motion.apply(*c) == *c)) throw ValidationError("fixed point", "no rotation center");
        p.center = *c;
        for (const auto& part : p.region) sys.map.add(part, p.motion, p.letter);
    }
    QuadExt total;
    for (const auto& p : sys.pieces) total += area(p.region);
    if (!(total == area(sys.domain))) throw ValidationError("tiling", "pieces do not tile the domain");

    const QuadExt unit = QuadExt::sqrt(2) - QuadExt(1);
    QuadExt ratio = unit;
    for (int k = 1; k <= 4; ++k, ratio *= unit) {
        const Similarity g = Similarity::homothety(sys.apex, ratio);
        if (auto words = conjugate_words(sys, g)) {
            sys.gamma_ratio = ratio;
            sys.gamma = g;
            sys.words = *words;
            return sys;
        }
    }
    throw ValidationError("gamma", "no homothety about the apex conjugates the first-return map");
}

std::pair<Letter, Point> folded_apply(const SectorSystem& sys, const Point& x) {
    const int i = sys.map.locate(x);
    if (i < 0) throw std::domain_error("folded_apply: " + x.str() + " is not interior to a piece");
    const auto k = static_cast<std::size_t>(i);
    return {static_cast<Letter>(sys.map.labels[k]), sys.map.maps[k].apply(x)};
}

Word folded_word(const SectorSystem& sys, const Point& x, std::uint64_t budget) {
    const MapOrbit o = map_orbit(sys.map, x, budget);
    if (!o.periodic) return {};
    Word w;
    for (int l : o.labels) w.push_back(static_cast<char>(l));
    return w;
}

std::optional<unsigned> rank(const SectorSystem& sys, const Point& x) {
    if (!region_contains(sys.domain, x)) throw std::invalid_argument("rank: point outside the domain");
    if (x == sys.apex) return std::nullopt;
    const Similarity inv = sys.gamma.inverse();
    unsigned n = 0;
    for (Point y = inv.apply(x); region_contains(sys.domain, y); y = inv.apply(y)) ++n;
    return n;
}

const Word& substitution(const SectorSystem& sys, Letter l) {
    return sys.words[static_cast<std::size_t>(letter_index(l))];
}

Word substitute(const SectorSystem& sys, const Word& w) {
    Word out;
    for (Letter l : w) out += substitution(sys, l);
    return out;
}

CountVector count_letters(const Word& w) {
    CountVector cv;
    for (Letter l : w) {
        switch (letter_index(l)) {
            case 0: ++cv.a; break;
            case 1: ++cv.b; break;
            default: ++cv.c; break;
        }
    }
    return cv;
}

std::string to_string(const CountVector& cv) {
    return "(" + cv.a.get_str() + "," + cv.b.get_str() + "," + cv.c.get_str() + ")";
}

CountMatrix count_matrix(const SectorSystem& sys) {
    CountMatrix m{};
    for (std::size_t j = 0; j < 3; ++j) {
        const CountVector cv = count_letters(sys.words[j]);
        m[0][j] = cv.a.get_si();
        m[1][j] = cv.b.get_si();
        m[2][j] = cv.c.get_si();
    }
    return m;
}

CountVector count_step(const CountMatrix& m, const CountVector& cv) {
    const std::array<const mpz_class*, 3> in{&cv.a, &cv.b, &cv.c};
    std::array<mpz_class, 3> out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r] += m[r][c] * *in[c];
    return {out[0], out[1], out[2]};
}

std::array<long, 3> eigenvalues(const CountMatrix& m) {
    // x^3 - t x^2 + s x - d
    const long t = m[0][0] + m[1][1] + m[2][2];
    const long s = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                   m[1][1] * m[2][2] - m[1][2] * m[2][1];
    const long d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    std::vector<long> roots;
    const long bound = std::max(1L, std::labs(d));
    for (long r = -bound; r <= bound; ++r)
        if (r * r * r - t * r * r + s * r - d == 0) roots.push_back(r);
    if (roots.size() != 3) throw std::domain_error("eigenvalues: characteristic polynomial lacks 3 distinct integer roots");
    std::sort(roots.begin(), roots.end(), [](long a, long b) {
        return std::labs(a) != std::labs(b) ? std::labs(a) > std::labs(b) : a > b;
    });
    return {roots[0], roots[1], roots[2]};
}

ClosedForm closed_form(const CountMatrix& m) {
    ClosedForm cf;
    cf.eigen = eigenvalues(m);
    using Mat = std::array<std::array<mpq_class, 3>, 3>;
    auto shifted = [&](long f) {
        Mat a;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) a[r][c] = m[r][c] - (r == c ? f : 0);
        return a;
    };
    auto mul = [](const Mat& x, const Mat& y) {
        Mat z;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                for (int k = 0; k < 3; ++k) z[r][c] += x[r][k] * y[k][c];
        return z;
    };
    for (int e = 0; e < 3; ++e) {
        const long le = cf.eigen[static_cast<std::size_t>(e)];
        const long f1 = cf.eigen[static_cast<std::size_t>((e + 1) % 3)];
        const long f2 = cf.eigen[static_cast<std::size_t>((e + 2) % 3)];
        const Mat p = mul(shifted(f1), shifted(f2));
        const mpq_class denom((le - f1) * (le - f2));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) cf.proj[e][r][c] = Rational(mpq_class(p[r][c] / denom));
    }
    return cf;
}

CountVector ClosedForm::at(const CountVector& cv0, unsigned k) const {
    const std::array<mpq_class, 3> in{mpq_class(cv0.a), mpq_class(cv0.b), mpq_class(cv0.c)};
    std::array<mpq_class, 3> out;
    for (int e = 0; e < 3; ++e) {
        const mpq_class pk = power(eigen[static_cast<std::size_t>(e)], k);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out[r] += pk * proj[e][r][c].to_mpq() * in[c];
    }
    for (auto& v : out)
        if (v.get_den() != 1) throw std::logic_error("closed_form: non-integer count");
    return {out[0].get_num(), out[1].get_num(), out[2].get_num()};
}

std::array<Rational, 3> ClosedForm::coefficients(int row, int col) const {
    return {proj[0][row][col], proj[1][row][col], proj[2][row][col]};
}

std::array<Rational, 3> ClosedForm::total_coefficients(int col) const {
    std::array<Rational, 3> out;
    for (int e = 0; e < 3; ++e)
        for (int r = 0; r < 3; ++r) out[static_cast<std::size_t>(e)] += proj[e][r][col];
    return out;
}

CountVector closed_form(const CountMatrix& m, const CountVector& cv0, unsigned k) { return closed_form(m).at(cv0, k); }

std::vector<OrbitClass> rank0_orbits(const SectorSystem& sys) {
    const SectorPiece& u = sys.pieces[0];
    const SectorPiece& v = sys.pieces[1];
    const SectorPiece& w = sys.pieces[2];
    const Similarity wv = w.motion.compose(v.motion);
    const auto w1 = wv.fixed_point();
    if (!w1 || !region_interior(v.region, *w1) || !region_interior(w.region, v.motion.apply(*w1)))
        throw ValidationError("rank-0 orbits", "no period-2 point with word vw");

    const QuadExt delta(Rational(1, 1024));
    const Point offset{delta, delta * QuadExt(Rational(1, 3))};
    std::vector<OrbitClass> out;
    auto add = [&](std::string name, const Point& p) {
        OrbitClass c{std::move(name), p, folded_word(sys, p), {}};
        if (c.word.empty()) throw ValidationError("rank-0 orbits", "seed " + p.str() + " is not periodic");
        c.counts = count_letters(c.word);
        out.push_back(std::move(c));
    };
    add("V", v.center);
    add("V neighborhood", v.center + offset);
    add("U", u.center);
    add("U neighborhood", u.center + offset);
    add("W1", *w1);
    add("W1 neighborhood", *w1 + offset);
    return out;
}

ConjugacyReport verify_conjugacy(const SectorSystem& sys, std::size_t samples_per_piece, std::uint64_t seed) {
    ConjugacyReport rep;
    std::mt19937_64 rng(seed);
    const Region small = apply(sys.gamma, sys.domain);
    for (std::size_t k = 0; k < 3; ++k) {
        const SectorPiece& piece = sys.pieces[k];
        const Word& word = sys.words[k];
        std::size_t done = 0;
        for (std::size_t attempt = 0; done < samples_per_piece && attempt < samples_per_piece * 20; ++attempt) {
            const ConvexPolygon& part = piece.region[rng() % piece.region.size()];
            const Point x = interior_sample(part, rng);
            Point expect, y;
            try {
                auto [l, img] = folded_apply(sys, x);
                if (l != piece.letter) continue;
                expect = sys.gamma.apply(img);
                y = sys.gamma.apply(x);
                bool ok = true;
                for (std::size_t i = 0; i < word.size() && ok; ++i) {
                    auto [li, next] = folded_apply(sys, y);
                    ok = li == word[i] && (i + 1 == word.size() || !region_contains(small, next));
                    y = next;
                }
                ++done;
                ++rep.samples;
                if (!ok || !(y == expect)) {
                    ++rep.defects;
                    rep.failures.push_back(std::string(1, piece.letter) + " at " + x.str());
                }
            } catch (const std::domain_error&) {
                continue;  // boundary orbit; draw again
            }
        }
    }
    return rep;
}

bool verify_partition_conjugacy(const SectorSystem& sys) {
    const auto words = conjugate_words(sys, sys.gamma);
    return words && *words == sys.words;
}

Witness aperiodic_witness(const SectorSystem& sys, int depth) {
    if (depth < 1) throw std::invalid_argument("aperiodic_witness: depth must be positive");
    const SectorPiece& u = sys.pieces[0];
    const Region small = apply(sys.gamma, sys.domain);
    if (!region_covers(u.region, small)) throw ValidationError("witness", "gamma(domain) is not inside piece u");

    Witness wit;
    const Similarity phi = u.motion.compose(sys.gamma);
    wit.limit = *phi.fixed_point();
    const Similarity step = phi.compose(phi);
    wit.contraction = step;

    auto octagon_at = [&](const Point& c) { return component_of(sys.table, c + Point{QuadExt(Rational(1, 64)), QuadExt(0)}).region; };
    const ConvexPolygon v_oct = octagon_at(sys.pieces[1].center);
    const ConvexPolygon u_oct = octagon_at(u.center);
    std::array<ConvexPolygon, 3> seeds{v_oct, u_oct, phi.apply(u_oct)};
    std::array<Point, 3> centers{sys.pieces[1].center, u.center, phi.apply(u.center)};

    Similarity power;
    for (int j = 0; j < depth; ++j, power = step.compose(power)) {
        std::vector<Point> tri;
        for (std::size_t i = 0; i < 3; ++i) {
            const ConvexPolygon region = power.apply(seeds[i]);
            WitnessLink link{region, stable_period(sys, region), 0};
            // The unfolded orbit closes after at most 8 folded periods.
            const Point y = QuadExt(Rational(7, 8)) * region.centroid() + QuadExt(Rational(1, 8)) * region.vertices()[0];
            const OrbitResult r = orbit(sys.table, y, 8 * link.folded_period + 1);
            if (r.outcome != Outcome::Periodic)
                throw ValidationError("witness", "link " + std::to_string(wit.chain.size()) + " is not periodic");
            link.period = r.steps;
            wit.chain.push_back(std::move(link));
            tri.push_back(power.apply(centers[i]));
        }
        wit.boxes.push_back(ConvexPolygon(tri));
    }
    for (std::size_t n = 1; n < wit.chain.size(); ++n)
        if (wit.chain[n].folded_period <= wit.chain[n - 1].folded_period)
            throw ValidationError("witness", "periods do not increase at index " + std::to_string(n));
    for (std::size_t j = 0; j < wit.boxes.size(); ++j) {
        if (wit.boxes[j].locate(wit.limit) != Location::Interior)
            throw ValidationError("witness", "limit point outside triangle " + std::to_string(j));
        if (j > 0 && !contains(wit.boxes[j - 1], wit.boxes[j]))
            throw ValidationError("witness", "triangles are not nested at " + std::to_string(j));
    }
    return wit;
}

std::vector<TableRow> rank0_table(const SectorSystem& sys) {
    const ClosedForm cf = closed_form(count_matrix(sys));
    std::vector<TableRow> rows;
    for (const auto& c : rank0_orbits(sys)) {
        TableRow r{c.name, c.word, c.counts, {}, c.word.size(), 0};
        const std::array<const mpz_class*, 3> cv{&c.counts.a, &c.counts.b, &c.counts.c};
        for (int col = 0; col < 3; ++col) {
            const auto t = cf.total_coefficients(col);
            for (int e = 0; e < 3; ++e)
                r.period_coefficients[static_cast<std::size_t>(e)] += t[static_cast<std::size_t>(e)] * Rational(mpq_class(*cv[col]));
        }
        const Word w1 = folded_word(sys, sys.gamma.apply(c.seed));
        r.simulated_rank1 = w1.size();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<Discrepancy> discrepancy_report(const SectorSystem& sys) {
    std::vector<Discrepancy> out;
    auto add = [&](std::string artifact, std::string ref, std::string got) {
        const bool m = ref == got;
        out.push_back({std::move(artifact), std::move(ref), std::move(got), m});
    };
    const CountMatrix m = count_matrix(sys);
    const CountMatrix ref_m{{{2, 2, 3}, {8, 5, 0}, {5, 2, 0}}};
    add("count matrix", matrix_str(ref_m), matrix_str(m));
    std::array<long, 3> ev{};
    try {
        ev = eigenvalues(m);
        add("eigenvalues", "{9,-3,1}", join(ev));
    } catch (const std::domain_error&) {
        add("eigenvalues", "{9,-3,1}", "not integral");
    }
    const std::array<std::string, 3> ref_words{"uvvwwvwwvwwvuu", "uvvwwvwwvuu", "uuu"};
    const std::array<std::size_t, 3> ref_len{15, 9, 3};
    for (std::size_t k = 0; k < 3; ++k) {
        const std::string l(1, kLetters[k]);
        add("word " + l, ref_words[k], sys.words[k]);
        add("word length " + l, std::to_string(ref_len[k]), std::to_string(sys.words[k].size()));
    }
    const ClosedForm cf = closed_form(m);
    // Coefficients of (9^k, (-3)^k, 1) per component and basis vector.
    using C = std::array<Rational, 3>;
    const std::array<std::array<C, 3>, 3> ref_cf{{
        {{C{3, 4, 1}, C{2, 0, -2}, C{1, -4, 3}}},
        {{C{6, -4, -2}, C{4, 0, 4}, C{2, 4, -6}}},
        {{C{3, -4, 1}, C{2, 0, -2}, C{1, 4, 3}}},
    }};
    const std::array<std::string, 3> comp{"a", "b", "c"};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            add("closed form " + comp[r] + " from " + comp[c] + "0", coeff_str(ref_cf[r][c]), coeff_str(cf.coefficients(r, c)));
    const std::array<C, 3> ref_total{C{Rational(3, 2), Rational(-1, 2), 0}, C{1, 0, 0}, C{Rational(3, 2), Rational(1, 2), 0}};
    for (int c = 0; c < 3; ++c)
        add("closed form total from " + comp[c] + "0", coeff_str(ref_total[c]), coeff_str(cf.total_coefficients(c)));

    const std::vector<std::pair<std::string, C>> ref_rows{
        {"V", C{1, 0, 0}},
        {"V neighborhood", C{4, 0, 0}},
        {"U", C{Rational(3, 2), Rational(-1, 2), 0}},
        {"U neighborhood", C{12, -4, 0}},
        {"W1", C{Rational(3, 2), Rational(1, 2), 0}},
        {"W1 neighborhood", C{12, 4, 0}},
    };
    const auto rows = rank0_table(sys);
    for (const auto& [name, ref] : ref_rows) {
        const auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.name == name; });
        add("period " + name, coeff_str(ref), it == rows.end() ? "missing" : coeff_str(it->period_coefficients));
    }
    return out;
}

}  // namespace obill::octagon
