#include "doctest.h"
#include "fingeom/projgeom.hpp"

#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

using namespace fingeom;
using pg::Subspace;
using pg::Vec;

namespace {

// Random subspace of the given projective dimension (may come out smaller;
// resample until exact).
Subspace random_subspace(std::mt19937& rng, const gf::FieldTable& F, int n, int pdim) {
    std::uniform_int_distribution<int> pick(0, F.q() - 1);
    while (true) {
        std::vector<Vec> gens;
        for (int i = 0; i <= pdim; ++i) {
            Vec v(n + 1);
            for (auto& c : v) c = uint8_t(pick(rng));
            gens.push_back(v);
        }
        auto s = pg::make_subspace(F, n, gens);
        if (s.dim() == pdim) return s;
    }
}

// Independent oracle for meet: intersect explicit point sets.
std::vector<int> meet_point_oracle(const gf::FieldTable& F, const Subspace& a,
                                   const Subspace& b) {
    auto pa = pg::subspace_point_ids(F, a);
    auto pb = pg::subspace_point_ids(F, b);
    std::vector<int> out;
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

TEST_CASE("point counts match the projective space formula") {
    CHECK(pg::PointTable::get(1, gf::make_field(2, 1)).count() == 3);
    CHECK(pg::PointTable::get(2, gf::make_field(3, 1)).count() == 13);
    CHECK(pg::PointTable::get(5, gf::make_field(2, 1)).count() == 63);
    CHECK(pg::PointTable::get(5, gf::make_field(3, 1)).count() == 364);
}

TEST_CASE("point enumeration is lexicographic, normalized and stable") {
    const auto& F = gf::make_field(3, 1);
    const auto& pt = pg::PointTable::get(2, F);
    for (int i = 0; i + 1 < pt.count(); ++i) CHECK(pt.point(i) < pt.point(i + 1));
    for (int i = 0; i < pt.count(); ++i) {
        CHECK(pt.id_of(pt.point(i)) == i);
        // a scalar multiple resolves to the same id
        Vec v = pt.point(i);
        for (auto& c : v) c = F.mul(c, 2);
        CHECK(pt.id_of(v) == i);
    }
}

TEST_CASE("span of two points is a line; idempotence") {
    const auto& F = gf::make_field(2, 1);
    auto p = pg::point_subspace(F, 3, {1, 0, 0, 0});
    auto r = pg::point_subspace(F, 3, {0, 1, 1, 0});
    auto l = pg::span(F, p, r);
    CHECK(l.dim() == 1);
    CHECK(pg::span(F, l, l) == l);
    CHECK(pg::span(F, l, p) == l);
}

TEST_CASE("meet dimension formula and containment") {
    const auto& F = gf::make_field(3, 1);
    // two distinct hyperplanes of PG(3,3) meet in a line
    auto h1 = pg::dual_subspace(F, pg::point_subspace(F, 3, {1, 0, 0, 0}));
    auto h2 = pg::dual_subspace(F, pg::point_subspace(F, 3, {0, 1, 0, 0}));
    CHECK(h1.dim() == 2);
    auto m = pg::meet(F, h1, h2);
    CHECK(m.dim() == 1);
    // A subset of B meets B in itself
    CHECK(pg::meet(F, m, h1) == m);
}

TEST_CASE("dimension formula on random pairs, several spaces") {
    std::mt19937 rng(7);
    for (auto [p, h, n] : {std::tuple{2, 1, 4}, {3, 1, 3}, {2, 2, 3}, {5, 1, 2}}) {
        const auto& F = gf::make_field(p, h);
        for (int trial = 0; trial < 400; ++trial) {
            std::uniform_int_distribution<int> dims(0, n - 1);
            auto a = random_subspace(rng, F, n, dims(rng));
            auto b = random_subspace(rng, F, n, dims(rng));
            auto s = pg::span(F, a, b);
            auto m = pg::meet(F, a, b);
            CHECK(a.dim() + b.dim() == s.dim() + m.dim());
            // meet agrees with the point-set oracle
            CHECK(pg::subspace_point_ids(F, m) == meet_point_oracle(F, a, b));
        }
    }
}

TEST_CASE("duality is an inclusion-reversing involution") {
    std::mt19937 rng(11);
    const auto& F = gf::make_field(3, 1);
    int n = 4;
    for (int trial = 0; trial < 1000; ++trial) {
        std::uniform_int_distribution<int> dims(0, n - 1);
        auto a = random_subspace(rng, F, n, dims(rng));
        auto d = pg::dual_subspace(F, a);
        CHECK(d.dim() == n - 1 - a.dim());
        CHECK(pg::dual_subspace(F, d) == a);
        auto b = random_subspace(rng, F, n, dims(rng));
        bool ab = pg::contains_subspace(F, b, a);
        bool dual_ba = pg::contains_subspace(F, pg::dual_subspace(F, a), pg::dual_subspace(F, b));
        if (ab) CHECK(dual_ba);
        if (dual_ba) CHECK(ab);
    }
    // hyperplane <-> point
    auto pt = pg::point_subspace(F, n, {1, 2, 0, 1, 1});
    CHECK(pg::dual_subspace(F, pt).dim() == n - 1);
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937 rng(3);
    const auto& F = gf::make_field(2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = random_subspace(rng, F, 3, 1);
        std::vector<Vec> gens;
        for (int i = 0; i < s.rank; ++i) gens.emplace_back(s.row(i), s.row(i) + s.n + 1);
        CHECK(pg::make_subspace(F, s.n, gens) == s);
    }
}

TEST_CASE("quotient map: dimensions and kernel/full-space images") {
    const auto& F = gf::make_field(2, 1);
    auto line = pg::make_subspace(F, 5, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
    pg::QuotientMap qm(F, line);
    CHECK(qm.target_dim() == 3);
    // a 3-space through the line maps to a line of PG(3,2)
    auto solid = pg::make_subspace(
        F, 5, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0}});
    auto img = qm.map(solid);
    CHECK(img.dim() == 1);
    CHECK(qm.lift(img) == solid);
    CHECK(qm.map(line).rank == 0);
    CHECK(qm.map(pg::full_space(F, 5)) == pg::full_space(F, 3));
    CHECK_THROWS(qm.map(pg::point_subspace(F, 5, {0, 0, 1, 0, 0, 0})));
}

TEST_CASE("subspace counts match Gaussian binomials") {
    CHECK(pg::gaussian_binomial(6, 2, 2) == 651);
    CHECK(pg::gaussian_binomial(6, 2, 3) == 11011);
    CHECK(pg::gaussian_binomial(9, 3, 2) == 788035);
    const auto& F2 = gf::make_field(2, 1);
    CHECK(pg::all_subspaces(F2, 3, 1).size() == pg::gaussian_binomial(4, 2, 2));
    const auto& F3 = gf::make_field(3, 1);
    CHECK(pg::all_subspaces(F3, 3, 1).size() == pg::gaussian_binomial(4, 2, 3));
    // all enumerated subspaces are distinct and canonical
    auto ls = pg::all_subspaces(F3, 3, 1);
    std::set<Subspace> dedup(ls.begin(), ls.end());
    CHECK(dedup.size() == ls.size());
}

TEST_CASE("subspaces_through counts") {
    const auto& F = gf::make_field(2, 1);
    // planes of PG(6,2) through a fixed line: Gaussian [5 1]_2 = 31
    auto line = pg::make_subspace(F, 6, {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}});
    CHECK(pg::subspaces_through(F, line, 2).size() == 31);
    // lines of PG(3,2) through a fixed point: q^2+q+1 = 7
    auto pt = pg::point_subspace(F, 3, {1, 1, 0, 1});
    auto through = pg::subspaces_through(F, pt, 1);
    CHECK(through.size() == 7);
    for (const auto& l : through) CHECK(pg::contains_subspace(F, l, pt));
    // a hyperplane through itself only
    auto hyp = pg::dual_subspace(F, pg::point_subspace(F, 3, {1, 0, 0, 0}));
    CHECK(pg::subspaces_through(F, hyp, 2) == std::vector<Subspace>{hyp});
}

TEST_CASE("collineations: identity, inverse, permutation action") {
    const auto& F = gf::make_field(3, 1);
    auto id = pg::identity_collineation(F, 2);
    auto p = pg::point_subspace(F, 2, {1, 2, 0});
    CHECK(pg::apply_collineation(F, id, p) == p);
    // permutation matrix moves coordinates
    pg::Collineation perm = id;
    perm.mat = {0, 1, 0, 0, 0, 1, 1, 0, 0};  // e0->e1, e1->e2, e2->e0
    auto q = pg::apply_collineation(F, perm, pg::point_subspace(F, 2, {1, 0, 0}));
    CHECK(q == pg::point_subspace(F, 2, {0, 1, 0}));
    auto comp = pg::compose(F, pg::inverse(F, perm), perm);
    CHECK(pg::apply_collineation(F, comp, p) == p);
}

TEST_CASE("semilinear composition and inverse over GF(4)") {
    const auto& F = gf::make_field(2, 2);
    std::mt19937 rng(5);
    pg::Collineation g;
    g.n = 2;
    g.q = 4;
    g.frob = 1;
    g.mat = {1, 2, 0, 0, 1, 1, 3, 0, 2};
    auto gi = pg::inverse(F, g);
    auto p = pg::point_subspace(F, 2, {2, 3, 1});
    CHECK(pg::apply_collineation(F, gi, pg::apply_collineation(F, g, p)) == p);
    auto gg = pg::compose(F, gi, g);
    CHECK(pg::apply_collineation(F, gg, p) == p);
}

TEST_CASE("collineation generators act transitively (orbit closure)") {
    const auto& F = gf::make_field(2, 1);
    auto gens = pg::collineation_generators(2, F);
    std::set<Subspace> orbit;
    std::vector<Subspace> frontier{pg::point_subspace(F, 2, {1, 0, 0})};
    orbit.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const auto& s : frontier)
            for (const auto& g : gens) {
                auto t = pg::apply_collineation(F, g, s);
                if (orbit.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    CHECK(orbit.size() == 7);
}

TEST_CASE("carrier restriction round-trip") {
    const auto& F = gf::make_field(3, 1);
    auto carrier = pg::make_subspace(
        F, 5, {{1, 0, 0, 0, 2, 1}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1}});
    REQUIRE(carrier.dim() == 3);
    std::mt19937 rng(9);
    for (int t = 0; t < 50; ++t) {
        auto inner = random_subspace(rng, F, 3, 1);
        auto lifted = pg::lift_from_carrier(F, inner, carrier);
        CHECK(pg::contains_subspace(F, carrier, lifted));
        CHECK(pg::restrict_to_carrier(F, lifted, carrier) == inner);
    }
}

TEST_CASE("subspace text format round-trip and validation") {
    const auto& F = gf::make_field(2, 1);
    auto s = pg::make_subspace(F, 5, {{1, 0, 1, 0, 1, 0}, {0, 1, 0, 0, 1, 1}});
    auto text = pg::subspace_to_text(s);
    std::istringstream in(text);
    CHECK(pg::subspace_from_text(in) == s);
    std::istringstream bad("5 2 2\n0 1 0 0 1 1\n1 0 1 0 1 0\n");  // rows out of order
    CHECK_THROWS(pg::subspace_from_text(bad));
}
