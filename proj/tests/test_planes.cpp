#include "doctest.h"
#include "fingeom/planes.hpp"

#include <random>
#include <set>

using namespace fingeom;
using planes::Arc;
using planes::Conic;

namespace {

int pid(const gf::FieldTable& F, std::initializer_list<int> coords) {
    pg::Vec v;
    for (int c : coords) v.push_back(uint8_t(c));
    return pg::PointTable::get(2, F).id_of(v);
}

Conic y2_xz(const gf::FieldTable& F) {
    // Y^2 - XZ = 0
    return planes::make_conic(F, {0, 1, 0, 0, F.neg(1), 0});
}

// Root of the cubic left after dividing out (y-y0)(y-y1); independent of the
// Vieta shortcut.
uint8_t cubic_third_root_oracle(const gf::FieldTable& F, std::array<uint8_t, 4> c,
                                uint8_t y0, uint8_t y1) {
    // synthetic division by (y - y0)
    uint8_t b2 = c[3];
    uint8_t b1 = F.add(c[2], F.mul(y0, b2));
    uint8_t b0 = F.add(c[1], F.mul(y0, b1));
    REQUIRE(F.add(c[0], F.mul(y0, b0)) == 0);
    // then by (y - y1)
    uint8_t c1 = b2;
    uint8_t c0 = F.add(b1, F.mul(y1, c1));
    REQUIRE(F.add(b0, F.mul(y1, c0)) == 0);
    REQUIRE(c1 != 0);
    return F.div(F.neg(c0), c1);
}

}  // namespace

TEST_CASE("is_arc on the standard frame and on collinear points") {
    const auto& F = gf::make_field(3, 1);
    std::vector<int> frame = {pid(F, {1, 0, 0}), pid(F, {0, 1, 0}), pid(F, {0, 0, 1}),
                              pid(F, {1, 1, 1})};
    CHECK(planes::is_arc(F, frame).ok);
    // three points on X = 0
    std::vector<int> bad = {pid(F, {0, 1, 0}), pid(F, {0, 0, 1}), pid(F, {0, 1, 1})};
    auto chk = planes::is_arc(F, bad);
    CHECK(!chk.ok);
    std::set<int> wit(chk.violating.begin(), chk.violating.end());
    CHECK(wit == std::set<int>(bad.begin(), bad.end()));
    CHECK_THROWS(planes::is_arc(F, {1, 1}));
}

TEST_CASE("conic points over GF(3) and GF(4)") {
    const auto& F3 = gf::make_field(3, 1);
    auto cp = planes::conic_points(F3, y2_xz(F3));
    std::set<int> expect = {pid(F3, {1, 0, 0}), pid(F3, {0, 0, 1}), pid(F3, {1, 1, 1}),
                            pid(F3, {1, 2, 1})};
    CHECK(std::set<int>(cp.begin(), cp.end()) == expect);
    CHECK(planes::is_arc(F3, cp).ok);

    const auto& F4 = gf::make_field(2, 2);
    CHECK(planes::conic_points(F4, y2_xz(F4)).size() == 5);

    // XY = 0 is a line pair
    auto degen = planes::make_conic(F3, {0, 0, 0, 1, 0, 0});
    CHECK(!planes::conic_nondegenerate(F3, degen));
    CHECK_THROWS(planes::conic_points(F3, degen));
}

TEST_CASE("tangent line counts: q+2-s per arc point") {
    const auto& F5 = gf::make_field(5, 1);
    auto oval = planes::make_arc(F5, planes::conic_points(F5, y2_xz(F5)));
    for (int p : oval.points) CHECK(planes::tangent_lines(F5, oval, p).size() == 1);
    // q-arc: drop one point -> two tangents everywhere
    auto qarc_pts = oval.points;
    qarc_pts.pop_back();
    auto qarc = planes::make_arc(F5, qarc_pts);
    for (int p : qarc.points) CHECK(planes::tangent_lines(F5, qarc, p).size() == 2);
    CHECK_THROWS(planes::tangent_lines(F5, qarc, oval.points.back()));

    // hyperoval over GF(4): conic plus nucleus, no tangents remain
    const auto& F4 = gf::make_field(2, 2);
    auto cp = planes::conic_points(F4, y2_xz(F4));
    auto ov = planes::make_arc(F4, cp);
    for (int p : ov.points) CHECK(planes::tangent_lines(F4, ov, p).size() == 1);
    // the nucleus is the unique extension point of the conic when q is even
    int nucleus = -1;
    const auto& pt = pg::PointTable::get(2, F4);
    for (int cand = 0; cand < pt.count(); ++cand) {
        std::vector<int> ext = cp;
        ext.push_back(cand);
        if (std::find(cp.begin(), cp.end(), cand) == cp.end() && planes::is_arc(F4, ext).ok)
            nucleus = cand;
    }
    REQUIRE(nucleus >= 0);
    auto hyper_pts = cp;
    hyper_pts.push_back(nucleus);
    auto hyper = planes::make_arc(F4, hyper_pts);
    for (int p : hyper.points) CHECK(planes::tangent_lines(F4, hyper, p).empty());
}

TEST_CASE("conic through five points recovers the conic") {
    for (auto [p, h] : {std::pair{5, 1}, {2, 2}}) {
        const auto& F = gf::make_field(p, h);
        auto cp = planes::conic_points(F, y2_xz(F));
        std::vector<int> five(cp.begin(), cp.begin() + 5);
        CHECK(planes::conic_through_five(F, five) == y2_xz(F));
    }
    const auto& F5 = gf::make_field(5, 1);
    // frame plus a point collinear with two of them
    std::vector<int> bad = {pid(F5, {1, 0, 0}), pid(F5, {0, 1, 0}), pid(F5, {0, 0, 1}),
                            pid(F5, {1, 1, 1}), pid(F5, {0, 1, 1})};
    CHECK_THROWS(planes::conic_through_five(F5, bad));
    CHECK_THROWS(planes::conic_through_five(gf::make_field(3, 1), {0, 1, 2, 3, 4}));
}

TEST_CASE("conic_through_five reproduces 100 random conics per field") {
    std::mt19937 rng(2024);
    for (auto [p, h] : {std::pair{2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        const auto& F = gf::make_field(p, h);
        std::uniform_int_distribution<int> pick(0, F.q() - 1);
        int found = 0;
        while (found < 100) {
            std::array<uint8_t, 6> coef;
            for (auto& c : coef) c = uint8_t(pick(rng));
            bool allzero = true;
            for (auto c : coef)
                if (c) allzero = false;
            if (allzero) continue;
            auto c = planes::make_conic(F, coef);
            if (!planes::conic_nondegenerate(F, c)) continue;
            auto cp = planes::conic_points(F, c);
            // five random points of it
            std::shuffle(cp.begin(), cp.end(), rng);
            std::vector<int> five(cp.begin(), cp.begin() + 5);
            CHECK(planes::conic_through_five(F, five) == c);
            ++found;
        }
    }
}

TEST_CASE("complete_arc_to_conic over GF(5) and GF(7)") {
    const auto& F5 = gf::make_field(5, 1);
    std::vector<int> pts;
    for (int t = 0; t <= 3; ++t)
        pts.push_back(pid(F5, {1, t, (t * t) % 5}));
    pts.push_back(pid(F5, {0, 0, 1}));
    auto arc = planes::make_arc(F5, pts);
    auto done = planes::complete_arc_to_conic(F5, arc);
    CHECK(done.conic == y2_xz(F5));
    CHECK(done.added == std::vector<int>{pid(F5, {1, 4, 1})});

    const auto& F7 = gf::make_field(7, 1);
    auto cp7 = planes::conic_points(F7, y2_xz(F7));
    cp7.erase(cp7.begin() + 3);
    auto done7 = planes::complete_arc_to_conic(F7, planes::make_arc(F7, cp7));
    CHECK(done7.conic == y2_xz(F7));

    // q = 3 triangle rejected: uniqueness starts at q >= 5
    const auto& F3 = gf::make_field(3, 1);
    auto tri = planes::make_arc(F3, {pid(F3, {1, 0, 0}), pid(F3, {0, 1, 0}), pid(F3, {0, 0, 1})});
    CHECK_THROWS(planes::complete_arc_to_conic(F3, tri));
}

TEST_CASE("m2_prime branches and oracle values") {
    auto r121 = planes::m2_prime(121);
    CHECK(r121.kind == planes::M2Prime::Kind::upper_bound);
    CHECK(r121.value == 120);
    CHECK(planes::m2_prime(3).kind == planes::M2Prime::Kind::none);
    auto r7 = planes::m2_prime(7);
    CHECK(r7.kind == planes::M2Prime::Kind::exact);
    CHECK(r7.value == 6);
    CHECK(planes::m2_prime(8).kind == planes::M2Prime::Kind::unknown);
    CHECK(planes::m2_prime(9).kind == planes::M2Prime::Kind::unknown);
    auto r11 = planes::m2_prime(11);
    CHECK(r11.kind == planes::M2Prime::Kind::upper_bound);
}

TEST_CASE("classify_complete_arcs small orders") {
    const auto& F2 = gf::make_field(2, 1);
    auto c2 = planes::classify_complete_arcs(F2);
    REQUIRE(c2.representative.size() == 1);
    CHECK(c2.representative.begin()->first == 4);

    const auto& F3 = gf::make_field(3, 1);
    auto c3 = planes::classify_complete_arcs(F3);
    REQUIRE(c3.representative.size() == 1);
    CHECK(c3.representative.begin()->first == 4);

    const auto& F4 = gf::make_field(2, 2);
    auto c4 = planes::classify_complete_arcs(F4);
    CHECK(c4.representative.count(6) == 1);

    // every representative is genuinely complete: no extension point exists
    for (const auto& [sz, rep] : c4.representative) {
        const auto& pt = pg::PointTable::get(2, F4);
        for (int cand = 0; cand < pt.count(); ++cand) {
            if (std::find(rep.begin(), rep.end(), cand) != rep.end()) continue;
            auto ext = rep;
            ext.push_back(cand);
            CHECK(!planes::is_arc(F4, ext).ok);
        }
    }
}

TEST_CASE("third_root_vieta examples") {
    const auto& F7 = gf::make_field(7, 1);
    planes::TangentConicParams p;
    p.dbar = 1;
    p.f_i = 3;
    CHECK(planes::third_root_vieta(F7, p, 1, 2) == 5);  // 3 * inv(2) = 5 mod 7
    // numerator vanishes when f_i = rho_i * fbar
    planes::TangentConicParams z;
    z.dbar = 2;
    z.rho_i = 3;
    z.fbar = 4;
    z.f_i = F7.mul(3, 4);
    CHECK(planes::third_root_vieta(F7, z, 1, 3) == 0);
    CHECK_THROWS(planes::third_root_vieta(F7, p, 0, 2));
    CHECK_THROWS(planes::third_root_vieta(F7, p, 2, 2));
}

TEST_CASE("third_root_vieta matches cubic division oracle on random instances") {
    std::mt19937 rng(99);
    for (auto [p, h] : {std::pair{3, 2}, {3, 3}}) {
        const auto& F = gf::make_field(p, h);
        std::uniform_int_distribution<int> pick(0, F.q() - 1);
        std::uniform_int_distribution<int> pick1(1, F.q() - 1);
        int done = 0;
        while (done < 2000) {
            planes::TangentConicParams tp;
            tp.dbar = uint8_t(pick1(rng));
            tp.ebar = uint8_t(pick(rng));
            tp.fbar = uint8_t(pick(rng));
            tp.rho_i = uint8_t(pick(rng));
            tp.d_i = uint8_t(pick(rng));
            uint8_t y0 = uint8_t(pick1(rng)), y1 = uint8_t(pick1(rng));
            if (y0 == y1) continue;
            // choose e_i, f_i so that the cubic vanishes at y0 and y1
            // cubic(y) = K(y) + e_i y + f_i
            auto K = [&](uint8_t y) {
                uint8_t y2 = F.mul(y, y), y3 = F.mul(y2, y);
                uint8_t acc = F.mul(F.neg(tp.dbar), y3);
                acc = F.add(acc, F.mul(F.sub(F.sub(tp.d_i, tp.ebar), F.mul(tp.rho_i, tp.dbar)), y2));
                acc = F.add(acc, F.mul(F.sub(F.neg(tp.fbar), F.mul(tp.rho_i, tp.ebar)), y));
                return F.sub(acc, F.mul(tp.rho_i, tp.fbar));
            };
            uint8_t ei = F.div(F.sub(K(y1), K(y0)), F.sub(y0, y1));
            uint8_t fi = F.sub(F.neg(K(y0)), F.mul(ei, y0));
            tp.e_i = ei;
            tp.f_i = fi;
            // the second conic must be nondegenerate in the pencil's sense
            if (tp.f_i == F.sub(F.mul(tp.e_i, tp.rho_i), F.mul(tp.d_i, F.mul(tp.rho_i, tp.rho_i))))
                continue;
            auto cubic = planes::intersection_cubic(F, tp);
            CHECK(planes::third_root_vieta(F, tp, y0, y1) ==
                  cubic_third_root_oracle(F, cubic, y0, y1));
            ++done;
        }
    }
}

TEST_CASE("common tangent audit") {
    const auto& F5 = gf::make_field(5, 1);
    int base = pid(F5, {1, 0, 0});
    // XZ + d Y^2 = 0 for d in GF(5)*: all tangent to Z = 0 at (1,0,0)
    std::vector<Conic> fam;
    for (int d = 1; d < 5; ++d)
        fam.push_back(planes::make_conic(F5, {0, uint8_t(d), 0, 0, 1, 0}));
    CHECK(planes::common_tangent_audit(F5, fam, base));
    CHECK(planes::common_tangent_audit(F5, {fam[0]}, base));
    // add a conic through the base tangent to a different line: XY + Z^2 = 0
    fam.push_back(planes::make_conic(F5, {0, 0, 1, 1, 0, 0}));
    CHECK(!planes::common_tangent_audit(F5, fam, base));
    // a conic missing the base point is an error
    auto off = planes::make_conic(F5, {1, 1, 1, 0, 0, 0});
    CHECK_THROWS(planes::common_tangent_audit(F5, {off}, base));
}
