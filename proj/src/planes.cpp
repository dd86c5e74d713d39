#include "fingeom/planes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace fingeom {
namespace planes {

namespace {

const pg::PointTable& plane(const gf::FieldTable& F) { return pg::PointTable::get(2, F); }

bool collinear(const gf::FieldTable& F, const pg::Vec& a, const pg::Vec& b,
               const pg::Vec& c) {
    // 3x3 determinant
    auto det = F.add(
        F.sub(F.mul(a[0], F.sub(F.mul(b[1], c[2]), F.mul(b[2], c[1]))),
              F.mul(a[1], F.sub(F.mul(b[0], c[2]), F.mul(b[2], c[0])))),
        F.mul(a[2], F.sub(F.mul(b[0], c[1]), F.mul(b[1], c[0]))));
    return det == 0;
}

pg::Vec cross(const gf::FieldTable& F, const pg::Vec& a, const pg::Vec& b) {
    return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
            F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
            F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

}  // namespace

ArcCheck is_arc(const gf::FieldTable& F, const std::vector<int>& pts) {
    const auto& pt = plane(F);
    std::set<int> dedup(pts.begin(), pts.end());
    if (dedup.size() != pts.size()) throw std::invalid_argument("duplicate points in arc");
    ArcCheck out;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t k = j + 1; k < pts.size(); ++k)
                if (collinear(F, pt.point(pts[i]), pt.point(pts[j]), pt.point(pts[k]))) {
                    out.ok = false;
                    out.violating = {pts[i], pts[j], pts[k]};
                    return out;
                }
    out.ok = true;
    return out;
}

Arc make_arc(const gf::FieldTable& F, std::vector<int> pts) {
    auto chk = is_arc(F, pts);
    if (!chk.ok) throw std::invalid_argument("points are not an arc");
    std::sort(pts.begin(), pts.end());
    return Arc{F.q(), std::move(pts)};
}

int line_through(const gf::FieldTable& F, int a, int b) {
    const auto& pt = plane(F);
    if (a == b) throw std::invalid_argument("line through equal points");
    return pt.id_of(cross(F, pt.point(a), pt.point(b)));
}

bool on_line(const gf::FieldTable& F, int line_id, int point_id) {
    const auto& pt = plane(F);
    const auto& l = pt.point(line_id);
    const auto& p = pt.point(point_id);
    uint8_t acc = 0;
    for (int i = 0; i < 3; ++i) acc = F.add(acc, F.mul(l[i], p[i]));
    return acc == 0;
}

std::vector<int> line_points(const gf::FieldTable& F, int line_id) {
    const auto& pt = plane(F);
    std::vector<int> out;
    for (int i = 0; i < pt.count(); ++i)
        if (on_line(F, line_id, i)) out.push_back(i);
    return out;
}

std::vector<int> lines_through_point(const gf::FieldTable& F, int point_id) {
    // self-dual: lines through p are the points of the dual line
    return line_points(F, point_id);
}

std::vector<int> tangent_lines(const gf::FieldTable& F, const Arc& arc, int p) {
    if (!std::binary_search(arc.points.begin(), arc.points.end(), p))
        throw std::invalid_argument("point is not on the arc");
    std::vector<int> out;
    for (int l : lines_through_point(F, p)) {
        int hits = 0;
        for (int a : arc.points)
            if (on_line(F, l, a)) ++hits;
        if (hits == 1) out.push_back(l);
    }
    return out;
}

Conic make_conic(const gf::FieldTable& F, std::array<uint8_t, 6> coef) {
    for (auto c : coef)
        if (c != 0) {
            if (c != 1) {
                uint8_t s = F.inv(c);
                for (auto& x : coef) x = F.mul(x, s);
            }
            return Conic{F.q(), coef};
        }
    throw std::invalid_argument("zero conic");
}

uint8_t conic_eval(const gf::FieldTable& F, const Conic& c, const pg::Vec& pt) {
    uint8_t x = pt[0], y = pt[1], z = pt[2];
    uint8_t acc = F.mul(c.coef[0], F.mul(x, x));
    acc = F.add(acc, F.mul(c.coef[1], F.mul(y, y)));
    acc = F.add(acc, F.mul(c.coef[2], F.mul(z, z)));
    acc = F.add(acc, F.mul(c.coef[3], F.mul(x, y)));
    acc = F.add(acc, F.mul(c.coef[4], F.mul(x, z)));
    acc = F.add(acc, F.mul(c.coef[5], F.mul(y, z)));
    return acc;
}

namespace {
std::vector<int> zero_set(const gf::FieldTable& F, const Conic& c) {
    const auto& pt = plane(F);
    std::vector<int> out;
    for (int i = 0; i < pt.count(); ++i)
        if (conic_eval(F, c, pt.point(i)) == 0) out.push_back(i);
    return out;
}
}  // namespace

bool conic_nondegenerate(const gf::FieldTable& F, const Conic& c) {
    auto zs = zero_set(F, c);
    if (int(zs.size()) != F.q() + 1) return false;
    return is_arc(F, zs).ok;
}

std::vector<int> conic_points(const gf::FieldTable& F, const Conic& c) {
    auto zs = zero_set(F, c);
    if (int(zs.size()) != F.q() + 1 || !is_arc(F, zs).ok)
        throw std::invalid_argument("degenerate conic");
    return zs;
}

Conic conic_through_five(const gf::FieldTable& F, const std::vector<int>& pts) {
    if (pts.size() != 5) throw std::invalid_argument("need exactly 5 points");
    if (F.q() < 4) throw std::invalid_argument("no 5-arcs exist for q < 4");
    auto chk = is_arc(F, pts);
    if (!chk.ok) throw std::invalid_argument("5 points contain a collinear triple");
    const auto& pt = plane(F);
    std::vector<uint8_t> rows;
    for (int id : pts) {
        const auto& v = pt.point(id);
        uint8_t x = v[0], y = v[1], z = v[2];
        rows.insert(rows.end(), {F.mul(x, x), F.mul(y, y), F.mul(z, z), F.mul(x, y),
                                 F.mul(x, z), F.mul(y, z)});
    }
    int r = pg::rref(F, rows, 6);
    if (r != 5) throw std::logic_error("evaluation system is rank deficient");
    // nullspace of the 5x6 RREF system: one free column
    std::vector<int> pivots;
    int col = 0;
    for (int i = 0; i < r; ++i) {
        while (rows[size_t(i) * 6 + col] == 0) ++col;
        pivots.push_back(col);
    }
    std::vector<char> is_piv(6, 0);
    for (int p : pivots) is_piv[p] = 1;
    int freecol = 0;
    while (is_piv[freecol]) ++freecol;
    std::array<uint8_t, 6> coef{};
    coef[freecol] = 1;
    for (int i = 0; i < r; ++i) coef[pivots[i]] = F.neg(rows[size_t(i) * 6 + freecol]);
    return make_conic(F, coef);
}

int conic_tangent_at(const gf::FieldTable& F, const Conic& c, int point_id) {
    auto cp = conic_points(F, c);
    if (!std::binary_search(cp.begin(), cp.end(), point_id))
        throw std::invalid_argument("point is not on the conic");
    std::vector<int> tl;
    for (int l : lines_through_point(F, point_id)) {
        int hits = 0;
        for (int a : cp)
            if (on_line(F, l, a)) ++hits;
        if (hits == 1) tl.push_back(l);
    }
    if (tl.size() != 1) throw std::logic_error("conic point without a unique tangent");
    return tl[0];
}

ArcCompletion complete_arc_to_conic(const gf::FieldTable& F, const Arc& arc) {
    int q = F.q();
    if (q % 2 == 0 || q < 5) throw std::invalid_argument("requires q odd, q >= 5");
    if (int(arc.points.size()) != q) throw std::invalid_argument("requires a q-arc");
    std::vector<int> five(arc.points.begin(), arc.points.begin() + 5);
    Conic c = conic_through_five(F, five);
    auto cp = conic_points(F, c);
    for (int a : arc.points)
        if (!std::binary_search(cp.begin(), cp.end(), a))
            throw std::logic_error("q-arc does not lie on the fitted conic");
    ArcCompletion out;
    out.conic = c;
    std::set_difference(cp.begin(), cp.end(), arc.points.begin(), arc.points.end(),
                        std::back_inserter(out.added));
    if (out.added.size() != 1) throw std::logic_error("completion point is not unique");
    return out;
}

M2Prime m2_prime(int q) {
    if (q < 3) return {M2Prime::Kind::unknown, -1};
    int p = 2;
    while (q % p != 0) ++p;
    int h = 0, m = q;
    while (m > 1) {
        if (m % p != 0) return {M2Prime::Kind::unknown, -1};
        m /= p;
        ++h;
    }
    if (p == 2) return {M2Prime::Kind::unknown, -1};

    if (q == 3 || q == 5 || q == 7) {
        auto cls = classify_complete_arcs(gf::make_field(p, h));
        std::vector<int> sizes;
        for (const auto& [sz, rep] : cls.representative) sizes.push_back(sz);
        std::sort(sizes.rbegin(), sizes.rend());
        if (sizes.size() < 2) return {M2Prime::Kind::none, -1};
        return {M2Prime::Kind::exact, sizes[1]};
    }

    long double best = -1;
    auto consider = [&best](long double v) {
        if (best < 0 || v < best) best = v;
    };
    long double ql = q, pl = p;
    if (p >= 5) consider(ql - std::sqrt(ql) / 2 + 5);  // (1)
    if (q >= 529 && q != 3125 && q != 729 && (p != 3 || h % 2 == 0))
        consider(ql - std::sqrt(ql) / 2 + 3);  // (2)
    if (h % 2 == 1) consider(ql - std::sqrt(pl * ql) / 4 + 29.0L * pl / 16 + 1);  // (3)
    if (h == 1) consider(44.0L * ql / 45 + 8.0L / 9);  // (4)
    if (best < 0) return {M2Prime::Kind::unknown, -1};
    return {M2Prime::Kind::upper_bound, int(std::floor(best))};
}

CompleteArcClasses classify_complete_arcs(const gf::FieldTable& F) {
    int q = F.q();
    if (q > 8) throw std::invalid_argument("classification supported only for q <= 8");
    const auto& pt = plane(F);
    std::vector<int> frame = {pt.id_of({1, 0, 0}), pt.id_of({0, 1, 0}), pt.id_of({0, 0, 1}),
                              pt.id_of({1, 1, 1})};
    std::sort(frame.begin(), frame.end());
    if (!is_arc(F, frame).ok) throw std::logic_error("standard frame is not an arc");

    // precompute collinearity: for each point pair the line id
    int N = pt.count();
    std::vector<int> pair_line(size_t(N) * N, -1);
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            pair_line[size_t(a) * N + b] = pair_line[size_t(b) * N + a] = line_through(F, a, b);

    auto extends = [&](const std::vector<int>& arc, int cand) {
        // no line through cand and an arc point may hit a second arc point
        for (size_t i = 0; i < arc.size(); ++i)
            for (size_t j = i + 1; j < arc.size(); ++j)
                if (pair_line[size_t(arc[i]) * N + arc[j]] ==
                    pair_line[size_t(arc[i]) * N + cand])
                    return false;
        return true;
    };

    CompleteArcClasses out;
    std::vector<int> arc = frame;
    std::function<void(const std::vector<int>&)> dfs = [&](const std::vector<int>& cands) {
        bool complete = true;
        for (int c = 0; c < N && complete; ++c)
            if (std::find(arc.begin(), arc.end(), c) == arc.end() && extends(arc, c))
                complete = false;
        if (complete) {
            int sz = int(arc.size());
            ++out.count_through_frame[sz];
            if (!out.representative.count(sz)) out.representative[sz] = arc;
            return;
        }
        for (size_t ci = 0; ci < cands.size(); ++ci) {
            int c = cands[ci];
            arc.push_back(c);
            std::vector<int> next;
            for (size_t cj = ci + 1; cj < cands.size(); ++cj)
                if (extends(arc, cands[cj])) next.push_back(cands[cj]);
            dfs(next);
            arc.pop_back();
        }
    };
    std::vector<int> cands;
    for (int c = 0; c < N; ++c)
        if (std::find(frame.begin(), frame.end(), c) == frame.end() && extends(frame, c))
            cands.push_back(c);
    dfs(cands);
    return out;
}

uint8_t third_root_vieta(const gf::FieldTable& F, const TangentConicParams& p, uint8_t y0,
                         uint8_t y1) {
    if (p.dbar == 0) throw std::invalid_argument("dbar must be nonzero");
    if (y0 == 0 || y1 == 0 || y0 == y1)
        throw std::invalid_argument("y0, y1 must be distinct and nonzero");
    uint8_t den = F.mul(p.dbar, F.mul(y0, y1));
    uint8_t num = F.sub(p.f_i, F.mul(p.rho_i, p.fbar));
    return F.div(num, den);
}

std::array<uint8_t, 4> intersection_cubic(const gf::FieldTable& F,
                                          const TangentConicParams& p) {
    // -dbar y^3 + (d_i - ebar - rho_i dbar) y^2 + (e_i - fbar - rho_i ebar) y
    //   + (f_i - rho_i fbar)
    return {F.sub(p.f_i, F.mul(p.rho_i, p.fbar)),
            F.sub(F.sub(p.e_i, p.fbar), F.mul(p.rho_i, p.ebar)),
            F.sub(F.sub(p.d_i, p.ebar), F.mul(p.rho_i, p.dbar)), F.neg(p.dbar)};
}

bool common_tangent_audit(const gf::FieldTable& F, const std::vector<Conic>& family,
                          int base_point_id) {
    const auto& pt = plane(F);
    std::set<int> tangents;
    for (const auto& c : family) {
        if (conic_eval(F, c, pt.point(base_point_id)) != 0)
            throw std::invalid_argument("conic does not pass through the base point");
        tangents.insert(conic_tangent_at(F, c, base_point_id));
    }
    return tangents.size() <= 1;
}

}  // namespace planes
}  // namespace fingeom
