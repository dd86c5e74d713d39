#pragma once

#include "fingeom/projgeom.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace fingeom {
namespace planes {

// Arc in PG(2,q): point ids with no three collinear.
struct Arc {
    int q = 0;
    std::vector<int> points;  // ascending ids
};

struct ArcCheck {
    bool ok = false;
    std::array<int, 3> violating{-1, -1, -1};  // first collinear triple if !ok
};

ArcCheck is_arc(const gf::FieldTable& F, const std::vector<int>& pts);
Arc make_arc(const gf::FieldTable& F, std::vector<int> pts);  // throws if not an arc

// Lines of PG(2,q) are identified with the ids of their dual points.
int line_through(const gf::FieldTable& F, int a, int b);
std::vector<int> line_points(const gf::FieldTable& F, int line_id);
std::vector<int> lines_through_point(const gf::FieldTable& F, int point_id);
bool on_line(const gf::FieldTable& F, int line_id, int point_id);

// Lines through p meeting the arc only in p; for an s-arc there are q+2-s.
std::vector<int> tangent_lines(const gf::FieldTable& F, const Arc& arc, int p);

// Conic a X^2 + b Y^2 + c Z^2 + d XY + e XZ + f YZ = 0, scaled so the first
// nonzero coefficient is 1.
struct Conic {
    int q = 0;
    std::array<uint8_t, 6> coef{};
    bool operator==(const Conic&) const = default;
};

Conic make_conic(const gf::FieldTable& F, std::array<uint8_t, 6> coef);
uint8_t conic_eval(const gf::FieldTable& F, const Conic& c, const pg::Vec& pt);
bool conic_nondegenerate(const gf::FieldTable& F, const Conic& c);
// The q+1 points of a nondegenerate conic (ascending ids); throws otherwise.
std::vector<int> conic_points(const gf::FieldTable& F, const Conic& c);
// Unique conic through 5 points, no 3 collinear, q >= 4.
Conic conic_through_five(const gf::FieldTable& F, const std::vector<int>& pts);
// Tangent line of a nondegenerate conic at one of its points.
int conic_tangent_at(const gf::FieldTable& F, const Conic& c, int point_id);

struct ArcCompletion {
    Conic conic;
    std::vector<int> added;  // completion points (exactly one for q >= 5 odd)
};
// Every q-arc in PG(2,q), q odd >= 5, completes to a unique conic.
ArcCompletion complete_arc_to_conic(const gf::FieldTable& F, const Arc& arc);

// Size of the second largest complete arc: exact for q in {3,5,7} by
// exhaustive classification, otherwise the best applicable upper bound.
struct M2Prime {
    enum class Kind { exact, upper_bound, none, unknown } kind = Kind::unknown;
    int value = -1;
};
M2Prime m2_prime(int q);

// Exhaustive classification of complete arc sizes in PG(2,q), q <= 8.
// Every complete arc of PG(2,q) is collineation-equivalent to one through the
// standard frame, so the search fixes the frame.
struct CompleteArcClasses {
    std::map<int, std::vector<int>> representative;  // size -> one complete arc
    std::map<int, long> count_through_frame;         // size -> arcs found
};
CompleteArcClasses classify_complete_arcs(const gf::FieldTable& F);

// Parameters of the tangent-conic pencil algebra: a base conic tangent to
// Z=0 at (1,0,0) with coefficients (dbar, ebar, fbar), and a second conic
// tangent to Y + rho_i Z = 0 with coefficients (d_i, e_i, f_i).
struct TangentConicParams {
    uint8_t rho_i = 0;
    uint8_t dbar = 0, ebar = 0, fbar = 0;
    uint8_t d_i = 0, e_i = 0, f_i = 0;
};

// Third intersection root by Vieta: (f_i - rho_i*fbar) / (dbar*y0*y1).
uint8_t third_root_vieta(const gf::FieldTable& F, const TangentConicParams& p,
                         uint8_t y0, uint8_t y1);
// Coefficients (low to high) of the resultant cubic whose roots are the
// intersection parameters of the two conics.
std::array<uint8_t, 4> intersection_cubic(const gf::FieldTable& F,
                                          const TangentConicParams& p);

// True iff all conics pass through the base point and share one tangent
// line there.
bool common_tangent_audit(const gf::FieldTable& F, const std::vector<Conic>& family,
                          int base_point_id);

}  // namespace planes
}  // namespace fingeom
