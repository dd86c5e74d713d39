#pragma once

#include "fingeom/fieldred.hpp"
#include "fingeom/projgeom.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

namespace fingeom {
namespace pseudoarcs {

// Set of (n-1)-spaces of PG(3n-1,q), any three spanning the whole space.
// Size is capped by the Thas bound: q^n+1 for q odd, q^n+2 for q even.
struct PseudoArc {
    int n = 0;
    int q = 0;
    std::vector<pg::Subspace> elements;

    int ambient_dim() const { return 3 * n - 1; }
    int size() const { return int(elements.size()); }
};

// Set of (2n-1)-spaces of PG(3n-1,q), any three with empty intersection.
struct DualPseudoArc {
    int n = 0;
    int q = 0;
    std::vector<pg::Subspace> elements;

    int ambient_dim() const { return 3 * n - 1; }
    int size() const { return int(elements.size()); }
};

struct TripleCheck {
    bool ok = false;
    std::array<int, 3> violating{-1, -1, -1};
};

TripleCheck is_pseudo_arc(const gf::FieldTable& F, int n,
                          const std::vector<pg::Subspace>& elements);
// Validates dimensions, the triple condition and the Thas bound.
PseudoArc make_pseudo_arc(const gf::FieldTable& F, int n,
                          std::vector<pg::Subspace> elements);
TripleCheck is_dual_pseudo_arc(const gf::FieldTable& F, int n,
                               const std::vector<pg::Subspace>& elements);
DualPseudoArc make_dual_pseudo_arc(const gf::FieldTable& F, int n,
                                   std::vector<pg::Subspace> elements);

// Member-wise duality; the triple condition dualizes to empty triple meets.
DualPseudoArc dualize(const gf::FieldTable& F, const PseudoArc& k);
PseudoArc dualize(const gf::FieldTable& F, const DualPseudoArc& d);

// The lexicographically least (2n-1)-space disjoint from k.elements[i].
pg::Subspace default_projection_target(const gf::FieldTable& F, const PseudoArc& k, int i);

// Project all other elements from element i onto a (2n-1)-space disjoint
// from it; the images form a partial spread of the target viewed as
// PG(2n-1,q) via carrier coordinates.
fieldred::PartialSpread project_from_element(const gf::FieldTable& F, const PseudoArc& k,
                                             int i, const pg::Subspace& target);
fieldred::PartialSpread project_from_element(const gf::FieldTable& F, const PseudoArc& k,
                                             int i);

// All completions of a partial spread of deficiency <= 2 to a full spread.
std::vector<fieldred::PartialSpread> complete_partial_spread(
    const gf::FieldTable& F, const fieldred::PartialSpread& p);

// The (2n-1)-spaces through element i meeting no other element.
std::vector<pg::Subspace> tangent_spaces(const gf::FieldTable& F, const PseudoArc& k,
                                         int i);

// Every (n-1)-space E with k + {E} still a pseudo-arc; empty iff complete.
std::vector<pg::Subspace> extend_pseudo_arc(const gf::FieldTable& F, const PseudoArc& k);

// True iff the projection from element i completes to a spread that is
// closed under reguli (n = 2 only).
bool satisfies_main_hypothesis(const gf::FieldTable& F, const PseudoArc& k, int i);

// The canonical pseudo-conic: field reduction of Y^2 = XZ over GF(q^n).
PseudoArc canonical_pseudo_conic(int n, const gf::FieldTable& small);

struct PseudoConicWitness {
    bool is_pseudo_conic = false;
    pg::Collineation witness;  // maps the input onto the canonical pseudo-conic
};
// Exhaustive search over collineations pinned by an ordered 4-tuple of
// elements; exact for desk-scale orders such as (n,q) = (2,2), (2,3).
PseudoConicWitness is_pseudo_conic(const gf::FieldTable& F, const PseudoArc& k);

// Text format: "p h n s" then s subspace blocks.
std::string pseudo_arc_to_text(const PseudoArc& k);
PseudoArc pseudo_arc_from_text(std::istream& in);

}  // namespace pseudoarcs
}  // namespace fingeom
