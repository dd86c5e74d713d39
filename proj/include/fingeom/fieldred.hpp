#pragma once

#include "fingeom/planes.hpp"
#include "fingeom/projgeom.hpp"

#include <vector>

namespace fingeom {
namespace pseudoarcs {
struct PseudoArc;
}

namespace fieldred {

// Field reduction PG(m, q^n) -> PG((m+1)n - 1, q): every source point becomes
// the (n-1)-space of coordinate expansions of its scalar multiples.  The
// basis of GF(q^n) over GF(q) is the one fixed by gf::subfield_embedding, so
// images are reproducible byte for byte.
class FieldReductionMap {
  public:
    FieldReductionMap(const gf::FieldTable& small, const gf::FieldTable& big,
                      int source_dim);

    const gf::FieldTable& small() const { return *small_; }
    const gf::FieldTable& big() const { return *big_; }
    const gf::SubfieldEmbedding& embedding() const { return emb_; }
    int degree() const { return emb_.n; }
    int source_dim() const { return m_; }
    int target_dim() const { return (m_ + 1) * emb_.n - 1; }

    pg::Subspace reduce_point(const pg::Vec& p) const;
    pg::Subspace reduce_point_id(int id) const;
    // images of all points of the source space, indexed by source point id
    const std::vector<pg::Subspace>& point_images() const { return images_; }

  private:
    const gf::FieldTable* small_;
    const gf::FieldTable* big_;
    gf::SubfieldEmbedding emb_;
    int m_;
    std::vector<pg::Subspace> images_;
};

// Pairwise disjoint (n-1)-spaces of PG(2n-1,q); a full spread has q^n+1
// members and covers every point.
struct PartialSpread {
    int n = 0;  // members have projective dimension n-1
    int q = 0;
    std::vector<pg::Subspace> members;
};

PartialSpread make_partial_spread(const gf::FieldTable& F, int n,
                                  std::vector<pg::Subspace> members);
bool is_full_spread(const gf::FieldTable& F, const PartialSpread& s);

// The field-reduction image of PG(1,q^n): a Desarguesian spread of PG(2n-1,q).
PartialSpread desarguesian_line_spread(int n, const gf::FieldTable& small);

// The q^n+1 subspaces obtained by field-reducing a nondegenerate conic of
// PG(2,q^n); forms a pseudo-oval of PG(3n-1,q).
pseudoarcs::PseudoArc pseudo_conic(const FieldReductionMap& m, const planes::Conic& c);

// Regulus of three pairwise disjoint lines of PG(3,q): the q+1 lines meeting
// every common transversal.  opposite holds the q+1 transversals.
struct Regulus {
    std::vector<pg::Subspace> lines;
    std::vector<pg::Subspace> opposite;
};
Regulus regulus(const gf::FieldTable& F, const pg::Subspace& l1, const pg::Subspace& l2,
                const pg::Subspace& l3);

// A full line spread of PG(3,q) is Desarguesian iff it is closed under
// reguli (q > 2); every spread of PG(3,2) qualifies.
bool is_desarguesian_spread(const gf::FieldTable& F, const PartialSpread& s);

// Replace the regulus through members (i,j,k) by its opposite.
PartialSpread reverse_regulus(const gf::FieldTable& F, const PartialSpread& s, int i,
                              int j, int k);

}  // namespace fieldred
}  // namespace fingeom
