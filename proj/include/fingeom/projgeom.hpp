#pragma once

#include "fingeom/gf.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fingeom {
namespace pg {

using Vec = std::vector<uint8_t>;

// Scale so the first nonzero coordinate is 1.  Throws on the zero vector.
Vec normalize(const gf::FieldTable& F, Vec v);

// Points of PG(n,q) in lexicographic order on normalized coordinate tuples.
// Ids are stable across runs; id lookup is O(1) via a radix table when
// q^(n+1) is small enough, otherwise by binary search.
class PointTable {
  public:
    static const PointTable& get(int n, const gf::FieldTable& F);

    int n() const { return n_; }
    const gf::FieldTable& field() const { return *F_; }
    int count() const { return int(pts_.size()); }
    const Vec& point(int id) const { return pts_[id]; }
    const std::vector<Vec>& points() const { return pts_; }
    int id_of(const Vec& v) const;  // accepts any nonzero vector

  private:
    PointTable(int n, const gf::FieldTable& F);
    int n_;
    const gf::FieldTable* F_;
    std::vector<Vec> pts_;
    std::vector<int32_t> radix_;  // empty when too large
};

// Projective subspace as a canonical reduced-row-echelon generator matrix.
// rank 0 is the empty subspace (projective dimension -1).
struct Subspace {
    int n = 0;     // ambient projective dimension
    int q = 0;
    int rank = 0;  // generator rows
    std::vector<uint8_t> m;  // rank x (n+1) row-major, RREF

    int dim() const { return rank - 1; }
    int cols() const { return n + 1; }
    const uint8_t* row(int i) const { return m.data() + size_t(i) * (n + 1); }
    uint8_t* row(int i) { return m.data() + size_t(i) * (n + 1); }

    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& o) const;
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const;
};

// Gaussian elimination to reduced row echelon form; returns the rank and
// shrinks rows to it.  rows is rank x ncols row-major.
int rref(const gf::FieldTable& F, std::vector<uint8_t>& rows, int ncols);

Subspace make_subspace(const gf::FieldTable& F, int n, const std::vector<Vec>& gens);
Subspace empty_subspace(const gf::FieldTable& F, int n);
Subspace full_space(const gf::FieldTable& F, int n);
Subspace point_subspace(const gf::FieldTable& F, int n, const Vec& v);

Subspace span(const gf::FieldTable& F, const Subspace& a, const Subspace& b);
Subspace span_all(const gf::FieldTable& F, const std::vector<Subspace>& parts);
Subspace meet(const gf::FieldTable& F, const Subspace& a, const Subspace& b);
// Annihilator under the standard dot product.
Subspace dual_subspace(const gf::FieldTable& F, const Subspace& a);

bool contains_point(const gf::FieldTable& F, const Subspace& a, const Vec& v);
bool contains_subspace(const gf::FieldTable& F, const Subspace& outer, const Subspace& inner);
bool disjoint(const gf::FieldTable& F, const Subspace& a, const Subspace& b);

// All points of the subspace: normalized vectors / ids, ascending.
std::vector<Vec> subspace_points(const gf::FieldTable& F, const Subspace& a);
std::vector<int> subspace_point_ids(const gf::FieldTable& F, const Subspace& a);

// Quotient by a nonempty subspace K, realized through the fixed
// lexicographically least complement of K.  Subspaces through K map to
// subspaces of PG(n - rank(K), q) with dimension shifted by rank(K).
class QuotientMap {
  public:
    QuotientMap(const gf::FieldTable& F, const Subspace& K);
    const Subspace& kernel() const { return K_; }
    const Subspace& complement() const { return C_; }
    int source_dim() const { return K_.n; }
    int target_dim() const { return K_.n - K_.rank; }
    Subspace map(const Subspace& s) const;   // requires K subset of s
    Subspace lift(const Subspace& t) const;  // inverse on images

  private:
    const gf::FieldTable* F_;
    Subspace K_, C_;
    std::vector<uint8_t> basis_inv_;  // inverse of [K; C] stacked basis
};

unsigned long long gaussian_binomial(int n, int k, int q);

// Every subspace of projective dimension pdim in a fixed deterministic
// order (pivot-column sets ascending, free entries in odometer order).
void for_each_subspace(const gf::FieldTable& F, int n, int pdim,
                       const std::function<bool(const Subspace&)>& visit);
std::vector<Subspace> all_subspaces(const gf::FieldTable& F, int n, int pdim);
// The subspaces of dimension target_dim containing S, each exactly once.
std::vector<Subspace> subspaces_through(const gf::FieldTable& F, const Subspace& s,
                                        int target_dim);

// Semilinear collineation x -> frobenius^frob(x) * mat (row vectors).
struct Collineation {
    int n = 0;
    int q = 0;
    std::vector<uint8_t> mat;  // (n+1)x(n+1) row-major, invertible
    int frob = 0;
};

Collineation identity_collineation(const gf::FieldTable& F, int n);
Vec apply_point_vec(const gf::FieldTable& F, const Collineation& g, const Vec& v);
Subspace apply_collineation(const gf::FieldTable& F, const Collineation& g,
                            const Subspace& s);
// first, then second.
Collineation compose(const gf::FieldTable& F, const Collineation& second,
                     const Collineation& first);
Collineation inverse(const gf::FieldTable& F, const Collineation& g);
// Small generating set for PGammaL(n+1,q): coordinate cycle, a transposition,
// a transvection, a primitive diagonal scaling, and Frobenius when h > 1.
std::vector<Collineation> collineation_generators(int n, const gf::FieldTable& F);

std::vector<uint8_t> mat_mul(const gf::FieldTable& F, const std::vector<uint8_t>& a,
                             const std::vector<uint8_t>& b, int m);
std::vector<uint8_t> mat_inverse(const gf::FieldTable& F, const std::vector<uint8_t>& a,
                                 int m);

// Coordinates of U inside a carrier subspace (U subset of carrier): a
// subspace of PG(carrier.dim(), q), and back.
Subspace restrict_to_carrier(const gf::FieldTable& F, const Subspace& u,
                             const Subspace& carrier);
Subspace lift_from_carrier(const gf::FieldTable& F, const Subspace& u,
                           const Subspace& carrier);

// Text format: first line "n q r", then r rows of n+1 codes.
std::string subspace_to_text(const Subspace& s);
Subspace subspace_from_text(std::istream& in);

}  // namespace pg
}  // namespace fingeom
