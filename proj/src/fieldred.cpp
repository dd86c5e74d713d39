#include "fingeom/fieldred.hpp"

#include "fingeom/pseudoarcs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fingeom {
namespace fieldred {

FieldReductionMap::FieldReductionMap(const gf::FieldTable& small, const gf::FieldTable& big,
                                     int source_dim)
    : small_(&small), big_(&big), emb_(gf::subfield_embedding(small, big)), m_(source_dim) {
    if (source_dim < 1 || source_dim > 2)
        throw std::invalid_argument("field reduction implemented for PG(1,.) and PG(2,.)");
    const auto& pt = pg::PointTable::get(m_, big);
    images_.reserve(pt.count());
    for (int id = 0; id < pt.count(); ++id) images_.push_back(reduce_point(pt.point(id)));
}

pg::Subspace FieldReductionMap::reduce_point(const pg::Vec& p) const {
    if (int(p.size()) != m_ + 1) throw std::invalid_argument("point length mismatch");
    int n = emb_.n;
    std::vector<pg::Vec> rows;
    for (int j = 0; j < n; ++j) {
        pg::Vec row;
        row.reserve((m_ + 1) * n);
        for (int i = 0; i <= m_; ++i) {
            auto coords = emb_.expand(big_->mul(emb_.basis[j], p[i]));
            row.insert(row.end(), coords.begin(), coords.end());
        }
        rows.push_back(std::move(row));
    }
    auto s = pg::make_subspace(*small_, target_dim(), rows);
    if (s.rank != n) throw std::logic_error("field reduction image has wrong rank");
    return s;
}

pg::Subspace FieldReductionMap::reduce_point_id(int id) const { return images_.at(id); }

PartialSpread make_partial_spread(const gf::FieldTable& F, int n,
                                  std::vector<pg::Subspace> members) {
    for (const auto& s : members) {
        if (s.n != 2 * n - 1 || s.dim() != n - 1)
            throw std::invalid_argument("partial spread member has wrong dimensions");
    }
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!pg::disjoint(F, members[i], members[j]))
                throw std::invalid_argument("partial spread members intersect");
    std::sort(members.begin(), members.end());
    return PartialSpread{n, F.q(), std::move(members)};
}

bool is_full_spread(const gf::FieldTable& F, const PartialSpread& s) {
    long qn = 1;
    for (int i = 0; i < s.n; ++i) qn *= F.q();
    if (long(s.members.size()) != qn + 1) return false;
    std::set<int> covered;
    for (const auto& m : s.members)
        for (int id : pg::subspace_point_ids(F, m)) covered.insert(id);
    return int(covered.size()) == pg::PointTable::get(2 * s.n - 1, F).count();
}

PartialSpread desarguesian_line_spread(int n, const gf::FieldTable& small) {
    const auto& big = gf::FieldTable::get(small.p(), small.h() * n);
    FieldReductionMap m(small, big, 1);
    return make_partial_spread(small, n, m.point_images());
}

pseudoarcs::PseudoArc pseudo_conic(const FieldReductionMap& m, const planes::Conic& c) {
    if (m.source_dim() != 2)
        throw std::invalid_argument("pseudo-conic needs a planar field reduction");
    auto pts = planes::conic_points(m.big(), c);  // throws when degenerate
    std::vector<pg::Subspace> members;
    for (int id : pts) members.push_back(m.reduce_point_id(id));
    return pseudoarcs::make_pseudo_arc(m.small(), m.degree(), std::move(members));
}

namespace {

// unique line through p meeting both disjoint lines a and b (p off both)
pg::Subspace transversal_through(const gf::FieldTable& F, const pg::Vec& p,
                                 const pg::Subspace& a, const pg::Subspace& b) {
    auto pt = pg::point_subspace(F, a.n, p);
    auto t = pg::meet(F, pg::span(F, pt, a), pg::span(F, pt, b));
    if (t.dim() != 1) throw std::logic_error("transversal is not a line");
    return t;
}

}  // namespace

Regulus regulus(const gf::FieldTable& F, const pg::Subspace& l1, const pg::Subspace& l2,
                const pg::Subspace& l3) {
    if (l1.n != 3 || l1.dim() != 1 || l2.dim() != 1 || l3.dim() != 1)
        throw std::invalid_argument("regulus needs lines of PG(3,q)");
    if (!pg::disjoint(F, l1, l2) || !pg::disjoint(F, l1, l3) || !pg::disjoint(F, l2, l3))
        throw std::invalid_argument("lines are not pairwise disjoint");
    Regulus r;
    for (const auto& p : pg::subspace_points(F, l1))
        r.opposite.push_back(transversal_through(F, p, l2, l3));
    for (const auto& p : pg::subspace_points(F, r.opposite[0]))
        r.lines.push_back(transversal_through(F, p, r.opposite[1], r.opposite[2]));
    std::sort(r.lines.begin(), r.lines.end());
    std::sort(r.opposite.begin(), r.opposite.end());
    for (const auto& l : {l1, l2, l3})
        if (!std::binary_search(r.lines.begin(), r.lines.end(), l))
            throw std::logic_error("regulus does not contain its defining lines");
    return r;
}

bool is_desarguesian_spread(const gf::FieldTable& F, const PartialSpread& s) {
    if (s.n != 2) throw std::invalid_argument("regulus test implemented for PG(3,q)");
    if (!is_full_spread(F, s)) throw std::invalid_argument("not a full spread");
    if (F.q() == 2) return true;
    int m = int(s.members.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                auto r = regulus(F, s.members[i], s.members[j], s.members[k]);
                for (const auto& l : r.lines)
                    if (!std::binary_search(s.members.begin(), s.members.end(), l))
                        return false;
            }
    return true;
}

PartialSpread reverse_regulus(const gf::FieldTable& F, const PartialSpread& s, int i,
                              int j, int k) {
    auto r = regulus(F, s.members.at(i), s.members.at(j), s.members.at(k));
    std::vector<pg::Subspace> members;
    for (const auto& m : s.members)
        if (!std::binary_search(r.lines.begin(), r.lines.end(), m)) members.push_back(m);
    if (members.size() + r.lines.size() != s.members.size())
        throw std::invalid_argument("regulus is not contained in the spread");
    members.insert(members.end(), r.opposite.begin(), r.opposite.end());
    return make_partial_spread(F, s.n, std::move(members));
}

}  // namespace fieldred
}  // namespace fingeom
