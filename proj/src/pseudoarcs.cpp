#include "fingeom/pseudoarcs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fingeom {
namespace pseudoarcs {

namespace {

long power(int q, int n) {
    long r = 1;
    while (n-- > 0) r *= q;
    return r;
}

// rank of the stacked generator rows of up to three subspaces
int stacked_rank(const gf::FieldTable& F, const pg::Subspace& a, const pg::Subspace& b,
                 const pg::Subspace* c = nullptr) {
    std::vector<uint8_t> rows = a.m;
    rows.insert(rows.end(), b.m.begin(), b.m.end());
    if (c) rows.insert(rows.end(), c->m.begin(), c->m.end());
    return pg::rref(F, rows, a.n + 1);
}

}  // namespace

TripleCheck is_pseudo_arc(const gf::FieldTable& F, int n,
                          const std::vector<pg::Subspace>& elements) {
    int ambient = 3 * n - 1;
    for (const auto& e : elements)
        if (e.n != ambient || e.dim() != n - 1)
            throw std::invalid_argument("element dimensions do not match (n-1)-spaces of PG(3n-1,q)");
    TripleCheck out;
    int s = int(elements.size());
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            if (stacked_rank(F, elements[i], elements[j]) != 2 * n) {
                // two meeting elements violate every triple through them;
                // report with the next index (or a degenerate pair when s = 2)
                out.violating = {i, j, j};
                for (int k = 0; k < s; ++k)
                    if (k != i && k != j) {
                        out.violating = {i, j, k};
                        std::sort(out.violating.begin(), out.violating.end());
                        break;
                    }
                return out;
            }
            for (int k = j + 1; k < s; ++k)
                if (stacked_rank(F, elements[i], elements[j], &elements[k]) != 3 * n) {
                    out.violating = {i, j, k};
                    return out;
                }
        }
    out.ok = true;
    return out;
}

PseudoArc make_pseudo_arc(const gf::FieldTable& F, int n,
                          std::vector<pg::Subspace> elements) {
    auto chk = is_pseudo_arc(F, n, elements);
    if (!chk.ok) throw std::invalid_argument("triple condition fails");
    long qn = power(F.q(), n);
    long cap = (F.q() % 2 == 1) ? qn + 1 : qn + 2;
    if (long(elements.size()) > cap)
        throw std::invalid_argument("size exceeds the Thas bound");
    return PseudoArc{n, F.q(), std::move(elements)};
}

TripleCheck is_dual_pseudo_arc(const gf::FieldTable& F, int n,
                               const std::vector<pg::Subspace>& elements) {
    int ambient = 3 * n - 1;
    for (const auto& e : elements)
        if (e.n != ambient || e.dim() != 2 * n - 1)
            throw std::invalid_argument("element dimensions do not match (2n-1)-spaces");
    TripleCheck out;
    int s = int(elements.size());
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            for (int k = j + 1; k < s; ++k) {
                auto m = pg::meet(F, pg::meet(F, elements[i], elements[j]), elements[k]);
                if (m.rank != 0) {
                    out.violating = {i, j, k};
                    return out;
                }
            }
    out.ok = true;
    return out;
}

DualPseudoArc make_dual_pseudo_arc(const gf::FieldTable& F, int n,
                                   std::vector<pg::Subspace> elements) {
    auto chk = is_dual_pseudo_arc(F, n, elements);
    if (!chk.ok) throw std::invalid_argument("dual triple condition fails");
    long qn = power(F.q(), n);
    long cap = (F.q() % 2 == 1) ? qn + 1 : qn + 2;
    if (long(elements.size()) > cap)
        throw std::invalid_argument("size exceeds the Thas bound");
    return DualPseudoArc{n, F.q(), std::move(elements)};
}

DualPseudoArc dualize(const gf::FieldTable& F, const PseudoArc& k) {
    std::vector<pg::Subspace> duals;
    for (const auto& e : k.elements) duals.push_back(pg::dual_subspace(F, e));
    return make_dual_pseudo_arc(F, k.n, std::move(duals));
}

PseudoArc dualize(const gf::FieldTable& F, const DualPseudoArc& d) {
    std::vector<pg::Subspace> duals;
    for (const auto& e : d.elements) duals.push_back(pg::dual_subspace(F, e));
    return make_pseudo_arc(F, d.n, std::move(duals));
}

pg::Subspace default_projection_target(const gf::FieldTable& F, const PseudoArc& k, int i) {
    pg::Subspace found;
    bool have = false;
    pg::for_each_subspace(F, k.ambient_dim(), 2 * k.n - 1, [&](const pg::Subspace& s) {
        if (pg::disjoint(F, s, k.elements[i])) {
            found = s;
            have = true;
            return false;
        }
        return true;
    });
    if (!have) throw std::logic_error("no disjoint projection target exists");
    return found;
}

fieldred::PartialSpread project_from_element(const gf::FieldTable& F, const PseudoArc& k,
                                             int i, const pg::Subspace& target) {
    if (i < 0 || i >= k.size()) throw std::invalid_argument("element index out of range");
    if (target.dim() != 2 * k.n - 1 || !pg::disjoint(F, target, k.elements[i]))
        throw std::invalid_argument("target must be a (2n-1)-space disjoint from the element");
    std::vector<pg::Subspace> members;
    for (int j = 0; j < k.size(); ++j) {
        if (j == i) continue;
        auto img = pg::meet(F, pg::span(F, k.elements[i], k.elements[j]), target);
        if (img.dim() != k.n - 1) throw std::logic_error("projected image has wrong dimension");
        members.push_back(pg::restrict_to_carrier(F, img, target));
    }
    return fieldred::make_partial_spread(F, k.n, std::move(members));
}

fieldred::PartialSpread project_from_element(const gf::FieldTable& F, const PseudoArc& k,
                                             int i) {
    return project_from_element(F, k, i, default_projection_target(F, k, i));
}

std::vector<fieldred::PartialSpread> complete_partial_spread(
    const gf::FieldTable& F, const fieldred::PartialSpread& p) {
    int n = p.n;
    long qn = power(F.q(), n);
    long deficiency = qn + 1 - long(p.members.size());
    if (deficiency < 0) throw std::invalid_argument("too many members for a spread");
    if (deficiency > 2)
        throw std::invalid_argument("completion implemented for deficiency <= 2");
    const auto& pt = pg::PointTable::get(2 * n - 1, F);
    std::vector<char> covered(pt.count(), 0);
    for (const auto& m : p.members)
        for (int id : pg::subspace_point_ids(F, m)) covered[id] = 1;
    std::vector<int> holes;
    for (int id = 0; id < pt.count(); ++id)
        if (!covered[id]) holes.push_back(id);

    std::vector<fieldred::PartialSpread> out;
    if (deficiency == 0) {
        if (!holes.empty()) throw std::logic_error("full-size spread leaves holes");
        out.push_back(p);
        return out;
    }
    long member_points = (power(F.q(), n) - 1) / (F.q() - 1);
    if (long(holes.size()) != deficiency * member_points)
        throw std::logic_error("hole count inconsistent with the deficiency");

    auto hole_subspace = [&](const std::vector<int>& ids) -> std::optional<pg::Subspace> {
        std::vector<pg::Vec> gens;
        for (int id : ids) gens.push_back(pt.point(id));
        auto s = pg::make_subspace(F, 2 * n - 1, gens);
        if (s.dim() != n - 1) return std::nullopt;
        auto sp = pg::subspace_point_ids(F, s);
        if (sp != ids) return std::nullopt;
        return s;
    };

    if (deficiency == 1) {
        auto s = hole_subspace(holes);
        if (s) {
            auto members = p.members;
            members.push_back(*s);
            out.push_back(fieldred::make_partial_spread(F, n, std::move(members)));
        }
        return out;
    }

    // deficiency 2: one new member contains the first hole
    std::set<std::pair<pg::Subspace, pg::Subspace>> seen;
    auto h0 = pg::point_subspace(F, 2 * n - 1, pt.point(holes[0]));
    for (const auto& cand : pg::subspaces_through(F, h0, n - 1)) {
        auto cand_pts = pg::subspace_point_ids(F, cand);
        if (!std::includes(holes.begin(), holes.end(), cand_pts.begin(), cand_pts.end()))
            continue;
        std::vector<int> rest;
        std::set_difference(holes.begin(), holes.end(), cand_pts.begin(), cand_pts.end(),
                            std::back_inserter(rest));
        auto other = hole_subspace(rest);
        if (!other) continue;
        if (!pg::disjoint(F, cand, *other)) continue;
        auto key = std::minmax(cand, *other);
        if (!seen.insert(key).second) continue;
        auto members = p.members;
        members.push_back(cand);
        members.push_back(*other);
        out.push_back(fieldred::make_partial_spread(F, n, std::move(members)));
    }
    return out;
}

std::vector<pg::Subspace> tangent_spaces(const gf::FieldTable& F, const PseudoArc& k,
                                         int i) {
    if (i < 0 || i >= k.size()) throw std::invalid_argument("element index out of range");
    std::vector<pg::Subspace> out;
    for (const auto& t : pg::subspaces_through(F, k.elements[i], 2 * k.n - 1)) {
        bool tangent = true;
        for (int j = 0; j < k.size() && tangent; ++j) {
            if (j == i) continue;
            if (!pg::disjoint(F, t, k.elements[j])) tangent = false;
        }
        if (tangent) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<pg::Subspace> extend_pseudo_arc(const gf::FieldTable& F, const PseudoArc& k) {
    std::vector<pg::Subspace> out;
    int s = k.size();
    pg::for_each_subspace(F, k.ambient_dim(), k.n - 1, [&](const pg::Subspace& cand) {
        // disjointness prefilter kills most candidates cheaply
        for (int i = 0; i < s; ++i)
            if (stacked_rank(F, cand, k.elements[i]) != 2 * k.n) return true;
        for (int i = 0; i < s; ++i) {
            if (cand == k.elements[i]) return true;
            for (int j = i + 1; j < s; ++j)
                if (stacked_rank(F, cand, k.elements[i], &k.elements[j]) != 3 * k.n)
                    return true;
        }
        out.push_back(cand);
        return true;
    });
    return out;
}

bool satisfies_main_hypothesis(const gf::FieldTable& F, const PseudoArc& k, int i) {
    if (k.n != 2) throw std::invalid_argument("hypothesis check implemented for n = 2");
    if (k.size() < 3) throw std::invalid_argument("need at least 3 elements");
    auto projected = project_from_element(F, k, i);
    for (const auto& completion : complete_partial_spread(F, projected))
        if (fieldred::is_desarguesian_spread(F, completion)) return true;
    return false;
}

PseudoArc canonical_pseudo_conic(int n, const gf::FieldTable& small) {
    const auto& big = gf::FieldTable::get(small.p(), small.h() * n);
    fieldred::FieldReductionMap m(small, big, 2);
    auto conic = planes::make_conic(big, {0, 1, 0, 0, big.neg(1), 0});  // Y^2 = XZ
    return fieldred::pseudo_conic(m, conic);
}

namespace {

std::vector<std::vector<uint8_t>> all_invertible(const gf::FieldTable& F, int n) {
    std::vector<std::vector<uint8_t>> out;
    int q = F.q();
    size_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    for (size_t code = 0; code < total; ++code) {
        std::vector<uint8_t> m(n * n);
        size_t t = code;
        for (int i = 0; i < n * n; ++i) {
            m[i] = uint8_t(t % q);
            t /= q;
        }
        std::vector<uint8_t> check = m;
        if (pg::rref(F, check, n) == n) out.push_back(std::move(m));
    }
    return out;
}

// rows of sub expressed in the row basis of the invertible (3n)x(3n) matrix
std::vector<uint8_t> coords_in_basis(const gf::FieldTable& F, const pg::Subspace& sub,
                                     const std::vector<uint8_t>& basis_inv, int dim) {
    std::vector<uint8_t> out(size_t(sub.rank) * dim, 0);
    for (int i = 0; i < sub.rank; ++i)
        for (int j = 0; j < dim; ++j) {
            uint8_t acc = 0;
            for (int l = 0; l < dim; ++l)
                acc = F.add(acc, F.mul(sub.m[size_t(i) * dim + l], basis_inv[size_t(l) * dim + j]));
            out[size_t(i) * dim + j] = acc;
        }
    return out;
}

struct GraphData {
    std::vector<uint8_t> basis;      // stacked rows of three elements (3n x 3n)
    std::vector<uint8_t> basis_inv;
    std::vector<uint8_t> sigma, tau;  // n x n: fourth element = {(x, x sigma, x tau)}
};

// adapted coordinates for an ordered 4-tuple of pseudo-oval elements
std::optional<GraphData> adapt(const gf::FieldTable& F, int n, const pg::Subspace& a,
                               const pg::Subspace& b, const pg::Subspace& c,
                               const pg::Subspace& d) {
    int dim = 3 * n;
    GraphData g;
    g.basis = a.m;
    g.basis.insert(g.basis.end(), b.m.begin(), b.m.end());
    g.basis.insert(g.basis.end(), c.m.begin(), c.m.end());
    {
        std::vector<uint8_t> check = g.basis;
        if (pg::rref(F, check, dim) != dim) return std::nullopt;  // triple does not span
    }
    g.basis_inv = pg::mat_inverse(F, g.basis, dim);
    auto dc = coords_in_basis(F, d, g.basis_inv, dim);
    // split into n-wide blocks U | V | W; U must be invertible
    std::vector<uint8_t> U(n * n), V(n * n), W(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            U[i * n + j] = dc[size_t(i) * dim + j];
            V[i * n + j] = dc[size_t(i) * dim + n + j];
            W[i * n + j] = dc[size_t(i) * dim + 2 * n + j];
        }
    std::vector<uint8_t> Uinv;
    try {
        Uinv = pg::mat_inverse(F, U, n);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    g.sigma = pg::mat_mul(F, Uinv, V, n);
    g.tau = pg::mat_mul(F, Uinv, W, n);
    return g;
}

}  // namespace

PseudoConicWitness is_pseudo_conic(const gf::FieldTable& F, const PseudoArc& k) {
    long qn = power(F.q(), k.n);
    if (k.size() != qn + 1) throw std::invalid_argument("input is not a pseudo-oval");
    if (qn + 1 > 20) throw std::invalid_argument("order too large for the search budget");
    auto canon = canonical_pseudo_conic(k.n, F);
    std::set<pg::Subspace> target_set(canon.elements.begin(), canon.elements.end());
    int n = k.n, dim = 3 * n, s = k.size();

    auto tgt = adapt(F, n, canon.elements[0], canon.elements[1], canon.elements[2],
                     canon.elements[3]);
    if (!tgt) throw std::logic_error("canonical pseudo-conic adaptation failed");
    std::vector<uint8_t> sigma_t_inv = pg::mat_inverse(F, tgt->sigma, n);
    std::vector<uint8_t> tau_t_inv = pg::mat_inverse(F, tgt->tau, n);
    auto gls = all_invertible(F, n);

    PseudoConicWitness out;
    // A collineation mapping k onto the canonical pseudo-conic sends some
    // ordered 4-tuple to the first four canonical elements; within that
    // correspondence it is block diagonal in adapted bases and determined by
    // its first block, so the scan below is exhaustive.
    for (int f = 0; f < F.h(); ++f) {
        std::vector<pg::Subspace> kf;
        pg::Collineation frob_map = pg::identity_collineation(F, dim - 1);
        frob_map.frob = f;
        for (const auto& e : k.elements) kf.push_back(pg::apply_collineation(F, frob_map, e));
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                for (int c = 0; c < s; ++c)
                    for (int d = 0; d < s; ++d) {
                        if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                        auto src = adapt(F, n, kf[a], kf[b], kf[c], kf[d]);
                        if (!src) continue;
                        std::vector<uint8_t> sig_inv, tau_inv;
                        try {
                            sig_inv = pg::mat_inverse(F, src->sigma, n);
                            tau_inv = pg::mat_inverse(F, src->tau, n);
                        } catch (const std::invalid_argument&) {
                            continue;
                        }
                        for (const auto& A : gls) {
                            // B = sigma^-1 A sigma*, C = tau^-1 A tau*
                            auto B = pg::mat_mul(F, sig_inv, pg::mat_mul(F, A, tgt->sigma, n), n);
                            auto C = pg::mat_mul(F, tau_inv, pg::mat_mul(F, A, tgt->tau, n), n);
                            std::vector<uint8_t> blocks(size_t(dim) * dim, 0);
                            for (int i = 0; i < n; ++i)
                                for (int j = 0; j < n; ++j) {
                                    blocks[size_t(i) * dim + j] = A[i * n + j];
                                    blocks[size_t(n + i) * dim + n + j] = B[i * n + j];
                                    blocks[size_t(2 * n + i) * dim + 2 * n + j] = C[i * n + j];
                                }
                            pg::Collineation g;
                            g.n = dim - 1;
                            g.q = F.q();
                            g.frob = f;
                            g.mat = pg::mat_mul(
                                F, src->basis_inv,
                                pg::mat_mul(F, blocks, tgt->basis, dim), dim);
                            bool all = true;
                            for (const auto& e : k.elements) {
                                if (!target_set.count(pg::apply_collineation(F, g, e))) {
                                    all = false;
                                    break;
                                }
                            }
                            if (all) {
                                out.is_pseudo_conic = true;
                                out.witness = g;
                                return out;
                            }
                        }
                    }
    }
    return out;
}

std::string pseudo_arc_to_text(const PseudoArc& k) {
    const auto& F = gf::field_for_order(k.q);
    std::ostringstream os;
    os << F.p() << ' ' << F.h() << ' ' << k.n << ' ' << k.size() << '\n';
    for (const auto& e : k.elements) os << pg::subspace_to_text(e);
    return os.str();
}

PseudoArc pseudo_arc_from_text(std::istream& in) {
    int p, h, n, s;
    if (!(in >> p >> h >> n >> s)) throw std::invalid_argument("bad pseudo-arc header");
    const auto& F = gf::make_field(p, h);
    std::vector<pg::Subspace> elements;
    for (int i = 0; i < s; ++i) elements.push_back(pg::subspace_from_text(in));
    return make_pseudo_arc(F, n, std::move(elements));
}

}  // namespace pseudoarcs
}  // namespace fingeom
